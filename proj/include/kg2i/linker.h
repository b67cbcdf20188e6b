#ifndef KG2I_LINKER_H_
#define KG2I_LINKER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/corpus.h"
#include "kg2i/jsonl.h"
#include "kg2i/kg_store.h"
#include "kg2i/types.h"

namespace kg2i {

class Backend;

enum class MentionSource { kAnchor, kPropagated, kNer };

std::string_view MentionSourceName(MentionSource source);
std::optional<MentionSource> ParseMentionSource(std::string_view name);

struct EntityMention {
  size_t start = 0;
  size_t end = 0;
  std::string surface;
  std::vector<std::string> candidates;
  std::optional<std::string> resolved;
  std::optional<EntityType> etype;
  MentionSource source = MentionSource::kAnchor;

  bool operator==(const EntityMention &) const = default;
};

ordered_json ToJson(const EntityMention &m);
EntityMention MentionFromJson(const json &j);

struct LinkResult {
  std::vector<EntityMention> mentions;  // sorted by start
  bool ner_degraded = false;
};

// Anchors, later exact occurrences of anchored surfaces, then NER spans.
// Overlaps are settled by source (anchor, propagated, ner), then longer span,
// then earlier start. A null backend skips NER without flagging.
LinkResult IdentifyMentions(const Paragraph &p, const KgStore &store,
                            Backend *ner);

struct DisambiguationOptions {
  // Also count mentions naming the heads of claims pointing at a candidate.
  bool count_head_side = false;
};

// Score of every candidate of mentions[index]: for each item claim
// (candidate, pid, tail), the number of other mentions whose normalized
// surface is a name of tail, with multiplicity.
std::vector<int64_t> CandidateScores(const std::vector<EntityMention> &mentions,
                                     size_t index, const KgStore &store,
                                     Lang lang,
                                     const DisambiguationOptions &options);

// Resolves each mention to its highest-scoring candidate. Ties, including
// all-zero scores, go to the earliest candidate in candidate order. Mentions
// without candidates stay unresolved.
void Disambiguate(std::vector<EntityMention> *mentions, const KgStore &store,
                  const Taxonomy &taxonomy, Lang lang,
                  const DisambiguationOptions &options = {});

}  // namespace kg2i

#endif  // KG2I_LINKER_H_
