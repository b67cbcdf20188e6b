#include "kg2i/linker.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kg2i/backend.h"
#include "kg2i/errors.h"
#include "kg2i/text.h"
#include "spdlog/spdlog.h"

namespace kg2i {

std::string_view MentionSourceName(MentionSource source) {
  switch (source) {
    case MentionSource::kAnchor:
      return "anchor";
    case MentionSource::kPropagated:
      return "propagated";
    case MentionSource::kNer:
      return "ner";
  }
  return "anchor";
}

std::optional<MentionSource> ParseMentionSource(std::string_view name) {
  for (MentionSource s :
       {MentionSource::kAnchor, MentionSource::kPropagated, MentionSource::kNer}) {
    if (MentionSourceName(s) == name) return s;
  }
  return std::nullopt;
}

ordered_json ToJson(const EntityMention &m) {
  ordered_json j;
  j["start"] = m.start;
  j["end"] = m.end;
  j["surface"] = m.surface;
  j["source"] = MentionSourceName(m.source);
  j["candidates"] = m.candidates;
  j["resolved"] = m.resolved ? ordered_json(*m.resolved) : ordered_json(nullptr);
  j["etype"] = m.etype ? ordered_json(m.etype->name) : ordered_json(nullptr);
  return j;
}

EntityMention MentionFromJson(const json &j) {
  const std::string ctx = "mention";
  EntityMention m;
  m.start = RequireField(j, "start", ctx).get<size_t>();
  m.end = RequireField(j, "end", ctx).get<size_t>();
  m.surface = RequireString(j, "surface", ctx);
  auto source = ParseMentionSource(RequireString(j, "source", ctx));
  if (!source) throw ConfigError("mention: unknown source");
  m.source = *source;
  for (const json &c : RequireField(j, "candidates", ctx)) {
    m.candidates.push_back(c.get<std::string>());
  }
  if (j.contains("resolved") && !j["resolved"].is_null()) {
    m.resolved = j["resolved"].get<std::string>();
  }
  if (j.contains("etype") && !j["etype"].is_null()) {
    m.etype = EntityType{j["etype"].get<std::string>()};
  }
  return m;
}

namespace {

bool Overlaps(const EntityMention &a, const EntityMention &b) {
  return a.start < b.end && b.start < a.end;
}

}  // namespace

LinkResult IdentifyMentions(const Paragraph &p, const KgStore &store,
                            Backend *ner) {
  const std::u32string text = text::Decode(p.text);
  std::vector<EntityMention> proposals;

  std::vector<EntityMention> anchors;
  for (const Anchor &a : p.anchors) {
    if (a.start >= a.end || a.end > text.size()) continue;
    EntityMention m;
    m.start = a.start;
    m.end = a.end;
    m.surface = text::Encode(std::u32string_view(text).substr(a.start, a.end - a.start));
    m.candidates = store.Candidates(a.target_title, p.lang);
    for (std::string &q : store.Candidates(m.surface, p.lang)) {
      m.candidates.push_back(std::move(q));
    }
    store.SortCandidates(&m.candidates);
    m.source = MentionSource::kAnchor;
    anchors.push_back(std::move(m));
  }
  std::sort(anchors.begin(), anchors.end(),
            [](const EntityMention &a, const EntityMention &b) {
              return a.start < b.start;
            });

  // Later occurrences inherit the candidates of the nearest preceding anchor
  // with the same surface.
  std::map<std::string, std::vector<const EntityMention *>> by_surface;
  for (const EntityMention &a : anchors) by_surface[a.surface].push_back(&a);
  for (const auto &[surface, sources] : by_surface) {
    std::u32string needle = text::Decode(surface);
    for (size_t start : text::FindAll(text, needle, /*word_boundary=*/true)) {
      const EntityMention *source = nullptr;
      for (const EntityMention *a : sources) {
        if (a->start < start) source = a;
      }
      if (source == nullptr) continue;
      EntityMention m;
      m.start = start;
      m.end = start + needle.size();
      m.surface = surface;
      m.candidates = source->candidates;
      m.source = MentionSource::kPropagated;
      proposals.push_back(std::move(m));
    }
  }

  LinkResult result;
  if (ner != nullptr) {
    try {
      NerResponse response = ner->Ner({p.text, p.lang});
      for (const NerSpan &span : response.mentions) {
        if (span.end > text.size()) {
          spdlog::warn("{}: NER span [{}, {}) outside text, ignored", p.id,
                       span.start, span.end);
          continue;
        }
        EntityMention m;
        m.start = span.start;
        m.end = span.end;
        m.surface = text::Encode(
            std::u32string_view(text).substr(span.start, span.end - span.start));
        m.candidates = store.Candidates(m.surface, p.lang);
        m.source = MentionSource::kNer;
        proposals.push_back(std::move(m));
      }
    } catch (const Error &e) {
      spdlog::warn("{}: NER unavailable ({})", p.id, e.what());
      result.ner_degraded = true;
    }
  }

  std::stable_sort(proposals.begin(), proposals.end(),
                   [](const EntityMention &a, const EntityMention &b) {
                     if (a.source != b.source) return a.source < b.source;
                     if (a.end - a.start != b.end - b.start) {
                       return a.end - a.start > b.end - b.start;
                     }
                     return a.start < b.start;
                   });
  std::vector<EntityMention> accepted = std::move(anchors);
  for (EntityMention &m : proposals) {
    bool clash = std::any_of(accepted.begin(), accepted.end(),
                             [&](const EntityMention &a) { return Overlaps(a, m); });
    if (!clash) accepted.push_back(std::move(m));
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const EntityMention &a, const EntityMention &b) {
              return a.start < b.start;
            });
  result.mentions = std::move(accepted);
  return result;
}

std::vector<int64_t> CandidateScores(const std::vector<EntityMention> &mentions,
                                     size_t index, const KgStore &store,
                                     Lang lang,
                                     const DisambiguationOptions &options) {
  std::unordered_map<std::string, int64_t> others;
  for (size_t i = 0; i < mentions.size(); ++i) {
    if (i != index) ++others[text::Normalize(mentions[i].surface, lang)];
  }
  auto count_names = [&](std::string_view qid) {
    int64_t n = 0;
    for (const std::string &name : store.Names(qid, lang)) {
      auto it = others.find(name);
      if (it != others.end()) n += it->second;
    }
    return n;
  };

  std::vector<int64_t> scores;
  for (const std::string &q : mentions[index].candidates) {
    int64_t score = 0;
    for (const KgTriple &t : store.Outgoing(q)) {
      if (t.is_item() && t.resolvable) score += count_names(t.tail_qid);
    }
    if (options.count_head_side) {
      for (const KgTriple *t : store.Incoming(q)) score += count_names(t->head);
    }
    scores.push_back(score);
  }
  return scores;
}

void Disambiguate(std::vector<EntityMention> *mentions, const KgStore &store,
                  const Taxonomy &taxonomy, Lang lang,
                  const DisambiguationOptions &options) {
  // Scores read surfaces only, so resolving in place cannot affect later
  // mentions.
  for (size_t i = 0; i < mentions->size(); ++i) {
    EntityMention &m = (*mentions)[i];
    m.resolved.reset();
    m.etype.reset();
    if (m.candidates.empty()) continue;
    size_t best = 0;
    if (m.candidates.size() > 1) {
      std::vector<int64_t> scores =
          CandidateScores(*mentions, i, store, lang, options);
      for (size_t c = 1; c < scores.size(); ++c) {
        if (scores[c] > scores[best]) best = c;
      }
    }
    m.resolved = m.candidates[best];
    m.etype = ResolveEntityType(store, taxonomy, *m.resolved);
  }
}

}  // namespace kg2i
