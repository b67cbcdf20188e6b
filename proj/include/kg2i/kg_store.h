#ifndef KG2I_KG_STORE_H_
#define KG2I_KG_STORE_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kg2i/literal.h"
#include "kg2i/taxonomy.h"
#include "kg2i/types.h"

namespace kg2i {

struct KgEntity {
  std::string qid;
  std::map<Lang, std::string> labels;
  std::map<Lang, std::vector<std::string>> aliases;
  std::vector<std::string> instance_of;
  std::vector<std::string> subclass_of;
};

// A claim. Exactly one of tail_qid / literal is set. A tail qid that is not in
// the store is kept but marked unresolvable and takes no part in matching.
struct KgTriple {
  std::string head;
  std::string pid;
  std::string tail_qid;
  std::optional<Literal> literal;
  bool resolvable = true;

  bool is_item() const { return !literal.has_value(); }
};

struct Property {
  std::string pid;
  std::map<Lang, std::string> labels;
};

// Line-delimited {"pid", "labels": {lang: str}}.
class PropertyRegistry {
 public:
  static PropertyRegistry Load(const std::filesystem::path &path);
  static PropertyRegistry FromStream(std::istream &in);

  const Property *Find(std::string_view pid) const;
  bool Contains(std::string_view pid) const { return Find(pid) != nullptr; }
  const std::vector<Property> &properties() const { return properties_; }

 private:
  std::vector<Property> properties_;
  std::unordered_map<std::string, size_t> index_;
};

// Numeric part of a Q/P identifier, or INT64_MAX when it has none.
int64_t IdNumber(std::string_view id);

// Read-only knowledge-graph subset with an alias index and adjacency lists.
//
// Input is line-delimited JSON. Entity lines:
//   {"qid", "labels": {lang: str}, "aliases": {lang: [str]},
//    "instance_of": [qid], "subclass_of": [qid],
//    "claims": [{"pid", "tail": {"qid": str} | {"literal": {kind, value}}}]}
// Standalone claim lines carry an explicit head instead of a qid:
//   {"head", "pid", "tail": {...}}
//
// The store is immutable after loading and safe for concurrent reads.
class KgStore {
 public:
  // The registry is optional; when given, every pid must be registered.
  static KgStore Load(const std::filesystem::path &path,
                      const PropertyRegistry *registry);
  static KgStore FromStream(std::istream &in, const PropertyRegistry *registry);

  size_t size() const { return entities_.size(); }
  const std::vector<KgEntity> &entities() const { return entities_; }
  const std::vector<KgTriple> &triples() const { return triples_; }

  const KgEntity *Find(std::string_view qid) const;

  // Entities whose normalized label or alias equals the normalized surface.
  // Ordered by descending degree, then ascending numeric id.
  std::vector<std::string> Candidates(std::string_view surface,
                                      Lang lang) const;

  // Sorts and deduplicates qids into candidate order.
  void SortCandidates(std::vector<std::string> *qids) const;

  // Claims with this head, in file order.
  std::span<const KgTriple> Outgoing(std::string_view qid) const;
  // Resolvable item claims whose tail is this entity.
  std::vector<const KgTriple *> Incoming(std::string_view qid) const;

  // Outgoing claims plus resolvable incoming item claims.
  size_t Degree(std::string_view qid) const;

  // Distinct normalized labels and aliases of an entity in one language.
  const std::vector<std::string> &Names(std::string_view qid, Lang lang) const;

  // Number of distinct (language, normalized surface) keys in the index.
  size_t AliasSurfaceCount() const;

 private:
  struct Range {
    size_t begin = 0;
    size_t count = 0;
  };

  void BuildIndexes();

  std::vector<KgEntity> entities_;
  std::unordered_map<std::string, size_t> entity_index_;
  std::vector<KgTriple> triples_;  // grouped by head
  std::unordered_map<std::string, Range> outgoing_;
  std::unordered_map<std::string, std::vector<size_t>> incoming_;
  std::unordered_map<std::string, size_t> degree_;
  std::map<Lang, std::unordered_map<std::string, std::vector<std::string>>>
      alias_index_;
  std::map<Lang, std::unordered_map<std::string, std::vector<std::string>>>
      names_;
};

// Assigns an entity type by breadth-first traversal: the entity's instance_of
// classes are depth 1, and each further level follows subclass_of. The first
// depth containing a taxonomy root wins; several roots at that depth are
// resolved by taxonomy priority. Nothing within max_depth gives Other().
EntityType ResolveEntityType(const KgStore &store, const Taxonomy &taxonomy,
                             std::string_view qid);

}  // namespace kg2i

#endif  // KG2I_KG_STORE_H_
