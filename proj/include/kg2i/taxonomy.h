#ifndef KG2I_TAXONOMY_H_
#define KG2I_TAXONOMY_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/literal.h"
#include "kg2i/types.h"

namespace kg2i {

// Entity-type taxonomy: an ordered list of types, each owning a set of root
// class ids. List order is the priority used to break ties between types
// found at the same traversal depth.
//
// File layout:
//   {"declared_count": 14, "max_depth": 5, "other": "Other",
//    "literal_types": {"time": "Time", "quantity": "Quantity", ...},
//    "types": [{"name": "Person", "root_classes": ["Q5"]}, ...]}
//
// When declared_count is present the loader checks it against the number of
// types, so a shipped file cannot silently drift from its stated size.
class Taxonomy {
 public:
  static Taxonomy Load(const std::filesystem::path &path);
  static Taxonomy FromJson(const json &config);

  const std::vector<EntityType> &types() const { return types_; }
  size_t max_depth() const { return max_depth_; }

  // Index into types() of the type rooted at this class, if any.
  std::optional<size_t> PriorityOfClass(std::string_view qid) const;

  const EntityType &Other() const { return other_; }
  EntityType LiteralType(LiteralKind kind) const;

  // True for taxonomy types, literal types and the fallback type.
  bool IsKnownType(std::string_view name) const;
  std::vector<EntityType> AllKnownTypes() const;

 private:
  std::vector<EntityType> types_;
  std::unordered_map<std::string, size_t> root_priority_;
  std::unordered_map<std::string, EntityType> literal_types_;
  EntityType other_{"Other"};
  size_t max_depth_ = 5;
};

}  // namespace kg2i

#endif  // KG2I_TAXONOMY_H_
