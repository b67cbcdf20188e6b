#ifndef KG2I_SCHEMA_H_
#define KG2I_SCHEMA_H_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/kg_store.h"
#include "kg2i/types.h"

namespace kg2i {

struct RelationConstraint {
  std::string pid;
  std::map<Lang, std::string> label;
  std::set<std::string> head_types;
  std::set<std::string> tail_types;

  const std::string &Label(Lang lang) const { return label.at(lang); }
};

// Relations a domain may emit, with entity-type constraints on both ends.
class SchemaMapper {
 public:
  SchemaMapper() = default;
  SchemaMapper(Domain domain, std::vector<RelationConstraint> relations);

  // Every registered property, with no type constraints. Labels fall back to
  // the pid when the registry has none for a language.
  static SchemaMapper AllowAll(Domain domain, const PropertyRegistry &registry);

  Domain domain() const { return domain_; }
  const std::vector<RelationConstraint> &relations() const { return relations_; }
  bool unconstrained() const { return unconstrained_; }

  const RelationConstraint *Find(std::string_view pid) const;
  // Lookup by label in one language.
  const RelationConstraint *FindLabel(std::string_view label, Lang lang) const;

  bool AllowsHead(const RelationConstraint &r, std::string_view type) const;
  bool AllowsTail(const RelationConstraint &r, std::string_view type) const;

  // Relation labels in mapper order.
  std::vector<std::string> Labels(Lang lang) const;

 private:
  Domain domain_ = Domain::kGPE;
  std::vector<RelationConstraint> relations_;
  bool unconstrained_ = false;
};

// One mapper per domain.
//
//   {"declared_domain_count": 12, "declared_relation_count": 123,
//    "mappers": [{"domain", "relations": [{"pid", "label": {"zh", "en"},
//                                          "head_types", "tail_types"}]}]}
//
// Every type name must be known to the taxonomy. Declared counts, when
// present, are checked against the distinct labels in each language.
class MapperSet {
 public:
  static MapperSet Load(const std::filesystem::path &path,
                        const Taxonomy &taxonomy);
  static MapperSet FromJson(const json &config, const Taxonomy &taxonomy);

  const SchemaMapper &For(Domain domain) const;
  size_t DistinctRelationCount(Lang lang) const;

 private:
  std::map<Domain, SchemaMapper> mappers_;
};

// Surface renderings for time and quantity literals, per language.
//
//   {"en": {"month_names": [12 names],
//           "day": ["{month_name} {day}, {year}", ...],
//           "month": [...], "year": ["{year}"]}, "zh": {...}}
//
// Placeholders: {year}, {month}, {mm}, {day}, {dd}, {month_name}.
class DatePatterns {
 public:
  static DatePatterns Load(const std::filesystem::path &path);
  static DatePatterns FromJson(const json &config);

  // Candidate surfaces in pattern order.
  std::vector<std::string> Render(const Literal &literal, Lang lang) const;

 private:
  struct LangPatterns {
    std::vector<std::string> month_names;
    std::vector<std::string> day;
    std::vector<std::string> month;
    std::vector<std::string> year;
  };
  std::map<Lang, LangPatterns> patterns_;
};

}  // namespace kg2i

#endif  // KG2I_SCHEMA_H_
