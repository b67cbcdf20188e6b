#include "kg2i/taxonomy.h"

#include <set>

#include "kg2i/errors.h"

namespace kg2i {

Taxonomy Taxonomy::Load(const std::filesystem::path &path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

Taxonomy Taxonomy::FromJson(const json &config) {
  Taxonomy t;
  const std::string ctx = "taxonomy";
  if (config.contains("max_depth")) {
    if (!config["max_depth"].is_number_unsigned() ||
        config["max_depth"].get<size_t>() == 0) {
      throw ConfigError(ctx + ": max_depth must be a positive integer");
    }
    t.max_depth_ = config["max_depth"].get<size_t>();
  }
  if (config.contains("other")) t.other_.name = RequireString(config, "other", ctx);

  const json &types = RequireField(config, "types", ctx);
  if (!types.is_array() || types.empty()) {
    throw ConfigError(ctx + ": 'types' must be a non-empty array");
  }
  std::set<std::string> names;
  for (const json &entry : types) {
    std::string name = RequireString(entry, "name", ctx);
    if (!names.insert(name).second) {
      throw ConfigError(ctx + ": duplicate type '" + name + "'");
    }
    size_t priority = t.types_.size();
    t.types_.push_back({name});
    for (const json &root : RequireField(entry, "root_classes", ctx)) {
      std::string qid = root.get<std::string>();
      if (!t.root_priority_.emplace(qid, priority).second) {
        throw ConfigError(ctx + ": root class " + qid +
                          " assigned to more than one type");
      }
    }
  }
  if (config.contains("declared_count")) {
    size_t declared = config["declared_count"].get<size_t>();
    if (declared != t.types_.size()) {
      throw ConfigError(ctx + ": declares " + std::to_string(declared) +
                        " types but lists " + std::to_string(t.types_.size()));
    }
  }

  t.literal_types_ = {{"time", {"Time"}}, {"quantity", {"Quantity"}},
                      {"string", {"String"}}};
  if (config.contains("literal_types")) {
    for (const auto &[kind, name] : config["literal_types"].items()) {
      if (!ParseLiteralKind(kind)) {
        throw ConfigError(ctx + ": unknown literal kind '" + kind + "'");
      }
      t.literal_types_[kind] = {name.get<std::string>()};
    }
  }
  return t;
}

std::optional<size_t> Taxonomy::PriorityOfClass(std::string_view qid) const {
  auto it = root_priority_.find(std::string(qid));
  if (it == root_priority_.end()) return std::nullopt;
  return it->second;
}

EntityType Taxonomy::LiteralType(LiteralKind kind) const {
  return literal_types_.at(std::string(LiteralKindName(kind)));
}

bool Taxonomy::IsKnownType(std::string_view name) const {
  if (name == other_.name) return true;
  for (const auto &t : types_) {
    if (t.name == name) return true;
  }
  for (const auto &[kind, t] : literal_types_) {
    if (t.name == name) return true;
  }
  return false;
}

std::vector<EntityType> Taxonomy::AllKnownTypes() const {
  std::set<EntityType> all(types_.begin(), types_.end());
  for (const auto &[kind, t] : literal_types_) all.insert(t);
  all.insert(other_);
  return {all.begin(), all.end()};
}

}  // namespace kg2i
