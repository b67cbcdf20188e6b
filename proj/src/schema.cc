#include "kg2i/schema.h"

#include <algorithm>

#include "kg2i/errors.h"
#include "kg2i/taxonomy.h"

namespace kg2i {

SchemaMapper::SchemaMapper(Domain domain, std::vector<RelationConstraint> relations)
    : domain_(domain), relations_(std::move(relations)) {}

SchemaMapper SchemaMapper::AllowAll(Domain domain,
                                    const PropertyRegistry &registry) {
  std::vector<RelationConstraint> relations;
  for (const Property &p : registry.properties()) {
    RelationConstraint r;
    r.pid = p.pid;
    for (Lang lang : kAllLangs) {
      auto it = p.labels.find(lang);
      r.label[lang] = it != p.labels.end() ? it->second : p.pid;
    }
    relations.push_back(std::move(r));
  }
  SchemaMapper m(domain, std::move(relations));
  m.unconstrained_ = true;
  return m;
}

const RelationConstraint *SchemaMapper::Find(std::string_view pid) const {
  for (const RelationConstraint &r : relations_) {
    if (r.pid == pid) return &r;
  }
  return nullptr;
}

const RelationConstraint *SchemaMapper::FindLabel(std::string_view label,
                                                  Lang lang) const {
  for (const RelationConstraint &r : relations_) {
    auto it = r.label.find(lang);
    if (it != r.label.end() && it->second == label) return &r;
  }
  return nullptr;
}

bool SchemaMapper::AllowsHead(const RelationConstraint &r,
                              std::string_view type) const {
  return unconstrained_ || r.head_types.contains(std::string(type));
}

bool SchemaMapper::AllowsTail(const RelationConstraint &r,
                              std::string_view type) const {
  return unconstrained_ || r.tail_types.contains(std::string(type));
}

std::vector<std::string> SchemaMapper::Labels(Lang lang) const {
  std::vector<std::string> out;
  for (const RelationConstraint &r : relations_) out.push_back(r.Label(lang));
  return out;
}

MapperSet MapperSet::Load(const std::filesystem::path &path,
                          const Taxonomy &taxonomy) {
  try {
    return FromJson(ReadJsonFile(path), taxonomy);
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

MapperSet MapperSet::FromJson(const json &config, const Taxonomy &taxonomy) {
  const std::string ctx = "mappers";
  MapperSet set;
  for (const json &entry : RequireField(config, "mappers", ctx)) {
    std::string name = RequireString(entry, "domain", ctx);
    auto domain = ParseDomain(name);
    if (!domain) throw ConfigError(ctx + ": unknown domain '" + name + "'");
    if (set.mappers_.contains(*domain)) {
      throw ConfigError(ctx + ": domain '" + name + "' listed twice");
    }
    const std::string where = ctx + "[" + name + "]";
    std::vector<RelationConstraint> relations;
    std::set<std::string> pids;
    for (const json &rel : RequireField(entry, "relations", where)) {
      RelationConstraint r;
      r.pid = RequireString(rel, "pid", where);
      if (!pids.insert(r.pid).second) {
        throw ConfigError(where + ": duplicate pid " + r.pid);
      }
      const json &label = RequireField(rel, "label", where);
      for (Lang lang : kAllLangs) {
        const std::string code(LangCode(lang));
        if (!label.contains(code) || !label[code].is_string() ||
            label[code].get<std::string>().empty()) {
          throw ConfigError(where + ": " + r.pid + " lacks a " + code + " label");
        }
        r.label[lang] = label[code].get<std::string>();
      }
      for (const char *field : {"head_types", "tail_types"}) {
        auto &types = std::string_view(field) == "head_types" ? r.head_types
                                                              : r.tail_types;
        for (const json &t : RequireField(rel, field, where)) {
          std::string type = t.get<std::string>();
          if (!taxonomy.IsKnownType(type)) {
            throw ConfigError(where + ": " + r.pid + " uses unknown type '" +
                              type + "'");
          }
          types.insert(type);
        }
        if (types.empty()) {
          throw ConfigError(where + ": " + r.pid + " has empty " + field);
        }
      }
      relations.push_back(std::move(r));
    }
    set.mappers_.emplace(*domain, SchemaMapper(*domain, std::move(relations)));
  }

  size_t domains = set.mappers_.size();
  if (config.contains("declared_domain_count") &&
      config["declared_domain_count"].get<size_t>() != domains) {
    throw ConfigError(ctx + ": declares " +
                      config["declared_domain_count"].dump() +
                      " domains but lists " + std::to_string(domains));
  }
  if (config.contains("declared_relation_count")) {
    size_t declared = config["declared_relation_count"].get<size_t>();
    for (Lang lang : kAllLangs) {
      size_t n = set.DistinctRelationCount(lang);
      if (n != declared) {
        throw ConfigError(ctx + ": declares " + std::to_string(declared) +
                          " relations but has " + std::to_string(n) +
                          " distinct " + std::string(LangCode(lang)) + " labels");
      }
    }
  }
  return set;
}

const SchemaMapper &MapperSet::For(Domain domain) const {
  auto it = mappers_.find(domain);
  if (it == mappers_.end()) {
    throw ConfigError("no schema mapper for domain " +
                      std::string(DomainName(domain)));
  }
  return it->second;
}

size_t MapperSet::DistinctRelationCount(Lang lang) const {
  std::set<std::string> labels;
  for (const auto &[domain, mapper] : mappers_) {
    for (const RelationConstraint &r : mapper.relations()) {
      labels.insert(r.Label(lang));
    }
  }
  return labels.size();
}

DatePatterns DatePatterns::Load(const std::filesystem::path &path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

DatePatterns DatePatterns::FromJson(const json &config) {
  DatePatterns d;
  for (const auto &[code, entry] : config.items()) {
    Lang lang = ParseLang(code);
    const std::string ctx = "date patterns[" + code + "]";
    LangPatterns p;
    auto strings = [&](const char *field) {
      std::vector<std::string> out;
      for (const json &s : RequireField(entry, field, ctx)) {
        out.push_back(s.get<std::string>());
      }
      return out;
    };
    p.month_names = strings("month_names");
    if (p.month_names.size() != 12) {
      throw ConfigError(ctx + ": month_names must have 12 entries");
    }
    p.day = strings("day");
    p.month = strings("month");
    p.year = strings("year");
    d.patterns_[lang] = std::move(p);
  }
  return d;
}

namespace {

void ReplaceAll(std::string *s, std::string_view from, const std::string &to) {
  size_t pos = 0;
  while ((pos = s->find(from, pos)) != std::string::npos) {
    s->replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string Pad2(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

// "1234567.5" -> "1,234,567.5"
std::string WithThousands(const std::string &value) {
  size_t sign = (!value.empty() && value[0] == '-') ? 1 : 0;
  size_t dot = value.find('.');
  size_t int_end = dot == std::string::npos ? value.size() : dot;
  std::string digits = value.substr(sign, int_end - sign);
  std::string grouped;
  for (size_t i = 0; i < digits.size(); ++i) {
    if (i > 0 && (digits.size() - i) % 3 == 0) grouped.push_back(',');
    grouped.push_back(digits[i]);
  }
  return value.substr(0, sign) + grouped + value.substr(int_end);
}

}  // namespace

std::vector<std::string> DatePatterns::Render(const Literal &literal,
                                              Lang lang) const {
  std::vector<std::string> out;
  switch (literal.kind()) {
    case LiteralKind::kString:
      out.push_back(literal.value());
      break;
    case LiteralKind::kQuantity: {
      out.push_back(literal.value());
      std::string grouped = WithThousands(literal.value());
      if (grouped != literal.value()) out.push_back(grouped);
      break;
    }
    case LiteralKind::kTime: {
      auto it = patterns_.find(lang);
      if (it == patterns_.end()) break;
      const LangPatterns &p = it->second;
      const std::vector<std::string> *list = &p.year;
      if (literal.precision() == TimePrecision::kDay) list = &p.day;
      if (literal.precision() == TimePrecision::kMonth) list = &p.month;
      for (std::string s : *list) {
        ReplaceAll(&s, "{year}", std::to_string(literal.year()));
        if (literal.precision() != TimePrecision::kYear) {
          ReplaceAll(&s, "{month_name}", p.month_names[literal.month() - 1]);
          ReplaceAll(&s, "{month}", std::to_string(literal.month()));
          ReplaceAll(&s, "{mm}", Pad2(literal.month()));
        }
        if (literal.precision() == TimePrecision::kDay) {
          ReplaceAll(&s, "{day}", std::to_string(literal.day()));
          ReplaceAll(&s, "{dd}", Pad2(literal.day()));
        }
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      }
      break;
    }
  }
  return out;
}

}  // namespace kg2i
