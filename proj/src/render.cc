#include "kg2i/render.h"

#include <algorithm>

#include "kg2i/errors.h"
#include "kg2i/kg_store.h"
#include "kg2i/linker.h"
#include "kg2i/taxonomy.h"
#include "kg2i/text.h"

namespace kg2i {

InstructionTemplates InstructionTemplates::Load(
    const std::filesystem::path &path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

InstructionTemplates InstructionTemplates::FromJson(const json &config) {
  if (!config.is_object()) {
    throw ConfigError("instruction templates must be an object");
  }
  InstructionTemplates t;
  for (const auto &[code, value] : config.items()) {
    Lang lang = ParseLang(code);
    if (!value.is_string()) {
      throw ConfigError("instruction template for " + code + " is not a string");
    }
    std::string s = value.get<std::string>();
    if (s.find("{schema}") == std::string::npos) {
      throw ConfigError("instruction template for " + code +
                        " lacks a {schema} placeholder");
    }
    t.templates_[lang] = std::move(s);
  }
  return t;
}

namespace {

void ReplaceAll(std::string *s, std::string_view from, std::string_view to) {
  size_t pos = 0;
  while ((pos = s->find(from, pos)) != std::string::npos) {
    s->replace(pos, from.size(), to);
    pos += to.size();
  }
}

}  // namespace

std::string InstructionTemplates::Render(
    Domain domain, const std::vector<std::string> &schema, Lang lang) const {
  if (schema.empty()) throw Error("cannot render an instruction for an empty schema");
  auto it = templates_.find(lang);
  if (it == templates_.end()) {
    throw Error("no instruction template for language " +
                std::string(LangCode(lang)));
  }
  std::string out = it->second;
  // Substitute {domain} first so a schema label can never be re-expanded.
  ReplaceAll(&out, "{domain}", DomainName(domain));
  size_t pos = out.find("{schema}");
  out.replace(pos, 8, json(schema).dump());
  return out;
}

std::vector<TypedTriple> CanonicalOrder(const std::vector<TypedTriple> &triples) {
  struct Group {
    const std::string *type;
    const std::string *head;
    std::vector<const TypedTriple *> members;
  };
  std::vector<Group> groups;
  for (const TypedTriple &t : triples) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group &g) {
      return *g.type == t.head_type && *g.head == t.triple.head;
    });
    if (it == groups.end()) {
      groups.push_back({&t.head_type, &t.triple.head, {}});
      it = groups.end() - 1;
    }
    it->members.push_back(&t);
  }
  std::vector<TypedTriple> out;
  out.reserve(triples.size());
  for (Group &g : groups) {
    std::stable_sort(g.members.begin(), g.members.end(),
                     [](const TypedTriple *a, const TypedTriple *b) {
                       if (a->triple.relation != b->triple.relation) {
                         return a->triple.relation < b->triple.relation;
                       }
                       return a->triple.tail < b->triple.tail;
                     });
    for (const TypedTriple *t : g.members) out.push_back(*t);
  }
  return out;
}

std::string RenderOutput(const std::vector<TypedTriple> &triples) {
  ordered_json out = ordered_json::array();
  const std::string *type = nullptr;
  const std::string *head = nullptr;
  for (const TypedTriple &t : CanonicalOrder(triples)) {
    // Canonical order keeps each group contiguous.
    if (type == nullptr || *type != t.head_type || *head != t.triple.head) {
      ordered_json group;
      group["type"] = t.head_type;
      group["entity"] = t.triple.head;
      group["attributes"] = ordered_json::object();
      out.push_back(std::move(group));
      type = &t.head_type;
      head = &t.triple.head;
    }
    out.back()["attributes"][t.triple.relation].push_back(t.triple.tail);
  }
  return out.dump();
}

namespace {

// Drops commas that directly precede a closing bracket, outside strings.
std::string DropTrailingCommas(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool in_string = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (in_string) {
      out.push_back(c);
      if (c == '\\' && i + 1 < s.size()) {
        out.push_back(s[++i]);
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == ',') {
      size_t j = i + 1;
      while (j < s.size() && (s[j] == ' ' || s[j] == '\t' || s[j] == '\n' ||
                              s[j] == '\r')) {
        ++j;
      }
      if (j < s.size() && (s[j] == ']' || s[j] == '}')) continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<std::vector<TypedTriple>> ParseOutput(std::string_view text) {
  std::string s = text::Trim(text);
  while (!s.empty() && (s.back() == ',' || s.back() == ';' || s.back() == '.' ||
                        s.back() == ' ' || s.back() == '\n' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.pop_back();
  }
  s = DropTrailingCommas(s);

  json doc = json::parse(s, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_array()) return std::nullopt;

  std::vector<TypedTriple> out;
  for (const json &group : doc) {
    if (!group.is_object()) return std::nullopt;
    auto type = group.find("type");
    auto entity = group.find("entity");
    auto attributes = group.find("attributes");
    if (type == group.end() || !type->is_string()) return std::nullopt;
    if (entity == group.end() || !entity->is_string()) return std::nullopt;
    if (attributes == group.end() || !attributes->is_object()) return std::nullopt;
    std::string head = entity->get<std::string>();
    if (text::Trim(head).empty()) return std::nullopt;
    for (const auto &[relation, tails] : attributes->items()) {
      if (text::Trim(relation).empty()) return std::nullopt;
      std::vector<std::string> values;
      if (tails.is_string()) {
        values.push_back(tails.get<std::string>());
      } else if (tails.is_array()) {
        for (const json &tail : tails) {
          if (!tail.is_string()) return std::nullopt;
          values.push_back(tail.get<std::string>());
        }
      } else {
        return std::nullopt;
      }
      for (std::string &tail : values) {
        if (text::Trim(tail).empty()) continue;
        TypedTriple t;
        t.triple = {head, relation, std::move(tail), Provenance::kLlm, {}};
        t.head_type = type->get<std::string>();
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::string HeadType(std::string_view head, Lang lang,
                     const std::vector<EntityMention> &mentions,
                     const KgStore &store, const Taxonomy &taxonomy) {
  const std::string key = text::Normalize(head, lang);
  for (const EntityMention &m : mentions) {
    if (m.etype && text::Normalize(m.surface, lang) == key) return m.etype->name;
  }
  std::vector<std::string> candidates = store.Candidates(head, lang);
  if (!candidates.empty()) {
    return ResolveEntityType(store, taxonomy, candidates.front()).name;
  }
  return taxonomy.Other().name;
}

ordered_json TripleToJson(const SurfaceTriple &t) {
  ordered_json j;
  j["head"] = t.head;
  j["relation"] = t.relation;
  j["tail"] = t.tail;
  j["provenance"] = ProvenanceName(t.provenance);
  if (t.entailment) j["entailment"] = *t.entailment;
  return j;
}

SurfaceTriple TripleFromJson(const json &j) {
  const std::string ctx = "triple";
  SurfaceTriple t;
  t.head = RequireString(j, "head", ctx);
  t.relation = RequireString(j, "relation", ctx);
  t.tail = RequireString(j, "tail", ctx);
  if (j.contains("provenance")) {
    auto p = ParseProvenance(j["provenance"].get<std::string>());
    if (!p) throw ConfigError("triple: unknown provenance");
    t.provenance = *p;
  }
  if (j.contains("entailment") && !j["entailment"].is_null()) {
    t.entailment = j["entailment"].get<double>();
  }
  return t;
}

ordered_json ToJson(const InstructionRecord &record) {
  ordered_json j;
  j["id"] = record.id;
  j["lang"] = LangCode(record.lang);
  j["domain"] = DomainName(record.domain);
  j["instruction"] = record.instruction;
  j["input"] = record.input;
  j["schema"] = record.schema;
  j["output"] = record.output;
  j["triples"] = ordered_json::array();
  for (const TypedTriple &t : record.triples) {
    ordered_json tj = TripleToJson(t.triple);
    tj["head_type"] = t.head_type;
    j["triples"].push_back(std::move(tj));
  }
  return j;
}

InstructionRecord InstructionRecordFromJson(const json &j) {
  const std::string ctx = "record";
  InstructionRecord r;
  r.id = RequireString(j, "id", ctx);
  r.lang = ParseLang(RequireString(j, "lang", ctx));
  auto domain = ParseDomain(RequireString(j, "domain", ctx));
  if (!domain) throw ConfigError("record " + r.id + ": unknown domain");
  r.domain = *domain;
  r.instruction = RequireString(j, "instruction", ctx);
  r.input = RequireString(j, "input", ctx);
  for (const json &s : RequireField(j, "schema", ctx)) {
    r.schema.push_back(s.get<std::string>());
  }
  r.output = RequireString(j, "output", ctx);
  for (const json &tj : RequireField(j, "triples", ctx)) {
    TypedTriple t;
    t.triple = TripleFromJson(tj);
    t.head_type = tj.value("head_type", std::string());
    r.triples.push_back(std::move(t));
  }
  return r;
}

}  // namespace kg2i
