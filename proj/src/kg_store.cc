#include "kg2i/kg_store.h"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>
#include <unordered_set>

#include "kg2i/errors.h"
#include "kg2i/jsonl.h"
#include "kg2i/text.h"

namespace kg2i {

namespace {

std::map<Lang, std::string> ParseLabelMap(const json &labels,
                                          const std::string &ctx) {
  std::map<Lang, std::string> out;
  if (labels.is_null()) return out;
  if (!labels.is_object()) throw LoadError(ctx + ": 'labels' must be an object");
  for (const auto &[code, value] : labels.items()) {
    if (code != "zh" && code != "en") continue;  // other languages ignored
    if (!value.is_string()) {
      throw LoadError(ctx + ": label for '" + code + "' must be a string");
    }
    out[ParseLang(code)] = value.get<std::string>();
  }
  return out;
}

std::vector<std::string> ParseIdList(const json &object, const char *field,
                                     const std::string &ctx) {
  std::vector<std::string> out;
  if (!object.contains(field)) return out;
  const json &list = object.at(field);
  if (!list.is_array()) {
    throw LoadError(ctx + ": '" + field + "' must be an array");
  }
  for (const json &id : list) {
    if (!id.is_string()) {
      throw LoadError(ctx + ": '" + field + "' entries must be strings");
    }
    out.push_back(id.get<std::string>());
  }
  return out;
}

KgTriple ParseClaim(const std::string &head, const json &claim,
                    const std::string &ctx) {
  KgTriple triple;
  triple.head = head;
  if (!claim.is_object() || !claim.contains("pid") ||
      !claim["pid"].is_string()) {
    throw LoadError(ctx + ": claim without a string 'pid'");
  }
  triple.pid = claim["pid"].get<std::string>();
  if (!claim.contains("tail") || !claim["tail"].is_object()) {
    throw LoadError(ctx + ": claim " + triple.pid + " without a 'tail' object");
  }
  const json &tail = claim["tail"];
  if (tail.contains("qid")) {
    if (!tail["qid"].is_string()) {
      throw LoadError(ctx + ": tail qid must be a string");
    }
    triple.tail_qid = tail["qid"].get<std::string>();
  } else if (tail.contains("literal")) {
    const json &lit = tail["literal"];
    std::string kind_name = lit.value("kind", "");
    auto kind = ParseLiteralKind(kind_name);
    if (!kind) {
      throw LoadError(ctx + ": unknown literal kind '" + kind_name + "'");
    }
    if (!lit.contains("value") || !lit["value"].is_string()) {
      throw LoadError(ctx + ": literal without a string 'value'");
    }
    try {
      triple.literal = Literal::Parse(*kind, lit["value"].get<std::string>());
    } catch (const ParseError &e) {
      throw LoadError(ctx + ": " + e.what());
    }
  } else {
    throw LoadError(ctx + ": tail must hold 'qid' or 'literal'");
  }
  return triple;
}

}  // namespace

// -- PropertyRegistry ---------------------------------------------------------

PropertyRegistry PropertyRegistry::Load(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  return FromStream(in);
}

PropertyRegistry PropertyRegistry::FromStream(std::istream &in) {
  PropertyRegistry registry;
  JsonlReader reader(in);
  json line;
  while (reader.Next(&line)) {
    std::string ctx = "property registry line " + std::to_string(reader.line());
    if (!line.contains("pid") || !line["pid"].is_string()) {
      throw LoadError(ctx + ": missing 'pid'");
    }
    Property p;
    p.pid = line["pid"].get<std::string>();
    p.labels = ParseLabelMap(line.value("labels", json()), ctx);
    if (!registry.index_.emplace(p.pid, registry.properties_.size()).second) {
      throw LoadError(ctx + ": duplicate pid " + p.pid);
    }
    registry.properties_.push_back(std::move(p));
  }
  return registry;
}

const Property *PropertyRegistry::Find(std::string_view pid) const {
  auto it = index_.find(std::string(pid));
  return it == index_.end() ? nullptr : &properties_[it->second];
}

// -- KgStore ------------------------------------------------------------------

int64_t IdNumber(std::string_view id) {
  if (id.size() < 2) return INT64_MAX;
  int64_t v = 0;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return INT64_MAX;
    if (v > (INT64_MAX - 9) / 10) return INT64_MAX;
    v = v * 10 + (c - '0');
  }
  return v;
}

KgStore KgStore::Load(const std::filesystem::path &path,
                      const PropertyRegistry *registry) {
  std::ifstream in = OpenInput(path);
  try {
    return FromStream(in, registry);
  } catch (const LoadError &e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

KgStore KgStore::FromStream(std::istream &in,
                            const PropertyRegistry *registry) {
  KgStore store;
  JsonlReader reader(in);
  json line;
  std::vector<KgTriple> raw;
  while (reader.Next(&line)) {
    std::string ctx = "line " + std::to_string(reader.line());
    if (!line.is_object()) throw LoadError(ctx + ": expected an object");
    if (line.contains("head")) {
      if (!line["head"].is_string()) throw LoadError(ctx + ": head must be a string");
      raw.push_back(ParseClaim(line["head"].get<std::string>(), line, ctx));
      continue;
    }
    if (!line.contains("qid") || !line["qid"].is_string()) {
      throw LoadError(ctx + ": entity without a string 'qid'");
    }
    KgEntity e;
    e.qid = line["qid"].get<std::string>();
    ctx += " (" + e.qid + ")";
    if (store.entity_index_.count(e.qid)) {
      throw LoadError(ctx + ": duplicate qid " + e.qid);
    }
    e.labels = ParseLabelMap(line.value("labels", json()), ctx);
    bool has_label = false;
    for (const auto &[lang, label] : e.labels) {
      if (!label.empty()) has_label = true;
    }
    if (!has_label) {
      throw LoadError(ctx + ": entity " + e.qid +
                      " has no label in a supported language");
    }
    if (line.contains("aliases")) {
      const json &aliases = line["aliases"];
      if (!aliases.is_object()) throw LoadError(ctx + ": 'aliases' must be an object");
      for (const auto &[code, list] : aliases.items()) {
        if (code != "zh" && code != "en") continue;
        if (!list.is_array()) throw LoadError(ctx + ": alias list must be an array");
        auto &dst = e.aliases[ParseLang(code)];
        for (const json &a : list) dst.push_back(a.get<std::string>());
      }
    }
    e.instance_of = ParseIdList(line, "instance_of", ctx);
    e.subclass_of = ParseIdList(line, "subclass_of", ctx);
    if (line.contains("claims")) {
      if (!line["claims"].is_array()) throw LoadError(ctx + ": 'claims' must be an array");
      for (const json &claim : line["claims"]) {
        raw.push_back(ParseClaim(e.qid, claim, ctx));
      }
    }
    store.entity_index_.emplace(e.qid, store.entities_.size());
    store.entities_.push_back(std::move(e));
  }

  for (KgTriple &t : raw) {
    if (!store.entity_index_.count(t.head)) {
      throw LoadError("dangling triple head " + t.head + " (" + t.pid + ")");
    }
    if (registry && !registry->Contains(t.pid)) {
      throw LoadError("claim " + t.head + " " + t.pid +
                      ": pid not in the property registry");
    }
    if (t.is_item()) t.resolvable = store.entity_index_.count(t.tail_qid) > 0;
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [&](const KgTriple &a, const KgTriple &b) {
                     return store.entity_index_.at(a.head) <
                            store.entity_index_.at(b.head);
                   });
  store.triples_ = std::move(raw);
  store.BuildIndexes();
  return store;
}

void KgStore::BuildIndexes() {
  for (size_t i = 0; i < triples_.size(); ++i) {
    const KgTriple &t = triples_[i];
    Range &r = outgoing_[t.head];
    if (r.count == 0) r.begin = i;
    ++r.count;
    ++degree_[t.head];
    if (t.is_item() && t.resolvable) {
      incoming_[t.tail_qid].push_back(i);
      ++degree_[t.tail_qid];
    }
  }

  for (const KgEntity &e : entities_) {
    for (Lang lang : kAllLangs) {
      std::vector<std::string> surfaces;
      if (auto it = e.labels.find(lang); it != e.labels.end()) {
        surfaces.push_back(it->second);
      }
      if (auto it = e.aliases.find(lang); it != e.aliases.end()) {
        surfaces.insert(surfaces.end(), it->second.begin(), it->second.end());
      }
      std::vector<std::string> normalized;
      for (const std::string &s : surfaces) {
        std::string key = text::Normalize(s, lang);
        if (key.empty()) continue;
        if (std::find(normalized.begin(), normalized.end(), key) ==
            normalized.end()) {
          normalized.push_back(key);
        }
      }
      for (const std::string &key : normalized) {
        alias_index_[lang][key].push_back(e.qid);
      }
      names_[lang][e.qid] = std::move(normalized);
    }
  }
  for (auto &[lang, index] : alias_index_) {
    for (auto &[key, qids] : index) SortCandidates(&qids);
  }
}

const KgEntity *KgStore::Find(std::string_view qid) const {
  auto it = entity_index_.find(std::string(qid));
  return it == entity_index_.end() ? nullptr : &entities_[it->second];
}

void KgStore::SortCandidates(std::vector<std::string> *qids) const {
  std::sort(qids->begin(), qids->end(),
            [&](const std::string &a, const std::string &b) {
              size_t da = Degree(a), db = Degree(b);
              if (da != db) return da > db;
              int64_t na = IdNumber(a), nb = IdNumber(b);
              if (na != nb) return na < nb;
              return a < b;
            });
  qids->erase(std::unique(qids->begin(), qids->end()), qids->end());
}

std::vector<std::string> KgStore::Candidates(std::string_view surface,
                                             Lang lang) const {
  auto lang_it = alias_index_.find(lang);
  if (lang_it == alias_index_.end()) return {};
  auto it = lang_it->second.find(text::Normalize(surface, lang));
  if (it == lang_it->second.end()) return {};
  return it->second;
}

std::span<const KgTriple> KgStore::Outgoing(std::string_view qid) const {
  auto it = outgoing_.find(std::string(qid));
  if (it == outgoing_.end()) return {};
  return std::span<const KgTriple>(triples_).subspan(it->second.begin,
                                                     it->second.count);
}

std::vector<const KgTriple *> KgStore::Incoming(std::string_view qid) const {
  std::vector<const KgTriple *> out;
  auto it = incoming_.find(std::string(qid));
  if (it == incoming_.end()) return out;
  for (size_t i : it->second) out.push_back(&triples_[i]);
  return out;
}

size_t KgStore::Degree(std::string_view qid) const {
  auto it = degree_.find(std::string(qid));
  return it == degree_.end() ? 0 : it->second;
}

const std::vector<std::string> &KgStore::Names(std::string_view qid,
                                               Lang lang) const {
  static const std::vector<std::string> kEmpty;
  auto lang_it = names_.find(lang);
  if (lang_it == names_.end()) return kEmpty;
  auto it = lang_it->second.find(std::string(qid));
  return it == lang_it->second.end() ? kEmpty : it->second;
}

size_t KgStore::AliasSurfaceCount() const {
  size_t count = 0;
  for (const auto &[lang, index] : alias_index_) count += index.size();
  return count;
}

EntityType ResolveEntityType(const KgStore &store, const Taxonomy &taxonomy,
                             std::string_view qid) {
  const KgEntity *entity = store.Find(qid);
  if (!entity) return taxonomy.Other();

  std::unordered_set<std::string> visited;
  std::vector<std::string> frontier;
  for (const std::string &c : entity->instance_of) {
    if (visited.insert(c).second) frontier.push_back(c);
  }
  for (size_t depth = 1; depth <= taxonomy.max_depth() && !frontier.empty();
       ++depth) {
    std::optional<size_t> best;
    for (const std::string &c : frontier) {
      if (auto p = taxonomy.PriorityOfClass(c); p && (!best || *p < *best)) {
        best = p;
      }
    }
    if (best) return taxonomy.types()[*best];
    std::vector<std::string> next;
    for (const std::string &c : frontier) {
      const KgEntity *cls = store.Find(c);
      if (!cls) continue;
      for (const std::string &parent : cls->subclass_of) {
        if (visited.insert(parent).second) next.push_back(parent);
      }
    }
    frontier = std::move(next);
  }
  return taxonomy.Other();
}

}  // namespace kg2i
