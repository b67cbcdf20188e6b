#include "kg2i/sampler.h"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "kg2i/errors.h"
#include "kg2i/hash.h"

namespace kg2i {

std::string SchemaKey(const std::vector<SurfaceTriple> &triples) {
  std::set<std::string> labels;
  for (const SurfaceTriple &t : triples) labels.insert(t.relation);
  std::string key;
  for (const std::string &l : labels) {
    if (!key.empty()) key.push_back('|');
    key += l;
  }
  return key;
}

CapTable CapTable::Load(const std::filesystem::path &path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

CapTable CapTable::FromJson(const json &config) {
  CapTable table;
  if (!config.is_object()) throw ConfigError("caps must be an object");
  for (const auto &[code, domains] : config.items()) {
    Lang lang = ParseLang(code);
    for (const auto &[name, cap] : domains.items()) {
      auto domain = ParseDomain(name);
      if (!domain) throw ConfigError("caps: unknown domain '" + name + "'");
      if (!cap.is_number_unsigned()) {
        throw ConfigError("caps: " + code + "/" + name +
                          " must be a non-negative integer");
      }
      table.Set(lang, *domain, cap.get<size_t>());
    }
  }
  return table;
}

std::optional<size_t> CapTable::Get(Lang lang, Domain domain) const {
  auto it = caps_.find({lang, domain});
  if (it == caps_.end()) return std::nullopt;
  return it->second;
}

std::vector<size_t> SamplePool(const std::vector<SampleCandidate> &candidates,
                               uint64_t seed, double k, const CapTable &caps) {
  if (!(k > 0.0)) throw ConfigError("sampler weight k must be positive");
  std::mt19937_64 rng(seed);

  std::vector<size_t> order(candidates.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (size_t i = order.size(); i > 1; --i) {
    boost::random::uniform_int_distribution<size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }

  boost::random::uniform_01<double> coin;
  std::unordered_map<std::string, size_t> key_count;
  std::map<std::pair<Lang, Domain>, size_t> domain_count;
  std::vector<size_t> chosen;
  for (size_t index : order) {
    const SampleCandidate &c = candidates[index];
    size_t &taken = domain_count[{c.lang, c.domain}];
    auto cap = caps.Get(c.lang, c.domain);
    if (cap && taken >= *cap) continue;
    size_t &count = key_count[c.key];
    double p = k / static_cast<double>(count + 1);
    if (p < 1.0 && coin(rng) >= p) continue;
    ++count;
    ++taken;
    chosen.push_back(index);
  }
  return chosen;
}

std::vector<size_t> SampleByLanguage(
    const std::vector<SampleCandidate> &candidates, uint64_t seed, double k,
    const CapTable &caps) {
  std::vector<size_t> out;
  for (Lang lang : kAllLangs) {
    std::vector<size_t> members;
    std::vector<SampleCandidate> pool;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].lang != lang) continue;
      members.push_back(i);
      pool.push_back(candidates[i]);
    }
    if (pool.empty()) continue;
    uint64_t sub = DeriveSeed(seed, "sample/" + std::string(LangCode(lang)));
    for (size_t local : SamplePool(pool, sub, k, caps)) {
      out.push_back(members[local]);
    }
  }
  return out;
}

}  // namespace kg2i
