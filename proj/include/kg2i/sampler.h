#ifndef KG2I_SAMPLER_H_
#define KG2I_SAMPLER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/types.h"

namespace kg2i {

// Sorted, deduplicated relation labels joined by '|'.
std::string SchemaKey(const std::vector<SurfaceTriple> &triples);

struct SampleCandidate {
  std::string id;
  Lang lang = Lang::kEn;
  Domain domain = Domain::kGPE;
  std::string key;
};

// Per-(language, domain) caps. A domain absent from the table is uncapped;
// a cap of 0 excludes the domain.
//
//   {"zh": {"GPE": 20200, ...}, "en": {...}}
class CapTable {
 public:
  static CapTable Load(const std::filesystem::path &path);
  static CapTable FromJson(const json &config);

  void Set(Lang lang, Domain domain, size_t cap) { caps_[{lang, domain}] = cap; }
  std::optional<size_t> Get(Lang lang, Domain domain) const;

 private:
  std::map<std::pair<Lang, Domain>, size_t> caps_;
};

// Visits the candidates in a seeded Fisher-Yates permutation and accepts
// each with probability min(1, k / (count[key] + 1)), where count tracks the
// accepted samples. No random draw is made when the probability is 1 or the
// candidate's domain is full. Returns indices into candidates in visitation
// order. Throws ConfigError when k <= 0.
std::vector<size_t> SamplePool(const std::vector<SampleCandidate> &candidates,
                               uint64_t seed, double k, const CapTable &caps);

// Samples each language independently on its own derived stream
// ("sample/<lang>"); languages appear in zh, en order.
std::vector<size_t> SampleByLanguage(
    const std::vector<SampleCandidate> &candidates, uint64_t seed, double k,
    const CapTable &caps);

}  // namespace kg2i

#endif  // KG2I_SAMPLER_H_
