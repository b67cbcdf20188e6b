#ifndef KG2I_MOCK_BACKEND_H_
#define KG2I_MOCK_BACKEND_H_

#include <filesystem>
#include <map>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "kg2i/backend.h"
#include "kg2i/jsonl.h"

namespace kg2i {

// Deterministic rule-driven stand-in for all four endpoints. No I/O.
//
// {"classify": {"rules": [{"domain", "keywords": [...]}], "fallback": "GPE"},
//  "ner": {"en": [surface, ...], "zh": [...]},
//  "extract": [{"lang", "pattern", "head_group", "tail_group", "relation",
//               "head_type"}],
//  "entail": {"high": 0.9, "low": 0.1, "min_coverage": 1.0,
//             "stopwords": {"en": [...], "zh": [...]},
//             "cues": [{"lang", "hypothesis_any": [...], "premise_any": [...]}],
//             "overrides": [{"hypothesis", "entailment"}]},
//  "fail": ["ner", ...]}
//
// classify: the rule with the most keyword hits (case-insensitive, whole
//   words) wins, earlier rules on ties; confidence is its share of all hits.
//   No hits gives the fallback with confidence 0.
// ner: lexicon occurrences on word boundaries, longest first, no overlaps.
// extract: each regex rule of the request language emits (head, relation,
//   tail) for every match, provided the instruction's schema lists the
//   relation; the output is the canonical rendering.
// entail: an override for the exact hypothesis wins. Otherwise the score is
//   high when the premise covers at least min_coverage of the hypothesis's
//   non-stopword tokens and every cue triggered by the hypothesis finds one of
//   its premise phrases; low otherwise.
// fail: endpoints that always raise TransportError, for degradation tests.
class MockBackend : public Backend {
 public:
  static MockBackend Load(const std::filesystem::path &path);
  explicit MockBackend(const json &rules);

 protected:
  json Dispatch(Endpoint endpoint, const json &request) override;

 private:
  struct ClassifyRule {
    Domain domain;
    std::vector<std::string> keywords;
  };
  struct ExtractRule {
    Lang lang;
    std::regex pattern;
    size_t head_group;
    size_t tail_group;
    std::string relation;
    std::string head_type;
  };
  struct Cue {
    Lang lang;
    std::vector<std::string> hypothesis_any;
    std::vector<std::string> premise_any;
  };

  json OnClassify(const ClassifyRequest &r) const;
  json OnNer(const NerRequest &r) const;
  json OnExtract(const ExtractRequest &r) const;
  json OnEntail(const EntailRequest &r) const;

  std::vector<ClassifyRule> classify_rules_;
  Domain fallback_ = Domain::kGPE;
  std::map<Lang, std::vector<std::string>> lexicon_;
  std::vector<ExtractRule> extract_rules_;
  double high_ = 0.9;
  double low_ = 0.1;
  double min_coverage_ = 1.0;
  std::map<Lang, std::set<std::string>> stopwords_;
  std::vector<Cue> cues_;
  std::map<std::string, double> overrides_;
  std::set<Endpoint> failing_;
};

// Lowercased tokens: CJK characters one by one, runs of letters and digits
// otherwise. Punctuation separates.
std::vector<std::string> ContentTokens(std::string_view text);

}  // namespace kg2i

#endif  // KG2I_MOCK_BACKEND_H_
