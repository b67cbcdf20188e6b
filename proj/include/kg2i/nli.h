#ifndef KG2I_NLI_H_
#define KG2I_NLI_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/corpus.h"
#include "kg2i/jsonl.h"
#include "kg2i/types.h"

namespace kg2i {

class Backend;

inline constexpr size_t kTemplatesPerRelation = 3;

// Hypothesis templates keyed by relation label, for one language. Every
// template holds [X] and [Y] exactly once.
//
//   {"lang": "en", "declared_relation_count": 123,
//    "templates": {"date of death": ["[X] died on [Y]", ...], ...}}
class RelationTemplates {
 public:
  static RelationTemplates Load(const std::filesystem::path &path);
  static RelationTemplates FromJson(const json &config);

  Lang lang() const { return lang_; }
  size_t size() const { return templates_.size(); }
  const std::array<std::string, kTemplatesPerRelation> *Find(
      std::string_view relation) const;

 private:
  Lang lang_ = Lang::kEn;
  std::map<std::string, std::array<std::string, kTemplatesPerRelation>,
           std::less<>>
      templates_;
};

// Fills [X] with the head and [Y] with the tail in a single left-to-right
// pass, so placeholder text inside a surface is never expanded.
std::string FillTemplate(std::string_view tmpl, std::string_view head,
                         std::string_view tail);

// Empty when the relation has no templates.
std::vector<std::string> Instantiate(const SurfaceTriple &triple,
                                     const RelationTemplates &templates);

// Sentences of text that contain the head or tail; the whole text when none
// do. Splits after . ! ? followed by whitespace, and after 。！？.
std::string SentencePremise(std::string_view text, const SurfaceTriple &triple);

struct NliOptions {
  double threshold = 0.5;  // retained iff entailment >= threshold
  bool sentence_premise = false;
};

struct NliVerdict {
  SurfaceTriple triple;  // entailment set when scored
  bool retained = true;
  // Empty, "no_template" or "nli_degraded"; flagged triples are retained.
  std::string flag;
};

// One verdict per input triple, in input order.
std::vector<NliVerdict> FilterTriples(const Paragraph &p,
                                      const std::vector<SurfaceTriple> &triples,
                                      const RelationTemplates &templates,
                                      Backend &backend,
                                      const NliOptions &options);

}  // namespace kg2i

#endif  // KG2I_NLI_H_
