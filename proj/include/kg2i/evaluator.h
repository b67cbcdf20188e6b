#ifndef KG2I_EVALUATOR_H_
#define KG2I_EVALUATOR_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/render.h"
#include "kg2i/types.h"

namespace kg2i {

enum class ErrorCategory {
  kEntityMismatch,
  kSpuriousRelation,
  kBoundaryMismatch,
  kIncongruentPredictions,
};

inline constexpr std::array<ErrorCategory, 4> kAllErrorCategories = {
    ErrorCategory::kEntityMismatch, ErrorCategory::kSpuriousRelation,
    ErrorCategory::kBoundaryMismatch, ErrorCategory::kIncongruentPredictions};

std::string_view ErrorCategoryName(ErrorCategory category);

struct Counts {
  size_t tp = 0;
  size_t pred = 0;
  size_t gold = 0;

  double Precision() const;
  double Recall() const;
  double F1() const;
  Counts &operator+=(const Counts &other);
  bool operator==(const Counts &) const = default;
};

struct EvalReport {
  std::map<Domain, Counts> per_domain;
  Counts overall;
  size_t instances = 0;
  size_t unparseable = 0;
  std::map<ErrorCategory, size_t> errors;

  bool operator==(const EvalReport &) const = default;
};

struct GoldInstance {
  std::string id;
  Lang lang = Lang::kEn;
  Domain domain = Domain::kGPE;
  std::vector<SurfaceTriple> triples;
};

struct Prediction {
  std::string id;
  std::string output;
};

GoldInstance GoldFromRecord(const InstructionRecord &record);

// One of the strings is a proper substring of the other, or they share a
// token. Compared after normalization.
bool PartiallyOverlaps(std::string_view a, std::string_view b, Lang lang);

// Category of one false positive against the instance's gold triples:
// SpuriousRelation when no gold triple has its relation; otherwise against
// the best-aligned gold triple of that relation, BoundaryMismatch when one
// side matches and the other partially overlaps, EntityMismatch when one side
// matches and the other is disjoint, IncongruentPredictions otherwise.
ErrorCategory ClassifyError(const SurfaceTriple &pred,
                            const std::vector<SurfaceTriple> &gold, Lang lang);

// Counts for one instance; both sides deduplicated on the normalized key.
// Appends the category of each false positive when categories is non-null.
Counts ScoreInstance(const std::vector<SurfaceTriple> &gold,
                     const std::vector<SurfaceTriple> &pred, Lang lang,
                     std::vector<ErrorCategory> *categories);

// Micro-averaged report. Every gold id needs exactly one prediction and vice
// versa; otherwise Error lists the offending ids. Unparseable outputs count
// as zero predictions.
EvalReport Score(const std::vector<GoldInstance> &gold,
                 const std::vector<Prediction> &pred);

ordered_json ToJson(const EvalReport &report);

// Aligned P/R/F1 rows with one column per domain and a final Overall column.
std::string FormatTable(const EvalReport &report);

}  // namespace kg2i

#endif  // KG2I_EVALUATOR_H_
