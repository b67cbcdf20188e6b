#include "kg2i/evaluator.h"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include "kg2i/errors.h"
#include "kg2i/text.h"

namespace kg2i {

std::string_view ErrorCategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kEntityMismatch:
      return "EntityMismatch";
    case ErrorCategory::kSpuriousRelation:
      return "SpuriousRelation";
    case ErrorCategory::kBoundaryMismatch:
      return "BoundaryMismatch";
    case ErrorCategory::kIncongruentPredictions:
      return "IncongruentPredictions";
  }
  return "IncongruentPredictions";
}

double Counts::Precision() const {
  return pred == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(pred);
}

double Counts::Recall() const {
  return gold == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(gold);
}

double Counts::F1() const {
  double p = Precision();
  double r = Recall();
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

Counts &Counts::operator+=(const Counts &other) {
  tp += other.tp;
  pred += other.pred;
  gold += other.gold;
  return *this;
}

GoldInstance GoldFromRecord(const InstructionRecord &record) {
  GoldInstance g{record.id, record.lang, record.domain, {}};
  for (const TypedTriple &t : record.triples) g.triples.push_back(t.triple);
  return g;
}

bool PartiallyOverlaps(std::string_view a, std::string_view b, Lang lang) {
  std::string na = text::Normalize(a, lang);
  std::string nb = text::Normalize(b, lang);
  if (na.empty() || nb.empty() || na == nb) return false;
  if ((na.find(nb) != std::string::npos ||
                   nb.find(na) != std::string::npos)) {
    return true;
  }
  // Shared token. zh splits CJK characters individually.
  auto ta = text::Tokenize(text::Decode(na), lang);
  auto tb = text::Tokenize(text::Decode(nb), lang);
  std::set<std::u32string> left(ta.begin(), ta.end());
  return std::any_of(tb.begin(), tb.end(),
                     [&](const std::u32string &t) { return left.contains(t); });
}

namespace {

enum class Alignment { kNone, kOverlap, kExact };

Alignment Align(const std::string &pred, const std::string &gold, Lang lang) {
  if (pred == gold) return Alignment::kExact;
  return PartiallyOverlaps(pred, gold, lang) ? Alignment::kOverlap
                                             : Alignment::kNone;
}

}  // namespace

ErrorCategory ClassifyError(const SurfaceTriple &pred,
                            const std::vector<SurfaceTriple> &gold, Lang lang) {
  const TripleKey p = KeyOf(pred, lang);
  std::optional<std::pair<Alignment, Alignment>> best;
  int best_score = -1;
  for (const SurfaceTriple &g : gold) {
    const TripleKey k = KeyOf(g, lang);
    if (k.relation != p.relation) continue;
    Alignment head = Align(p.head, k.head, lang);
    Alignment tail = Align(p.tail, k.tail, lang);
    int score = static_cast<int>(head) + static_cast<int>(tail);
    if (score > best_score) {
      best_score = score;
      best = {head, tail};
    }
  }
  if (!best) return ErrorCategory::kSpuriousRelation;
  auto [head, tail] = *best;
  bool one_exact = (head == Alignment::kExact) != (tail == Alignment::kExact);
  if (one_exact) {
    Alignment other = head == Alignment::kExact ? tail : head;
    return other == Alignment::kOverlap ? ErrorCategory::kBoundaryMismatch
                                        : ErrorCategory::kEntityMismatch;
  }
  return ErrorCategory::kIncongruentPredictions;
}

Counts ScoreInstance(const std::vector<SurfaceTriple> &gold,
                     const std::vector<SurfaceTriple> &pred, Lang lang,
                     std::vector<ErrorCategory> *categories) {
  std::set<TripleKey> gold_keys;
  for (const SurfaceTriple &g : gold) gold_keys.insert(KeyOf(g, lang));
  std::set<TripleKey> seen;
  Counts c;
  c.gold = gold_keys.size();
  for (const SurfaceTriple &t : pred) {
    TripleKey key = KeyOf(t, lang);
    if (!seen.insert(key).second) continue;
    ++c.pred;
    if (gold_keys.contains(key)) {
      ++c.tp;
    } else if (categories != nullptr) {
      categories->push_back(ClassifyError(t, gold, lang));
    }
  }
  return c;
}

EvalReport Score(const std::vector<GoldInstance> &gold,
                 const std::vector<Prediction> &pred) {
  std::unordered_map<std::string, const Prediction *> by_id;
  std::vector<std::string> problems;
  for (const Prediction &p : pred) {
    if (!by_id.emplace(p.id, &p).second) problems.push_back(p.id + " (duplicate)");
  }
  std::set<std::string> gold_ids;
  for (const GoldInstance &g : gold) {
    if (!gold_ids.insert(g.id).second) problems.push_back(g.id + " (duplicate gold)");
    if (!by_id.contains(g.id)) problems.push_back(g.id + " (no prediction)");
  }
  for (const Prediction &p : pred) {
    if (!gold_ids.contains(p.id)) problems.push_back(p.id + " (no gold)");
  }
  if (!problems.empty()) {
    std::string msg = "gold and prediction ids do not align:";
    for (const std::string &p : problems) msg += " " + p;
    throw Error(msg);
  }

  EvalReport report;
  for (Domain d : kAllDomains) report.per_domain[d] = {};
  for (ErrorCategory e : kAllErrorCategories) report.errors[e] = 0;
  for (const GoldInstance &g : gold) {
    ++report.instances;
    std::vector<SurfaceTriple> predicted;
    if (auto parsed = ParseOutput(by_id.at(g.id)->output)) {
      for (TypedTriple &t : *parsed) predicted.push_back(std::move(t.triple));
    } else {
      ++report.unparseable;
    }
    std::vector<ErrorCategory> categories;
    Counts c = ScoreInstance(g.triples, predicted, g.lang, &categories);
    report.per_domain[g.domain] += c;
    report.overall += c;
    for (ErrorCategory e : categories) ++report.errors[e];
  }
  return report;
}

namespace {

ordered_json CountsJson(const Counts &c) {
  ordered_json j;
  j["tp"] = c.tp;
  j["pred_count"] = c.pred;
  j["gold_count"] = c.gold;
  j["precision"] = c.Precision();
  j["recall"] = c.Recall();
  j["f1"] = c.F1();
  return j;
}

}  // namespace

ordered_json ToJson(const EvalReport &report) {
  ordered_json j;
  j["instances"] = report.instances;
  j["overall"] = CountsJson(report.overall);
  j["per_domain"] = ordered_json::object();
  for (const auto &[domain, counts] : report.per_domain) {
    j["per_domain"][std::string(DomainName(domain))] = CountsJson(counts);
  }
  j["unparseable_count"] = report.unparseable;
  j["error_counts"] = ordered_json::object();
  for (const auto &[category, n] : report.errors) {
    j["error_counts"][std::string(ErrorCategoryName(category))] = n;
  }
  return j;
}

std::string FormatTable(const EvalReport &report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << std::left << std::setw(6) << "" << std::right;
  for (Domain d : kAllDomains) out << std::setw(8) << DomainAbbrev(d);
  out << std::setw(9) << "Overall" << '\n';
  struct Row {
    const char *name;
    double (Counts::*metric)() const;
  };
  for (const Row &row : {Row{"P", &Counts::Precision}, Row{"R", &Counts::Recall},
                         Row{"F1", &Counts::F1}}) {
    out << std::left << std::setw(6) << row.name << std::right;
    for (Domain d : kAllDomains) {
      out << std::setw(8) << 100.0 * (report.per_domain.at(d).*row.metric)();
    }
    out << std::setw(9) << 100.0 * (report.overall.*row.metric)() << '\n';
  }
  out << "unparseable: " << report.unparseable << '\n';
  for (const auto &[category, n] : report.errors) {
    out << ErrorCategoryName(category) << ": " << n << '\n';
  }
  return out.str();
}

}  // namespace kg2i
