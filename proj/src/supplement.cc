#include "kg2i/supplement.h"

#include <set>

#include "kg2i/backend.h"
#include "kg2i/errors.h"
#include "kg2i/matcher.h"
#include "spdlog/spdlog.h"

namespace kg2i {

SupplementResult Supplement(const Paragraph &p, const SchemaMapper &mapper,
                            const InstructionTemplates &instructions,
                            Backend &backend) {
  SupplementResult result;
  const Domain domain = p.domain.value_or(mapper.domain());
  std::string instruction =
      instructions.Render(domain, mapper.Labels(p.lang), p.lang);

  ExtractResponse response;
  try {
    response = backend.Extract({instruction, p.text, p.lang});
  } catch (const Error &e) {
    spdlog::warn("{}: extraction backend failed ({})", p.id, e.what());
    result.flag = "supplement_degraded";
    return result;
  }
  auto parsed = ParseOutput(response.output);
  if (!parsed) {
    spdlog::warn("{}: extraction output unparseable", p.id);
    result.flag = "unparseable";
    return result;
  }
  for (TypedTriple &t : *parsed) {
    if (mapper.FindLabel(t.triple.relation, p.lang) == nullptr) {
      ++result.dropped_relation;
      continue;
    }
    if (p.text.find(t.triple.head) == std::string::npos ||
        p.text.find(t.triple.tail) == std::string::npos) {
      ++result.dropped_surface;
      continue;
    }
    t.triple.provenance = Provenance::kLlm;
    t.triple.entailment.reset();
    result.triples.push_back(std::move(t.triple));
  }
  result.triples = DedupeTriples(std::move(result.triples), p.lang);
  return result;
}

std::vector<SurfaceTriple> MergeDedupe(const std::vector<SurfaceTriple> &kg,
                                       const std::vector<SurfaceTriple> &llm,
                                       Lang lang) {
  std::set<TripleKey> seen;
  std::vector<SurfaceTriple> out;
  for (const auto *list : {&kg, &llm}) {
    for (const SurfaceTriple &t : *list) {
      if (seen.insert(KeyOf(t, lang)).second) out.push_back(t);
    }
  }
  return out;
}

}  // namespace kg2i
