#ifndef KG2I_SUPPLEMENT_H_
#define KG2I_SUPPLEMENT_H_

#include <string>
#include <vector>

#include "kg2i/corpus.h"
#include "kg2i/render.h"
#include "kg2i/schema.h"
#include "kg2i/types.h"

namespace kg2i {

class Backend;

struct SupplementResult {
  std::vector<SurfaceTriple> triples;  // provenance LLM
  // Empty, "supplement_degraded" (backend failed) or "unparseable".
  std::string flag;
  size_t dropped_relation = 0;  // relation not in the mapper
  size_t dropped_surface = 0;   // head or tail not verbatim in the text
};

// Asks the extraction backend for triples under the domain schema, then keeps
// those whose relation is in the mapper and whose head and tail occur
// verbatim in the paragraph.
SupplementResult Supplement(const Paragraph &p, const SchemaMapper &mapper,
                            const InstructionTemplates &instructions,
                            Backend &backend);

// Union on the normalized key. A KG triple wins any collision; the output is
// the KG triples in input order followed by the surviving LLM triples.
std::vector<SurfaceTriple> MergeDedupe(const std::vector<SurfaceTriple> &kg,
                                       const std::vector<SurfaceTriple> &llm,
                                       Lang lang);

}  // namespace kg2i

#endif  // KG2I_SUPPLEMENT_H_
