#ifndef KG2I_MATCHER_H_
#define KG2I_MATCHER_H_

#include <vector>

#include "kg2i/corpus.h"
#include "kg2i/kg_store.h"
#include "kg2i/linker.h"
#include "kg2i/schema.h"
#include "kg2i/taxonomy.h"
#include "kg2i/types.h"

namespace kg2i {

// Item claims between two resolved mentions of the paragraph, kept when the
// mapper lists the property and both mention types satisfy its constraints.
std::vector<SurfaceTriple> MatchEntityPairs(
    const Paragraph &p, const std::vector<EntityMention> &mentions,
    const SchemaMapper &mapper, const KgStore &store);

// Literal claims of resolved mentions whose rendering occurs in the text.
// The first rendering (in pattern order) found in the text becomes the tail.
std::vector<SurfaceTriple> MatchLiteralTails(
    const Paragraph &p, const std::vector<EntityMention> &mentions,
    const SchemaMapper &mapper, const KgStore &store, const Taxonomy &taxonomy,
    const DatePatterns &patterns);

// Both of the above, deduplicated on the normalized key.
std::vector<SurfaceTriple> MatchParagraph(
    const Paragraph &p, const std::vector<EntityMention> &mentions,
    const SchemaMapper &mapper, const KgStore &store, const Taxonomy &taxonomy,
    const DatePatterns &patterns);

// Keeps the first triple of each normalized key.
std::vector<SurfaceTriple> DedupeTriples(std::vector<SurfaceTriple> triples,
                                         Lang lang);

}  // namespace kg2i

#endif  // KG2I_MATCHER_H_
