#include "kg2i/matcher.h"

#include <set>

#include "kg2i/text.h"

namespace kg2i {

std::vector<SurfaceTriple> MatchEntityPairs(
    const Paragraph &p, const std::vector<EntityMention> &mentions,
    const SchemaMapper &mapper, const KgStore &store) {
  std::vector<SurfaceTriple> out;
  for (size_t i = 0; i < mentions.size(); ++i) {
    const EntityMention &head = mentions[i];
    if (!head.resolved || !head.etype) continue;
    for (const KgTriple &t : store.Outgoing(*head.resolved)) {
      if (!t.is_item() || !t.resolvable) continue;
      const RelationConstraint *r = mapper.Find(t.pid);
      if (r == nullptr || !mapper.AllowsHead(*r, head.etype->name)) continue;
      for (size_t j = 0; j < mentions.size(); ++j) {
        const EntityMention &tail = mentions[j];
        if (j == i || !tail.resolved || !tail.etype) continue;
        if (*tail.resolved != t.tail_qid) continue;
        if (!mapper.AllowsTail(*r, tail.etype->name)) continue;
        out.push_back({head.surface, r->Label(p.lang), tail.surface,
                       Provenance::kKg, {}});
      }
    }
  }
  return DedupeTriples(std::move(out), p.lang);
}

std::vector<SurfaceTriple> MatchLiteralTails(
    const Paragraph &p, const std::vector<EntityMention> &mentions,
    const SchemaMapper &mapper, const KgStore &store, const Taxonomy &taxonomy,
    const DatePatterns &patterns) {
  const std::u32string text = text::Decode(p.text);
  std::vector<SurfaceTriple> out;
  for (const EntityMention &head : mentions) {
    if (!head.resolved || !head.etype) continue;
    for (const KgTriple &t : store.Outgoing(*head.resolved)) {
      if (t.is_item()) continue;
      const RelationConstraint *r = mapper.Find(t.pid);
      if (r == nullptr || !mapper.AllowsHead(*r, head.etype->name)) continue;
      if (!mapper.AllowsTail(*r, taxonomy.LiteralType(t.literal->kind()).name)) {
        continue;
      }
      for (const std::string &surface : patterns.Render(*t.literal, p.lang)) {
        if (!text::FindAll(text, text::Decode(surface), true).empty()) {
          out.push_back({head.surface, r->Label(p.lang), surface,
                         Provenance::kKg, {}});
          break;
        }
      }
    }
  }
  return DedupeTriples(std::move(out), p.lang);
}

std::vector<SurfaceTriple> MatchParagraph(
    const Paragraph &p, const std::vector<EntityMention> &mentions,
    const SchemaMapper &mapper, const KgStore &store, const Taxonomy &taxonomy,
    const DatePatterns &patterns) {
  std::vector<SurfaceTriple> out = MatchEntityPairs(p, mentions, mapper, store);
  for (SurfaceTriple &t :
       MatchLiteralTails(p, mentions, mapper, store, taxonomy, patterns)) {
    out.push_back(std::move(t));
  }
  return DedupeTriples(std::move(out), p.lang);
}

std::vector<SurfaceTriple> DedupeTriples(std::vector<SurfaceTriple> triples,
                                         Lang lang) {
  std::set<TripleKey> seen;
  std::vector<SurfaceTriple> out;
  for (SurfaceTriple &t : triples) {
    if (seen.insert(KeyOf(t, lang)).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace kg2i
