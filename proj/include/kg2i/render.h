#ifndef KG2I_RENDER_H_
#define KG2I_RENDER_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/types.h"

namespace kg2i {

class KgStore;
class Taxonomy;
struct EntityMention;

// A triple plus the entity type of its head, which decides its output group.
struct TypedTriple {
  SurfaceTriple triple;
  std::string head_type;
};

// Per-language instruction wording. Each template must contain "{schema}",
// which is replaced by the schema list as a JSON array; "{domain}" is
// optional.
//
//   {"en": "... Schema: {schema}", "zh": "...：{schema}"}
class InstructionTemplates {
 public:
  static InstructionTemplates Load(const std::filesystem::path &path);
  static InstructionTemplates FromJson(const json &config);

  // Throws Error for an empty schema or a language without a template.
  std::string Render(Domain domain, const std::vector<std::string> &schema,
                     Lang lang) const;

 private:
  std::map<Lang, std::string> templates_;
};

// Stable order used by the output format: groups keyed by (type, head) in
// order of first appearance; inside a group relations and tails are sorted
// bytewise, so permuting the triples of one group changes nothing.
// Duplicates are kept.
std::vector<TypedTriple> CanonicalOrder(const std::vector<TypedTriple> &triples);

// [{"type": T, "entity": head, "attributes": {relation: [tail, ...]}}, ...]
// An empty list renders as "[]".
std::string RenderOutput(const std::vector<TypedTriple> &triples);

// Inverse of RenderOutput. Tolerates surrounding whitespace, trailing commas
// inside arrays and objects, trailing separators after the closing bracket
// and a bare string in place of a one-element tail list. Anything else is
// unparseable (nullopt). Provenance of the result is set to LLM.
std::optional<std::vector<TypedTriple>> ParseOutput(std::string_view text);

// Head typing for output grouping: the type of a typed mention with the same
// normalized surface, else the type of the first alias candidate, else the
// taxonomy's fallback type.
std::string HeadType(std::string_view head, Lang lang,
                     const std::vector<EntityMention> &mentions,
                     const KgStore &store, const Taxonomy &taxonomy);

struct InstructionRecord {
  std::string id;
  Lang lang = Lang::kEn;
  Domain domain = Domain::kGPE;
  std::string instruction;
  std::string input;
  std::vector<std::string> schema;
  std::string output;
  std::vector<TypedTriple> triples;  // in canonical order
};

ordered_json ToJson(const InstructionRecord &record);
InstructionRecord InstructionRecordFromJson(const json &j);

ordered_json TripleToJson(const SurfaceTriple &t);
SurfaceTriple TripleFromJson(const json &j);

}  // namespace kg2i

#endif  // KG2I_RENDER_H_
