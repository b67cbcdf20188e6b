#include "kg2i/types.h"

#include "kg2i/errors.h"
#include "kg2i/text.h"

namespace kg2i {

namespace {

struct DomainInfo {
  Domain domain;
  std::string_view name;
  std::string_view abbrev;
};

constexpr std::array<DomainInfo, 12> kDomainInfo = {{
    {Domain::kGPE, "GPE", "GPE"},
    {Domain::kEvent, "Event", "EVE"},
    {Domain::kPerson, "Person", "PER"},
    {Domain::kScience, "Science", "SCI"},
    {Domain::kProduct, "Product", "PRO"},
    {Domain::kCreature, "Creature", "CRE"},
    {Domain::kBuilding, "Building", "BUD"},
    {Domain::kArtworks, "Artworks", "ART"},
    {Domain::kMedicine, "Medicine", "MED"},
    {Domain::kTransport, "Transport", "TRA"},
    {Domain::kAstronomy, "Astronomy", "AST"},
    {Domain::kOrganization, "Organization", "ORG"},
}};

}  // namespace

std::string_view LangCode(Lang lang) {
  return lang == Lang::kZh ? "zh" : "en";
}

Lang ParseLang(std::string_view code) {
  if (code == "zh") return Lang::kZh;
  if (code == "en") return Lang::kEn;
  throw ConfigError("unsupported language code '" + std::string(code) + "'");
}

std::string_view DomainName(Domain domain) {
  return kDomainInfo[static_cast<size_t>(domain)].name;
}

std::string_view DomainAbbrev(Domain domain) {
  return kDomainInfo[static_cast<size_t>(domain)].abbrev;
}

std::optional<Domain> ParseDomain(std::string_view name) {
  for (const auto &info : kDomainInfo) {
    if (info.name == name) return info.domain;
  }
  return std::nullopt;
}

std::string_view ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kKg ? "KG" : "LLM";
}

std::optional<Provenance> ParseProvenance(std::string_view name) {
  if (name == "KG") return Provenance::kKg;
  if (name == "LLM") return Provenance::kLlm;
  return std::nullopt;
}

TripleKey KeyOf(const SurfaceTriple &triple, Lang lang) {
  return {text::Normalize(triple.head, lang),
          text::Normalize(triple.relation, lang),
          text::Normalize(triple.tail, lang)};
}

}  // namespace kg2i
