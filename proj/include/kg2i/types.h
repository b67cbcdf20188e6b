#ifndef KG2I_TYPES_H_
#define KG2I_TYPES_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kg2i {

enum class Lang { kZh, kEn };

inline constexpr std::array<Lang, 2> kAllLangs = {Lang::kZh, Lang::kEn};

std::string_view LangCode(Lang lang);

// Throws ConfigError for anything other than "zh" or "en".
Lang ParseLang(std::string_view code);

// The twelve textual domains. Declaration order is the fallback order used by
// the mock classifier, so GPE must stay first.
enum class Domain {
  kGPE,
  kEvent,
  kPerson,
  kScience,
  kProduct,
  kCreature,
  kBuilding,
  kArtworks,
  kMedicine,
  kTransport,
  kAstronomy,
  kOrganization,
};

inline constexpr std::array<Domain, 12> kAllDomains = {
    Domain::kGPE,      Domain::kEvent,     Domain::kPerson,
    Domain::kScience,  Domain::kProduct,   Domain::kCreature,
    Domain::kBuilding, Domain::kArtworks,  Domain::kMedicine,
    Domain::kTransport, Domain::kAstronomy, Domain::kOrganization,
};

std::string_view DomainName(Domain domain);
std::optional<Domain> ParseDomain(std::string_view name);

// Three-letter column heading used in evaluation tables.
std::string_view DomainAbbrev(Domain domain);

// Entity type name. The set of valid names comes from the taxonomy config, so
// this is a tagged string rather than an enum.
struct EntityType {
  std::string name;

  auto operator<=>(const EntityType &) const = default;
};

enum class Provenance { kKg, kLlm };

std::string_view ProvenanceName(Provenance provenance);
std::optional<Provenance> ParseProvenance(std::string_view name);

// (head, relation, tail) as surface strings plus where it came from.
struct SurfaceTriple {
  std::string head;
  std::string relation;
  std::string tail;
  Provenance provenance = Provenance::kKg;
  std::optional<double> entailment;

  bool operator==(const SurfaceTriple &) const = default;
};

// Comparison key for deduplication and scoring. Built with text::Normalize.
struct TripleKey {
  std::string head;
  std::string relation;
  std::string tail;

  auto operator<=>(const TripleKey &) const = default;
};

TripleKey KeyOf(const SurfaceTriple &triple, Lang lang);

}  // namespace kg2i

#endif  // KG2I_TYPES_H_
