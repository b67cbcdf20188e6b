#ifndef KG2I_BACKEND_H_
#define KG2I_BACKEND_H_

// Wire protocol for the four model-backed capabilities. Every capability is a
// JSON POST to /v1/<endpoint>; requests and responses are validated against
// fixed shapes on both sides of the call.
//
//   /v1/classify {"text","lang"}                 -> {"domain","confidence"}
//   /v1/ner      {"text","lang"}                 -> {"mentions":[{"start","end","surface"}]}
//   /v1/extract  {"instruction","input","lang"}  -> {"output"}
//   /v1/entail   {"premise","hypothesis","lang"} -> {"entailment"}
//
// Offsets are codepoint offsets into "text". Scores are floats in [0, 1];
// anything outside that range is a protocol error.

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/jsonl.h"
#include "kg2i/types.h"

namespace kg2i {

enum class Endpoint { kClassify, kNer, kExtract, kEntail };

inline constexpr std::array<Endpoint, 4> kAllEndpoints = {
    Endpoint::kClassify, Endpoint::kNer, Endpoint::kExtract, Endpoint::kEntail};

std::string_view EndpointName(Endpoint endpoint);
std::optional<Endpoint> ParseEndpoint(std::string_view name);
std::string EndpointPath(Endpoint endpoint);  // "/v1/classify"

struct ClassifyRequest {
  std::string text;
  Lang lang = Lang::kEn;
};
struct ClassifyResponse {
  Domain domain = Domain::kGPE;
  double confidence = 0.0;
};

struct NerRequest {
  std::string text;
  Lang lang = Lang::kEn;
};
struct NerSpan {
  size_t start = 0;
  size_t end = 0;
  std::string surface;

  bool operator==(const NerSpan &) const = default;
};
struct NerResponse {
  std::vector<NerSpan> mentions;
};

struct ExtractRequest {
  std::string instruction;
  std::string input;
  Lang lang = Lang::kEn;
};
struct ExtractResponse {
  std::string output;
};

struct EntailRequest {
  std::string premise;
  std::string hypothesis;
  Lang lang = Lang::kEn;
};
struct EntailResponse {
  double entailment = 0.0;
};

// Schema checks. Throw ProtocolError naming the offending field path.
void ValidateRequest(Endpoint endpoint, const json &request);
void ValidateResponse(Endpoint endpoint, const json &response);

// Canonical wire encoding: fixed key order, compact.
ordered_json ToJson(const ClassifyRequest &r);
ordered_json ToJson(const ClassifyResponse &r);
ordered_json ToJson(const NerRequest &r);
ordered_json ToJson(const NerResponse &r);
ordered_json ToJson(const ExtractRequest &r);
ordered_json ToJson(const ExtractResponse &r);
ordered_json ToJson(const EntailRequest &r);
ordered_json ToJson(const EntailResponse &r);

// Decoders validate first.
ClassifyRequest ClassifyRequestFromJson(const json &j);
ClassifyResponse ClassifyResponseFromJson(const json &j);
NerRequest NerRequestFromJson(const json &j);
NerResponse NerResponseFromJson(const json &j);
ExtractRequest ExtractRequestFromJson(const json &j);
ExtractResponse ExtractResponseFromJson(const json &j);
EntailRequest EntailRequestFromJson(const json &j);
EntailResponse EntailResponseFromJson(const json &j);

// Client side of the protocol. Call() validates the request, dispatches to the
// implementation and validates the response, so every implementation is held
// to the same schema. Implementations must be safe for concurrent use.
class Backend {
 public:
  virtual ~Backend() = default;

  json Call(Endpoint endpoint, const json &request);

  ClassifyResponse Classify(const ClassifyRequest &request);
  NerResponse Ner(const NerRequest &request);
  ExtractResponse Extract(const ExtractRequest &request);
  EntailResponse Entail(const EntailRequest &request);

 protected:
  virtual json Dispatch(Endpoint endpoint, const json &request) = 0;
};

struct BackendEndpointSet {
  std::string base_url;
  std::chrono::milliseconds timeout{10000};
  size_t max_in_flight = 8;
  size_t retry_budget = 3;

  // Throws ConfigError when the URL is empty or a bound is zero.
  void Validate() const;
};

}  // namespace kg2i

#endif  // KG2I_BACKEND_H_
