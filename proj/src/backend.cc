#include "kg2i/backend.h"

#include <cmath>

#include "kg2i/errors.h"

namespace kg2i {

namespace {

void RequireObject(const json &j, const std::string &path) {
  if (!j.is_object()) throw ProtocolError("expected a JSON object", path);
}

void RequireStringField(const json &j, const char *field) {
  if (!j.contains(field)) throw ProtocolError("missing field", field);
  if (!j.at(field).is_string()) {
    throw ProtocolError("field must be a string", field);
  }
}

void RequireLang(const json &j) {
  RequireStringField(j, "lang");
  const std::string code = j.at("lang").get<std::string>();
  if (code != "zh" && code != "en") {
    throw ProtocolError("unsupported language '" + code + "'", "lang");
  }
}

void RequireScore(const json &j, const char *field) {
  if (!j.contains(field)) throw ProtocolError("missing field", field);
  const json &v = j.at(field);
  if (!v.is_number()) throw ProtocolError("field must be a number", field);
  double d = v.get<double>();
  if (!std::isfinite(d) || d < 0.0 || d > 1.0) {
    throw ProtocolError("score outside [0, 1]", field);
  }
}

void RequireOffset(const json &j, const char *field, const std::string &path) {
  if (!j.contains(field)) throw ProtocolError("missing field", path + field);
  const json &v = j.at(field);
  if (!v.is_number_integer() || v.get<int64_t>() < 0) {
    throw ProtocolError("offset must be a non-negative integer", path + field);
  }
}

}  // namespace

std::string_view EndpointName(Endpoint endpoint) {
  switch (endpoint) {
    case Endpoint::kClassify:
      return "classify";
    case Endpoint::kNer:
      return "ner";
    case Endpoint::kExtract:
      return "extract";
    case Endpoint::kEntail:
      return "entail";
  }
  return "classify";
}

std::optional<Endpoint> ParseEndpoint(std::string_view name) {
  for (Endpoint e : kAllEndpoints) {
    if (EndpointName(e) == name) return e;
  }
  return std::nullopt;
}

std::string EndpointPath(Endpoint endpoint) {
  return "/v1/" + std::string(EndpointName(endpoint));
}

void ValidateRequest(Endpoint endpoint, const json &request) {
  RequireObject(request, "");
  switch (endpoint) {
    case Endpoint::kClassify:
    case Endpoint::kNer:
      RequireStringField(request, "text");
      RequireLang(request);
      return;
    case Endpoint::kExtract:
      RequireStringField(request, "instruction");
      RequireStringField(request, "input");
      RequireLang(request);
      return;
    case Endpoint::kEntail:
      RequireStringField(request, "premise");
      RequireStringField(request, "hypothesis");
      RequireLang(request);
      return;
  }
}

void ValidateResponse(Endpoint endpoint, const json &response) {
  RequireObject(response, "");
  switch (endpoint) {
    case Endpoint::kClassify: {
      RequireStringField(response, "domain");
      if (!ParseDomain(response.at("domain").get<std::string>())) {
        throw ProtocolError("unknown domain label", "domain");
      }
      RequireScore(response, "confidence");
      return;
    }
    case Endpoint::kNer: {
      if (!response.contains("mentions")) {
        throw ProtocolError("missing field", "mentions");
      }
      const json &mentions = response.at("mentions");
      if (!mentions.is_array()) {
        throw ProtocolError("field must be an array", "mentions");
      }
      for (size_t i = 0; i < mentions.size(); ++i) {
        std::string path = "mentions[" + std::to_string(i) + "].";
        const json &m = mentions[i];
        if (!m.is_object()) {
          throw ProtocolError("expected a JSON object", path.substr(0, path.size() - 1));
        }
        RequireOffset(m, "start", path);
        RequireOffset(m, "end", path);
        if (!m.contains("surface")) throw ProtocolError("missing field", path + "surface");
        if (!m.at("surface").is_string()) {
          throw ProtocolError("field must be a string", path + "surface");
        }
        if (m.at("start").get<int64_t>() >= m.at("end").get<int64_t>()) {
          throw ProtocolError("empty or inverted span", path + "end");
        }
      }
      return;
    }
    case Endpoint::kExtract:
      RequireStringField(response, "output");
      return;
    case Endpoint::kEntail:
      RequireScore(response, "entailment");
      return;
  }
}

ordered_json ToJson(const ClassifyRequest &r) {
  ordered_json j;
  j["text"] = r.text;
  j["lang"] = LangCode(r.lang);
  return j;
}

ordered_json ToJson(const ClassifyResponse &r) {
  ordered_json j;
  j["domain"] = DomainName(r.domain);
  j["confidence"] = r.confidence;
  return j;
}

ordered_json ToJson(const NerRequest &r) {
  ordered_json j;
  j["text"] = r.text;
  j["lang"] = LangCode(r.lang);
  return j;
}

ordered_json ToJson(const NerResponse &r) {
  ordered_json j;
  j["mentions"] = ordered_json::array();
  for (const NerSpan &m : r.mentions) {
    ordered_json s;
    s["start"] = m.start;
    s["end"] = m.end;
    s["surface"] = m.surface;
    j["mentions"].push_back(std::move(s));
  }
  return j;
}

ordered_json ToJson(const ExtractRequest &r) {
  ordered_json j;
  j["instruction"] = r.instruction;
  j["input"] = r.input;
  j["lang"] = LangCode(r.lang);
  return j;
}

ordered_json ToJson(const ExtractResponse &r) {
  ordered_json j;
  j["output"] = r.output;
  return j;
}

ordered_json ToJson(const EntailRequest &r) {
  ordered_json j;
  j["premise"] = r.premise;
  j["hypothesis"] = r.hypothesis;
  j["lang"] = LangCode(r.lang);
  return j;
}

ordered_json ToJson(const EntailResponse &r) {
  ordered_json j;
  j["entailment"] = r.entailment;
  return j;
}

ClassifyRequest ClassifyRequestFromJson(const json &j) {
  ValidateRequest(Endpoint::kClassify, j);
  return {j["text"].get<std::string>(), ParseLang(j["lang"].get<std::string>())};
}

ClassifyResponse ClassifyResponseFromJson(const json &j) {
  ValidateResponse(Endpoint::kClassify, j);
  return {*ParseDomain(j["domain"].get<std::string>()),
          j["confidence"].get<double>()};
}

NerRequest NerRequestFromJson(const json &j) {
  ValidateRequest(Endpoint::kNer, j);
  return {j["text"].get<std::string>(), ParseLang(j["lang"].get<std::string>())};
}

NerResponse NerResponseFromJson(const json &j) {
  ValidateResponse(Endpoint::kNer, j);
  NerResponse r;
  for (const json &m : j["mentions"]) {
    r.mentions.push_back({m["start"].get<size_t>(), m["end"].get<size_t>(),
                          m["surface"].get<std::string>()});
  }
  return r;
}

ExtractRequest ExtractRequestFromJson(const json &j) {
  ValidateRequest(Endpoint::kExtract, j);
  return {j["instruction"].get<std::string>(), j["input"].get<std::string>(),
          ParseLang(j["lang"].get<std::string>())};
}

ExtractResponse ExtractResponseFromJson(const json &j) {
  ValidateResponse(Endpoint::kExtract, j);
  return {j["output"].get<std::string>()};
}

EntailRequest EntailRequestFromJson(const json &j) {
  ValidateRequest(Endpoint::kEntail, j);
  return {j["premise"].get<std::string>(), j["hypothesis"].get<std::string>(),
          ParseLang(j["lang"].get<std::string>())};
}

EntailResponse EntailResponseFromJson(const json &j) {
  ValidateResponse(Endpoint::kEntail, j);
  return {j["entailment"].get<double>()};
}

json Backend::Call(Endpoint endpoint, const json &request) {
  ValidateRequest(endpoint, request);
  json response = Dispatch(endpoint, request);
  ValidateResponse(endpoint, response);
  return response;
}

ClassifyResponse Backend::Classify(const ClassifyRequest &request) {
  return ClassifyResponseFromJson(
      Call(Endpoint::kClassify, json::parse(ToJson(request).dump())));
}

NerResponse Backend::Ner(const NerRequest &request) {
  return NerResponseFromJson(
      Call(Endpoint::kNer, json::parse(ToJson(request).dump())));
}

ExtractResponse Backend::Extract(const ExtractRequest &request) {
  return ExtractResponseFromJson(
      Call(Endpoint::kExtract, json::parse(ToJson(request).dump())));
}

EntailResponse Backend::Entail(const EntailRequest &request) {
  return EntailResponseFromJson(
      Call(Endpoint::kEntail, json::parse(ToJson(request).dump())));
}

void BackendEndpointSet::Validate() const {
  if (base_url.empty()) throw ConfigError("backend base URL is empty");
  if (timeout.count() <= 0) throw ConfigError("backend timeout must be positive");
  if (max_in_flight == 0) throw ConfigError("backend max_in_flight must be positive");
  if (retry_budget == 0) throw ConfigError("backend retry budget must be positive");
}

}  // namespace kg2i
