#include "kg2i/mock_backend.h"

#include <algorithm>

#include "kg2i/errors.h"
#include "kg2i/render.h"
#include "kg2i/text.h"

namespace kg2i {

std::vector<std::string> ContentTokens(std::string_view utf8) {
  std::u32string chars = text::Decode(text::FoldCase(utf8));
  std::vector<std::string> out;
  std::u32string run;
  auto flush = [&] {
    if (!run.empty()) out.push_back(text::Encode(run));
    run.clear();
  };
  for (char32_t c : chars) {
    if (text::IsCjk(c)) {
      flush();
      // CJK punctuation and fullwidth forms separate; ideographs and kana are
      // tokens.
      if (c > 0x303F && c < 0xFF00) out.push_back(text::Encode(std::u32string(1, c)));
    } else if (text::IsWordChar(c)) {
      run.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

MockBackend MockBackend::Load(const std::filesystem::path &path) {
  try {
    return MockBackend(ReadJsonFile(path));
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

MockBackend::MockBackend(const json &rules) {
  const std::string ctx = "mock rules";
  if (rules.contains("classify")) {
    const json &c = rules["classify"];
    for (const json &rule : RequireField(c, "rules", ctx)) {
      auto domain = ParseDomain(RequireString(rule, "domain", ctx));
      if (!domain) throw ConfigError(ctx + ": unknown classify domain");
      ClassifyRule r{*domain, {}};
      for (const json &k : RequireField(rule, "keywords", ctx)) {
        r.keywords.push_back(text::FoldCase(k.get<std::string>()));
      }
      classify_rules_.push_back(std::move(r));
    }
    if (c.contains("fallback")) {
      auto domain = ParseDomain(c["fallback"].get<std::string>());
      if (!domain) throw ConfigError(ctx + ": unknown fallback domain");
      fallback_ = *domain;
    }
  }
  if (rules.contains("ner")) {
    for (const auto &[code, list] : rules["ner"].items()) {
      for (const json &s : list) lexicon_[ParseLang(code)].push_back(s.get<std::string>());
    }
  }
  if (rules.contains("extract")) {
    for (const json &rule : rules["extract"]) {
      std::regex pattern;
      try {
        pattern = std::regex(RequireString(rule, "pattern", ctx));
      } catch (const std::regex_error &e) {
        throw ConfigError(ctx + ": bad extract pattern: " + e.what());
      }
      ExtractRule r{ParseLang(RequireString(rule, "lang", ctx)), std::move(pattern),
                    rule.value("head_group", size_t{1}),
                    rule.value("tail_group", size_t{2}),
                    RequireString(rule, "relation", ctx),
                    rule.value("head_type", std::string("Other"))};
      extract_rules_.push_back(std::move(r));
    }
  }
  if (rules.contains("entail")) {
    const json &e = rules["entail"];
    high_ = e.value("high", high_);
    low_ = e.value("low", low_);
    min_coverage_ = e.value("min_coverage", min_coverage_);
    if (e.contains("stopwords")) {
      for (const auto &[code, list] : e["stopwords"].items()) {
        for (const json &w : list) {
          stopwords_[ParseLang(code)].insert(text::FoldCase(w.get<std::string>()));
        }
      }
    }
    if (e.contains("cues")) {
      for (const json &cue : e["cues"]) {
        Cue c{ParseLang(RequireString(cue, "lang", ctx)), {}, {}};
        for (const json &s : RequireField(cue, "hypothesis_any", ctx)) {
          c.hypothesis_any.push_back(text::FoldCase(s.get<std::string>()));
        }
        for (const json &s : RequireField(cue, "premise_any", ctx)) {
          c.premise_any.push_back(text::FoldCase(s.get<std::string>()));
        }
        cues_.push_back(std::move(c));
      }
    }
    if (e.contains("overrides")) {
      for (const json &o : e["overrides"]) {
        overrides_[RequireString(o, "hypothesis", ctx)] =
            RequireField(o, "entailment", ctx).get<double>();
      }
    }
  }
  if (rules.contains("fail")) {
    for (const json &name : rules["fail"]) {
      auto endpoint = ParseEndpoint(name.get<std::string>());
      if (!endpoint) throw ConfigError(ctx + ": unknown endpoint in 'fail'");
      failing_.insert(*endpoint);
    }
  }
}

json MockBackend::Dispatch(Endpoint endpoint, const json &request) {
  if (failing_.contains(endpoint)) {
    throw TransportError("mock endpoint " + std::string(EndpointName(endpoint)) +
                         " configured to fail");
  }
  switch (endpoint) {
    case Endpoint::kClassify:
      return OnClassify(ClassifyRequestFromJson(request));
    case Endpoint::kNer:
      return OnNer(NerRequestFromJson(request));
    case Endpoint::kExtract:
      return OnExtract(ExtractRequestFromJson(request));
    case Endpoint::kEntail:
      return OnEntail(EntailRequestFromJson(request));
  }
  throw ProtocolError("unknown endpoint", "endpoint");
}

json MockBackend::OnClassify(const ClassifyRequest &r) const {
  const std::u32string text = text::Decode(text::FoldCase(r.text));
  size_t total = 0;
  size_t best_hits = 0;
  Domain best = fallback_;
  for (const ClassifyRule &rule : classify_rules_) {
    size_t hits = 0;
    for (const std::string &k : rule.keywords) {
      hits += text::FindAll(text, text::Decode(k), true).size();
    }
    total += hits;
    if (hits > best_hits) {
      best_hits = hits;
      best = rule.domain;
    }
  }
  double confidence =
      total == 0 ? 0.0 : static_cast<double>(best_hits) / static_cast<double>(total);
  return json::parse(ToJson(ClassifyResponse{best, confidence}).dump());
}

json MockBackend::OnNer(const NerRequest &r) const {
  NerResponse response;
  auto it = lexicon_.find(r.lang);
  if (it != lexicon_.end()) {
    const std::u32string text = text::Decode(r.text);
    std::vector<NerSpan> spans;
    for (const std::string &surface : it->second) {
      std::u32string needle = text::Decode(surface);
      for (size_t start : text::FindAll(text, needle, true)) {
        spans.push_back({start, start + needle.size(), surface});
      }
    }
    std::stable_sort(spans.begin(), spans.end(), [](const NerSpan &a, const NerSpan &b) {
      if (a.end - a.start != b.end - b.start) return a.end - a.start > b.end - b.start;
      return a.start < b.start;
    });
    for (const NerSpan &s : spans) {
      bool clash = std::any_of(
          response.mentions.begin(), response.mentions.end(),
          [&](const NerSpan &o) { return s.start < o.end && o.start < s.end; });
      if (!clash) response.mentions.push_back(s);
    }
    std::sort(response.mentions.begin(), response.mentions.end(),
              [](const NerSpan &a, const NerSpan &b) { return a.start < b.start; });
  }
  return json::parse(ToJson(response).dump());
}

json MockBackend::OnExtract(const ExtractRequest &r) const {
  std::vector<TypedTriple> triples;
  for (const ExtractRule &rule : extract_rules_) {
    if (rule.lang != r.lang) continue;
    if (r.instruction.find(json(rule.relation).dump()) == std::string::npos) continue;
    for (auto it = std::sregex_iterator(r.input.begin(), r.input.end(), rule.pattern);
         it != std::sregex_iterator(); ++it) {
      const std::smatch &m = *it;
      if (rule.head_group >= m.size() || rule.tail_group >= m.size()) continue;
      std::string head = m[rule.head_group].str();
      std::string tail = m[rule.tail_group].str();
      if (head.empty() || tail.empty()) continue;
      triples.push_back({{head, rule.relation, tail, Provenance::kLlm, {}},
                         rule.head_type});
    }
  }
  return json{{"output", RenderOutput(triples)}};
}

json MockBackend::OnEntail(const EntailRequest &r) const {
  auto override_it = overrides_.find(r.hypothesis);
  if (override_it != overrides_.end()) {
    return json{{"entailment", override_it->second}};
  }
  std::vector<std::string> premise_tokens = ContentTokens(r.premise);
  std::set<std::string> premise(premise_tokens.begin(), premise_tokens.end());
  static const std::set<std::string> kNone;
  auto sw = stopwords_.find(r.lang);
  const std::set<std::string> &stop = sw == stopwords_.end() ? kNone : sw->second;

  std::set<std::string> content;
  for (std::string &t : ContentTokens(r.hypothesis)) {
    if (!stop.contains(t)) content.insert(std::move(t));
  }
  size_t covered = std::count_if(content.begin(), content.end(),
                                 [&](const std::string &t) { return premise.contains(t); });
  double coverage = content.empty() ? 1.0
                                    : static_cast<double>(covered) /
                                          static_cast<double>(content.size());
  bool supported = coverage >= min_coverage_;

  // Cue words match whole words only, so "died" is not found in "studied".
  const std::u32string hypothesis = text::Decode(text::FoldCase(r.hypothesis));
  const std::u32string folded_premise = text::Decode(text::FoldCase(r.premise));
  for (const Cue &cue : cues_) {
    if (!supported) break;
    if (cue.lang != r.lang) continue;
    bool triggered = std::any_of(
        cue.hypothesis_any.begin(), cue.hypothesis_any.end(),
        [&](const std::string &s) { return !text::FindAll(hypothesis, text::Decode(s), true).empty(); });
    if (!triggered) continue;
    supported = std::any_of(
        cue.premise_any.begin(), cue.premise_any.end(),
        [&](const std::string &s) { return !text::FindAll(folded_premise, text::Decode(s), true).empty(); });
  }
  return json{{"entailment", supported ? high_ : low_}};
}

}  // namespace kg2i
