#include "kg2i/nli.h"

#include <algorithm>

#include "kg2i/backend.h"
#include "kg2i/errors.h"
#include "kg2i/text.h"
#include "spdlog/spdlog.h"

namespace kg2i {

namespace {

size_t CountOf(std::string_view s, std::string_view needle) {
  size_t n = 0;
  for (size_t pos = s.find(needle); pos != std::string_view::npos;
       pos = s.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

}  // namespace

RelationTemplates RelationTemplates::Load(const std::filesystem::path &path) {
  try {
    return FromJson(ReadJsonFile(path));
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

RelationTemplates RelationTemplates::FromJson(const json &config) {
  const std::string ctx = "templates";
  RelationTemplates t;
  t.lang_ = ParseLang(RequireString(config, "lang", ctx));
  const json &entries = RequireField(config, "templates", ctx);
  if (!entries.is_object()) throw ConfigError(ctx + ": 'templates' must be an object");
  for (const auto &[relation, list] : entries.items()) {
    if (!list.is_array() || list.size() != kTemplatesPerRelation) {
      throw ConfigError(ctx + ": relation '" + relation + "' needs exactly " +
                        std::to_string(kTemplatesPerRelation) + " templates");
    }
    std::array<std::string, kTemplatesPerRelation> filled;
    for (size_t i = 0; i < kTemplatesPerRelation; ++i) {
      filled[i] = list[i].get<std::string>();
      if (CountOf(filled[i], "[X]") != 1 || CountOf(filled[i], "[Y]") != 1) {
        throw ConfigError(ctx + ": template '" + filled[i] + "' for '" +
                          relation + "' must hold [X] and [Y] exactly once");
      }
    }
    t.templates_.emplace(relation, std::move(filled));
  }
  if (config.contains("declared_relation_count")) {
    size_t declared = config["declared_relation_count"].get<size_t>();
    if (declared != t.templates_.size()) {
      throw ConfigError(ctx + ": declares " + std::to_string(declared) +
                        " relations but lists " +
                        std::to_string(t.templates_.size()));
    }
  }
  return t;
}

const std::array<std::string, kTemplatesPerRelation> *RelationTemplates::Find(
    std::string_view relation) const {
  auto it = templates_.find(relation);
  return it == templates_.end() ? nullptr : &it->second;
}

std::string FillTemplate(std::string_view tmpl, std::string_view head,
                         std::string_view tail) {
  std::string out;
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl.substr(i, 3) == "[X]") {
      out += head;
      i += 3;
    } else if (tmpl.substr(i, 3) == "[Y]") {
      out += tail;
      i += 3;
    } else {
      out.push_back(tmpl[i++]);
    }
  }
  return out;
}

std::vector<std::string> Instantiate(const SurfaceTriple &triple,
                                     const RelationTemplates &templates) {
  std::vector<std::string> out;
  const auto *list = templates.Find(triple.relation);
  if (list == nullptr) return out;
  for (const std::string &tmpl : *list) {
    out.push_back(FillTemplate(tmpl, triple.head, triple.tail));
  }
  return out;
}

std::string SentencePremise(std::string_view text, const SurfaceTriple &triple) {
  std::u32string chars = text::Decode(text);
  std::vector<std::string> sentences;
  size_t start = 0;
  for (size_t i = 0; i < chars.size(); ++i) {
    char32_t c = chars[i];
    bool cjk_stop = c == U'。' || c == U'！' || c == U'？';
    bool latin_stop = (c == U'.' || c == U'!' || c == U'?') &&
                      (i + 1 == chars.size() || text::IsSpace(chars[i + 1]));
    if (cjk_stop || latin_stop) {
      sentences.push_back(text::Trim(
          text::Encode(std::u32string_view(chars).substr(start, i + 1 - start))));
      start = i + 1;
    }
  }
  if (start < chars.size()) {
    sentences.push_back(
        text::Trim(text::Encode(std::u32string_view(chars).substr(start))));
  }
  std::string premise;
  for (const std::string &s : sentences) {
    if (s.find(triple.head) == std::string::npos &&
        s.find(triple.tail) == std::string::npos) {
      continue;
    }
    if (!premise.empty()) premise.push_back(' ');
    premise += s;
  }
  return premise.empty() ? std::string(text) : premise;
}

std::vector<NliVerdict> FilterTriples(const Paragraph &p,
                                      const std::vector<SurfaceTriple> &triples,
                                      const RelationTemplates &templates,
                                      Backend &backend,
                                      const NliOptions &options) {
  std::vector<NliVerdict> out;
  out.reserve(triples.size());
  for (const SurfaceTriple &triple : triples) {
    NliVerdict v{triple, true, ""};
    v.triple.entailment.reset();
    std::vector<std::string> hypotheses = Instantiate(triple, templates);
    if (hypotheses.empty()) {
      spdlog::warn("{}: no templates for relation '{}', triple kept unfiltered",
                   p.id, triple.relation);
      v.flag = "no_template";
      out.push_back(std::move(v));
      continue;
    }
    const std::string premise =
        options.sentence_premise ? SentencePremise(p.text, triple) : p.text;
    double best = 0.0;
    size_t failures = 0;
    for (const std::string &h : hypotheses) {
      try {
        best = std::max(best, backend.Entail({premise, h, p.lang}).entailment);
      } catch (const Error &e) {
        spdlog::warn("{}: entailment failed for '{}' ({})", p.id, h, e.what());
        ++failures;
      }
    }
    if (failures == hypotheses.size()) {
      v.flag = "nli_degraded";
    } else {
      v.triple.entailment = best;
      v.retained = best >= options.threshold;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace kg2i
