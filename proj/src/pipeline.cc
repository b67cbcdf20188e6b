#include "kg2i/pipeline.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "kg2i/errors.h"
#include "kg2i/hash.h"
#include "kg2i/http_backend.h"
#include "kg2i/kg_store.h"
#include "kg2i/linker.h"
#include "kg2i/matcher.h"
#include "kg2i/mock_backend.h"
#include "kg2i/nli.h"
#include "kg2i/parallel.h"
#include "kg2i/render.h"
#include "kg2i/sampler.h"
#include "kg2i/schema.h"
#include "kg2i/supplement.h"
#include "kg2i/taxonomy.h"
#include "spdlog/spdlog.h"

namespace kg2i {

namespace fs = std::filesystem;

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kIngest:
      return "ingest";
    case Stage::kLink:
      return "link";
    case Stage::kMatch:
      return "match";
    case Stage::kSupplement:
      return "supplement";
    case Stage::kFilter:
      return "filter";
    case Stage::kSample:
      return "sample";
    case Stage::kRender:
      return "render";
  }
  return "ingest";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (Stage s : kAllStages) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view StageOutputFile(Stage stage) {
  switch (stage) {
    case Stage::kIngest:
      return "paragraphs.jsonl";
    case Stage::kLink:
      return "mentions.jsonl";
    case Stage::kMatch:
      return "kg_triples.jsonl";
    case Stage::kSupplement:
      return "merged.jsonl";
    case Stage::kFilter:
      return "filtered.jsonl";
    case Stage::kSample:
      return "sampled.jsonl";
    case Stage::kRender:
      return "dataset.jsonl";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Config

PipelineConfig PipelineConfig::Load(const fs::path &path) {
  try {
    return FromJson(ReadJsonFile(path), path.parent_path());
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

PipelineConfig PipelineConfig::FromJson(const json &config,
                                        const fs::path &base_dir) {
  const std::string ctx = "pipeline config";
  if (!config.is_object()) throw ConfigError(ctx + ": expected an object");
  auto path_of = [&](const char *field, bool required) -> fs::path {
    if (!config.contains(field)) {
      if (required) throw ConfigError(ctx + ": missing '" + field + "'");
      return {};
    }
    fs::path p = config[field].get<std::string>();
    return p.is_absolute() ? p : base_dir / p;
  };

  PipelineConfig c;
  c.corpus = path_of("corpus", true);
  c.kg = path_of("kg", true);
  c.properties = path_of("properties", false);
  c.taxonomy = path_of("taxonomy", true);
  c.mappers = path_of("mappers", true);
  c.instructions = path_of("instructions", true);
  c.date_patterns = path_of("date_patterns", true);
  c.caps = path_of("caps", true);
  c.mock_rules = path_of("mock_rules", false);
  c.work_dir = path_of("work_dir", true);
  c.output = path_of("output", false);
  for (const auto &[code, p] : RequireField(config, "templates", ctx).items()) {
    fs::path tp = p.get<std::string>();
    c.templates[ParseLang(code)] = tp.is_absolute() ? tp : base_dir / tp;
  }

  if (config.contains("lang") && !config["lang"].is_null()) {
    c.lang = ParseLang(config["lang"].get<std::string>());
  }
  c.seed = config.value("seed", c.seed);
  c.nli_threshold = config.value("nli_threshold", c.nli_threshold);
  c.nli_sentence_premise = config.value("nli_sentence_premise", false);
  c.sampler_k = config.value("sampler_k", c.sampler_k);
  c.bounds.min_tokens = config.value("min_tokens", c.bounds.min_tokens);
  c.bounds.max_tokens = config.value("max_tokens", c.bounds.max_tokens);
  c.supplement = config.value("supplement", true);
  c.nli = config.value("nli", true);
  c.count_head_side = config.value("count_head_side", false);
  c.threads = config.value("threads", c.threads);
  c.mock_backends = config.value("mock_backends", false);
  if (config.contains("backend")) {
    const json &b = config["backend"];
    c.backend.base_url = b.value("url", std::string());
    c.backend.timeout = std::chrono::milliseconds(b.value("timeout_ms", 10000));
    c.backend.max_in_flight = b.value("max_in_flight", c.backend.max_in_flight);
    c.backend.retry_budget = b.value("retry_budget", c.backend.retry_budget);
  }
  return c;
}

void PipelineConfig::Validate() const {
  auto require = [](const fs::path &p, const char *what) {
    if (p.empty() || !fs::is_regular_file(p)) {
      throw ConfigError(std::string(what) + " file not found: " + p.string());
    }
  };
  require(corpus, "corpus");
  require(kg, "knowledge graph");
  if (!properties.empty()) require(properties, "property registry");
  require(taxonomy, "taxonomy");
  require(mappers, "mappers");
  require(instructions, "instruction templates");
  require(date_patterns, "date patterns");
  require(caps, "caps");
  if (templates.empty()) throw ConfigError("no relation templates configured");
  for (const auto &[lang, p] : templates) require(p, "relation templates");
  if (mock_backends) require(mock_rules, "mock rules");
  if (work_dir.empty()) throw ConfigError("work_dir is empty");
  if (!(nli_threshold >= 0.0 && nli_threshold <= 1.0)) {
    throw ConfigError("nli_threshold must be in [0, 1]");
  }
  if (!(sampler_k > 0.0)) throw ConfigError("sampler_k must be positive");
  if (bounds.min_tokens > bounds.max_tokens) {
    throw ConfigError("min_tokens exceeds max_tokens");
  }
  if (threads == 0) throw ConfigError("threads must be positive");
}

namespace {

std::string FileDigest(const fs::path &p) {
  if (p.empty()) return "";
  std::ifstream in = OpenInput(p);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Sha256Hex(buffer.str());
}

}  // namespace

std::string PipelineConfig::Hash() const {
  ordered_json j;
  ordered_json files;
  files["corpus"] = FileDigest(corpus);
  files["kg"] = FileDigest(kg);
  files["properties"] = FileDigest(properties);
  files["taxonomy"] = FileDigest(taxonomy);
  files["mappers"] = FileDigest(mappers);
  for (const auto &[lang, p] : templates) {
    files["templates." + std::string(LangCode(lang))] = FileDigest(p);
  }
  files["instructions"] = FileDigest(instructions);
  files["date_patterns"] = FileDigest(date_patterns);
  files["caps"] = FileDigest(caps);
  files["mock_rules"] = mock_backends ? FileDigest(mock_rules) : "";
  j["files"] = files;
  j["lang"] = lang ? std::string(LangCode(*lang)) : "";
  j["seed"] = seed;
  j["nli_threshold"] = nli_threshold;
  j["nli_sentence_premise"] = nli_sentence_premise;
  j["sampler_k"] = sampler_k;
  j["min_tokens"] = bounds.min_tokens;
  j["max_tokens"] = bounds.max_tokens;
  j["supplement"] = supplement;
  j["nli"] = nli;
  j["count_head_side"] = count_head_side;
  j["mock_backends"] = mock_backends;
  j["backend_url"] = mock_backends ? "" : backend.base_url;
  return Sha256Hex(j.dump());
}

fs::path PipelineConfig::DatasetPath() const {
  return output.empty() ? work_dir / StageOutputFile(Stage::kRender) : output;
}

// ---------------------------------------------------------------------------
// Manifest

ordered_json ToJson(const StageReport &r) {
  ordered_json j;
  j["stage"] = StageName(r.stage);
  j["unit"] = r.unit;
  j["input"] = r.input;
  j["output"] = r.output;
  j["added"] = r.added;
  j["filtered"] = r.filtered;
  j["flagged"] = r.flagged;
  j["details"] = ordered_json::object();
  for (const auto &[k, v] : r.details) j["details"][k] = v;
  j["skipped"] = r.skipped;
  j["seconds"] = r.seconds;
  return j;
}

StageReport StageReportFromJson(const json &j) {
  StageReport r;
  auto stage = ParseStage(j.at("stage").get<std::string>());
  if (!stage) throw ConfigError("manifest: unknown stage");
  r.stage = *stage;
  r.unit = j.value("unit", std::string());
  r.input = j.value("input", size_t{0});
  r.output = j.value("output", size_t{0});
  r.added = j.value("added", size_t{0});
  r.filtered = j.value("filtered", size_t{0});
  r.flagged = j.value("flagged", size_t{0});
  if (j.contains("details")) {
    for (const auto &[k, v] : j["details"].items()) r.details[k] = v.get<size_t>();
  }
  r.skipped = j.value("skipped", false);
  r.seconds = j.value("seconds", 0.0);
  return r;
}

const StageReport *RunManifest::Find(Stage stage) const {
  for (const StageReport &r : stages) {
    if (r.stage == stage) return &r;
  }
  return nullptr;
}

double RunManifest::NliExclusionRate() const {
  const StageReport *r = Find(Stage::kFilter);
  if (r == nullptr || r->skipped || r->input == 0) return 0.0;
  return static_cast<double>(r->filtered) / static_cast<double>(r->input);
}

ordered_json ToJson(const RunManifest &m) {
  ordered_json j;
  j["tool"] = "kg2instruct";
  j["version"] = m.version;
  j["config_hash"] = m.config_hash;
  j["seed"] = m.seed;
  j["supplement"] = m.supplement;
  j["nli"] = m.nli;
  j["nli_exclusion_rate"] = m.NliExclusionRate();
  j["stages"] = ordered_json::array();
  for (const StageReport &r : m.stages) j["stages"].push_back(ToJson(r));
  return j;
}

RunManifest ManifestFromJson(const json &j) {
  RunManifest m;
  m.version = j.value("version", std::string(kVersion));
  m.config_hash = j.value("config_hash", std::string());
  m.seed = j.value("seed", uint64_t{0});
  m.supplement = j.value("supplement", true);
  m.nli = j.value("nli", true);
  if (j.contains("stages")) {
    for (const json &s : j["stages"]) m.stages.push_back(StageReportFromJson(s));
  }
  return m;
}

std::unique_ptr<Backend> MakeBackend(const PipelineConfig &config) {
  if (config.mock_backends) {
    return std::make_unique<MockBackend>(MockBackend::Load(config.mock_rules));
  }
  BackendEndpointSet endpoints = config.backend;
  if (const char *url = std::getenv("KG2I_BACKEND_URL"); url != nullptr && *url) {
    endpoints.base_url = url;
  }
  return std::make_unique<HttpBackend>(std::move(endpoints));
}

// ---------------------------------------------------------------------------
// Stages

struct Pipeline::Resources {
  Taxonomy taxonomy;
  std::optional<PropertyRegistry> registry;
  KgStore store;
  bool store_loaded = false;
  MapperSet mappers;
  std::map<Lang, RelationTemplates> templates;
  InstructionTemplates instructions;
  DatePatterns patterns;
  CapTable caps;
  std::unique_ptr<Backend> backend;
};

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
  config_.Validate();
}

Pipeline::~Pipeline() = default;

Pipeline::Resources &Pipeline::resources() {
  if (resources_) return *resources_;
  auto r = std::make_unique<Resources>();
  r->taxonomy = Taxonomy::Load(config_.taxonomy);
  if (!config_.properties.empty()) {
    r->registry = PropertyRegistry::Load(config_.properties);
  }
  r->mappers = MapperSet::Load(config_.mappers, r->taxonomy);
  for (const auto &[lang, path] : config_.templates) {
    RelationTemplates t = RelationTemplates::Load(path);
    if (t.lang() != lang) {
      throw ConfigError(path.string() + ": templates are for " +
                        std::string(LangCode(t.lang())) + ", configured as " +
                        std::string(LangCode(lang)));
    }
    r->templates.emplace(lang, std::move(t));
  }
  r->instructions = InstructionTemplates::Load(config_.instructions);
  r->patterns = DatePatterns::Load(config_.date_patterns);
  r->caps = CapTable::Load(config_.caps);
  r->backend = MakeBackend(config_);
  resources_ = std::move(r);
  return *resources_;
}

namespace {

fs::path StagePath(const PipelineConfig &c, Stage stage) {
  if (stage == Stage::kRender) return c.DatasetPath();
  return c.work_dir / StageOutputFile(stage);
}

std::vector<json> ReadStage(const PipelineConfig &c, Stage stage) {
  fs::path p = StagePath(c, stage);
  if (!fs::exists(p)) {
    throw Error("missing stage file " + p.string() + " (run stage '" +
                std::string(StageName(stage)) + "' first)");
  }
  return ReadJsonLines(p);
}

std::vector<Paragraph> ReadParagraphs(const PipelineConfig &c) {
  std::vector<Paragraph> out;
  for (const json &j : ReadStage(c, Stage::kIngest)) {
    Paragraph p = ParagraphFromJson(j);
    if (!p.domain) throw Error("paragraph " + p.id + " has no domain");
    out.push_back(std::move(p));
  }
  return out;
}

// Stage records keyed by paragraph id.
std::unordered_map<std::string, json> ReadKeyed(const PipelineConfig &c,
                                                Stage stage) {
  std::unordered_map<std::string, json> out;
  for (json &j : ReadStage(c, stage)) {
    std::string id = j.at("id").get<std::string>();
    out.emplace(std::move(id), std::move(j));
  }
  return out;
}

const json &Lookup(const std::unordered_map<std::string, json> &m,
                   const std::string &id, Stage stage) {
  auto it = m.find(id);
  if (it == m.end()) {
    throw Error("paragraph " + id + " missing from " +
                std::string(StageOutputFile(stage)));
  }
  return it->second;
}

std::vector<SurfaceTriple> TriplesOf(const json &record, const char *field) {
  std::vector<SurfaceTriple> out;
  for (const json &t : record.at(field)) out.push_back(TripleFromJson(t));
  return out;
}

ordered_json TriplesJson(const std::vector<SurfaceTriple> &triples) {
  ordered_json out = ordered_json::array();
  for (const SurfaceTriple &t : triples) out.push_back(TripleToJson(t));
  return out;
}

template <typename Records>
void WriteStage(const fs::path &path, const Records &records) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out = OpenOutput(tmp);
    for (const auto &r : records) WriteJsonLine(out, r);
    if (!out) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

bool ById(const Paragraph &a, const Paragraph &b) { return a.id < b.id; }

}  // namespace

std::vector<Paragraph> IngestCorpus(const fs::path &corpus, std::optional<Lang> lang,
                                    const TokenBounds &bounds, Backend &backend,
                                    size_t threads, StageReport *report) {
  StageReport local;
  if (report == nullptr) report = &local;
  report->stage = Stage::kIngest;
  report->unit = "paragraphs";
  std::ifstream in = OpenInput(corpus);
  std::vector<Paragraph> all;
  SkipReport skips;
  for (const CorpusDocument &doc : ReadCorpus(in)) {
    if (lang && doc.lang != *lang) {
      ++report->details["documents_other_lang"];
      continue;
    }
    ++report->details["documents"];
    for (Paragraph &p : ExtractParagraphs(doc, &skips)) all.push_back(std::move(p));
  }
  report->input = all.size() + skips.unbalanced_links;
  std::vector<Paragraph> kept = FilterByTokens(std::move(all), bounds, &skips);
  auto domains = ParallelMap(kept.size(), threads, [&](size_t i) {
    std::optional<Domain> d;
    try {
      d = ClassifyDomain(kept[i], backend);
    } catch (const Error &e) {
      spdlog::error("{}: classification failed, paragraph skipped ({})", kept[i].id,
                    e.what());
    }
    return d;
  });
  std::vector<Paragraph> out;
  size_t failed = 0;
  for (size_t i = 0; i < kept.size(); ++i) {
    if (!domains[i]) {
      ++failed;
      continue;
    }
    kept[i].domain = domains[i];
    out.push_back(std::move(kept[i]));
  }
  std::sort(out.begin(), out.end(), ById);
  report->output = out.size();
  report->filtered = skips.total() + failed;
  report->details["unbalanced_links"] = skips.unbalanced_links;
  report->details["too_short"] = skips.too_short;
  report->details["too_long"] = skips.too_long;
  report->details["empty_blocks"] = skips.empty;
  report->details["classify_failed"] = failed;
  return out;
}

StageReport Pipeline::RunStage(Stage stage) {
  const auto start = std::chrono::steady_clock::now();
  StageReport report;
  report.stage = stage;
  const PipelineConfig &c = config_;
  try {
    Resources &res = resources();
    // The KG is only read by the stages after ingest.
    if (stage != Stage::kIngest && !res.store_loaded) {
      res.store = KgStore::Load(c.kg, res.registry ? &*res.registry : nullptr);
      res.store_loaded = true;
    }
    switch (stage) {
      case Stage::kIngest: {
        std::vector<Paragraph> out = IngestCorpus(c.corpus, c.lang, c.bounds,
                                                  *res.backend, c.threads, &report);
        std::vector<ordered_json> records;
        for (const Paragraph &p : out) records.push_back(ToJson(p));
        WriteStage(StagePath(c, stage), records);
        break;
      }

      case Stage::kLink: {
        report.unit = "paragraphs";
        std::vector<Paragraph> paragraphs = ReadParagraphs(c);
        DisambiguationOptions options{c.count_head_side};
        auto links = ParallelMap(paragraphs.size(), c.threads, [&](size_t i) {
          LinkResult r = IdentifyMentions(paragraphs[i], res.store, res.backend.get());
          Disambiguate(&r.mentions, res.store, res.taxonomy, paragraphs[i].lang,
                       options);
          return r;
        });
        std::vector<ordered_json> records;
        for (size_t i = 0; i < paragraphs.size(); ++i) {
          ordered_json j;
          j["id"] = paragraphs[i].id;
          j["ner_degraded"] = links[i].ner_degraded;
          j["mentions"] = ordered_json::array();
          for (const EntityMention &m : links[i].mentions) {
            j["mentions"].push_back(ToJson(m));
            ++report.details["mentions"];
            ++report.details["mentions_" + std::string(MentionSourceName(m.source))];
            if (m.resolved) ++report.details["mentions_resolved"];
          }
          if (links[i].ner_degraded) ++report.flagged;
          records.push_back(std::move(j));
        }
        WriteStage(StagePath(c, stage), records);
        report.input = report.output = paragraphs.size();
        break;
      }

      case Stage::kMatch: {
        report.unit = "paragraphs";
        std::vector<Paragraph> paragraphs = ReadParagraphs(c);
        auto mentions = ReadKeyed(c, Stage::kLink);
        auto triples = ParallelMap(paragraphs.size(), c.threads, [&](size_t i) {
          const Paragraph &p = paragraphs[i];
          std::vector<EntityMention> ms;
          for (const json &m : Lookup(mentions, p.id, Stage::kLink).at("mentions")) {
            ms.push_back(MentionFromJson(m));
          }
          return MatchParagraph(p, ms, res.mappers.For(*p.domain), res.store,
                                res.taxonomy, res.patterns);
        });
        std::vector<ordered_json> records;
        for (size_t i = 0; i < paragraphs.size(); ++i) {
          records.push_back(ordered_json{{"id", paragraphs[i].id},
                                         {"triples", TriplesJson(triples[i])}});
          report.details["triples"] += triples[i].size();
        }
        WriteStage(StagePath(c, stage), records);
        report.input = report.output = paragraphs.size();
        break;
      }

      case Stage::kSupplement: {
        report.unit = "triples";
        std::vector<Paragraph> paragraphs = ReadParagraphs(c);
        auto kg = ReadKeyed(c, Stage::kMatch);
        report.skipped = !c.supplement;
        auto results = ParallelMap(paragraphs.size(), c.threads, [&](size_t i) {
          const Paragraph &p = paragraphs[i];
          SupplementResult r;
          if (c.supplement) {
            r = Supplement(p, res.mappers.For(*p.domain), res.instructions,
                           *res.backend);
          }
          return r;
        });
        std::vector<ordered_json> records;
        for (size_t i = 0; i < paragraphs.size(); ++i) {
          const Paragraph &p = paragraphs[i];
          std::vector<SurfaceTriple> kg_triples =
              TriplesOf(Lookup(kg, p.id, Stage::kMatch), "triples");
          const SupplementResult &r = results[i];
          std::vector<SurfaceTriple> merged = MergeDedupe(kg_triples, r.triples, p.lang);
          report.input += kg_triples.size();
          report.output += merged.size();
          report.added += merged.size() - kg_triples.size();
          report.details["llm_proposed"] += r.triples.size() + r.dropped_relation +
                                            r.dropped_surface;
          report.details["llm_dropped_relation"] += r.dropped_relation;
          report.details["llm_dropped_surface"] += r.dropped_surface;
          report.details["llm_duplicate_of_kg"] +=
              r.triples.size() - (merged.size() - kg_triples.size());
          if (!r.flag.empty()) ++report.details["paragraphs_" + r.flag];
          records.push_back(ordered_json{
              {"id", p.id}, {"flag", r.flag}, {"triples", TriplesJson(merged)}});
        }
        WriteStage(StagePath(c, stage), records);
        break;
      }

      case Stage::kFilter: {
        report.unit = "triples";
        std::vector<Paragraph> paragraphs = ReadParagraphs(c);
        auto merged = ReadKeyed(c, Stage::kSupplement);
        report.skipped = !c.nli;
        NliOptions options{c.nli_threshold, c.nli_sentence_premise};
        auto verdicts = ParallelMap(paragraphs.size(), c.threads, [&](size_t i) {
          const Paragraph &p = paragraphs[i];
          std::vector<SurfaceTriple> triples =
              TriplesOf(Lookup(merged, p.id, Stage::kSupplement), "triples");
          std::vector<NliVerdict> v;
          if (!c.nli) {
            for (SurfaceTriple &t : triples) v.push_back({std::move(t), true, ""});
            return v;
          }
          auto it = res.templates.find(p.lang);
          if (it == res.templates.end()) {
            throw ConfigError("no relation templates for " +
                              std::string(LangCode(p.lang)));
          }
          return FilterTriples(p, triples, it->second, *res.backend, options);
        });
        std::vector<ordered_json> records;
        for (size_t i = 0; i < paragraphs.size(); ++i) {
          std::vector<SurfaceTriple> kept, excluded;
          ordered_json flags = ordered_json::array();
          for (const NliVerdict &v : verdicts[i]) {
            ++report.input;
            if (!v.retained) {
              excluded.push_back(v.triple);
              ++report.filtered;
              continue;
            }
            kept.push_back(v.triple);
            ++report.output;
            if (!v.flag.empty()) {
              ++report.flagged;
              ++report.details[v.flag];
              flags.push_back(ordered_json{{"index", kept.size() - 1}, {"flag", v.flag}});
            }
          }
          records.push_back(ordered_json{{"id", paragraphs[i].id},
                                         {"triples", TriplesJson(kept)},
                                         {"excluded", TriplesJson(excluded)},
                                         {"flags", flags}});
        }
        WriteStage(StagePath(c, stage), records);
        break;
      }

      case Stage::kSample: {
        report.unit = "paragraphs";
        std::vector<Paragraph> paragraphs = ReadParagraphs(c);
        auto filtered = ReadKeyed(c, Stage::kFilter);
        std::vector<SampleCandidate> candidates;
        for (const Paragraph &p : paragraphs) {
          std::vector<SurfaceTriple> triples =
              TriplesOf(Lookup(filtered, p.id, Stage::kFilter), "triples");
          if (triples.empty()) {
            ++report.details["no_triples"];
            continue;
          }
          candidates.push_back({p.id, p.lang, *p.domain, SchemaKey(triples)});
        }
        std::vector<size_t> chosen =
            SampleByLanguage(candidates, c.seed, c.sampler_k, res.caps);
        std::vector<ordered_json> records;
        for (size_t i : chosen) {
          const SampleCandidate &s = candidates[i];
          records.push_back(ordered_json{{"id", s.id},
                                         {"lang", LangCode(s.lang)},
                                         {"domain", DomainName(s.domain)},
                                         {"schema_key", s.key}});
        }
        WriteStage(StagePath(c, stage), records);
        report.input = paragraphs.size();
        report.output = chosen.size();
        report.filtered = paragraphs.size() - chosen.size();
        report.details["not_selected"] = candidates.size() - chosen.size();
        break;
      }

      case Stage::kRender: {
        report.unit = "paragraphs";
        std::vector<Paragraph> paragraphs = ReadParagraphs(c);
        std::unordered_map<std::string, const Paragraph *> by_id;
        for (const Paragraph &p : paragraphs) by_id[p.id] = &p;
        auto mentions = ReadKeyed(c, Stage::kLink);
        auto filtered = ReadKeyed(c, Stage::kFilter);
        std::vector<std::string> ids;
        for (const json &s : ReadStage(c, Stage::kSample)) {
          ids.push_back(s.at("id").get<std::string>());
        }
        std::sort(ids.begin(), ids.end());
        auto records = ParallelMap(ids.size(), c.threads, [&](size_t i) {
          auto it = by_id.find(ids[i]);
          if (it == by_id.end()) throw Error("sampled id " + ids[i] + " unknown");
          const Paragraph &p = *it->second;
          std::vector<EntityMention> ms;
          for (const json &m : Lookup(mentions, p.id, Stage::kLink).at("mentions")) {
            ms.push_back(MentionFromJson(m));
          }
          std::vector<TypedTriple> typed;
          for (SurfaceTriple &t :
               TriplesOf(Lookup(filtered, p.id, Stage::kFilter), "triples")) {
            std::string type = HeadType(t.head, p.lang, ms, res.store, res.taxonomy);
            typed.push_back({std::move(t), std::move(type)});
          }
          InstructionRecord r;
          r.id = p.id;
          r.lang = p.lang;
          r.domain = *p.domain;
          r.schema = res.mappers.For(r.domain).Labels(p.lang);
          r.instruction = res.instructions.Render(r.domain, r.schema, p.lang);
          r.input = p.text;
          r.output = RenderOutput(typed);
          r.triples = CanonicalOrder(typed);
          return ToJson(r);
        });
        WriteStage(StagePath(c, stage), records);
        report.input = report.output = ids.size();
        break;
      }
    }
  } catch (const StageError &) {
    throw;
  } catch (const std::exception &e) {
    throw StageError(std::string(StageName(stage)), e.what());
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

RunManifest Pipeline::Run(std::optional<Stage> from) {
  fs::create_directories(config_.work_dir);
  const fs::path manifest_path = config_.work_dir / "manifest.json";

  RunManifest manifest;
  size_t first = 0;
  if (from) {
    first = static_cast<size_t>(*from);
    if (fs::exists(manifest_path)) {
      RunManifest previous = ManifestFromJson(ReadJsonFile(manifest_path));
      for (const StageReport &r : previous.stages) {
        if (static_cast<size_t>(r.stage) < first) manifest.stages.push_back(r);
      }
    }
  }
  manifest.config_hash = config_.Hash();
  manifest.seed = config_.seed;
  manifest.supplement = config_.supplement;
  manifest.nli = config_.nli;

  auto write_manifest = [&] {
    std::ofstream out = OpenOutput(manifest_path);
    out << ToJson(manifest).dump(2) << '\n';
  };
  for (size_t i = first; i < kAllStages.size(); ++i) {
    Stage stage = kAllStages[i];
    spdlog::info("stage {}", StageName(stage));
    StageReport report = RunStage(stage);
    spdlog::info("stage {}: {} -> {} {} ({} filtered, {} flagged)", StageName(stage),
                 report.input, report.output, report.unit, report.filtered,
                 report.flagged);
    manifest.stages.push_back(std::move(report));
    write_manifest();
  }
  return manifest;
}

}  // namespace kg2i
