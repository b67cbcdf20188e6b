// kg2instruct: builds instruction-tuning records for relation extraction from
// an anchored-link corpus and a knowledge graph, and scores predictions.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kg2i/errors.h"
#include "kg2i/evaluator.h"
#include "kg2i/http_backend.h"
#include "kg2i/jsonl.h"
#include "kg2i/mock_backend.h"
#include "kg2i/pipeline.h"
#include "kg2i/render.h"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

namespace {

using namespace kg2i;

enum ExitCode { kOk = 0, kFailure = 1, kStageFailure = 2, kUsage = 64 };

// Settings a command line may override on top of the config file.
struct Overrides {
  std::string config;
  std::string work_dir;
  std::string output;
  bool mock_backends = false;
  bool no_supplement = false;
  bool no_nli = false;
  std::optional<uint64_t> seed;
  std::optional<double> nli_threshold;
  std::optional<double> k;
  std::string caps;
  std::optional<size_t> threads;

  PipelineConfig Apply() const {
    PipelineConfig c = PipelineConfig::Load(config);
    if (!work_dir.empty()) c.work_dir = work_dir;
    if (!output.empty()) c.output = output;
    if (mock_backends) c.mock_backends = true;
    if (no_supplement) c.supplement = false;
    if (no_nli) c.nli = false;
    if (seed) c.seed = *seed;
    if (nli_threshold) c.nli_threshold = *nli_threshold;
    if (k) c.sampler_k = *k;
    if (!caps.empty()) c.caps = caps;
    if (threads) c.threads = *threads;
    return c;
  }
};

void AddOverrides(CLI::App *cmd, Overrides *o) {
  cmd->add_option("--config", o->config, "pipeline config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--work-dir", o->work_dir, "stage file directory");
  cmd->add_flag("--mock-backends", o->mock_backends,
                "use the deterministic mock rule set instead of HTTP");
  cmd->add_option("--threads", o->threads, "paragraph-level workers");
}

void PrintReport(const StageReport &r) { std::cout << ToJson(r).dump(2) << '\n'; }

int RunPipeline(const Overrides &o, const std::string &resume_from) {
  std::optional<Stage> from;
  if (!resume_from.empty()) {
    from = ParseStage(resume_from);
    if (!from) throw ConfigError("unknown stage '" + resume_from + "'");
  }
  Pipeline pipeline(o.Apply());
  RunManifest manifest = pipeline.Run(from);
  std::cout << ToJson(manifest).dump(2) << '\n';
  spdlog::info("dataset written to {}", pipeline.config().DatasetPath().string());
  return kOk;
}

int RunOneStage(const Overrides &o, Stage stage) {
  Pipeline pipeline(o.Apply());
  PrintReport(pipeline.RunStage(stage));
  return kOk;
}

struct IngestArgs {
  std::string input;
  std::string lang;
  size_t min_tokens = 50;
  size_t max_tokens = 512;
  std::string output;
  std::string mock_rules;
  std::string backend_url;
  size_t threads = 1;
};

int RunIngest(const IngestArgs &a) {
  std::optional<Lang> lang;
  if (!a.lang.empty()) lang = ParseLang(a.lang);
  std::unique_ptr<Backend> backend;
  if (!a.mock_rules.empty()) {
    backend = std::make_unique<MockBackend>(MockBackend::Load(a.mock_rules));
  } else {
    BackendEndpointSet endpoints;
    endpoints.base_url = a.backend_url;
    if (const char *url = std::getenv("KG2I_BACKEND_URL"); url != nullptr && *url) {
      endpoints.base_url = url;
    }
    if (endpoints.base_url.empty()) {
      throw ConfigError("ingest needs --mock-rules, --backend-url or KG2I_BACKEND_URL");
    }
    backend = std::make_unique<HttpBackend>(std::move(endpoints));
  }
  StageReport report;
  std::vector<Paragraph> paragraphs;
  try {
    paragraphs = IngestCorpus(a.input, lang, TokenBounds{a.min_tokens, a.max_tokens},
                              *backend, a.threads, &report);
  } catch (const std::exception &e) {
    throw StageError("ingest", e.what());
  }
  std::ofstream out = OpenOutput(a.output);
  for (const Paragraph &p : paragraphs) WriteJsonLine(out, ToJson(p));
  PrintReport(report);
  return kOk;
}

struct EvalArgs {
  std::string gold;
  std::string pred;
  std::string report;
  std::string table;
};

int RunEval(const EvalArgs &a) {
  std::vector<GoldInstance> gold;
  for (const json &j : ReadJsonLines(a.gold)) {
    gold.push_back(GoldFromRecord(InstructionRecordFromJson(j)));
  }
  std::vector<Prediction> pred;
  for (const json &j : ReadJsonLines(a.pred)) {
    pred.push_back({RequireString(j, "id", "prediction"),
                    RequireString(j, "output", "prediction")});
  }
  EvalReport report = Score(gold, pred);
  std::string table = FormatTable(report);
  {
    std::ofstream out = OpenOutput(a.report);
    out << ToJson(report).dump(2) << '\n';
  }
  if (!a.table.empty()) {
    std::ofstream out = OpenOutput(a.table);
    out << table;
  }
  std::cout << table;
  return kOk;
}

int ServeMock(const std::string &rules, int port) {
  MockBackend backend = MockBackend::Load(rules);
  BackendServer server(backend);
  server.Serve(port);
  return kOk;
}

}  // namespace

int main(int argc, char **argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("kg2instruct"));

  CLI::App app{"Build and score relation-extraction instruction data"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  bool verbose = false;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "debug logging");
  app.add_flag("-q,--quiet", quiet, "errors only");

  Overrides run_opts;
  std::string resume_from;
  CLI::App *run = app.add_subcommand("run", "run every stage end to end");
  AddOverrides(run, &run_opts);
  run->add_option("--output", run_opts.output, "dataset file");
  run->add_flag("--no-supplement", run_opts.no_supplement, "skip LLM supplementation");
  run->add_flag("--no-nli", run_opts.no_nli, "skip the entailment filter");
  run->add_option("--seed", run_opts.seed, "sampling seed");
  run->add_option("--nli-threshold", run_opts.nli_threshold,
                  "retain triples scoring at least this")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--resume-from", resume_from, "first stage to run")
      ->check(CLI::IsMember({"ingest", "link", "match", "supplement", "filter",
                             "sample", "render"}));

  IngestArgs ingest_args;
  CLI::App *ingest = app.add_subcommand(
      "ingest", "extract, bound and classify paragraphs from a corpus file");
  ingest->add_option("--input", ingest_args.input, "corpus (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--lang", ingest_args.lang, "keep one language")
      ->check(CLI::IsMember({"zh", "en"}));
  ingest->add_option("--min-tokens", ingest_args.min_tokens, "inclusive lower bound");
  ingest->add_option("--max-tokens", ingest_args.max_tokens, "inclusive upper bound");
  ingest->add_option("--output", ingest_args.output, "paragraphs (JSON lines)")
      ->required();
  ingest->add_option("--mock-rules", ingest_args.mock_rules, "classify with mock rules")
      ->check(CLI::ExistingFile);
  ingest->add_option("--backend-url", ingest_args.backend_url, "backend base URL");
  ingest->add_option("--threads", ingest_args.threads, "classification workers");

  struct StageCommand {
    Stage stage;
    const char *help;
    Overrides opts;
  };
  std::vector<StageCommand> stage_commands = {
      {Stage::kLink, "identify and disambiguate entity mentions", {}},
      {Stage::kMatch, "match knowledge-graph triples to mention pairs", {}},
      {Stage::kSupplement, "add schema-constrained LLM triples", {}},
      {Stage::kFilter, "drop triples the paragraph does not entail", {}},
      {Stage::kSample, "draw a schema-diverse, domain-capped sample", {}},
      {Stage::kRender, "write instruction records", {}},
  };
  std::vector<CLI::App *> stage_apps;
  for (StageCommand &sc : stage_commands) {
    CLI::App *cmd = app.add_subcommand(std::string(StageName(sc.stage)), sc.help);
    AddOverrides(cmd, &sc.opts);
    switch (sc.stage) {
      case Stage::kSupplement:
        cmd->add_flag("--no-supplement", sc.opts.no_supplement, "pass KG triples through");
        break;
      case Stage::kFilter:
        cmd->add_flag("--no-nli", sc.opts.no_nli, "retain every triple");
        cmd->add_option("--nli-threshold", sc.opts.nli_threshold,
                        "retain triples scoring at least this")
            ->check(CLI::Range(0.0, 1.0));
        break;
      case Stage::kSample:
        cmd->add_option("--seed", sc.opts.seed, "sampling seed");
        cmd->add_option("--k", sc.opts.k, "acceptance scale")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--caps", sc.opts.caps, "per-language domain caps (JSON)")
            ->check(CLI::ExistingFile);
        break;
      case Stage::kRender:
        cmd->add_option("--output", sc.opts.output, "dataset file");
        break;
      default:
        break;
    }
    stage_apps.push_back(cmd);
  }

  EvalArgs eval_args;
  CLI::App *eval = app.add_subcommand("eval", "score predictions against a dataset");
  eval->add_option("--gold", eval_args.gold, "instruction records (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--pred", eval_args.pred, "predictions {id, output} (JSON lines)")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--report", eval_args.report, "report (JSON)")->required();
  eval->add_option("--table", eval_args.table, "also write the text table here");

  std::string rules;
  int port = 8765;
  CLI::App *serve = app.add_subcommand(
      "serve-mock", "serve the mock backends over the HTTP protocol");
  serve->add_option("--rules", rules, "mock rule set (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  serve->add_option("--port", port, "port on 127.0.0.1")->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (verbose) spdlog::set_level(spdlog::level::debug);
  if (quiet) spdlog::set_level(spdlog::level::err);

  try {
    if (*run) return RunPipeline(run_opts, resume_from);
    if (*ingest) return RunIngest(ingest_args);
    for (size_t i = 0; i < stage_apps.size(); ++i) {
      if (*stage_apps[i]) return RunOneStage(stage_commands[i].opts, stage_commands[i].stage);
    }
    if (*eval) return RunEval(eval_args);
    if (*serve) return ServeMock(rules, port);
  } catch (const StageError &e) {
    std::cerr << "kg2instruct: " << e.what() << '\n';
    return kStageFailure;
  } catch (const ConfigError &e) {
    std::cerr << "kg2instruct: config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "kg2instruct: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
