#ifndef KG2I_PIPELINE_H_
#define KG2I_PIPELINE_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kg2i/backend.h"
#include "kg2i/corpus.h"
#include "kg2i/jsonl.h"
#include "kg2i/types.h"

namespace kg2i {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Stage { kIngest, kLink, kMatch, kSupplement, kFilter, kSample, kRender };

inline constexpr std::array<Stage, 7> kAllStages = {
    Stage::kIngest, Stage::kLink,   Stage::kMatch, Stage::kSupplement,
    Stage::kFilter, Stage::kSample, Stage::kRender};

std::string_view StageName(Stage stage);
std::optional<Stage> ParseStage(std::string_view name);

// Stage-boundary file written by a stage, relative to the work directory.
std::string_view StageOutputFile(Stage stage);

// Relative paths in the config file resolve against the file's directory.
struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path kg;
  std::filesystem::path properties;  // optional
  std::filesystem::path taxonomy;
  std::filesystem::path mappers;
  std::map<Lang, std::filesystem::path> templates;
  std::filesystem::path instructions;
  std::filesystem::path date_patterns;
  std::filesystem::path caps;
  std::filesystem::path mock_rules;  // required with mock_backends
  std::filesystem::path work_dir;
  std::filesystem::path output;  // dataset file; defaults into work_dir

  std::optional<Lang> lang;  // unset: every supported language in the corpus
  uint64_t seed = 7;
  double nli_threshold = 0.5;
  bool nli_sentence_premise = false;
  double sampler_k = 1.0;
  TokenBounds bounds;
  bool supplement = true;
  bool nli = true;
  bool count_head_side = false;
  size_t threads = 1;

  bool mock_backends = false;
  BackendEndpointSet backend;

  static PipelineConfig Load(const std::filesystem::path &path);
  static PipelineConfig FromJson(const json &config,
                                 const std::filesystem::path &base_dir);

  // Throws ConfigError for missing files or out-of-range values.
  void Validate() const;

  // SHA-256 over the settings and the contents (not the paths) of every
  // referenced file, so the hash is stable across machines.
  std::string Hash() const;

  std::filesystem::path DatasetPath() const;
};

struct StageReport {
  Stage stage = Stage::kIngest;
  std::string unit;
  size_t input = 0;
  size_t output = 0;
  size_t added = 0;
  size_t filtered = 0;
  size_t flagged = 0;  // retained but marked
  std::map<std::string, size_t> details;
  bool skipped = false;
  double seconds = 0.0;

  // output == input + added - filtered
  bool Conserved() const { return output + filtered == input + added; }
};

ordered_json ToJson(const StageReport &r);
StageReport StageReportFromJson(const json &j);

struct RunManifest {
  std::string config_hash;
  std::string version{kVersion};
  uint64_t seed = 0;
  bool supplement = true;
  bool nli = true;
  std::vector<StageReport> stages;

  const StageReport *Find(Stage stage) const;
  // Filtered / input of the NLI stage; 0 when it was skipped or empty.
  double NliExclusionRate() const;
};

ordered_json ToJson(const RunManifest &m);
RunManifest ManifestFromJson(const json &j);

// The ingest stage on its own: extract, bound and classify every paragraph of
// the corpus file, sorted by id. Paragraphs whose classification fails are
// dropped and counted.
std::vector<Paragraph> IngestCorpus(const std::filesystem::path &corpus,
                                    std::optional<Lang> lang,
                                    const TokenBounds &bounds, Backend &backend,
                                    size_t threads, StageReport *report);

// Builds the backend for a config: the mock rule set, or HTTP with
// KG2I_BACKEND_URL overriding the configured URL.
std::unique_ptr<Backend> MakeBackend(const PipelineConfig &config);

class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);
  ~Pipeline();

  // Runs the stages from `from` (default: the first) to the end, writing
  // stage files and manifest.json into the work directory. Throws StageError
  // naming the failing stage; earlier stage files are left in place.
  RunManifest Run(std::optional<Stage> from = std::nullopt);

  // One stage over the stage files already in the work directory.
  StageReport RunStage(Stage stage);

  const PipelineConfig &config() const { return config_; }

  // Shared state is built lazily so single-stage runs load only what they
  // use.
  struct Resources;

 private:
  Resources &resources();

  PipelineConfig config_;
  std::unique_ptr<Resources> resources_;
};

}  // namespace kg2i

#endif  // KG2I_PIPELINE_H_
