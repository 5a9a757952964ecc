#pragma once

// End-to-end driver behind the command-line tool.
//
// Every subcommand reads the sample files named by the config, computes its
// artifacts in memory (`produce`), and only then writes them (`run`), each to
// a temporary name renamed into place once all of them were written.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpfreq/corpus_kernels.hpp"
#include "corpfreq/distribution_stats.hpp"
#include "corpfreq/lexicon_compare.hpp"
#include "corpfreq/sample_ingest.hpp"

namespace corpfreq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

enum class Subcommand { Ingest, Analyze, Significance, Categories, Compare, Report };

std::optional<Subcommand> parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand subcommand) noexcept;

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output_dir = ".";

  double tau = 50.0;
  std::vector<std::size_t> cutoffs = default_cutoffs();
  std::vector<double> reference_curve = ReferenceCurve::lewandowski().block_shares;
  std::size_t skew_max_fields = 2;
  bool include_skewed = false;
  double size_tolerance = 0.02;
  SynchronicWindow window;
  std::vector<std::string> extra_cities;

  std::optional<std::filesystem::path> table_path;
  std::optional<std::filesystem::path> rules_path;
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> reference_path;
  std::size_t reference_limit = 0;  // 0 = whole list
  std::size_t top_n = 2000;
  std::size_t zipf_top_k = 1000;

  Execution execution = Execution::Parallel;
  int threads = 0;  // 0 = runtime default

  /// Throws InvalidArgument when a value is outside its declared range.
  void validate() const;
  SignificanceConfig significance() const;
};

/// Everything read from disk: the text pipeline, optional word lists, and the
/// parsed samples.
struct Inputs {
  IngestOptions ingest;
  TextPipeline pipeline;
  std::optional<CategoryLexicon> lexicon;
  std::optional<ReferenceWordList> reference;
  std::vector<RawSample> samples;
};

/// Regular files under the given paths (directories recursively, hidden
/// entries skipped), sorted.
std::vector<std::filesystem::path> collect_sample_files(
    const std::vector<std::filesystem::path>& inputs);

Inputs load_inputs(const RunConfig& config);

/// File name -> content.
using Artifacts = std::map<std::string, std::string>;

struct Outcome {
  Artifacts files;
  std::vector<std::string> warnings;
};

Outcome produce(Subcommand subcommand, const RunConfig& config, const Inputs& inputs);

/// Writes every file under `dir` via a temporary name. On failure, no
/// temporary is left behind and no destination file is touched.
void write_artifacts(const std::filesystem::path& dir, const Artifacts& files);

/// Returns kExitOk or kExitValidation; diagnostics go to `err`.
int run(Subcommand subcommand, const RunConfig& config, std::ostream& err);

}  // namespace corpfreq
