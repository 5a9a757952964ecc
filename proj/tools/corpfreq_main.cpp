#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "corpfreq/run.hpp"

namespace {

void add_common(CLI::App& sub, corpfreq::RunConfig& config, bool& serial) {
  sub.add_option("-i,--input", config.inputs, "Sample files or directories")
      ->required()
      ->check(CLI::ExistingPath);
  sub.add_option("-o,--out", config.output_dir, "Output directory")->required();
  sub.add_option("--table", config.table_path, "Transliteration table (TSV)");
  sub.add_option("--rules", config.rules_path, "Disambiguation rules (TSV)");
  sub.add_option("--window-start", config.window.first_year, "First accepted year");
  sub.add_option("--window-end", config.window.last_year, "Last accepted year");
  sub.add_option("--city", config.extra_cities, "Extra city code to accept");
  sub.add_flag("--serial", serial, "Use the serial kernels");
  sub.add_option("--threads", config.threads, "OpenMP threads (0 = default)");
}

void add_significance(CLI::App& sub, corpfreq::RunConfig& config) {
  sub.add_option("--threshold-per-million", config.tau, "Significance threshold");
  sub.add_option("--skew-max-fields", config.skew_max_fields,
                 "Lemmas present in at most this many fields are skewed");
  sub.add_flag("--include-skewed", config.include_skewed, "Keep skewed lemmas");
}

void add_curve(CLI::App& sub, corpfreq::RunConfig& config) {
  sub.add_option("--cutoffs", config.cutoffs, "Rank cutoffs")->delimiter(',');
  sub.add_option("--reference-curve", config.reference_curve, "Reference block shares")
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus frequency analysis"};
  app.require_subcommand(1);

  corpfreq::RunConfig config;
  bool serial = false;

  auto* ingest = app.add_subcommand("ingest", "Validate samples and tabulate sources");
  add_common(*ingest, config, serial);
  ingest->add_option("--size-tolerance", config.size_tolerance, "Relative sample size tolerance");

  auto* analyze = app.add_subcommand("analyze", "Frequency listings, coverage, Zipf, dispersion");
  add_common(*analyze, config, serial);
  add_curve(*analyze, config);
  analyze->add_option("--top-k", config.zipf_top_k, "Ranks used for the Zipf constants");

  auto* significance = app.add_subcommand("significance", "Significant lemma set");
  add_common(*significance, config, serial);
  add_significance(*significance, config);

  auto* categories = app.add_subcommand("categories", "Categorize significant lemmas");
  add_common(*categories, config, serial);
  add_significance(*categories, config);
  categories->add_option("--lexicon", config.lexicon_path, "Category lexicon (TSV)")->required();

  auto* compare = app.add_subcommand("compare", "Overlap with a reference word list");
  add_common(*compare, config, serial);
  compare->add_option("--reference", config.reference_path, "Reference word list")->required();
  compare->add_option("--reference-limit", config.reference_limit,
                      "Use only the first N reference words (0 = all)");
  compare->add_option("--top-n", config.top_n, "Corpus ranks compared");

  auto* report = app.add_subcommand("report", "Sources matrix, deficits, coverage chart");
  add_common(*report, config, serial);
  add_curve(*report, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return corpfreq::kExitUsage;
  }

  if (serial) config.execution = corpfreq::Execution::Serial;
  const auto chosen = app.get_subcommands().front();
  const auto sub = corpfreq::parse_subcommand(chosen->get_name());
  return corpfreq::run(*sub, config, std::cerr);
}
