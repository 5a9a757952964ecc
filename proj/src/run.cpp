#include "corpfreq/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "corpfreq/error.hpp"
#include "corpfreq/frequency_engine.hpp"
#include "corpfreq/report.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace fs = std::filesystem;

namespace {

struct Analysis {
  std::vector<TokenizedSample> tokenized;
  FrequencyTable table;
  RankedList ranked;
  NormalizeDiagnostics diagnostics;
};

Analysis analyze_corpus(const RunConfig& config, const Inputs& inputs) {
  Analysis a;
  a.tokenized = process_samples(inputs.samples, inputs.pipeline, config.execution);
  a.table = count_corpus(a.tokenized, config.execution);
  a.ranked = rank(a.table);
  for (const auto& s : a.tokenized) a.diagnostics.merge(s.diagnostics);
  return a;
}

ReferenceCurve reference_of(const RunConfig& config) {
  return ReferenceCurve{"reference", config.reference_curve};
}

void add_line(std::string& out, std::string_view key, const std::string& value) {
  out += key;
  out += '\t';
  out += value;
  out += '\n';
}

std::string format_summary(const RunConfig& config, const Inputs& inputs, const Analysis& a,
                           const CoverageCurve& curve, const ZipfReport& zipf) {
  std::string out;
  add_line(out, "samples", std::to_string(inputs.samples.size()));
  add_line(out, "tokens", std::to_string(a.table.corpus_total()));
  add_line(out, "types", std::to_string(a.table.distinct()));
  add_line(out, "unmapped_characters", std::to_string(a.diagnostics.total()));
  const SicShare sic = sic_share(a.table);
  add_line(out, "sic_tokens", std::to_string(sic.sic_tokens));
  add_line(out, "sic_token_percent", detail::format_fixed(sic.token_percent, 6));
  add_line(out, "sic_types", std::to_string(sic.sic_types));
  add_line(out, "sic_type_percent", detail::format_fixed(sic.type_percent, 6));
  for (const auto& [lang, share] : foreign_share(a.table)) {
    add_line(out, "foreign_percent_" + lang, detail::format_fixed(share, 6));
  }
  add_line(out, "zipf_top_k", std::to_string(zipf.constants.size()));
  add_line(out, "zipf_geometric_mean", detail::format_fixed(zipf.geometric_mean, 8));
  add_line(out, "zipf_cv", detail::format_fixed(zipf.coefficient_of_variation, 8));
  const auto deviations = compare_reference(curve, reference_of(config));
  for (std::size_t k = 0; k < deviations.size(); ++k) {
    add_line(out, "reference_deviation_" + std::to_string(curve.cutoffs[k]),
             detail::format_fixed(deviations[k], 4));
  }
  return out;
}

std::string format_ingest_samples(const std::vector<RawSample>& samples,
                                  const std::vector<TokenizedSample>& tokenized,
                                  const std::vector<SizeVerdict>& verdicts) {
  std::string out = "id\tcity\tfield\tarea\tyear\twaiver\ttokens\tsize\n";
  std::vector<std::size_t> order(samples.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].metadata.id < samples[b].metadata.id;
  });
  for (std::size_t k : order) {
    const auto& m = samples[k].metadata;
    out += m.id + '\t' + m.city.code() + '\t' + m.field.code() + '\t' +
           std::string(to_string(m.area)) + '\t' + std::to_string(m.year) + '\t' +
           (m.waiver ? "1" : "0") + '\t' + std::to_string(count_words(tokenized[k].tokens)) +
           '\t' + std::string(to_string(verdicts[k])) + '\n';
  }
  return out;
}

Outcome produce_ingest(const RunConfig& config, const Inputs& inputs) {
  Outcome outcome;
  const SampleCatalog catalog = build_catalog(std::span<const RawSample>(inputs.samples));
  const auto tokenized = process_samples(inputs.samples, inputs.pipeline, config.execution);
  std::vector<SizeVerdict> verdicts;
  std::vector<std::string> rejected;
  for (std::size_t k = 0; k < tokenized.size(); ++k) {
    const std::size_t words = count_words(tokenized[k].tokens);
    const SizeVerdict v = validate_sample_size(words, config.size_tolerance);
    verdicts.push_back(v);
    if (v == SizeVerdict::Warn) {
      outcome.warnings.push_back(tokenized[k].id + ": " + std::to_string(words) +
                                 " words, outside the size tolerance");
    } else if (v == SizeVerdict::Reject) {
      rejected.push_back(tokenized[k].id + " (" + std::to_string(words) + " words)");
    }
  }
  if (!rejected.empty()) {
    std::string list;
    for (const auto& r : rejected) list += (list.empty() ? "" : ", ") + r;
    throw Error(ErrorKind::SampleSizeRejected, list);
  }
  CityRegistry registry = inputs.ingest.cities;
  outcome.files["catalog.tsv"] = format_sources_matrix(sources_matrix(catalog, registry));
  outcome.files["samples.tsv"] = format_ingest_samples(inputs.samples, tokenized, verdicts);
  return outcome;
}

Outcome produce_analyze(const RunConfig& config, const Inputs& inputs) {
  const Analysis a = analyze_corpus(config, inputs);
  const CoverageCurve curve = coverage(a.ranked, config.cutoffs);
  const ZipfReport zipf =
      zipf_constants(a.ranked, std::min(config.zipf_top_k, a.ranked.size()));
  Outcome outcome;
  outcome.files["rank.tsv"] = format_listing(a.ranked, ListingOrder::Rank);
  outcome.files["alpha.tsv"] = format_listing(a.ranked, ListingOrder::Alphabetic);
  outcome.files["coverage.csv"] = format_coverage_csv(curve);
  outcome.files["zipf.csv"] = format_zipf_csv(a.ranked, zipf);
  outcome.files["dispersion.tsv"] =
      format_dispersion_tsv(dispersion(a.table, config.execution), a.table);
  outcome.files["summary.tsv"] = format_summary(config, inputs, a, curve, zipf);
  if (a.diagnostics.total() > 0) {
    outcome.warnings.push_back(std::to_string(a.diagnostics.total()) +
                               " characters had no transliteration and became spaces");
  }
  return outcome;
}

SignificanceSet significance_of(const RunConfig& config, const Analysis& a) {
  return significance_set(a.ranked, a.table, config.significance());
}

Outcome produce_significance(const RunConfig& config, const Inputs& inputs) {
  const Analysis a = analyze_corpus(config, inputs);
  const SignificanceSet set = significance_of(config, a);
  Outcome outcome;
  outcome.files["significance.tsv"] = format_significance_tsv(a.ranked, set);
  std::string skewed = "lemma\tcount\tfield_presence\n";
  for (const auto& lemma : set.skewed) {
    const LemmaCounts* c = a.table.find(lemma);
    skewed += lemma + '\t' + std::to_string(c->total) + '\t' +
              std::to_string(c->field_spread()) + '\n';
  }
  outcome.files["skewed.tsv"] = skewed;
  std::string summary;
  add_line(summary, "tau_per_million", detail::format_shortest(config.tau));
  add_line(summary, "min_count", std::to_string(set.min_count));
  add_line(summary, "lemmas", std::to_string(set.lemmas.size()));
  add_line(summary, "covered_tokens", std::to_string(set.covered_tokens));
  add_line(summary, "skewed", std::to_string(set.skewed.size()));
  outcome.files["significance_summary.tsv"] = summary;
  return outcome;
}

Outcome produce_categories(const RunConfig& config, const Inputs& inputs) {
  if (!inputs.lexicon) {
    throw Error(ErrorKind::InvalidArgument, "categories needs --lexicon");
  }
  const Analysis a = analyze_corpus(config, inputs);
  const SignificanceSet set = significance_of(config, a);
  const LemmaSet lemmas(set.lemmas.begin(), set.lemmas.end());
  Outcome outcome;
  outcome.files["categories.tsv"] = format_tally(categorize(lemmas, *inputs.lexicon));
  return outcome;
}

Outcome produce_compare(const RunConfig& config, const Inputs& inputs) {
  if (!inputs.reference) {
    throw Error(ErrorKind::InvalidArgument, "compare needs --reference");
  }
  const Analysis a = analyze_corpus(config, inputs);
  Outcome outcome;
  outcome.files["overlap.txt"] = format_overlap(overlap(*inputs.reference, a.ranked, config.top_n));
  return outcome;
}

Outcome produce_report(const RunConfig& config, const Inputs& inputs) {
  const SampleCatalog catalog = build_catalog(std::span<const RawSample>(inputs.samples));
  const SourcesMatrix matrix = sources_matrix(catalog, inputs.ingest.cities);
  const Analysis a = analyze_corpus(config, inputs);
  const CoverageChart chart = render_coverage_chart(coverage(a.ranked, config.cutoffs),
                                                    reference_of(config));
  Outcome outcome;
  outcome.files["sources.tsv"] = format_sources_matrix(matrix);
  outcome.files["deficits.tsv"] = format_deficit_matrix(matrix);
  outcome.files["coverage_chart.txt"] = chart.text;
  outcome.files["coverage_chart.csv"] = chart.data_csv;
  return outcome;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  if (name == "ingest") return Subcommand::Ingest;
  if (name == "analyze") return Subcommand::Analyze;
  if (name == "significance") return Subcommand::Significance;
  if (name == "categories") return Subcommand::Categories;
  if (name == "compare") return Subcommand::Compare;
  if (name == "report") return Subcommand::Report;
  return std::nullopt;
}

std::string_view to_string(Subcommand subcommand) noexcept {
  switch (subcommand) {
    case Subcommand::Ingest: return "ingest";
    case Subcommand::Analyze: return "analyze";
    case Subcommand::Significance: return "significance";
    case Subcommand::Categories: return "categories";
    case Subcommand::Compare: return "compare";
    case Subcommand::Report: return "report";
  }
  return "analyze";
}

void RunConfig::validate() const {
  significance().validate();
  require(size_tolerance >= 0.0 && size_tolerance <= 0.5, "size tolerance must lie in [0, 0.5]");
  require(!cutoffs.empty(), "at least one cutoff is required");
  for (std::size_t k = 0; k < cutoffs.size(); ++k) {
    require(cutoffs[k] > 0 && (k == 0 || cutoffs[k] > cutoffs[k - 1]),
            "cutoffs must be strictly ascending and positive");
  }
  require(reference_curve.size() == cutoffs.size(),
          "reference curve needs one value per cutoff");
  for (double v : reference_curve) require(v >= 0.0 && v <= 100.0, "reference values are percents");
  require(top_n >= 1, "top-n must be at least 1");
  require(zipf_top_k >= 1, "zipf top-k must be at least 1");
  require(window.first_year <= window.last_year, "window start after window end");
  require(threads >= 0, "threads must be non-negative");
}

SignificanceConfig RunConfig::significance() const {
  return SignificanceConfig{tau, skew_max_fields, !include_skewed};
}

std::vector<fs::path> collect_sample_files(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> files;
  const auto hidden = [](const fs::path& p) {
    const auto name = p.filename().string();
    return !name.empty() && name.front() == '.';
  };
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      for (const auto& entry : fs::recursive_directory_iterator(input)) {
        if (entry.is_regular_file() && !hidden(entry.path())) files.push_back(entry.path());
      }
    } else if (fs::is_regular_file(input)) {
      files.push_back(input);
    } else {
      throw Error(ErrorKind::Io, "no such file or directory: " + input.string());
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

Inputs load_inputs(const RunConfig& config) {
  Inputs in;
  in.ingest.window = config.window;
  for (const auto& city : config.extra_cities) in.ingest.cities.add(city);
  if (config.table_path) {
    in.pipeline.table = TransliterationTable::parse(detail::read_file(*config.table_path));
  }
  if (config.rules_path) {
    in.pipeline.rules = RuleSet::parse(detail::read_file(*config.rules_path));
  }
  if (config.lexicon_path) {
    in.lexicon = CategoryLexicon::parse(detail::read_file(*config.lexicon_path), in.pipeline.table);
  }
  if (config.reference_path) {
    in.reference = ReferenceWordList::parse(detail::read_file(*config.reference_path),
                                            in.pipeline.table, config.reference_limit);
  }
  for (const auto& file : collect_sample_files(config.inputs)) {
    try {
      in.samples.push_back(
          parse_sample(detail::read_file(file), in.ingest, file.stem().string()));
    } catch (const Error& e) {
      std::string_view what = e.what();
      const auto colon = what.find(": ");
      if (colon != std::string_view::npos) what.remove_prefix(colon + 2);
      throw Error(e.kind(), file.string() + ": " + std::string(what));
    }
  }
  return in;
}

Outcome produce(Subcommand subcommand, const RunConfig& config, const Inputs& inputs) {
  switch (subcommand) {
    case Subcommand::Ingest: return produce_ingest(config, inputs);
    case Subcommand::Analyze: return produce_analyze(config, inputs);
    case Subcommand::Significance: return produce_significance(config, inputs);
    case Subcommand::Categories: return produce_categories(config, inputs);
    case Subcommand::Compare: return produce_compare(config, inputs);
    case Subcommand::Report: return produce_report(config, inputs);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown subcommand");
}

void write_artifacts(const fs::path& dir, const Artifacts& files) {
  fs::create_directories(dir);
  std::vector<std::pair<fs::path, fs::path>> staged;
  const auto discard = [&] {
    std::error_code ec;
    for (const auto& [tmp, dest] : staged) fs::remove(tmp, ec);
  };
  for (const auto& [name, content] : files) {
    const fs::path dest = dir / name;
    const fs::path tmp = dir / ("." + name + ".tmp");
    staged.emplace_back(tmp, dest);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      discard();
      throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    }
  }
  for (const auto& [tmp, dest] : staged) fs::rename(tmp, dest);
}

int run(Subcommand subcommand, const RunConfig& config, std::ostream& err) {
  try {
    config.validate();
    set_parallel_threads(config.threads);
    const Inputs inputs = load_inputs(config);
    const Outcome outcome = produce(subcommand, config, inputs);
    for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';
    write_artifacts(config.output_dir, outcome.files);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitValidation;
}

}  // namespace corpfreq
