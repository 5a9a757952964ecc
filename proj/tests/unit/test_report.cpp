#include "corpfreq/error.hpp"
#include "corpfreq/report.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "synthetic_corpus.hpp"

using namespace corpfreq;

namespace {

SourcesMatrix published() {
  return parse_sources_matrix(
      testing::read_text(std::string(CORPFREQ_DATA_DIR) + "/published_sources.tsv"));
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("published sources matrix") {
  const auto m = published();
  CHECK(m.cities.size() == 34);
  CHECK(m.grand_total == 500);
  CHECK(m.cells[m.row_of("MTREY")][FieldCode::parse("A12").slot()] == 25);
  const std::array<std::size_t, kFieldCount> totals{18, 13, 12, 5, 28, 27, 35, 43,
                                                    70, 23, 21, 47, 8, 88, 62};
  CHECK(m.column_totals == totals);
}

TEST_CASE("matrix from catalog round-trips through its text form") {
  const auto m = published();
  const auto registry = CityRegistry::standard();
  const auto catalog = build_catalog(expand_matrix(m, registry));
  const auto rebuilt = sources_matrix(catalog, registry);
  CHECK(rebuilt == m);
  CHECK(format_sources_matrix(rebuilt) ==
        testing::read_text(std::string(CORPFREQ_DATA_DIR) + "/published_sources.tsv"));
}

TEST_CASE("empty catalog gives zeros and full deficit") {
  const auto m = sources_matrix(build_catalog(std::span<const SampleMetadata>{}));
  CHECK(m.grand_total == 0);
  CHECK(m.total_deficit() == 34 * 15);
  for (std::size_t r = 0; r < m.cities.size(); ++r) {
    for (std::size_t c = 0; c < kFieldCount; ++c) CHECK(m.deficit(r, c) == 1);
  }
}

TEST_CASE("deficits of the published matrix") {
  const auto m = published();
  std::size_t zero_cells = 0;
  for (const auto& row : m.cells) {
    for (auto v : row) zero_cells += v == 0;
  }
  CHECK(m.total_deficit() == zero_cells);
  CHECK(m.deficit(m.row_of("TIJUA"), 0) == 1);
  CHECK(m.deficit(m.row_of("MTREY"), 0) == 0);
  const auto text = format_deficit_matrix(m);
  CHECK(text.ends_with("GRAND TOTAL\t" + std::to_string(zero_cells) + "\n"));
}

TEST_CASE("matrix parser checks its totals") {
  auto text = format_sources_matrix(published());
  const auto pos = text.find("GRAND TOTAL\t500");
  text.replace(pos, 15, "GRAND TOTAL\t501");
  CHECK_THROWS_AS(parse_sources_matrix(text), Error);
}

TEST_CASE("cities outside the registry are appended") {
  CityRegistry registry = CityRegistry::standard();
  registry.add("ROMA");
  IngestOptions options{registry, {}};
  const auto s = parse_sample("#CITY: ROMA\n#FIELD: A09\n#YEAR: 1985\n\nx\n", options);
  const std::vector<RawSample> samples{s};
  const auto m = sources_matrix(build_catalog(samples));
  CHECK(m.cities.back() == "ROMA");
  CHECK(m.cells.back()[8] == 1);
}

TEST_CASE("coverage chart") {
  const std::vector<double> shares{66.9, 7.1, 4.8, 2.0};
  const auto curve = CoverageCurve::from_block_shares(default_cutoffs(), shares, 1000000);
  const auto chart = render_coverage_chart(curve, ReferenceCurve::lewandowski());
  CHECK(chart.data_csv ==
        "block,cutoff,observed,reference\n"
        "1,1000,66.9,80\n2,2000,7.1,10\n3,3000,4.8,3\n4,4000,2,2\n");
  const std::string first = std::string("   1-1000 |") + std::string(33, '#') + std::string(6, ' ') +
                            "|" + std::string(10, ' ') + " 66.9 (80.0)";
  CHECK(chart.text.find(first) != std::string::npos);
  const std::string third = "2001-3000 |#+" + std::string(48, ' ') + " 4.8 (3.0)";
  CHECK(chart.text.find(third) != std::string::npos);
}

TEST_CASE("equal curves put every marker on its bar") {
  const std::vector<double> shares{80, 10, 3, 2};
  const auto curve = CoverageCurve::from_block_shares(default_cutoffs(), shares, 1000000);
  const auto chart = render_coverage_chart(curve, ReferenceCurve::lewandowski());
  CHECK(chart.text.find('|' + std::string(39, '#') + '+') != std::string::npos);
  CHECK(chart.text.find("|####+ ") != std::string::npos);
  CHECK(chart.text.find("|#+ ") != std::string::npos);
  CHECK(chart.text.find("|+ ") != std::string::npos);
}

TEST_CASE("chart data round-trips") {
  testing::Rng rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ranked = rank(testing::random_skewed_table(rng, testing::uniform(rng, 1, 3000)));
    const auto curve = coverage(ranked, default_cutoffs());
    ReferenceCurve ref{"r", {}};
    for (int k = 0; k < 4; ++k) ref.block_shares.push_back(testing::uniform(rng, 0, 1000) / 10.0);
    const auto series = parse_chart_data(render_coverage_chart(curve, ref).data_csv);
    CHECK(series.cutoffs == curve.cutoffs);
    CHECK(series.observed == curve.block_shares);
    CHECK(series.reference == ref.block_shares);
  }
}

TEST_CASE("chart arity mismatch") {
  const std::vector<double> shares{80, 10, 3, 2};
  const auto curve = CoverageCurve::from_block_shares(default_cutoffs(), shares, 100);
  CHECK_THROWS_AS(render_coverage_chart(curve, ReferenceCurve{"r", {1, 2, 3}}), Error);
}

}  // TEST_SUITE
