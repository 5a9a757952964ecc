#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "corpfreq/distribution_stats.hpp"
#include "corpfreq/sample_ingest.hpp"

namespace corpfreq {

/// City x field sample counts, laid out like the published sources table.
struct SourcesMatrix {
  std::vector<std::string> cities;
  std::vector<std::array<std::size_t, kFieldCount>> cells;
  std::array<std::size_t, kFieldCount> column_totals{};
  std::size_t grand_total = 0;

  /// Missing samples against the ideal of one per city and field.
  std::size_t deficit(std::size_t row, std::size_t column) const noexcept {
    return cells[row][column] == 0 ? 1 : 0;
  }
  std::size_t total_deficit() const noexcept;
  std::size_t row_of(std::string_view city) const;

  friend bool operator==(const SourcesMatrix&, const SourcesMatrix&) = default;
};

/// Rows follow the registry order; catalog cities missing from the registry
/// are appended in sorted order.
SourcesMatrix sources_matrix(const SampleCatalog& catalog,
                             const CityRegistry& registry = CityRegistry::standard());

/// Tab-separated: header `City n01 .. A15`, one row per city, then TOTAL.
std::string format_sources_matrix(const SourcesMatrix& matrix);
/// Same layout with deficit cells; the TOTAL row sums deficits per field.
std::string format_deficit_matrix(const SourcesMatrix& matrix);
/// Reads format_sources_matrix output; the TOTAL row is checked, not trusted.
SourcesMatrix parse_sources_matrix(std::string_view tsv);

/// One metadata record per counted sample of the matrix, with synthetic ids,
/// so a published matrix can be fed back through build_catalog.
std::vector<SampleMetadata> expand_matrix(const SourcesMatrix& matrix,
                                          const CityRegistry& registry, int year = 1985);

struct ChartSeries {
  std::vector<std::size_t> cutoffs;
  std::vector<double> observed;
  std::vector<double> reference;

  friend bool operator==(const ChartSeries&, const ChartSeries&) = default;
};

struct CoverageChart {
  std::string text;
  std::string data_csv;
};

/// Monospace chart: one bar of '#' per block scaled to 0..100 percent, with
/// the reference position marked by '|' (or '+' where it lands on the bar's
/// last cell).
CoverageChart render_coverage_chart(const CoverageCurve& curve, const ReferenceCurve& reference);
ChartSeries parse_chart_data(std::string_view csv);

}  // namespace corpfreq
