#include "corpfreq/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

constexpr std::size_t kChartWidth = 50;  // cells for 100 percent

std::string matrix_header() {
  std::string out = "City";
  for (const auto& f : all_fields()) out += '\t' + f.code();
  return out + '\n';
}

std::size_t cells_for(double percent) {
  const double clamped = std::clamp(percent, 0.0, 100.0);
  return static_cast<std::size_t>(
      std::llround(clamped * static_cast<double>(kChartWidth) / 100.0));
}

}  // namespace

std::size_t SourcesMatrix::total_deficit() const noexcept {
  std::size_t sum = 0;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < kFieldCount; ++c) sum += deficit(r, c);
  }
  return sum;
}

std::size_t SourcesMatrix::row_of(std::string_view city) const {
  const auto it = std::find(cities.begin(), cities.end(), city);
  if (it == cities.end()) throw Error(ErrorKind::UnknownCityCode, std::string(city));
  return static_cast<std::size_t>(it - cities.begin());
}

SourcesMatrix sources_matrix(const SampleCatalog& catalog, const CityRegistry& registry) {
  SourcesMatrix m;
  m.cities = registry.codes();
  std::set<std::string> extra;
  for (const auto& [cell, count] : catalog.cell_counts()) {
    if (!registry.contains(cell.first)) extra.insert(cell.first);
  }
  m.cities.insert(m.cities.end(), extra.begin(), extra.end());
  m.cells.assign(m.cities.size(), {});
  for (const auto& [cell, count] : catalog.cell_counts()) {
    const std::size_t row = m.row_of(cell.first);
    const auto col = static_cast<std::size_t>(cell.second - 1);
    m.cells[row][col] += count;
    m.column_totals[col] += count;
    m.grand_total += count;
  }
  return m;
}

std::string format_sources_matrix(const SourcesMatrix& m) {
  std::string out = matrix_header();
  for (std::size_t r = 0; r < m.cities.size(); ++r) {
    out += m.cities[r];
    for (std::size_t c = 0; c < kFieldCount; ++c) out += '\t' + std::to_string(m.cells[r][c]);
    out += '\n';
  }
  out += "TOTAL";
  for (std::size_t c = 0; c < kFieldCount; ++c) out += '\t' + std::to_string(m.column_totals[c]);
  out += "\nGRAND TOTAL\t" + std::to_string(m.grand_total) + '\n';
  return out;
}

std::string format_deficit_matrix(const SourcesMatrix& m) {
  std::string out = matrix_header();
  std::array<std::size_t, kFieldCount> totals{};
  for (std::size_t r = 0; r < m.cities.size(); ++r) {
    out += m.cities[r];
    for (std::size_t c = 0; c < kFieldCount; ++c) {
      out += '\t' + std::to_string(m.deficit(r, c));
      totals[c] += m.deficit(r, c);
    }
    out += '\n';
  }
  out += "TOTAL";
  for (std::size_t c = 0; c < kFieldCount; ++c) out += '\t' + std::to_string(totals[c]);
  out += "\nGRAND TOTAL\t" + std::to_string(m.total_deficit()) + '\n';
  return out;
}

SourcesMatrix parse_sources_matrix(std::string_view tsv) {
  const auto rows = detail::lines(tsv);
  if (rows.empty() || std::string(rows.front()) + '\n' != matrix_header()) {
    throw Error(ErrorKind::MalformedInput, "sources matrix header mismatch");
  }
  SourcesMatrix m;
  bool saw_total = false;
  std::array<std::size_t, kFieldCount> declared{};
  std::size_t declared_grand = 0;
  bool saw_grand = false;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto cols = detail::split(rows[r], '\t');
    if (cols[0] == "GRAND TOTAL") {
      if (cols.size() != 2) throw Error(ErrorKind::MalformedInput, "bad GRAND TOTAL row");
      declared_grand = detail::parse_uint(cols[1], "grand total");
      saw_grand = true;
      continue;
    }
    if (cols.size() != kFieldCount + 1) {
      throw Error(ErrorKind::MalformedInput, "matrix row " + std::to_string(r) +
                                                 " needs " + std::to_string(kFieldCount + 1) +
                                                 " columns");
    }
    std::array<std::size_t, kFieldCount> values{};
    for (std::size_t c = 0; c < kFieldCount; ++c) {
      values[c] = detail::parse_uint(cols[c + 1], "cell");
    }
    if (cols[0] == "TOTAL") {
      declared = values;
      saw_total = true;
      continue;
    }
    m.cities.emplace_back(detail::trim(cols[0]));
    m.cells.push_back(values);
    for (std::size_t c = 0; c < kFieldCount; ++c) {
      m.column_totals[c] += values[c];
      m.grand_total += values[c];
    }
  }
  if (saw_total && declared != m.column_totals) {
    throw Error(ErrorKind::MalformedInput, "TOTAL row disagrees with the cells");
  }
  if (saw_grand && declared_grand != m.grand_total) {
    throw Error(ErrorKind::MalformedInput, "GRAND TOTAL disagrees with the cells");
  }
  return m;
}

std::vector<SampleMetadata> expand_matrix(const SourcesMatrix& matrix,
                                          const CityRegistry& registry, int year) {
  std::vector<SampleMetadata> out;
  out.reserve(matrix.grand_total);
  for (std::size_t r = 0; r < matrix.cities.size(); ++r) {
    const CityCode city = CityCode::parse(matrix.cities[r], registry);
    for (const FieldCode field : all_fields()) {
      for (std::size_t k = 0; k < matrix.cells[r][field.slot()]; ++k) {
        out.push_back(SampleMetadata{city.code() + "-" + field.code() + "-" + std::to_string(k + 1),
                                     city, field, field.area(), year, false, {}});
      }
    }
  }
  return out;
}

CoverageChart render_coverage_chart(const CoverageCurve& curve, const ReferenceCurve& reference) {
  if (curve.block_shares.size() != reference.block_shares.size()) {
    throw Error(ErrorKind::ArityMismatch, "chart needs one reference value per block");
  }
  CoverageChart chart;
  chart.text = "Token share per rank block (# observed, | " + reference.name + ")\n";
  chart.text += "   ranks  0%" + std::string(kChartWidth - 6, ' ') + "100%\n";
  chart.data_csv = "block,cutoff,observed,reference\n";
  std::size_t lower = 0;
  for (std::size_t k = 0; k < curve.block_shares.size(); ++k) {
    const double observed = curve.block_shares[k];
    const double expected = reference.block_shares[k];
    const std::size_t bar = cells_for(observed);
    const std::size_t mark_cells = cells_for(expected);
    const std::size_t mark = mark_cells == 0 ? 0 : mark_cells - 1;

    std::string row(kChartWidth, ' ');
    std::fill_n(row.begin(), bar, '#');
    row[mark] = mark < bar ? '+' : '|';
    while (!row.empty() && row.back() == ' ') row.pop_back();

    std::string label = std::to_string(lower + 1) + "-" + std::to_string(curve.cutoffs[k]);
    if (label.size() < 9) label.insert(0, 9 - label.size(), ' ');
    chart.text += label + " |" + row + std::string(kChartWidth - row.size(), ' ') + " " +
                  detail::format_fixed(observed, 1) + " (" +
                  detail::format_fixed(expected, 1) + ")\n";
    chart.data_csv += std::to_string(k + 1) + ',' + std::to_string(curve.cutoffs[k]) + ',' +
                      detail::format_shortest(observed) + ',' +
                      detail::format_shortest(expected) + '\n';
    lower = curve.cutoffs[k];
  }
  return chart;
}

ChartSeries parse_chart_data(std::string_view csv) {
  const auto rows = detail::lines(csv);
  if (rows.empty() || rows.front() != "block,cutoff,observed,reference") {
    throw Error(ErrorKind::MalformedInput, "chart data header mismatch");
  }
  ChartSeries series;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto cols = detail::split(rows[r], ',');
    if (cols.size() != 4) throw Error(ErrorKind::MalformedInput, "chart data row needs 4 columns");
    series.cutoffs.push_back(detail::parse_uint(cols[1], "cutoff"));
    series.observed.push_back(detail::parse_double(cols[2], "observed"));
    series.reference.push_back(detail::parse_double(cols[3], "reference"));
  }
  return series;
}

}  // namespace corpfreq
