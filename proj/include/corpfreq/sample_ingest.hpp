#pragma once

// Sample files and the corpus catalog.
//
// A sample file is a `#KEY: value` header block, a blank line, then the body:
//
//   #ID: mtrey-a09-017
//   #CITY: MTREY
//   #FIELD: A09
//   #YEAR: 1985
//
//   Body text ...
//
// CITY, FIELD and YEAR are required. ID, AREA, WAIVER and NOTE are optional.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corpfreq {

inline constexpr std::size_t kFieldCount = 15;
inline constexpr std::size_t kNominalSampleSize = 2000;

enum class Area { Child, Adolescent, Adult };

std::string_view to_string(Area area) noexcept;
Area parse_area(std::string_view text);

/// One of n01..n03 (child), a04..a06 (adolescent), A07..A15 (adult).
class FieldCode {
 public:
  static FieldCode parse(std::string_view text);
  /// 1-based field number.
  static FieldCode from_number(int number);

  int number() const noexcept { return number_; }
  /// 0-based slot in a per-field count vector.
  std::size_t slot() const noexcept { return static_cast<std::size_t>(number_ - 1); }
  std::string code() const;
  Area area() const noexcept;

  friend auto operator<=>(FieldCode, FieldCode) = default;

 private:
  explicit FieldCode(int number) : number_(number) {}
  int number_;
};

const std::array<FieldCode, kFieldCount>& all_fields();

/// Description of a field, as printed in the legend of the sources table.
std::string_view field_description(FieldCode field);

/// The set of accepted city codes, in display order.
class CityRegistry {
 public:
  /// The 34 cities of the published sources table.
  static CityRegistry standard();

  void add(std::string_view code);
  bool contains(std::string_view code) const;
  const std::vector<std::string>& codes() const noexcept { return codes_; }

 private:
  std::vector<std::string> codes_;
};

class CityCode {
 public:
  static CityCode parse(std::string_view text, const CityRegistry& registry);

  const std::string& code() const noexcept { return code_; }

  friend auto operator<=>(const CityCode&, const CityCode&) = default;

 private:
  explicit CityCode(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

struct SynchronicWindow {
  int first_year = 1979;
  int last_year = 1989;

  bool contains(int year) const noexcept {
    return year >= first_year && year <= last_year;
  }
};

struct IngestOptions {
  CityRegistry cities = CityRegistry::standard();
  SynchronicWindow window;
};

struct SampleMetadata {
  std::string id;
  CityCode city;
  FieldCode field;
  Area area;
  int year;
  // Re-edited classic published outside the window.
  bool waiver = false;
  std::string note;

  friend bool operator==(const SampleMetadata&, const SampleMetadata&) = default;
};

struct RawSample {
  SampleMetadata metadata;
  std::string body;
};

/// Parses a sample file. `fallback_id` is used when the header has no ID; when
/// both are absent the id is a stable hash of the content.
RawSample parse_sample(std::string_view content, const IngestOptions& options,
                       std::string_view fallback_id = {});

/// Writes a sample back in the file format accepted by parse_sample.
std::string serialize_sample(const RawSample& sample);

enum class SizeVerdict { Ok, Warn, Reject };

std::string_view to_string(SizeVerdict verdict) noexcept;

/// OK within `tolerance` of the nominal 2,000 words, WARN within twice that,
/// REJECT beyond. `tolerance` must lie in [0, 0.5].
SizeVerdict validate_sample_size(std::size_t token_count, double tolerance = 0.02);

class SampleCatalog {
 public:
  using Cell = std::pair<std::string, int>;  // (city, field number)

  const std::map<std::string, SampleMetadata>& samples() const noexcept {
    return samples_;
  }
  const std::map<Cell, std::size_t>& cell_counts() const noexcept {
    return cell_counts_;
  }
  std::size_t size() const noexcept { return samples_.size(); }
  std::size_t cell(std::string_view city, FieldCode field) const;
  std::array<std::size_t, kFieldCount> field_totals() const;

  friend bool operator==(const SampleCatalog&, const SampleCatalog&) = default;

 private:
  friend SampleCatalog build_catalog(std::span<const SampleMetadata>);
  std::map<std::string, SampleMetadata> samples_;
  std::map<Cell, std::size_t> cell_counts_;
};

SampleCatalog build_catalog(std::span<const SampleMetadata> samples);
SampleCatalog build_catalog(std::span<const RawSample> samples);

}  // namespace corpfreq
