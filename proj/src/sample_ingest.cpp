#include "corpfreq/sample_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "corpfreq/error.hpp"
#include "text_util.hpp"

namespace corpfreq {

namespace {

constexpr std::array<std::string_view, kFieldCount> kFieldCodes = {
    "n01", "n02", "n03", "a04", "a05", "a06", "A07", "A08",
    "A09", "A10", "A11", "A12", "A13", "A14", "A15"};

constexpr std::array<std::string_view, kFieldCount> kFieldDescriptions = {
    "preschool literature (no legend entry)",
    "mathematics word problems",
    "hobby, apparatus and game instructions",
    "interview transcriptions",
    "adolescent homework and letters",
    "sports rules and reports",
    "popular sheet music and hymns",
    "textbooks, manuals and philosophy",
    "fine arts, cinema, poetry and fiction",
    "business, advertising and want ads",
    "popular natural sciences",
    "social sciences, law and edicts",
    "medicine",
    "news and police reports",
    "leisure, travel and food",
};

constexpr std::array<std::string_view, 34> kStandardCities = {
    "ASUNC", "BARCE", "BOGOT", "BAIRE", "CALI",  "CARAC", "CORDO",
    "GUADA", "GUATE", "JUARE", "LAHAB", "LAPAZ", "LEON",  "LIMA",
    "LOSAN", "MADRI", "MANAG", "MARAC", "MEDEL", "MEXIC", "MTREY",
    "MTVDO", "PANAM", "PUEBL", "QUITO", "SDOMI", "SJOSE", "SJUAN",
    "SSALV", "STIAG", "SEVIL", "TEGUC", "TIJUA", "VALEN"};

bool valid_city_code(std::string_view code) {
  return !code.empty() && code.size() <= 5 &&
         std::all_of(code.begin(), code.end(),
                     [](char c) { return c >= 'A' && c <= 'Z'; });
}

std::string content_hash_id(std::string_view content) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : content) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "sample-%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

bool truthy(std::string_view value) {
  std::string v(detail::trim(value));
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return !(v == "0" || v == "no" || v == "false" || v == "off");
}

}  // namespace

std::string_view to_string(Area area) noexcept {
  switch (area) {
    case Area::Child: return "CHILD";
    case Area::Adolescent: return "ADOLESCENT";
    case Area::Adult: return "ADULT";
  }
  return "ADULT";
}

Area parse_area(std::string_view text) {
  text = detail::trim(text);
  if (text == "CHILD") return Area::Child;
  if (text == "ADOLESCENT") return Area::Adolescent;
  if (text == "ADULT") return Area::Adult;
  throw Error(ErrorKind::MalformedHeader, "unknown area '" + std::string(text) + "'");
}

FieldCode FieldCode::parse(std::string_view text) {
  text = detail::trim(text);
  const auto it = std::find(kFieldCodes.begin(), kFieldCodes.end(), text);
  if (it == kFieldCodes.end()) {
    throw Error(ErrorKind::UnknownFieldCode, "'" + std::string(text) + "'");
  }
  return FieldCode(static_cast<int>(it - kFieldCodes.begin()) + 1);
}

FieldCode FieldCode::from_number(int number) {
  if (number < 1 || number > static_cast<int>(kFieldCount)) {
    throw Error(ErrorKind::UnknownFieldCode,
                "field number " + std::to_string(number) + " outside 1..15");
  }
  return FieldCode(number);
}

std::string FieldCode::code() const { return std::string(kFieldCodes[slot()]); }

Area FieldCode::area() const noexcept {
  if (number_ <= 3) return Area::Child;
  if (number_ <= 6) return Area::Adolescent;
  return Area::Adult;
}

const std::array<FieldCode, kFieldCount>& all_fields() {
  static const auto fields = [] {
    std::array<FieldCode, kFieldCount> out{
        FieldCode::from_number(1),  FieldCode::from_number(2),
        FieldCode::from_number(3),  FieldCode::from_number(4),
        FieldCode::from_number(5),  FieldCode::from_number(6),
        FieldCode::from_number(7),  FieldCode::from_number(8),
        FieldCode::from_number(9),  FieldCode::from_number(10),
        FieldCode::from_number(11), FieldCode::from_number(12),
        FieldCode::from_number(13), FieldCode::from_number(14),
        FieldCode::from_number(15)};
    return out;
  }();
  return fields;
}

std::string_view field_description(FieldCode field) {
  return kFieldDescriptions[field.slot()];
}

CityRegistry CityRegistry::standard() {
  CityRegistry registry;
  for (auto code : kStandardCities) registry.add(code);
  return registry;
}

void CityRegistry::add(std::string_view code) {
  code = detail::trim(code);
  if (!valid_city_code(code)) {
    throw Error(ErrorKind::InvalidArgument,
                "city code must be 1-5 uppercase letters: '" + std::string(code) + "'");
  }
  if (!contains(code)) codes_.emplace_back(code);
}

bool CityRegistry::contains(std::string_view code) const {
  return std::find(codes_.begin(), codes_.end(), code) != codes_.end();
}

CityCode CityCode::parse(std::string_view text, const CityRegistry& registry) {
  text = detail::trim(text);
  if (!registry.contains(text)) {
    throw Error(ErrorKind::UnknownCityCode, "'" + std::string(text) + "'");
  }
  return CityCode(std::string(text));
}

RawSample parse_sample(std::string_view content, const IngestOptions& options,
                       std::string_view fallback_id) {
  std::map<std::string, std::string, std::less<>> header;
  std::size_t pos = 0;
  bool saw_separator = false;
  while (pos < content.size()) {
    auto end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = std::min(end + 1, content.size());
    if (detail::trim(line).empty()) {
      saw_separator = true;
      break;
    }
    if (line.front() != '#') {
      throw Error(ErrorKind::MalformedHeader,
                  "header line without '#': '" + std::string(line) + "'");
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::MalformedHeader,
                  "header line without ':': '" + std::string(line) + "'");
    }
    std::string key(detail::trim(line.substr(1, colon - 1)));
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    header[key] = std::string(detail::trim(line.substr(colon + 1)));
  }

  const auto require = [&](std::string_view key) -> const std::string& {
    const auto it = header.find(key);
    if (it == header.end()) {
      throw Error(ErrorKind::MissingHeaderKey, std::string(key));
    }
    return it->second;
  };

  const CityCode city = CityCode::parse(require("CITY"), options.cities);
  const FieldCode field = FieldCode::parse(require("FIELD"));
  const std::string& year_text = require("YEAR");
  int year = 0;
  try {
    year = static_cast<int>(detail::parse_int(year_text, "YEAR"));
  } catch (const Error&) {
    throw Error(ErrorKind::MalformedHeader, "YEAR is not an integer: '" + year_text + "'");
  }

  bool waiver = false;
  if (const auto it = header.find("WAIVER"); it != header.end()) {
    waiver = truthy(it->second);
  }
  if (!options.window.contains(year) && !waiver) {
    throw Error(ErrorKind::YearOutOfWindow,
                std::to_string(year) + " outside [" +
                    std::to_string(options.window.first_year) + ", " +
                    std::to_string(options.window.last_year) + "]");
  }

  Area area = field.area();
  if (const auto it = header.find("AREA"); it != header.end()) {
    area = parse_area(it->second);
  }

  std::string id;
  if (const auto it = header.find("ID"); it != header.end() && !it->second.empty()) {
    id = it->second;
  } else if (!fallback_id.empty()) {
    id = std::string(fallback_id);
  } else {
    id = content_hash_id(content);
  }

  std::string note;
  if (const auto it = header.find("NOTE"); it != header.end()) note = it->second;

  std::string_view body = saw_separator ? content.substr(pos) : std::string_view{};
  if (detail::trim(body).empty()) {
    throw Error(ErrorKind::EmptyBody, id);
  }

  return RawSample{
      SampleMetadata{std::move(id), city, field, area, year, waiver, std::move(note)},
      std::string(body)};
}

std::string serialize_sample(const RawSample& sample) {
  const auto& m = sample.metadata;
  std::string out;
  out += "#ID: " + m.id + "\n";
  out += "#CITY: " + m.city.code() + "\n";
  out += "#FIELD: " + m.field.code() + "\n";
  out += "#YEAR: " + std::to_string(m.year) + "\n";
  if (m.area != m.field.area()) out += "#AREA: " + std::string(to_string(m.area)) + "\n";
  if (m.waiver) out += "#WAIVER: yes\n";
  if (!m.note.empty()) out += "#NOTE: " + m.note + "\n";
  out += "\n";
  out += sample.body;
  return out;
}

std::string_view to_string(SizeVerdict verdict) noexcept {
  switch (verdict) {
    case SizeVerdict::Ok: return "OK";
    case SizeVerdict::Warn: return "WARN";
    case SizeVerdict::Reject: return "REJECT";
  }
  return "REJECT";
}

SizeVerdict validate_sample_size(std::size_t token_count, double tolerance) {
  if (!(tolerance >= 0.0 && tolerance <= 0.5)) {
    throw Error(ErrorKind::InvalidArgument, "size tolerance must lie in [0, 0.5]");
  }
  const double nominal = static_cast<double>(kNominalSampleSize);
  const double deviation = std::abs(static_cast<double>(token_count) - nominal);
  // The bound is a product of a decimal fraction; allow for its binary rounding.
  const double slack = 1e-9;
  if (deviation <= nominal * tolerance + slack) return SizeVerdict::Ok;
  if (deviation <= nominal * 2.0 * tolerance + slack) return SizeVerdict::Warn;
  return SizeVerdict::Reject;
}

std::size_t SampleCatalog::cell(std::string_view city, FieldCode field) const {
  const auto it = cell_counts_.find(Cell{std::string(city), field.number()});
  return it == cell_counts_.end() ? 0 : it->second;
}

std::array<std::size_t, kFieldCount> SampleCatalog::field_totals() const {
  std::array<std::size_t, kFieldCount> totals{};
  for (const auto& [cell, count] : cell_counts_) {
    totals[static_cast<std::size_t>(cell.second - 1)] += count;
  }
  return totals;
}

SampleCatalog build_catalog(std::span<const SampleMetadata> samples) {
  SampleCatalog catalog;
  for (const auto& m : samples) {
    if (!catalog.samples_.emplace(m.id, m).second) {
      throw Error(ErrorKind::DuplicateSampleId, m.id);
    }
    ++catalog.cell_counts_[SampleCatalog::Cell{m.city.code(), m.field.number()}];
  }
  return catalog;
}

SampleCatalog build_catalog(std::span<const RawSample> samples) {
  std::vector<SampleMetadata> metadata;
  metadata.reserve(samples.size());
  for (const auto& s : samples) metadata.push_back(s.metadata);
  return build_catalog(metadata);
}

}  // namespace corpfreq
