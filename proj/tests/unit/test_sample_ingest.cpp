#include <algorithm>
#include <numeric>

#include "corpfreq/error.hpp"
#include "corpfreq/report.hpp"
#include "corpfreq/sample_ingest.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "synthetic_corpus.hpp"

using namespace corpfreq;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

const IngestOptions kOptions;

}  // namespace

TEST_SUITE("sample_ingest") {

TEST_CASE("field codes derive their area from the prefix") {
  CHECK(FieldCode::parse("n01").area() == Area::Child);
  CHECK(FieldCode::parse("n03").area() == Area::Child);
  CHECK(FieldCode::parse("a04").area() == Area::Adolescent);
  CHECK(FieldCode::parse("a06").area() == Area::Adolescent);
  CHECK(FieldCode::parse("A07").area() == Area::Adult);
  CHECK(FieldCode::parse("A15").area() == Area::Adult);
  CHECK(FieldCode::parse("A09").number() == 9);
  for (const FieldCode f : all_fields()) {
    CHECK(FieldCode::parse(f.code()) == f);
    CHECK_FALSE(field_description(f).empty());
  }
}

TEST_CASE("unknown field codes are rejected") {
  for (const char* bad : {"A16", "n04", "a03", "A00", "a07", "X01", "", "A9"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { FieldCode::parse(bad); }) == ErrorKind::UnknownFieldCode);
  }
  CHECK(kind_of([] { FieldCode::from_number(16); }) == ErrorKind::UnknownFieldCode);
}

TEST_CASE("city registry holds the published codes") {
  const auto registry = CityRegistry::standard();
  CHECK(registry.codes().size() == 34);
  CHECK(registry.contains("MTREY"));
  CHECK(registry.contains("CALI"));
  CHECK_FALSE(registry.contains("PARIS"));
  CHECK(kind_of([&] { CityCode::parse("PARIS", registry); }) == ErrorKind::UnknownCityCode);

  CityRegistry extended = registry;
  extended.add("PARIS");
  CHECK(CityCode::parse("PARIS", extended).code() == "PARIS");
  CHECK(kind_of([&] { extended.add("paris"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { extended.add("TOOLONG"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("parse_sample reads the header block") {
  const auto s = parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: 1985\n\nUna obra.\n", kOptions);
  CHECK(s.metadata.city.code() == "MTREY");
  CHECK(s.metadata.field.code() == "A09");
  CHECK(s.metadata.area == Area::Adult);
  CHECK(s.metadata.year == 1985);
  CHECK_FALSE(s.metadata.waiver);
  CHECK(s.body == "Una obra.\n");
}

TEST_CASE("parse_sample error paths") {
  CHECK(kind_of([] { parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: 1970\n\nx\n", kOptions); }) ==
        ErrorKind::YearOutOfWindow);
  CHECK(kind_of([] { parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: 1985\n\n", kOptions); }) ==
        ErrorKind::EmptyBody);
  CHECK(kind_of([] { parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: 1985\n\n \n\t\n", kOptions); }) ==
        ErrorKind::EmptyBody);
  CHECK(kind_of([] { parse_sample("#CITY: MTREY\n#YEAR: 1985\n\nx\n", kOptions); }) ==
        ErrorKind::MissingHeaderKey);
  CHECK(kind_of([] { parse_sample("#CITY: ROMA\n#FIELD: A09\n#YEAR: 1985\n\nx\n", kOptions); }) ==
        ErrorKind::UnknownCityCode);
  CHECK(kind_of([] { parse_sample("#CITY: MTREY\n#FIELD: Z09\n#YEAR: 1985\n\nx\n", kOptions); }) ==
        ErrorKind::UnknownFieldCode);
  CHECK(kind_of([] { parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: later\n\nx\n", kOptions); }) ==
        ErrorKind::MalformedHeader);
}

TEST_CASE("a waiver admits an out-of-window year") {
  const auto s = parse_sample(
      "#CITY: MTREY\n#FIELD: A09\n#YEAR: 1970\n#WAIVER: yes\n\nx\n", kOptions);
  CHECK(s.metadata.waiver);
  CHECK(s.metadata.year == 1970);
  CHECK(kind_of([] {
          parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: 1970\n#WAIVER: no\n\nx\n", kOptions);
        }) == ErrorKind::YearOutOfWindow);
}

TEST_CASE("sample ids come from the header, the fallback, or the content") {
  const std::string body = "#CITY: LIMA\n#FIELD: n01\n#YEAR: 1980\n\ncuento\n";
  CHECK(parse_sample("#ID: x1\n" + body, kOptions, "file").metadata.id == "x1");
  CHECK(parse_sample(body, kOptions, "file").metadata.id == "file");
  const auto a = parse_sample(body, kOptions).metadata.id;
  CHECK(a == parse_sample(body, kOptions).metadata.id);
  CHECK(a != parse_sample(body + "otro\n", kOptions).metadata.id);
}

TEST_CASE("serialize then parse is the identity on metadata") {
  testing::Rng rng(11);
  const auto codes = CityRegistry::standard().codes();
  for (int trial = 0; trial < 200; ++trial) {
    RawSample s = parse_sample("#CITY: MTREY\n#FIELD: A09\n#YEAR: 1985\n\nx\n", kOptions, "seed");
    s.metadata.id = "id-" + std::to_string(trial);
    s.metadata.city = CityCode::parse(codes[testing::uniform(rng, 0, codes.size() - 1)],
                                      kOptions.cities);
    s.metadata.field = testing::random_field(rng);
    s.metadata.area = static_cast<Area>(testing::uniform(rng, 0, 2));
    s.metadata.waiver = testing::uniform(rng, 0, 1) == 1;
    s.metadata.year = s.metadata.waiver ? 1900 + static_cast<int>(testing::uniform(rng, 0, 120))
                                        : 1979 + static_cast<int>(testing::uniform(rng, 0, 10));
    s.metadata.note = trial % 3 == 0 ? "" : "nota " + std::to_string(trial);
    s.body = "texto " + std::to_string(trial) + "\n\nmas texto\n";
    const RawSample back = parse_sample(serialize_sample(s), kOptions);
    CHECK(back.metadata == s.metadata);
    CHECK(back.body == s.body);
  }
}

TEST_CASE("sample size verdicts") {
  CHECK(validate_sample_size(2000, 0.02) == SizeVerdict::Ok);
  CHECK(validate_sample_size(2040, 0.02) == SizeVerdict::Ok);
  CHECK(validate_sample_size(1960, 0.02) == SizeVerdict::Ok);
  CHECK(validate_sample_size(2041, 0.02) == SizeVerdict::Warn);
  CHECK(validate_sample_size(2080, 0.02) == SizeVerdict::Warn);
  CHECK(validate_sample_size(2081, 0.02) == SizeVerdict::Reject);
  CHECK(validate_sample_size(1500, 0.02) == SizeVerdict::Reject);
  CHECK(validate_sample_size(2000, 0.0) == SizeVerdict::Ok);
  CHECK(validate_sample_size(2001, 0.0) == SizeVerdict::Reject);
  CHECK(kind_of([] { validate_sample_size(2000, 0.6); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { validate_sample_size(2000, -0.1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("sample size verdict agrees with integer arithmetic") {
  // |n - 2000| * 100 <= 2000 * pct, compared exactly in integers.
  for (int pct = 0; pct <= 50; pct += 7) {
    const double tol = pct / 100.0;
    for (std::size_t n = 0; n <= 4000; n += 13) {
      const long diff = std::labs(static_cast<long>(n) - 2000) * 100;
      const SizeVerdict expected = diff <= 2000L * pct       ? SizeVerdict::Ok
                                   : diff <= 2 * 2000L * pct ? SizeVerdict::Warn
                                                             : SizeVerdict::Reject;
      CAPTURE(n);
      CAPTURE(pct);
      CHECK(validate_sample_size(n, tol) == expected);
    }
  }
}

TEST_CASE("catalog rejects duplicate ids") {
  const auto a = parse_sample("#ID: same\n#CITY: MTREY\n#FIELD: A09\n#YEAR: 1985\n\nx\n", kOptions);
  const auto b = parse_sample("#ID: same\n#CITY: LIMA\n#FIELD: A14\n#YEAR: 1985\n\ny\n", kOptions);
  const std::vector<RawSample> samples{a, b};
  CHECK(kind_of([&] { build_catalog(std::span<const RawSample>(samples)); }) ==
        ErrorKind::DuplicateSampleId);
}

TEST_CASE("empty catalog") {
  const auto catalog = build_catalog(std::span<const SampleMetadata>{});
  CHECK(catalog.size() == 0);
  const auto totals = catalog.field_totals();
  CHECK(std::accumulate(totals.begin(), totals.end(), std::size_t{0}) == 0);
}

TEST_CASE("catalog of the published matrix") {
  const auto matrix =
      parse_sources_matrix(testing::read_text(std::string(CORPFREQ_DATA_DIR) + "/published_sources.tsv"));
  const auto registry = CityRegistry::standard();
  const auto metadata = expand_matrix(matrix, registry);
  const auto catalog = build_catalog(metadata);
  CHECK(catalog.size() == 500);
  const std::array<std::size_t, kFieldCount> expected{18, 13, 12, 5,  28, 27, 35, 43,
                                                      70, 23, 21, 47, 8,  88, 62};
  CHECK(catalog.field_totals() == expected);
  CHECK(catalog.cell("MTREY", FieldCode::parse("A12")) == 25);
  CHECK(catalog.cell("TIJUA", FieldCode::parse("A12")) == 0);
}

TEST_CASE("catalog is independent of input order and cells sum to the sample count") {
  const auto matrix =
      parse_sources_matrix(testing::read_text(std::string(CORPFREQ_DATA_DIR) + "/published_sources.tsv"));
  auto metadata = expand_matrix(matrix, CityRegistry::standard());
  const auto reference = build_catalog(metadata);
  testing::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(metadata.begin(), metadata.end(), rng);
    const std::size_t keep = testing::uniform(rng, 0, metadata.size());
    const std::span<const SampleMetadata> subset(metadata.data(), keep);
    const auto catalog = build_catalog(subset);
    std::size_t cells = 0;
    for (const auto& [cell, n] : catalog.cell_counts()) cells += n;
    CHECK(cells == keep);
    std::vector<SampleMetadata> reversed(subset.rbegin(), subset.rend());
    CHECK(build_catalog(reversed) == catalog);
  }
  std::shuffle(metadata.begin(), metadata.end(), rng);
  CHECK(build_catalog(metadata) == reference);
}

}  // TEST_SUITE
