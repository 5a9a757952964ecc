#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "corpfreq/lexicon_compare.hpp"
#include "corpfreq/report.hpp"
#include "doctest.h"
#include "golden.hpp"
#include "synthetic_corpus.hpp"

namespace fs = std::filesystem;
using namespace corpfreq;

namespace {

const std::string kCli = CORPFREQ_CLI;
const std::string kData = CORPFREQ_DATA_DIR;

struct Result {
  int status;
  std::string err;
};

Result cli(const std::string& args, const fs::path& scratch) {
  const auto err_file = scratch / "stderr.txt";
  const std::string cmd = "'" + kCli + "' " + args + " >/dev/null 2>'" + err_file.string() + "'";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, testing::read_text(err_file.string())};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("corpfreq-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("unknown subcommand is a usage error") {
  TempDir dir;
  const auto r = cli("frobnicate", dir.path);
  CHECK(r.status == 2);
  CHECK(r.err.find("subcommand") != std::string::npos);
  CHECK(cli("", dir.path).status == 2);
  CHECK(cli("analyze --bogus-flag", dir.path).status == 2);
  CHECK(cli("analyze -i '" + kData + "/samples'", dir.path).status == 2);  // no --out
}

TEST_CASE("analyze on the toy corpus") {
  TempDir dir;
  const auto out = dir.path / "out";
  const auto r = cli("analyze -i '" + kData + "/samples' -o '" + out.string() + "'", dir.path);
  CHECK(r.status == 0);
  CHECK(testing::read_text((out / "rank.tsv").string()) ==
        testing::read_text(std::string(CORPFREQ_GOLDEN_DIR) + "/toy_rank.tsv"));
  for (const auto& e : fs::directory_iterator(out)) {
    CHECK(e.path().filename().string().front() != '.');
  }
}

TEST_CASE("repeated runs give identical files") {
  TempDir dir;
  const std::string base = "analyze -i '" + kData + "/samples' --top-k 50 -o '";
  REQUIRE(cli(base + (dir.path / "a").string() + "'", dir.path).status == 0);
  REQUIRE(cli(base + (dir.path / "b").string() + "' --serial", dir.path).status == 0);
  for (const auto& e : fs::directory_iterator(dir.path / "a")) {
    CHECK(testing::read_text(e.path().string()) ==
          testing::read_text((dir.path / "b" / e.path().filename()).string()));
  }
}

TEST_CASE("validation failures exit 1 and leave prior outputs alone") {
  TempDir dir;
  const auto out = dir.path / "out";
  REQUIRE(cli("analyze -i '" + kData + "/samples' -o '" + out.string() + "'", dir.path).status == 0);
  const auto before = testing::read_text((out / "rank.tsv").string());

  fs::create_directories(dir.path / "bad");
  std::ofstream(dir.path / "bad" / "x.txt") << "#CITY: ROMA\n#FIELD: A09\n#YEAR: 1985\n\nhola\n";
  const auto r = cli("analyze -i '" + (dir.path / "bad").string() + "' -o '" + out.string() + "'", dir.path);
  CHECK(r.status == 1);
  CHECK(r.err.find("UnknownCityCode") != std::string::npos);
  CHECK(testing::read_text((out / "rank.tsv").string()) == before);

  CHECK(cli("analyze -i '" + kData + "/samples' --cutoffs 10,5 -o '" + out.string() + "'", dir.path)
            .status == 1);
  CHECK(cli("analyze -i '" + kData + "/samples' --city ROMA -i '" + (dir.path / "bad").string() +
                "' -o '" + out.string() + "'",
            dir.path)
            .status == 0);
}

TEST_CASE("ingest of the published sources table") {
  TempDir dir;
  const auto matrix = parse_sources_matrix(testing::read_text(kData + "/published_sources.tsv"));
  const auto metadata = expand_matrix(matrix, CityRegistry::standard());
  const auto corpus = testing::make_corpus({.samples = 1, .words_per_sample = 2000, .seed = 3});
  const std::string body = corpus[0].raw.body;
  fs::create_directories(dir.path / "samples");
  for (const auto& m : metadata) {
    RawSample s{m, body};
    std::ofstream(dir.path / "samples" / (m.id + ".txt"), std::ios::binary) << serialize_sample(s);
  }
  const auto out = dir.path / "out";
  const auto r = cli("ingest -i '" + (dir.path / "samples").string() + "' -o '" + out.string() + "'",
                     dir.path);
  CHECK(r.status == 0);
  const auto catalog = parse_sources_matrix(testing::read_text((out / "catalog.tsv").string()));
  CHECK(catalog == matrix);
  CHECK(catalog.grand_total == 500);

  const auto rep = cli("report -i '" + (dir.path / "samples").string() + "' -o '" + out.string() + "'",
                       dir.path);
  CHECK(rep.status == 0);
  CHECK(testing::read_text((out / "sources.tsv").string()) ==
        testing::read_text(kData + "/published_sources.tsv"));
}

TEST_CASE("every subcommand writes re-readable files") {
  TempDir dir;
  const auto out = dir.path / "out";
  const std::string in = " -i '" + kData + "/samples' -o '" + out.string() + "'";
  CHECK(cli("significance --include-skewed" + in, dir.path).status == 0);
  CHECK(cli("categories --lexicon '" + kData + "/lexicon_example.tsv' --include-skewed" + in, dir.path)
            .status == 0);
  CHECK(cli("categories" + in, dir.path).status == 2);  // --lexicon is required
  CHECK(cli("compare --reference '" + kData + "/reference_example.txt' --top-n 5" + in, dir.path)
            .status == 0);
  CHECK(cli("report" + in, dir.path).status == 0);
  const auto overlap = parse_overlap(testing::read_text((out / "overlap.txt").string()));
  CHECK(overlap.top_n == 5);
  CHECK(overlap.reference_size == 10);
  const auto sig = testing::read_text((out / "significance.tsv").string());
  CHECK(std::count(sig.begin(), sig.end(), '\n') == 18);
  CHECK(parse_chart_data(testing::read_text((out / "coverage_chart.csv").string())).cutoffs.size() == 4);
}
