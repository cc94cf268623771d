#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>
#include <string>

#include "oracles.hpp"
#include "sonar/harness.hpp"

using namespace sonar;

namespace {

bool contains_line(const std::string& text, const std::string& line) {
  return text.find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Rational, Reduction) {
  EXPECT_EQ(Rational::reduced(9, 8).str(), "9/8");
  EXPECT_EQ(Rational::reduced(6, 6).str(), "1");
  EXPECT_EQ(Rational::reduced(4, 2).str(), "2");
  EXPECT_EQ(Rational::reduced(6, 4), (Rational{3, 2}));
}

TEST(Comparison, EveryRowVerifiesAndMeetsItsContract) {
  const auto table = run_comparison(13, 16);
  std::set<std::string> names;
  for (const auto& r : table.rows) {
    names.insert(r.construction);
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.density, Rational::reduced(r.n, r.m));
    std::int64_t x = 0;
    for (const auto& [k, v] : r.params)
      if (k == "p" || k == "q") x = v;
    ASSERT_GT(x, 0) << r.construction;
    EXPECT_EQ(expected_dimensions(r.construction, x), std::make_pair(r.m, r.n)) << r.construction;
  }
  EXPECT_EQ(names.size(), 9u);
  EXPECT_TRUE(std::is_sorted(table.rows.begin(), table.rows.end(), [](const auto& a, const auto& b) {
    return std::tie(a.construction, a.m, a.n, a.params) < std::tie(b.construction, b.m, b.n, b.params);
  }));
  // 2 is prime and a prime power but several constructions need more room.
  EXPECT_EQ(table.skipped.size(), 4u);
}

TEST(Comparison, RowCounts) {
  const auto table = run_comparison(7, 9);
  auto count = [&](const std::string& c) {
    return std::count_if(table.rows.begin(), table.rows.end(), [&](const auto& r) { return r.construction == c; });
  };
  // primes 2,3,5,7; prime powers 2,3,4,5,7,8,9
  EXPECT_EQ(count("quadratic"), 3);
  EXPECT_EQ(count("welch-exp"), 4);
  EXPECT_EQ(count("welch-log"), 4);
  EXPECT_EQ(count("ruzsa-fold-mod-p"), 3);
  EXPECT_EQ(count("shift"), 7);
  EXPECT_EQ(count("golomb"), 6);
  EXPECT_EQ(count("bose-fold"), 7);
  EXPECT_GE(run_comparison(3, 3).rows.size(), 6u);
}

TEST(Comparison, ConfigOverridesElements) {
  const auto cfg = comparison_config_from_json(io::parse(R"({
    "quadratic": {"a": 2, "b": 1, "c": 3},
    "overrides": {"bose-fold": {"9": {"theta": 6, "alpha": 6}}}
  })"));
  const auto csv = to_csv(run_comparison(5, 9, cfg).rows);
  EXPECT_TRUE(contains_line(csv, R"(bose-fold,"q=9;theta=6;alpha=6",8,9,9/8,true)")) << csv;
  EXPECT_TRUE(contains_line(csv, R"(quadratic,"p=5;a=2;b=1;c=3",5,6,6/5,true)")) << csv;

  EXPECT_THROW(comparison_config_from_json(io::parse(R"({"overrides": {"shift": {"x": {"alpha": 1}}}})")), Error);
  EXPECT_THROW(comparison_config_from_json(io::parse(R"({"welch_s": "two"})")), Error);
}

TEST(Comparison, InvalidOverrideIsSkippedNotFatal) {
  ComparisonConfig cfg;
  cfg.overrides["welch-log"][7]["alpha"] = 2;  // 2 has order 3 mod 7
  const auto table = run_comparison(7, 3, cfg);
  EXPECT_TRUE(std::none_of(table.rows.begin(), table.rows.end(), [](const auto& r) {
    return r.construction == "welch-log" && r.m == 6;
  }));
  EXPECT_TRUE(std::any_of(table.skipped.begin(), table.skipped.end(),
                          [](const auto& s) { return s.rfind("welch-log at 7", 0) == 0; }));
}

TEST(Comparison, Deterministic) {
  EXPECT_EQ(to_csv(run_comparison(13, 16).rows), to_csv(run_comparison(13, 16).rows));
}

TEST(Comparison, Bounds) {
  EXPECT_THROW(run_comparison(2, 16), Error);
  EXPECT_THROW(run_comparison(13, 2), Error);
}

TEST(Export, EmptyCsvIsHeaderOnly) { EXPECT_EQ(to_csv({}), "construction,params,m,n,density,verified\n"); }

TEST(Export, JsonRoundTrip) {
  const auto rows = run_comparison(7, 8).rows;
  EXPECT_EQ(rows_from_json(io::parse(render(rows, ExportFormat::Json))), rows);
  EXPECT_THROW(rows_from_json(io::parse(R"([{"construction": "x"}])")), Error);
}

TEST(Export, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "sonar_export_test.csv";
  const auto rows = run_comparison(5, 5).rows;
  export_rows(rows, ExportFormat::Csv, path.string());
  EXPECT_EQ(io::read_text(path.string()), to_csv(rows));
  std::filesystem::remove(path);
}
