#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "support/fixture_a.hpp"
#include "support/naive_oracle.hpp"
#include "support/random_dataset.hpp"
#include "warnet/econ.hpp"
#include "warnet/error.hpp"

namespace warnet {
namespace {

using namespace testing;

TemporalMultiGraph fixture_graph() { return TemporalMultiGraph::build(fixture_a()); }

ErrorKind load_error(const std::string& text) {
  std::istringstream in(text);
  try {
    load_gdp(in);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "loaded: " << text;
  return ErrorKind::kIo;
}

// Same generator as tests/oracles/dip_correlation.py.
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

OverlaySeries oracle_series(std::uint64_t seed, int count) {
  SplitMix64 rng{seed};
  OverlaySeries s;
  int year = 1850;
  for (int i = 0; i < count; ++i) {
    const auto a = rng.next();
    const auto b = rng.next();
    const auto c = rng.next();
    year += c % 10 ? 1 : 2;
    const double gdp = static_cast<double>(500 + a % 20000);
    s.rows.push_back({year, gdp, gdp, static_cast<std::int64_t>(b % 9)});
  }
  return s;
}

TEST(LoadGdp, FixtureFile) {
  std::ifstream in(data_path("fixture_a/gdp.csv"));
  ASSERT_TRUE(in);
  const auto series = load_gdp(in, AliasMap({{"Kingdom of A", "A"}}));
  ASSERT_EQ(series.size(), 2u);
  EXPECT_EQ(series[0].entity, "A");
  EXPECT_EQ(series[0].points.size(), 7u);
  EXPECT_EQ(series[0].points.at(2000), 1100.0);
  EXPECT_FALSE(series[0].points.contains(1849));
  EXPECT_EQ(series[1].entity, "B");
  EXPECT_EQ(series[1].points, (std::map<int, double>{{2000, 500.0}}));
}

TEST(LoadGdp, Errors) {
  EXPECT_EQ(load_error(""), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("name,year,gdp\n"), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,1900,0\n"), ErrorKind::kNonPositiveGdp);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,1900,-3\n"), ErrorKind::kNonPositiveGdp);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,1900,abc\n"), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,19x0,5\n"), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,1900,5,6\n"), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,1900,5\nA,1900,6\n"), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\nA,1900,inf\n"), ErrorKind::kMalformedRow);
  EXPECT_EQ(load_error("country,year,gdp_per_capita\n,1900,5\n"), ErrorKind::kMalformedRow);
}

TEST(LoadGdp, OutOfRangeYearsSkippedBeforeValueChecks) {
  std::istringstream in("country,year,gdp_per_capita\nA,1700,-1\nA,2017,0\nA,1850,2\n");
  const auto series = load_gdp(in);
  ASSERT_EQ(series.size(), 1u);
  EXPECT_EQ(series[0].points, (std::map<int, double>{{1850, 2.0}}));
}

TEST(Overlay, SingleYear) {
  const auto g = fixture_graph();
  const auto s = overlay(g, {"A", {{1702, 100.0}}}, 10.0);
  ASSERT_EQ(s.rows.size(), 1u);
  EXPECT_EQ(s.rows[0].year, 1702);
  EXPECT_EQ(s.rows[0].gdp_scaled, 10.0);
  EXPECT_EQ(s.rows[0].wars_last3, 4);
  EXPECT_EQ(s.rows[0].gdp_scaled * s.scale, s.rows[0].gdp);
}

TEST(Overlay, Errors) {
  const auto g = fixture_graph();
  try {
    overlay(g, {"A", {{1702, 100.0}}}, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonPositiveScale);
  }
  EXPECT_THROW(overlay(g, {"A", {}}, -1.0), Error);
  EXPECT_THROW(overlay(g, {"A", {}}, NAN), Error);
  try {
    overlay(g, {"Nowhere", {}}, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownEntity);
  }
}

TEST(Overlay, ActiveWarCountBeforeHorizon) {
  const auto g = fixture_graph();
  EXPECT_EQ(active_war_count(g, kA, 1400), 0);
  EXPECT_EQ(overlay(g, {"A", {{1501, 5.0}}}).rows[0].wars_last3, 0);
}

class RandomOverlay : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomOverlay, MatchesNaiveAndScalesExactly) {
  const Dataset d = random_dataset(GetParam());
  const auto g = TemporalMultiGraph::build(d);
  Rng rng(GetParam() + 17);
  const auto e = static_cast<EntityId>(rng.uniform(0, static_cast<int>(d.entities.size()) - 1));
  GdpSeries series{d.entities[static_cast<std::size_t>(e)].canonical_name, {}};
  for (int i = 0; i < 40; ++i) {
    series.points[rng.uniform(1490, 2020)] = 1.0 + rng.uniform(0, 1 << 20) / 64.0;
  }
  const double pow2 = std::ldexp(1.0, rng.uniform(-6, 12));
  const auto s = overlay(g, series, pow2);
  const auto unscaled = overlay(g, series, 1.0);
  ASSERT_EQ(s.rows.size(), series.points.size());
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const auto& row = s.rows[i];
    EXPECT_EQ(row.wars_last3, naive::wars_last3(d, e, row.year)) << row.year;
    EXPECT_EQ(row.gdp_scaled * pow2, row.gdp);
    EXPECT_EQ(row.wars_last3, unscaled.rows[i].wars_last3);
    EXPECT_EQ(row.gdp, unscaled.rows[i].gdp);
    EXPECT_EQ(unscaled.rows[i].gdp_scaled, unscaled.rows[i].gdp);
  }
  for (double scale : {3.0, 7.0, 0.1, 1234.5}) {
    for (const auto& row : overlay(g, series, scale).rows) {
      const double back = row.gdp_scaled * scale;
      EXPECT_LE(std::fabs(back - row.gdp), std::fabs(row.gdp) * std::numeric_limits<double>::epsilon());
    }
  }
}

TEST_P(RandomOverlay, TrailingWarsShiftWithIntervals) {
  RandomDatasetLimits limits;
  limits.first_year = 1500;
  limits.last_year = 1990;
  Dataset d = random_dataset(GetParam(), limits);
  const auto g = TemporalMultiGraph::build(d);
  for (auto& w : d.wars) w.interval = {w.interval.start + 1, w.interval.end + 1};
  const auto shifted = TemporalMultiGraph::build(d);
  for (const auto& e : g.entities()) {
    GdpSeries series{e.canonical_name, {}};
    GdpSeries later{e.canonical_name, {}};
    for (int y = 1502; y <= 2000; ++y) {
      series.points[y] = 1.0;
      later.points[y + 1] = 1.0;
    }
    const auto a = overlay(g, series);
    const auto b = overlay(shifted, later);
    for (std::size_t i = 0; i < a.rows.size(); ++i) ASSERT_EQ(a.rows[i].wars_last3, b.rows[i].wars_last3);
  }
}

TEST_P(RandomOverlay, CorrelationIgnoresScaleAndTranslation) {
  auto s = oracle_series(GetParam(), 60);
  double base = 0.0;
  try {
    base = dip_correlation(s);
  } catch (const Error&) {
    GTEST_SKIP() << "degenerate draw";
  }
  EXPECT_GE(base, -1.0);
  EXPECT_LE(base, 1.0);
  auto scaled = s;
  scaled.scale = 250.0;
  for (auto& row : scaled.rows) row.gdp_scaled = row.gdp / scaled.scale;
  EXPECT_EQ(dip_correlation(scaled), base);
  auto shifted = s;
  for (auto& row : shifted.rows) row.wars_last3 += 5;
  EXPECT_NEAR(dip_correlation(shifted), base, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomOverlay, ::testing::Range<std::uint64_t>(1, 31));

TEST(DipCorrelation, MatchesReferenceValues) {
  const auto g = fixture_graph();
  std::ifstream in(data_path("fixture_a/gdp.csv"));
  const auto series = load_gdp(in);
  const auto fixture = overlay(g, series[0], 10.0);
  // tests/oracles/dip_correlation.py
  EXPECT_NEAR(dip_correlation(fixture), -0.62216493242054827, 1e-12);
  EXPECT_NEAR(dip_correlation(oracle_series(20240601, 120)), -0.11063988703579136, 1e-12);
}

TEST(DipCorrelation, PerfectlyAntiCorrelated) {
  OverlaySeries s;
  double gdp = 1000.0;
  const std::int64_t wars[] = {0, 3, 1, 4, 1, 5, 0, 2, 6, 5, 3};
  int year = 1900;
  for (auto w : wars) {
    gdp *= 1.0 + 0.02 - 0.01 * static_cast<double>(w);
    s.rows.push_back({year++, gdp, gdp, w});
  }
  EXPECT_NEAR(dip_correlation(s), -1.0, 1e-12);
}

TEST(DipCorrelation, Errors) {
  OverlaySeries s;
  s.rows = {{1900, 1.0, 1.0, 0}, {1901, 2.0, 2.0, 1}, {1902, 3.0, 3.0, 2}};
  try {
    dip_correlation(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInsufficientData);
  }
  s.rows.push_back({1904, 3.0, 3.0, 2});  // gap: still two pairs
  EXPECT_THROW(dip_correlation(s), Error);
  s.rows = {{1900, 1.0, 1.0, 2}, {1901, 2.0, 2.0, 2}, {1902, 3.0, 3.0, 2}, {1903, 1.0, 1.0, 2}};
  try {
    dip_correlation(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerateVariance);
  }
  s.rows = {{1900, 1.0, 1.0, 0}, {1901, 2.0, 2.0, 1}, {1902, 4.0, 4.0, 2}, {1903, 8.0, 8.0, 3}};
  EXPECT_THROW(dip_correlation(s), Error);  // constant relative change
}

}  // namespace
}  // namespace warnet
