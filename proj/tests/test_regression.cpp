#include "letterfractal/regression.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracle/naive_fit.hpp"

namespace letterfractal {
namespace {

PointSeries series(std::vector<Point> pts) { return PointSeries{std::move(pts), ""}; }

TEST(LinearFitTest, ExactLine) {
  const auto fit = linear_fit(series({{0, 1}, {1, 3}, {2, 5}}));
  EXPECT_DOUBLE_EQ(fit.slope, 2.0);
  EXPECT_DOUBLE_EQ(fit.intercept, 1.0);
  EXPECT_DOUBLE_EQ(fit.r_squared, 1.0);
  EXPECT_EQ(fit.n_points, 3u);
}

TEST(LinearFitTest, ConstantYHasZeroSlopeAndZeroR2) {
  const auto fit = linear_fit(series({{1, 2}, {2, 2}, {3, 2}}));
  EXPECT_EQ(fit.slope, 0.0);
  EXPECT_EQ(fit.intercept, 2.0);
  EXPECT_EQ(fit.r_squared, 0.0);
}

TEST(LinearFitTest, DegenerateSeries) {
  for (const auto& pts : {std::vector<Point>{}, std::vector<Point>{{1, 1}},
                          std::vector<Point>{{2, 1}, {2, 5}, {2, 7}}}) {
    try {
      linear_fit(series(pts));
      FAIL() << "expected DegenerateSeries";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateSeries);
    }
  }
}

TEST(LinearFitTest, LabelIsCarriedIntoErrors) {
  try {
    linear_fit(PointSeries{{{1, 1}}, "my series"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("my series"), std::string::npos);
  }
}

TEST(LinearFitTest, ThreePointLogLogPercentages) {
  // (50, 33.33, 16.67)% at i = 1..3, log F against log(1/i).
  const auto fit = fit_transformed(series({{1.0, 50.0}, {0.5, 100.0 / 3.0}, {1.0 / 3.0, 100.0 / 6.0}}),
                                   Transform::LogLog);
  EXPECT_NEAR(fit.slope, 0.955307917036524, 1e-12);
  EXPECT_NEAR(fit.r_squared, 0.912613216352663, 1e-12);
  EXPECT_EQ(fit.transform, Transform::LogLog);
}

TEST(LogTransformTest, LogLog) {
  const auto out = log_transform(series({{1, 10}, {10, 100}}), Transform::LogLog);
  ASSERT_EQ(out.series.points.size(), 2u);
  EXPECT_EQ(out.dropped, 0u);
  EXPECT_EQ(out.series.points[0], (Point{0, 1}));
  EXPECT_EQ(out.series.points[1], (Point{1, 2}));
}

TEST(LogTransformTest, SemilogYDropsZeros) {
  const auto out = log_transform(series({{1, 0}, {2, 10}}), Transform::SemilogY);
  ASSERT_EQ(out.series.points.size(), 1u);
  EXPECT_EQ(out.dropped, 1u);
  EXPECT_EQ(out.series.points[0], (Point{2, 1}));
}

TEST(LogTransformTest, SemilogXOnlyTouchesX) {
  const auto out = log_transform(series({{100, 0}, {-1, 5}}), Transform::SemilogX);
  ASSERT_EQ(out.series.points.size(), 1u);
  EXPECT_EQ(out.series.points[0], (Point{2, 0}));
  EXPECT_EQ(out.dropped, 1u);
}

TEST(LogTransformTest, AllPointsDropped) {
  try {
    log_transform(series({{0, 0}}), Transform::LogLog);
    FAIL() << "expected AllPointsDropped";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllPointsDropped);
  }
}

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

class RandomSeries : public ::testing::Test {
 protected:
  std::vector<Point> random_points(std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<Point> pts(n);
    for (auto& p : pts) p = {d(rng_), d(rng_)};
    return pts;
  }
  std::mt19937_64 rng_{20240521};
};

TEST_F(RandomSeries, MatchesGridSearchMinimizer) {
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = random_points(4, -5, 5);
    const auto fit = linear_fit(std::span<const Point>(pts));
    std::vector<std::pair<double, double>> raw;
    for (auto p : pts) raw.push_back({p.x, p.y});
    // Start the grid well away from the closed form.
    const auto [m, b] = oracle::grid_minimize(raw, fit.slope + 3.7, fit.intercept - 2.9, 20.0);
    EXPECT_NEAR(fit.slope, m, 5e-4);
    EXPECT_NEAR(fit.intercept, b, 5e-4);
  }
}

TEST_F(RandomSeries, MatchesNaiveNormalEquations) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(3 + trial % 20, -100, 100);
    const auto fit = linear_fit(std::span<const Point>(pts));
    std::vector<std::pair<double, double>> raw;
    for (auto p : pts) raw.push_back({p.x, p.y});
    const auto ref = oracle::naive_fit(raw);
    EXPECT_NEAR(fit.slope, ref.slope, 1e-12 * std::max(1.0, std::abs(ref.slope)));
    EXPECT_NEAR(fit.intercept, ref.intercept, 1e-10 * std::max(1.0, std::abs(ref.intercept)));
    EXPECT_NEAR(fit.r_squared, ref.r2, 1e-12);
    // R² recomputed from residuals.
    EXPECT_NEAR(residual_r_squared(pts, fit), fit.r_squared, 1e-12);
    EXPECT_GE(fit.r_squared, 0.0);
    EXPECT_LE(fit.r_squared, 1.0);
  }
}

TEST_F(RandomSeries, LogBaseInvariance) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = random_points(6, 0.01, 50);
    PointSeries s{pts, ""};
    for (auto mode : {Transform::SemilogX, Transform::SemilogY, Transform::LogLog}) {
      const auto base10 = fit_transformed(s, mode);
      std::vector<Point> natural;
      for (auto p : pts) {
        natural.push_back({mode == Transform::SemilogY ? p.x : std::log(p.x),
                           mode == Transform::SemilogX ? p.y : std::log(p.y)});
      }
      const auto ln = linear_fit(std::span<const Point>(natural));
      EXPECT_NEAR(base10.r_squared, ln.r_squared, 1e-12);
      if (mode == Transform::LogLog) {
        EXPECT_NEAR(base10.slope, ln.slope, 1e-12 * std::max(1.0, std::abs(ln.slope)));
      }
    }
  }
}

TEST_F(RandomSeries, ReversalLeavesR2Unchanged) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = random_points(8, 1, 26);
    std::vector<Point> reversed;
    for (auto p : pts) reversed.push_back({27.0 - p.x, p.y});
    for (auto mode : {Transform::Linear, Transform::SemilogY}) {
      EXPECT_NEAR(fit_transformed(PointSeries{pts, ""}, mode).r_squared,
                  fit_transformed(PointSeries{reversed, ""}, mode).r_squared, 1e-12);
    }
  }
}

TEST_F(RandomSeries, ScalingYKeepsLogLogSlopeAndR2) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = random_points(7, 0.1, 30);
    for (double k : {2.0, 7.0, 1000.0}) {
      std::vector<Point> scaled;
      for (auto p : pts) scaled.push_back({p.x, k * p.y});
      for (auto mode : {Transform::Linear, Transform::SemilogX, Transform::SemilogY, Transform::LogLog}) {
        const auto a = fit_transformed(PointSeries{pts, ""}, mode);
        const auto b = fit_transformed(PointSeries{scaled, ""}, mode);
        EXPECT_NEAR(a.r_squared, b.r_squared, 1e-12);
        if (mode == Transform::LogLog) {
          EXPECT_NEAR(a.slope, b.slope, 1e-12);
        }
      }
    }
  }
}

}  // namespace
}  // namespace letterfractal
