#pragma once

// Closed-form simple least squares and the logarithmic coordinate transforms
// used by every fit in the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letterfractal/error.hpp"

namespace letterfractal {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct PointSeries {
  std::vector<Point> points;
  std::string label;
};

enum class Transform { Linear, SemilogX, SemilogY, LogLog };

inline std::string_view to_string(Transform t) {
  switch (t) {
    case Transform::Linear: return "linear";
    case Transform::SemilogX: return "semilog-x";
    case Transform::SemilogY: return "semilog-y";
    case Transform::LogLog: return "loglog";
  }
  return "linear";
}

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;
  Transform transform = Transform::Linear;

  double predict(double x) const { return intercept + slope * x; }
};

struct TransformedSeries {
  PointSeries series;
  std::size_t dropped = 0;
};

// Ordinary least squares of y on x. Constant-y input gives slope 0 and
// r_squared 0 rather than NaN.
inline FitResult linear_fit(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n < 2) {
    throw Error(ErrorCode::DegenerateSeries,
                "need at least 2 points, got " + std::to_string(n));
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - mean_x;
    const double dy = p.y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const bool all_x_equal = std::all_of(points.begin(), points.end(),
                                       [&](const Point& p) { return p.x == points.front().x; });
  if (all_x_equal || sxx == 0.0) {
    throw Error(ErrorCode::DegenerateSeries, "need at least 2 distinct x values");
  }

  FitResult fit;
  fit.n_points = n;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.slope = 0.0;
    fit.intercept = mean_y;
    fit.r_squared = 0.0;
  } else {
    fit.r_squared = std::clamp((sxy * sxy) / (sxx * syy), 0.0, 1.0);
  }
  return fit;
}

inline FitResult linear_fit(const PointSeries& series) {
  try {
    return linear_fit(std::span<const Point>(series.points));
  } catch (const Error& e) {
    if (series.label.empty()) throw;
    e.rethrow_with_context(series.label);
  }
}

// Base-10 log of x, y or both. Points whose transformed coordinate is not
// strictly positive are dropped and counted.
inline TransformedSeries log_transform(const PointSeries& series, Transform mode) {
  const bool log_x = mode == Transform::SemilogX || mode == Transform::LogLog;
  const bool log_y = mode == Transform::SemilogY || mode == Transform::LogLog;

  TransformedSeries out;
  out.series.label = series.label;
  out.series.points.reserve(series.points.size());
  for (const auto& p : series.points) {
    if ((log_x && !(p.x > 0.0)) || (log_y && !(p.y > 0.0))) {
      ++out.dropped;
      continue;
    }
    out.series.points.push_back({log_x ? std::log10(p.x) : p.x, log_y ? std::log10(p.y) : p.y});
  }
  if (out.series.points.empty()) {
    throw Error(ErrorCode::AllPointsDropped,
                (series.label.empty() ? std::string("series") : series.label) +
                    ": no point has positive coordinates for " + std::string(to_string(mode)));
  }
  return out;
}

// log_transform followed by linear_fit; the result records the transform.
inline FitResult fit_transformed(const PointSeries& series, Transform mode) {
  FitResult fit = mode == Transform::Linear ? linear_fit(series)
                                            : linear_fit(log_transform(series, mode).series);
  fit.transform = mode;
  return fit;
}

// Coefficient of determination recomputed from residuals, 1 - SSR/SST.
inline double residual_r_squared(std::span<const Point> points, const FitResult& fit) {
  if (points.empty()) return 0.0;
  double mean_y = 0.0;
  for (const auto& p : points) mean_y += p.y;
  mean_y /= static_cast<double>(points.size());
  double ssr = 0.0;
  double sst = 0.0;
  for (const auto& p : points) {
    const double r = p.y - fit.predict(p.x);
    ssr += r * r;
    sst += (p.y - mean_y) * (p.y - mean_y);
  }
  if (sst == 0.0) return 0.0;
  return 1.0 - ssr / sst;
}

}  // namespace letterfractal
