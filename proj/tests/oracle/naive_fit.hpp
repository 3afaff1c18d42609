#pragma once

// Test-only reference fits, written independently of the library: raw-sum
// normal equations in long double, R² as 1 - SSR/SST, natural logarithms, and
// Zipf ranks found by repeated minimum selection instead of sorting.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

struct Line {
  double slope;
  double intercept;
  double r2;
};

inline Line naive_fit(const std::vector<std::pair<double, double>>& pts) {
  long double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    n += 1;
    sx += x;
    sy += y;
    sxx += static_cast<long double>(x) * x;
    sxy += static_cast<long double>(x) * y;
  }
  const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const long double intercept = (sy - slope * sx) / n;
  const long double mean = sy / n;
  long double ssr = 0, sst = 0;
  for (auto [x, y] : pts) {
    const long double r = y - (intercept + slope * x);
    ssr += r * r;
    sst += (y - mean) * (y - mean);
  }
  const long double r2 = sst == 0 ? 0 : 1 - ssr / sst;
  return {static_cast<double>(slope), static_cast<double>(intercept), static_cast<double>(r2)};
}

// Exhaustive search of summed squared residuals on a grid centred at a
// starting guess, refined by successive halving of the step.
inline std::pair<double, double> grid_minimize(const std::vector<std::pair<double, double>>& pts,
                                               double slope0, double intercept0, double span) {
  auto sse = [&](double m, double b) {
    double s = 0;
    for (auto [x, y] : pts) s += (y - m * x - b) * (y - m * x - b);
    return s;
  };
  double best_m = slope0, best_b = intercept0, step = span / 20;
  for (int round = 0; round < 40; ++round) {
    double cm = best_m, cb = best_b, cs = sse(cm, cb);
    for (int a = -20; a <= 20; ++a) {
      for (int b = -20; b <= 20; ++b) {
        const double m = best_m + a * step, c = best_b + b * step;
        const double s = sse(m, c);
        if (s < cs) {
          cs = s;
          cm = m;
          cb = c;
        }
      }
    }
    best_m = cm;
    best_b = cb;
    step /= 2;
  }
  return {best_m, best_b};
}

// Ascending-frequency positions (1-based), ties to the earlier letter.
inline std::array<int, 26> ascending_ranks(const std::array<std::uint64_t, 26>& counts) {
  std::array<int, 26> rank{};
  std::array<bool, 26> used{};
  for (int pos = 1; pos <= 26; ++pos) {
    int pick = -1;
    for (int k = 0; k < 26; ++k) {
      if (used[k]) continue;
      if (pick < 0 || counts[k] < counts[pick]) pick = k;
    }
    used[pick] = true;
    rank[pick] = pos;
  }
  return rank;
}

struct Analysis {
  Line fractal;      // ln(count) vs ln(1/i)
  Line zipf_slope;   // percent vs ascending rank
  Line zipf_dim;     // ln(count) vs ln(1/n)
  double direct_r2[3];
};

// Works on raw counts for the log fits; slopes and R² must agree with
// percentage-based fits because percentages only shift the log intercept.
inline Analysis analyze_counts(const std::array<std::uint64_t, 26>& counts, bool ascending = true) {
  double total = 0;
  for (auto c : counts) total += static_cast<double>(c);
  auto rank = ascending_ranks(counts);
  if (!ascending) {
    for (auto& r : rank) r = 27 - r;
  }
  std::vector<std::pair<double, double>> fractal, slope, dim, a, b, c;
  for (int k = 0; k < 26; ++k) {
    const double cnt = static_cast<double>(counts[k]);
    const double pct = 100.0 * cnt / total;
    const double n = rank[k];
    slope.push_back({n, pct});
    a.push_back({std::log(n), pct});
    if (cnt > 0) {
      fractal.push_back({std::log(1.0 / (k + 1)), std::log(cnt)});
      dim.push_back({std::log(1.0 / n), std::log(cnt)});
      b.push_back({n, std::log(pct)});
      c.push_back({std::log(n), std::log(pct)});
    }
  }
  Analysis out{naive_fit(fractal), naive_fit(slope), naive_fit(dim), {}};
  out.direct_r2[0] = naive_fit(a).r2;
  out.direct_r2[1] = naive_fit(b).r2;
  out.direct_r2[2] = naive_fit(c).r2;
  return out;
}

}  // namespace oracle
