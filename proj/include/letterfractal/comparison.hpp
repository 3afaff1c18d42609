#pragma once

// Cross-manuscript comparison ordered by manuscript length.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "letterfractal/dimensions.hpp"
#include "letterfractal/error.hpp"

namespace letterfractal {

// Average ranks (1-based), ties share the mean of their positions.
inline std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

struct RankCorrelation {
  std::optional<double> rho;  // empty when degenerate
  std::size_t n = 0;
  bool degenerate = true;
};

// Spearman correlation. Fewer than 3 pairs, or a constant side, is flagged
// degenerate and carries no value.
inline RankCorrelation spearman(std::span<const double> a, std::span<const double> b) {
  RankCorrelation out;
  out.n = a.size();
  if (a.size() != b.size() || a.size() < 3) return out;
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(ra.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t k = 0; k < ra.size(); ++k) {
    sab += (ra[k] - ma) * (rb[k] - mb);
    saa += (ra[k] - ma) * (ra[k] - ma);
    sbb += (rb[k] - mb) * (rb[k] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return out;
  out.rho = sab / std::sqrt(saa * sbb);
  out.degenerate = false;
  return out;
}

struct ComparisonTable {
  std::vector<DimensionReport> rows;  // by total_letters, then id
  RankCorrelation fractal_vs_zipf;
};

inline ComparisonTable compare_reports(std::vector<DimensionReport> reports) {
  if (reports.size() < 2) {
    throw Error(ErrorCode::InvalidInput, "comparison needs at least 2 manuscripts, got " +
                                             std::to_string(reports.size()));
  }
  std::set<std::string> seen;
  for (const auto& r : reports) {
    if (!seen.insert(r.manuscript_id).second) {
      throw Error(ErrorCode::DuplicateManuscript, r.manuscript_id);
    }
  }
  std::sort(reports.begin(), reports.end(), [](const DimensionReport& a, const DimensionReport& b) {
    if (a.total_letters != b.total_letters) return a.total_letters < b.total_letters;
    return a.manuscript_id < b.manuscript_id;
  });
  std::vector<double> df;
  std::vector<double> dz;
  for (const auto& r : reports) {
    df.push_back(r.fractal_dimension);
    dz.push_back(r.zipf_dimension);
  }
  ComparisonTable table;
  table.fractal_vs_zipf = spearman(df, dz);
  table.rows = std::move(reports);
  return table;
}

}  // namespace letterfractal
