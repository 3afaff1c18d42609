#pragma once

// Letter-frequency analyses: percentage table, fractal dimension with its
// fractality degree, Zipf order, Zipf slope, Zipf dimension and the three
// direct semi-log / log-log fits.
//
// Alphabetical interval i runs A=1 .. Z=26. Zipf rank n is a letter's position
// in the frequency ordering; under the default ascending convention the
// rarest letter has n=1 and the most frequent n=26.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "letterfractal/corpus.hpp"
#include "letterfractal/error.hpp"
#include "letterfractal/regression.hpp"

namespace letterfractal {

struct FrequencyRow {
  char letter = 'A';
  int interval = 1;
  std::uint64_t count = 0;
  double percent = 0.0;  // F, in 0..100
};

struct FrequencyTable {
  std::array<FrequencyRow, kAlphabetSize> rows{};
  std::uint64_t total = 0;

  const FrequencyRow& row(char letter) const { return rows.at(LetterTally::index_of(letter)); }
  double percent(char letter) const { return row(letter).percent; }
};

inline FrequencyTable frequency_table(const LetterTally& tally) {
  if (tally.total() == 0) {
    throw Error(ErrorCode::EmptyText, "tally has no letters");
  }
  FrequencyTable table;
  table.total = tally.total();
  const double total = static_cast<double>(tally.total());
  for (std::size_t k = 0; k < kAlphabetSize; ++k) {
    auto& r = table.rows[k];
    r.letter = static_cast<char>('A' + k);
    r.interval = static_cast<int>(k) + 1;
    r.count = tally.count_at(k);
    r.percent = 100.0 * static_cast<double>(r.count) / total;
  }
  return table;
}

enum class RankConvention { Ascending, Descending };

inline std::string_view to_string(RankConvention c) {
  return c == RankConvention::Ascending ? "ascending" : "descending";
}

inline RankConvention parse_rank_convention(std::string_view s) {
  if (s == "ascending") return RankConvention::Ascending;
  if (s == "descending") return RankConvention::Descending;
  throw Error(ErrorCode::InvalidInput,
              "unknown rank convention '" + std::string(s) + "' (expected ascending|descending)");
}

// Letters by non-decreasing count, ties broken alphabetically.
struct ZipfOrdering {
  std::array<char, kAlphabetSize> ascending{};
  std::array<int, kAlphabetSize> rank_of{};  // indexed by letter, 1-based ascending position

  int rank(char letter, RankConvention convention = RankConvention::Ascending) const {
    const int asc = rank_of.at(LetterTally::index_of(letter));
    return convention == RankConvention::Ascending ? asc : static_cast<int>(kAlphabetSize) + 1 - asc;
  }

  std::string sequence() const { return std::string(ascending.begin(), ascending.end()); }
};

inline ZipfOrdering zipf_order(const FrequencyTable& freq) {
  ZipfOrdering order;
  std::array<std::size_t, kAlphabetSize> idx{};
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return freq.rows[a].count < freq.rows[b].count;
  });
  for (std::size_t pos = 0; pos < kAlphabetSize; ++pos) {
    order.ascending[pos] = static_cast<char>('A' + idx[pos]);
    order.rank_of[idx[pos]] = static_cast<int>(pos) + 1;
  }
  return order;
}

namespace detail {

// (x, F) pairs over all 26 letters, x chosen per letter.
template <typename XOf>
PointSeries percent_series(const FrequencyTable& freq, std::string label, XOf x_of) {
  PointSeries s;
  s.label = std::move(label);
  s.points.reserve(kAlphabetSize);
  for (const auto& r : freq.rows) s.points.push_back({x_of(r), r.percent});
  return s;
}

}  // namespace detail

// Slope of log F against log(1/i) over letters with F > 0; r_squared is the
// fractality degree.
inline FitResult fractal_dimension(const FrequencyTable& freq) {
  auto series = detail::percent_series(freq, "fractal dimension", [](const FrequencyRow& r) {
    return 1.0 / static_cast<double>(r.interval);
  });
  return fit_transformed(series, Transform::LogLog);
}

// Linear fit of F against Zipf rank, zero-count letters included.
inline FitResult zipf_slope(const FrequencyTable& freq, const ZipfOrdering& order,
                            RankConvention convention = RankConvention::Ascending) {
  auto series = detail::percent_series(freq, "zipf slope", [&](const FrequencyRow& r) {
    return static_cast<double>(order.rank(r.letter, convention));
  });
  return fit_transformed(series, Transform::Linear);
}

struct ZipfDimension {
  FitResult fit;  // log F against log(1/n)
  double dimension = 0.0;
  RankConvention convention = RankConvention::Ascending;
};

// Under ascending ranks F grows with n, so the log(1/n) slope is negative and
// the dimension is its negation; under descending ranks it is the slope.
inline ZipfDimension zipf_dimension(const FrequencyTable& freq, const ZipfOrdering& order,
                                    RankConvention convention = RankConvention::Ascending) {
  auto series = detail::percent_series(freq, "zipf dimension", [&](const FrequencyRow& r) {
    return 1.0 / static_cast<double>(order.rank(r.letter, convention));
  });
  ZipfDimension out;
  out.fit = fit_transformed(series, Transform::LogLog);
  out.convention = convention;
  out.dimension = convention == RankConvention::Ascending ? -out.fit.slope : out.fit.slope;
  return out;
}

// P against Zipf rank as P-log(n), log(P)-n and log(P)-log(n).
struct DirectFits {
  FitResult semilog_x;
  FitResult semilog_y;
  FitResult loglog;

  std::array<double, 3> r_squared() const {
    return {semilog_x.r_squared, semilog_y.r_squared, loglog.r_squared};
  }
};

inline DirectFits direct_fits(const FrequencyTable& freq, const ZipfOrdering& order,
                              RankConvention convention = RankConvention::Ascending) {
  auto series = detail::percent_series(freq, "direct fits", [&](const FrequencyRow& r) {
    return static_cast<double>(order.rank(r.letter, convention));
  });
  return DirectFits{fit_transformed(series, Transform::SemilogX),
                    fit_transformed(series, Transform::SemilogY),
                    fit_transformed(series, Transform::LogLog)};
}

struct DimensionReport {
  std::string manuscript_id;
  std::uint64_t total_letters = 0;
  double fractal_dimension = 0.0;
  double fractality = 0.0;
  double zipf_slope = 0.0;
  double zipf_slope_r2 = 0.0;
  double zipf_dimension = 0.0;
  double zipf_dimension_r2 = 0.0;
  // Absent for reports imported from published rows that do not list it.
  std::optional<std::array<double, 3>> direct_fit_r2;
  RankConvention rank_convention = RankConvention::Ascending;

  friend bool operator==(const DimensionReport&, const DimensionReport&) = default;
};

inline DimensionReport analyze(const LetterTally& tally, std::string_view id,
                               RankConvention convention = RankConvention::Ascending) {
  try {
    const auto freq = frequency_table(tally);
    const auto order = zipf_order(freq);
    const auto fractal = fractal_dimension(freq);
    const auto slope = zipf_slope(freq, order, convention);
    const auto zipf = zipf_dimension(freq, order, convention);
    const auto direct = direct_fits(freq, order, convention);

    DimensionReport report;
    report.manuscript_id = std::string(id);
    report.total_letters = tally.total();
    report.fractal_dimension = fractal.slope;
    report.fractality = fractal.r_squared;
    report.zipf_slope = slope.slope;
    report.zipf_slope_r2 = slope.r_squared;
    report.zipf_dimension = zipf.dimension;
    report.zipf_dimension_r2 = zipf.fit.r_squared;
    report.direct_fit_r2 = direct.r_squared();
    report.rank_convention = convention;
    return report;
  } catch (const Error& e) {
    e.rethrow_with_context(id);
  }
}

}  // namespace letterfractal
