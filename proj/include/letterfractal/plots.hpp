#pragma once

// Plot-point data for the letter-statistics figures, written as two-column
// text any plotting tool can read (gnuplot blocks separated by blank lines).

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "letterfractal/comparison.hpp"
#include "letterfractal/dimensions.hpp"
#include "letterfractal/error.hpp"
#include "letterfractal/regression.hpp"

namespace letterfractal {

enum class PlotKind { Fig1, Fig2, Fig4, Fig6, Fig7a, Fig7b, Fig7c };

inline constexpr std::array<std::string_view, 7> kPlotNames{"fig1",  "fig2",  "fig4", "fig6",
                                                            "fig7a", "fig7b", "fig7c"};

inline std::string valid_plot_names() {
  std::string out;
  for (auto n : kPlotNames) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

inline PlotKind parse_plot_kind(std::string_view name) {
  for (std::size_t k = 0; k < kPlotNames.size(); ++k) {
    if (kPlotNames[k] == name) return static_cast<PlotKind>(k);
  }
  throw Error(ErrorCode::UnknownPlot,
              "'" + std::string(name) + "'; valid plots: " + valid_plot_names());
}

struct PlotBlock {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string labels;  // one letter per point, empty when points are not letters
  std::vector<Point> points;
  FitResult fit;       // least-squares line through points
};

struct PlotData {
  std::string name;
  std::string manuscript;
  std::vector<PlotBlock> blocks;
};

namespace detail {

inline PlotBlock make_block(std::string title, std::string x_label, std::string y_label) {
  PlotBlock b;
  b.title = std::move(title);
  b.x_label = std::move(x_label);
  b.y_label = std::move(y_label);
  return b;
}

inline void finish_block(PlotBlock& b) { b.fit = linear_fit(std::span<const Point>(b.points)); }

// Shortest round-trip representation; identical doubles print identically.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace detail

// Single-manuscript plots. Points with a zero count are omitted from any
// plot that takes a logarithm of F.
inline PlotData manuscript_plot(PlotKind kind, const FrequencyTable& freq, std::string_view id,
                                RankConvention convention = RankConvention::Ascending) {
  const auto order = zipf_order(freq);
  PlotData plot;
  plot.name = std::string(kPlotNames[static_cast<std::size_t>(kind)]);
  plot.manuscript = std::string(id);

  auto by_zipf_rank = [&](PlotBlock& b, auto x_of, auto y_of, bool needs_positive) {
    std::array<const FrequencyRow*, kAlphabetSize> ranked{};
    for (const auto& r : freq.rows) ranked[order.rank(r.letter, convention) - 1] = &r;
    for (const auto* r : ranked) {
      if (needs_positive && r->count == 0) continue;
      const double n = order.rank(r->letter, convention);
      b.points.push_back({x_of(n), y_of(*r)});
      b.labels.push_back(r->letter);
    }
  };

  switch (kind) {
    case PlotKind::Fig1: {
      auto b = detail::make_block("letter incidence", "i", "count");
      for (const auto& r : freq.rows) {
        b.points.push_back({static_cast<double>(r.interval), static_cast<double>(r.count)});
        b.labels.push_back(r.letter);
      }
      plot.blocks.push_back(std::move(b));
      break;
    }
    case PlotKind::Fig2: {
      auto b = detail::make_block("fractal dimension", "log10(1/i)", "log10(F)");
      for (const auto& r : freq.rows) {
        if (r.count == 0) continue;
        b.points.push_back({std::log10(1.0 / r.interval), std::log10(r.percent)});
        b.labels.push_back(r.letter);
      }
      plot.blocks.push_back(std::move(b));
      break;
    }
    case PlotKind::Fig4: {
      auto b = detail::make_block("incidence in zipf order", "n", "count");
      by_zipf_rank(
          b, [](double n) { return n; },
          [](const FrequencyRow& r) { return static_cast<double>(r.count); }, false);
      plot.blocks.push_back(std::move(b));
      break;
    }
    case PlotKind::Fig7a: {
      auto b = detail::make_block("P vs log(n)", "log10(n)", "P");
      by_zipf_rank(
          b, [](double n) { return std::log10(n); }, [](const FrequencyRow& r) { return r.percent; },
          false);
      plot.blocks.push_back(std::move(b));
      break;
    }
    case PlotKind::Fig7b: {
      auto b = detail::make_block("log(P) vs n", "n", "log10(P)");
      by_zipf_rank(
          b, [](double n) { return n; },
          [](const FrequencyRow& r) { return std::log10(r.percent); }, true);
      plot.blocks.push_back(std::move(b));
      break;
    }
    case PlotKind::Fig7c: {
      auto b = detail::make_block("log(P) vs log(n)", "log10(n)", "log10(P)");
      by_zipf_rank(
          b, [](double n) { return std::log10(n); },
          [](const FrequencyRow& r) { return std::log10(r.percent); }, true);
      plot.blocks.push_back(std::move(b));
      break;
    }
    case PlotKind::Fig6:
      throw Error(ErrorCode::InvalidInput, "fig6 compares manuscripts; give at least 2 inputs");
  }
  try {
    for (auto& b : plot.blocks) detail::finish_block(b);
  } catch (const Error& e) {
    e.rethrow_with_context(std::string(id) + " " + plot.name);
  }
  return plot;
}

// D_Z and D_f + 1 per manuscript, manuscripts numbered by increasing length.
inline PlotData comparison_plot(const ComparisonTable& table) {
  PlotData plot;
  plot.name = "fig6";
  plot.manuscript = "comparison";
  auto zipf = detail::make_block("zipf dimension", "manuscript#", "D_Z");
  auto fractal = detail::make_block("fractal dimension + 1", "manuscript#", "D_f+1");
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const double x = static_cast<double>(k + 1);
    zipf.points.push_back({x, table.rows[k].zipf_dimension});
    fractal.points.push_back({x, table.rows[k].fractal_dimension + 1.0});
  }
  detail::finish_block(zipf);
  detail::finish_block(fractal);
  plot.blocks.push_back(std::move(zipf));
  plot.blocks.push_back(std::move(fractal));
  return plot;
}

inline void write_plot(std::ostream& out, const PlotData& plot) {
  using detail::format_number;
  out << "# plot: " << plot.name << "\n# manuscript: " << plot.manuscript << "\n";
  bool first = true;
  for (const auto& b : plot.blocks) {
    if (!first) out << "\n\n";
    first = false;
    out << "# block: " << b.title << "\n";
    out << "# columns: " << b.x_label << " " << b.y_label << "\n";
    if (!b.labels.empty()) out << "# letters: " << b.labels << "\n";
    out << "# fit: slope=" << format_number(b.fit.slope)
        << " intercept=" << format_number(b.fit.intercept)
        << " r_squared=" << format_number(b.fit.r_squared) << "\n";
    for (const auto& p : b.points) out << format_number(p.x) << " " << format_number(p.y) << "\n";
  }
}

}  // namespace letterfractal
