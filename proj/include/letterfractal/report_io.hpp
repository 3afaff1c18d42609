#pragma once

// Report serialization (human table, CSV, versioned JSON records) and the
// plain-text run configuration.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "letterfractal/comparison.hpp"
#include "letterfractal/corpus.hpp"
#include "letterfractal/dimensions.hpp"
#include "letterfractal/error.hpp"

namespace letterfractal {

inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { Human, Csv, Json };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "human" || s == "table") return OutputFormat::Human;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw Error(ErrorCode::InvalidInput, "unknown format '" + std::string(s) + "' (human|csv|json)");
}

inline std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Human: return "human";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "human";
}

// ---------------------------------------------------------------------------
// JSON records
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const DimensionReport& r) {
  nlohmann::json j;
  j["manuscript_id"] = r.manuscript_id;
  j["total_letters"] = r.total_letters;
  j["fractal_dimension"] = r.fractal_dimension;
  j["fractality"] = r.fractality;
  j["zipf_slope"] = r.zipf_slope;
  j["zipf_slope_r2"] = r.zipf_slope_r2;
  j["zipf_dimension"] = r.zipf_dimension;
  j["zipf_dimension_r2"] = r.zipf_dimension_r2;
  if (r.direct_fit_r2) {
    j["direct_fit_r2"] = *r.direct_fit_r2;
  } else {
    j["direct_fit_r2"] = nullptr;
  }
  j["rank_convention"] = std::string(to_string(r.rank_convention));
  return j;
}

inline DimensionReport report_from_json(const nlohmann::json& j) {
  try {
    DimensionReport r;
    r.manuscript_id = j.at("manuscript_id").get<std::string>();
    r.total_letters = j.at("total_letters").get<std::uint64_t>();
    r.fractal_dimension = j.at("fractal_dimension").get<double>();
    r.fractality = j.at("fractality").get<double>();
    r.zipf_slope = j.at("zipf_slope").get<double>();
    r.zipf_slope_r2 = j.at("zipf_slope_r2").get<double>();
    r.zipf_dimension = j.at("zipf_dimension").get<double>();
    r.zipf_dimension_r2 = j.at("zipf_dimension_r2").get<double>();
    const auto& direct = j.at("direct_fit_r2");
    if (!direct.is_null()) r.direct_fit_r2 = direct.get<std::array<double, 3>>();
    r.rank_convention = parse_rank_convention(j.at("rank_convention").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed report record: ") + e.what());
  }
}

inline nlohmann::json reports_document(const std::vector<DimensionReport>& reports) {
  nlohmann::json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["reports"] = nlohmann::json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r));
  return doc;
}

inline std::vector<DimensionReport> parse_reports_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("not a report document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") || !doc.contains("reports")) {
    throw Error(ErrorCode::InvalidInput, "report document needs schema_version and reports");
  }
  const int version = doc["schema_version"].get<int>();
  if (version != kReportSchemaVersion) {
    throw Error(ErrorCode::InvalidInput,
                "unsupported report schema_version " + std::to_string(version));
  }
  std::vector<DimensionReport> out;
  for (const auto& j : doc["reports"]) out.push_back(report_from_json(j));
  return out;
}

// ---------------------------------------------------------------------------
// CSV and human tables
// ---------------------------------------------------------------------------

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline constexpr std::string_view kCsvHeader =
    "manuscript,total_letters,fractal_dimension,fractal_r2,zipf_slope,zipf_slope_r2,"
    "zipf_dimension,zipf_dimension_r2,direct_r2_p_logn,direct_r2_logp_n,direct_r2_logp_logn,"
    "rank_convention";

inline void write_csv_row(std::ostream& out, const DimensionReport& r) {
  auto num = [](double v) {
    std::ostringstream ss;
    ss << std::setprecision(17) << v;
    return ss.str();
  };
  out << csv_escape(r.manuscript_id) << ',' << r.total_letters << ',' << num(r.fractal_dimension)
      << ',' << num(r.fractality) << ',' << num(r.zipf_slope) << ',' << num(r.zipf_slope_r2)
      << ',' << num(r.zipf_dimension) << ',' << num(r.zipf_dimension_r2);
  for (std::size_t k = 0; k < 3; ++k) {
    out << ',';
    if (r.direct_fit_r2) out << num((*r.direct_fit_r2)[k]);
  }
  out << ',' << to_string(r.rank_convention) << '\n';
}

inline void write_human_table(std::ostream& out, const std::vector<DimensionReport>& reports) {
  std::size_t id_width = 10;
  for (const auto& r : reports) id_width = std::max(id_width, r.manuscript_id.size());
  out << std::left << std::setw(static_cast<int>(id_width)) << "manuscript" << std::right
      << std::setw(10) << "letters" << std::setw(9) << "D_f" << std::setw(10) << "R2"
      << std::setw(10) << "zipf" << std::setw(10) << "R2" << std::setw(9) << "D_Z"
      << std::setw(10) << "R2" << "  direct R2 (P-logn, logP-n, logP-logn)\n";
  out << std::fixed;
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(id_width)) << r.manuscript_id << std::right
        << std::setw(10) << r.total_letters << std::setprecision(4) << std::setw(9)
        << r.fractal_dimension << std::setprecision(5) << std::setw(10) << r.fractality
        << std::setw(10) << r.zipf_slope << std::setprecision(6) << std::setw(10)
        << r.zipf_slope_r2 << std::setprecision(4) << std::setw(9) << r.zipf_dimension
        << std::setprecision(6) << std::setw(10) << r.zipf_dimension_r2 << "  ";
    if (r.direct_fit_r2) {
      const auto& d = *r.direct_fit_r2;
      out << d[0] << ", " << d[1] << ", " << d[2];
    } else {
      out << "-";
    }
    out << "\n";
  }
  out << std::defaultfloat;
}

inline void write_reports(std::ostream& out, const std::vector<DimensionReport>& reports,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::Human:
      write_human_table(out, reports);
      break;
    case OutputFormat::Csv:
      out << kCsvHeader << '\n';
      for (const auto& r : reports) write_csv_row(out, r);
      break;
    case OutputFormat::Json:
      out << reports_document(reports).dump(2) << '\n';
      break;
  }
}

inline std::string correlation_summary(const RankCorrelation& c) {
  std::ostringstream ss;
  ss << "spearman(D_f, D_Z) over " << c.n << " manuscripts: ";
  if (c.degenerate) {
    ss << "degenerate (need >= 3 manuscripts with varying dimensions)";
  } else {
    ss << std::fixed << std::setprecision(4) << *c.rho;
  }
  return ss.str();
}

inline void write_comparison(std::ostream& out, const ComparisonTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Human:
      write_human_table(out, table.rows);
      out << correlation_summary(table.fractal_vs_zipf) << '\n';
      break;
    case OutputFormat::Csv:
      write_reports(out, table.rows, format);
      out << "# " << correlation_summary(table.fractal_vs_zipf) << '\n';
      break;
    case OutputFormat::Json: {
      auto doc = reports_document(table.rows);
      nlohmann::json corr;
      corr["method"] = "spearman";
      corr["n"] = table.fractal_vs_zipf.n;
      corr["degenerate"] = table.fractal_vs_zipf.degenerate;
      if (table.fractal_vs_zipf.rho) {
        corr["rho"] = *table.fractal_vs_zipf.rho;
      } else {
        corr["rho"] = nullptr;
      }
      doc["fractal_vs_zipf"] = corr;
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

inline constexpr std::string_view kCacheDirEnv = "LETTERFRACTAL_CACHE_DIR";
inline constexpr std::string_view kDefaultUrlTemplate =
    "https://www.gutenberg.org/cache/epub/{id}/pg{id}.txt";

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(std::string(kCacheDirEnv).c_str()); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "letterfractal";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "letterfractal";
  }
  return ".letterfractal-cache";
}

struct RunConfig {
  NormalizationPolicy normalization;
  std::string url_template = std::string(kDefaultUrlTemplate);
  std::filesystem::path cache_dir = default_cache_dir();
  OutputFormat format = OutputFormat::Human;
  RankConvention rank_convention = RankConvention::Ascending;
  unsigned jobs = 1;
  // Strip archive boilerplate from local files too (remote documents always are).
  bool strip_local_boilerplate = false;
};

inline bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error(ErrorCode::InvalidInput, std::string(key) + ": expected a boolean, got '" +
                                           std::string(v) + "'");
}

// Applies `key = value` lines onto cfg. Blank lines and '#' comments are
// ignored; unknown keys are rejected.
inline void apply_config(RunConfig& cfg, std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::InvalidInput,
                  "config line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = detail::trim(text.substr(0, eq));
    const auto value = detail::trim(text.substr(eq + 1));
    if (key == "format") {
      cfg.format = parse_output_format(value);
    } else if (key == "cache_dir") {
      cfg.cache_dir = std::string(value);
    } else if (key == "url_template") {
      cfg.url_template = std::string(value);
    } else if (key == "rank_convention") {
      cfg.rank_convention = parse_rank_convention(value);
    } else if (key == "fold_diacritics") {
      cfg.normalization.fold_diacritics = parse_bool(key, value);
    } else if (key == "strip_local_boilerplate") {
      cfg.strip_local_boilerplate = parse_bool(key, value);
    } else if (key == "jobs") {
      try {
        const int jobs = std::stoi(std::string(value));
        if (jobs < 1) throw std::out_of_range("jobs");
        cfg.jobs = static_cast<unsigned>(jobs);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "jobs: expected a positive integer");
      }
    } else {
      throw Error(ErrorCode::InvalidInput, "config line " + std::to_string(line_no) +
                                               ": unknown key '" + std::string(key) + "'");
    }
  }
}

inline void apply_config_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open config " + path.string());
  apply_config(cfg, in);
}

}  // namespace letterfractal
