#pragma once

// Input resolution and batch analysis behind the command-line front end.
//
// Input forms:
//   fixture:hamlet        embedded Hamlet letter incidences
//   published:<key>|all   published dimension rows, as ready-made reports
//   archive:<id>          remote plain-text edition (cached, boilerplate stripped)
//   report:<path>         structured report document written by `analyze --format json`
//   <path>                local UTF-8 text file

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "letterfractal/archive.hpp"
#include "letterfractal/corpus.hpp"
#include "letterfractal/dimensions.hpp"
#include "letterfractal/error.hpp"
#include "letterfractal/fixtures.hpp"
#include "letterfractal/report_io.hpp"

namespace letterfractal {

struct Manuscript {
  std::string id;
  std::optional<LetterTally> tally;       // when letter data is available
  std::optional<DimensionReport> report;  // precomputed rows
};

inline std::string read_text_file(const std::string& path) {
  return read_local_file(path).body;
}

inline std::vector<Manuscript> resolve_input(std::string_view spec, const RunConfig& cfg,
                                             const ArchiveClient* archive) {
  auto scheme = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (spec.starts_with(prefix)) return spec.substr(prefix.size());
    return std::nullopt;
  };

  if (auto name = scheme("fixture:")) {
    if (*name == "hamlet") return {Manuscript{"hamlet", fixtures::hamlet_tally(), std::nullopt}};
    throw Error(ErrorCode::NotFound, "unknown fixture '" + std::string(*name) + "' (available: hamlet)");
  }
  if (auto key = scheme("published:")) {
    std::vector<Manuscript> out;
    for (const auto& row : fixtures::kTragedies) {
      if (*key == "all" || row.key == *key) {
        out.push_back(Manuscript{std::string(row.key), std::nullopt, fixtures::published_report(row)});
      }
    }
    if (out.empty()) throw Error(ErrorCode::NotFound, "no published row '" + std::string(*key) + "'");
    return out;
  }
  if (auto path = scheme("report:")) {
    std::vector<Manuscript> out;
    for (auto& r : parse_reports_document(read_text_file(std::string(*path)))) {
      auto id = r.manuscript_id;
      out.push_back(Manuscript{std::move(id), std::nullopt, std::move(r)});
    }
    if (out.empty()) throw Error(ErrorCode::EmptyText, std::string(*path) + ": no report records");
    return out;
  }
  RawDocument doc;
  if (auto id = scheme("archive:")) {
    if (!archive) throw Error(ErrorCode::NetworkUnavailable, "no archive client configured");
    doc = strip_boilerplate(archive->fetch(*id));
    doc.id = "archive-" + std::string(*id);
  } else {
    doc = read_local_file(std::string(spec));
    doc.id = std::string(spec);
    if (cfg.strip_local_boilerplate) doc = strip_boilerplate(doc);
  }
  try {
    return {Manuscript{doc.id, tally(normalize(doc, cfg.normalization)), std::nullopt}};
  } catch (const Error& e) {
    e.rethrow_with_context(doc.id);
  }
}

struct Outcome {
  std::string input;
  std::vector<DimensionReport> reports;
  std::optional<ErrorCode> error;
  std::string message;

  bool ok() const { return !error.has_value(); }
};

inline Outcome analyze_input(const std::string& spec, const RunConfig& cfg, const ArchiveClient* archive) {
  Outcome out;
  out.input = spec;
  try {
    for (const auto& m : resolve_input(spec, cfg, archive)) {
      if (m.report) {
        out.reports.push_back(*m.report);
      } else {
        out.reports.push_back(analyze(*m.tally, m.id, cfg.rank_convention));
      }
    }
  } catch (const Error& e) {
    out.reports.clear();
    out.error = e.code();
    out.message = e.what();
  } catch (const std::exception& e) {
    out.reports.clear();
    out.error = ErrorCode::InvalidInput;
    out.message = spec + ": " + e.what();
  }
  return out;
}

// One outcome per input, in input order. Inputs run on up to cfg.jobs
// threads; a manuscript id already produced by an earlier input turns the
// later outcome into DuplicateManuscript.
inline std::vector<Outcome> analyze_batch(const std::vector<std::string>& inputs, const RunConfig& cfg,
                                          const ArchiveClient* archive) {
  std::vector<Outcome> outcomes(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < inputs.size(); k = next.fetch_add(1)) {
      outcomes[k] = analyze_input(inputs[k], cfg, archive);
    }
  };
  const unsigned workers = std::clamp<unsigned>(cfg.jobs, 1u, std::max<unsigned>(1u, static_cast<unsigned>(inputs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::set<std::string> seen;
  for (auto& o : outcomes) {
    if (!o.ok()) continue;
    for (const auto& r : o.reports) {
      if (!seen.insert(r.manuscript_id).second) {
        o.error = ErrorCode::DuplicateManuscript;
        o.message = "DuplicateManuscript: " + r.manuscript_id + " (from " + o.input + ")";
        break;
      }
    }
    if (!o.ok()) o.reports.clear();
  }
  return outcomes;
}

inline Manuscript load_letter_data(const std::string& spec, const RunConfig& cfg, const ArchiveClient* archive) {
  auto ms = resolve_input(spec, cfg, archive);
  if (ms.size() != 1 || !ms.front().tally) {
    throw Error(ErrorCode::InvalidInput, spec + ": plots need letter counts (a text, fixture: or archive: input)");
  }
  return ms.front();
}

}  // namespace letterfractal
