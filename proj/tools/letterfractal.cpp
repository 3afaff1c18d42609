// letterfractal: letter-frequency fractal and Zipf analysis of manuscripts.
//
//   letterfractal fetch 1524
//   letterfractal analyze fixture:hamlet --format csv
//   letterfractal compare published:all --plot-output fig6.dat
//   letterfractal export-plot fig2 fixture:hamlet -o fig2.dat

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "letterfractal/http_transport.hpp"
#include "letterfractal/letterfractal.hpp"

namespace lf = letterfractal;

namespace {

struct GlobalFlags {
  std::string config_path;
  std::string format;
  std::string cache_dir;
  std::string rank_convention;
  std::string url_template;
  unsigned jobs = 0;
  bool fold_diacritics = false;
  bool strip_boilerplate = false;
};

lf::RunConfig build_config(const GlobalFlags& flags, const CLI::App& app) {
  lf::RunConfig cfg;
  if (!flags.config_path.empty()) lf::apply_config_file(cfg, flags.config_path);
  if (!flags.format.empty()) cfg.format = lf::parse_output_format(flags.format);
  if (!flags.cache_dir.empty()) cfg.cache_dir = flags.cache_dir;
  if (!flags.rank_convention.empty()) cfg.rank_convention = lf::parse_rank_convention(flags.rank_convention);
  if (!flags.url_template.empty()) cfg.url_template = flags.url_template;
  if (app.count("--jobs") > 0) cfg.jobs = flags.jobs;
  if (app.count("--fold-diacritics") > 0) cfg.normalization.fold_diacritics = true;
  if (app.count("--strip-boilerplate") > 0) cfg.strip_local_boilerplate = true;
  return cfg;
}

// Writes to path, or stdout when path is empty.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw lf::Error(lf::ErrorCode::InvalidInput, "cannot write " + path);
  fn(out);
}

std::unique_ptr<lf::ArchiveClient> make_archive(const lf::RunConfig& cfg) {
  return std::make_unique<lf::ArchiveClient>(cfg.url_template, cfg.cache_dir, lf::httplib_get);
}

int report_failures(const std::vector<lf::Outcome>& outcomes) {
  int failed = 0;
  for (const auto& o : outcomes) {
    if (o.ok()) continue;
    ++failed;
    std::cerr << "error: " << o.input << ": " << o.message << "\n";
  }
  return failed;
}

int run_fetch(const std::vector<std::string>& ids, const lf::RunConfig& cfg) {
  const auto archive = make_archive(cfg);
  int failed = 0;
  for (const auto& id : ids) {
    try {
      auto doc = archive->fetch(id);
      const auto letters = lf::normalize(lf::strip_boilerplate(doc), cfg.normalization).size();
      std::cout << id << "\t" << (doc.title.empty() ? "-" : doc.title) << "\t" << letters << " letters\t"
                << archive->cache_path(id).string() << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cerr << "error: " << id << ": " << e.what() << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

int run_analyze(const std::vector<std::string>& inputs, const lf::RunConfig& cfg, const std::string& output) {
  const auto archive = make_archive(cfg);
  const auto outcomes = lf::analyze_batch(inputs, cfg, archive.get());
  std::vector<lf::DimensionReport> reports;
  for (const auto& o : outcomes) reports.insert(reports.end(), o.reports.begin(), o.reports.end());
  with_output(output, [&](std::ostream& out) { lf::write_reports(out, reports, cfg.format); });
  return report_failures(outcomes) == 0 ? 0 : 1;
}

int run_compare(const std::vector<std::string>& inputs, const lf::RunConfig& cfg, const std::string& output,
                const std::string& plot_output) {
  const auto archive = make_archive(cfg);
  const auto outcomes = lf::analyze_batch(inputs, cfg, archive.get());
  if (report_failures(outcomes) > 0) return 1;
  std::vector<lf::DimensionReport> reports;
  for (const auto& o : outcomes) reports.insert(reports.end(), o.reports.begin(), o.reports.end());
  const auto table = lf::compare_reports(std::move(reports));
  with_output(output, [&](std::ostream& out) { lf::write_comparison(out, table, cfg.format); });
  if (!plot_output.empty()) {
    with_output(plot_output, [&](std::ostream& out) { lf::write_plot(out, lf::comparison_plot(table)); });
  }
  return 0;
}

int run_export_plot(const std::string& plot_name, const std::vector<std::string>& inputs, const lf::RunConfig& cfg,
                    const std::string& output) {
  const auto kind = lf::parse_plot_kind(plot_name);
  const auto archive = make_archive(cfg);
  lf::PlotData plot;
  if (kind == lf::PlotKind::Fig6) {
    const auto outcomes = lf::analyze_batch(inputs, cfg, archive.get());
    if (report_failures(outcomes) > 0) return 1;
    std::vector<lf::DimensionReport> reports;
    for (const auto& o : outcomes) reports.insert(reports.end(), o.reports.begin(), o.reports.end());
    plot = lf::comparison_plot(lf::compare_reports(std::move(reports)));
  } else {
    if (inputs.size() != 1) {
      throw lf::Error(lf::ErrorCode::InvalidInput, plot_name + " takes exactly one input");
    }
    const auto m = lf::load_letter_data(inputs.front(), cfg, archive.get());
    plot = lf::manuscript_plot(kind, lf::frequency_table(*m.tally), m.id, cfg.rank_convention);
  }
  with_output(output, [&](std::ostream& out) { lf::write_plot(out, plot); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Letter-frequency fractal dimension and Zipf analysis of manuscripts"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--config", flags.config_path, "Plain-text key = value config file");
  app.add_option("--format", flags.format, "Output format: human, csv or json");
  app.add_option("--cache-dir", flags.cache_dir,
                 "Archive cache directory (default: $LETTERFRACTAL_CACHE_DIR or ~/.cache/letterfractal)");
  app.add_option("--rank-convention", flags.rank_convention,
                 "Zipf rank direction: ascending (rarest letter is rank 1, default) or descending");
  app.add_option("--url-template", flags.url_template, "Archive plain-text URL with {id} placeholder");
  app.add_option("--jobs", flags.jobs, "Manuscripts analyzed concurrently")->check(CLI::PositiveNumber);
  app.add_flag("--fold-diacritics", flags.fold_diacritics, "Fold accented Latin letters to base letters");
  app.add_flag("--strip-boilerplate", flags.strip_boilerplate, "Strip archive markers from local files too");

  std::vector<std::string> ids;
  auto* fetch = app.add_subcommand("fetch", "Download archive editions into the cache");
  fetch->add_option("ids", ids, "Archive ids")->required();

  std::vector<std::string> analyze_inputs;
  std::string analyze_output;
  auto* analyze = app.add_subcommand("analyze", "Dimension report per manuscript");
  analyze->add_option("inputs", analyze_inputs, "Files, fixture:hamlet, published:<key>, archive:<id>, report:<file>")
      ->required();
  analyze->add_option("-o,--output", analyze_output, "Write reports to file instead of stdout");

  std::vector<std::string> compare_inputs;
  std::string compare_output;
  std::string compare_plot;
  auto* compare = app.add_subcommand("compare", "Compare manuscripts ordered by length");
  compare->add_option("inputs", compare_inputs, "At least two manuscripts")->required();
  compare->add_option("-o,--output", compare_output, "Write table to file instead of stdout");
  compare->add_option("--plot-output", compare_plot, "Also write fig6 plot points to this file");

  std::string plot_name;
  std::vector<std::string> plot_inputs;
  std::string plot_output;
  auto* export_plot = app.add_subcommand("export-plot", "Write plot points for one figure");
  export_plot->add_option("plot", plot_name, "One of: " + lf::valid_plot_names())->required();
  export_plot->add_option("inputs", plot_inputs, "Manuscript (fig6: two or more)")->required();
  export_plot->add_option("-o,--output", plot_output, "Write points to file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = build_config(flags, app);
    if (*fetch) return run_fetch(ids, cfg);
    if (*analyze) return run_analyze(analyze_inputs, cfg, analyze_output);
    if (*compare) return run_compare(compare_inputs, cfg, compare_output, compare_plot);
    if (*export_plot) return run_export_plot(plot_name, plot_inputs, cfg, plot_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
