#include "cogassess/cli.hpp"

#include "cogassess/comparison.hpp"
#include "cogassess/io.hpp"
#include "cogassess/plot.hpp"
#include "cogassess/report.hpp"
#include "cogassess/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace cogassess {

namespace {

namespace fs = std::filesystem;

struct Loaded {
  Cohort cohort;
  GradeScale scale;
};

GradeScale scale_or_default(const std::string& path) {
  return path.empty() ? GradeScale::standard() : read_scale(path);
}

/// Reads a cohort CSV, or a report JSON written by `assess --json`.
Loaded load_cohort(const std::string& input, const std::string& scale_path, CsvFormat format) {
  if (fs::path(input).extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text(input));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(input + " is not valid JSON: " + e.what());
    }
    AssessmentReport report = report_from_json(j);
    GradeScale scale = scale_path.empty() ? report.scale : read_scale(scale_path);
    return {cohort_of(report), std::move(scale)};
  }
  GradeScale scale = scale_or_default(scale_path);
  return {read_cohort_csv(input, scale, format), std::move(scale)};
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy COG assessment of grade distributions"};
  app.require_subcommand(1);

  // assess
  auto* assess_cmd = app.add_subcommand("assess", "Assess one cohort with every selected model");
  std::string a_input, a_scale, a_models = "rm,grm,tfam,tpfam,gpa,mean";
  bool a_scores = false, a_counts = false, a_json = false;
  double a_k = 30, a_base = 1;
  assess_cmd->add_option("--input", a_input, "Cohort CSV or a previous JSON report")->required();
  auto* scores_flag = assess_cmd->add_flag("--scores", a_scores, "Input is student_id,score");
  assess_cmd->add_flag("--counts", a_counts, "Input is grade,count")->excludes(scores_flag);
  assess_cmd->add_option("--scale", a_scale, "Grade scale JSON");
  assess_cmd->add_option("--models", a_models, "Comma list of rm,grm,tfam,tpfam,gpa,mean");
  assess_cmd->add_option("--k", a_k, "Overlap percentage of adjacent bases");
  assess_cmd->add_option("--base", a_base, "Base length of one figure");
  assess_cmd->add_flag("--json", a_json, "Emit the full-precision JSON report");

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Compare two cohorts");
  std::string c_first, c_second, c_model = "grm", c_scale;
  double c_eps = 1e-9, c_k = 30, c_base = 1;
  bool c_json = false;
  compare_cmd->add_option("first", c_first, "First cohort")->required();
  compare_cmd->add_option("second", c_second, "Second cohort")->required();
  compare_cmd->add_option("--model", c_model, "rm, grm, tfam or tpfam");
  compare_cmd->add_option("--eps", c_eps, "Tolerance for equal X_c and Y_c");
  compare_cmd->add_option("--k", c_k, "Overlap percentage of adjacent bases");
  compare_cmd->add_option("--base", c_base, "Base length of one figure");
  compare_cmd->add_option("--scale", c_scale, "Grade scale JSON");
  compare_cmd->add_flag("--json", c_json, "Emit the verdict as JSON");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check closed forms against the geometric oracle");
  SweepOptions sweep;
  std::string v_records;
  validate_cmd->add_option("--samples", sweep.samples, "Number of random distributions")
      ->check(CLI::PositiveNumber);
  validate_cmd->add_option("--seed", sweep.seed, "Random seed");
  validate_cmd->add_option("--k", sweep.ks, "Overlap percentages")->delimiter(',');
  validate_cmd->add_option("--base", sweep.bases, "Base lengths")->delimiter(',');
  validate_cmd->add_option("--grades", sweep.grade_counts, "Grade counts, cycled")->delimiter(',');
  validate_cmd->add_option("--tolerance", sweep.tolerance, "Per-coordinate tolerance");
  validate_cmd->add_flag("--inject-uniform", sweep.inject_uniform, "First sample is uniform");
  validate_cmd->add_option("--records", v_records, "Write JSON lines here ('-' for stdout)");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Draw a bar figure or the COG triangle as SVG");
  std::string p_input, p_kind, p_out, p_scale, p_model = "grm";
  double p_k = 30, p_base = 1;
  plot_cmd->add_option("--input", p_input, "Cohort CSV")->required();
  plot_cmd->add_option("--kind", p_kind, "bars-rm, bars-grm or triangle")->required();
  plot_cmd->add_option("--out", p_out, "SVG output path; CSV data goes next to it")->required();
  plot_cmd->add_option("--scale", p_scale, "Grade scale JSON");
  plot_cmd->add_option("--model", p_model, "Overlapping model for the triangle");
  plot_cmd->add_option("--k", p_k, "Overlap percentage of adjacent bases");
  plot_cmd->add_option("--base", p_base, "Base length of one figure");

  std::vector<const char*> argv{"cogassess"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::Input);
  }

  try {
    if (*assess_cmd) {
      const CsvFormat format = a_scores ? CsvFormat::Scores : a_counts ? CsvFormat::Counts : CsvFormat::Auto;
      const Loaded in = load_cohort(a_input, a_scale, format);
      const AssessmentOptions options{ModelSelection::parse(a_models), a_k, a_base};
      const AssessmentReport report = assess(in.cohort, in.scale, options);
      if (a_json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        out << format_table(report);
      }
      return 0;
    }

    if (*compare_cmd) {
      const Loaded first = load_cohort(c_first, c_scale, CsvFormat::Auto);
      const Loaded second = load_cohort(c_second, c_scale, CsvFormat::Auto);
      if (!(first.scale == second.scale)) throw InputError("cohorts use different grade scales");
      ModelConfig cfg = ModelConfig::defaults(parse_variant(c_model), static_cast<int>(first.scale.size()));
      cfg.k = c_k;
      cfg.b = c_base;
      const auto v = compare(to_distribution(first.cohort), to_distribution(second.cohort), cfg, c_eps);
      const std::string& winner_name = v.winner == Winner::First    ? first.cohort.name()
                                       : v.winner == Winner::Second ? second.cohort.name()
                                                                    : std::string("-");
      if (c_json) {
        nlohmann::json j = {
            {"model", std::string(to_string(cfg.variant))},
            {"winner", std::string(to_string(v.winner))},
            {"basis", std::string(to_string(v.basis))},
            {"first", {{"name", first.cohort.name()}, {"xc", v.first.xc}, {"yc", v.first.yc},
                       {"sum_i_y", v.moment_first}, {"sum_y2", v.square_first}}},
            {"second", {{"name", second.cohort.name()}, {"xc", v.second.xc}, {"yc", v.second.yc},
                        {"sum_i_y", v.moment_second}, {"sum_y2", v.square_second}}},
        };
        if (!v.note.empty()) j["note"] = v.note;
        out << j.dump(2) << '\n';
      } else {
        out << "model: " << to_string(cfg.variant) << '\n';
        out << "winner: " << to_string(v.winner) << " (" << winner_name << ")\n";
        out << "basis: " << to_string(v.basis) << '\n';
        auto side = [&](const std::string& name, const CogPoint<double>& c, double m, double s) {
          out << name << ": xc=" << full(c.xc) << " yc=" << full(c.yc) << " sum_i_y=" << full(m)
              << " sum_y2=" << full(s) << '\n';
        };
        side(first.cohort.name(), v.first, v.moment_first, v.square_first);
        side(second.cohort.name(), v.second, v.moment_second, v.square_second);
        if (!v.note.empty()) out << "note: " << v.note << '\n';
      }
      return 0;
    }

    if (*validate_cmd) {
      std::ofstream file;
      std::ostream* records = nullptr;
      if (v_records == "-") {
        records = &out;
      } else if (!v_records.empty()) {
        file.open(v_records, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot write " + v_records);
        records = &file;
      }
      const SweepSummary s = run_sweep(sweep, [&](const ValidationRecord& r) {
        if (records) *records << to_json(r).dump() << '\n';
      });
      if (file.is_open() && !file.flush()) throw IoError("error writing " + v_records);
      std::ostream& summary = records == &out ? err : out;
      summary << "distributions: " << s.distributions << '\n'
              << "checks: " << s.checks << '\n'
              << "failures: " << s.failures << '\n'
              << "max |dx|: " << full(s.max_dx) << '\n'
              << "max |dy|: " << full(s.max_dy) << '\n';
      return s.failures == 0 ? 0 : static_cast<int>(ErrorKind::Validation);
    }

    if (*plot_cmd) {
      const PlotKind kind = parse_plot_kind(p_kind);
      const Loaded in = load_cohort(p_input, p_scale, CsvFormat::Auto);
      ModelConfig cfg = ModelConfig::defaults(parse_variant(p_model), static_cast<int>(in.scale.size()));
      if (kind == PlotKind::Triangle && !cfg.overlapping()) {
        throw InputError("the COG triangle needs an overlapping model");
      }
      cfg.k = p_k;
      cfg.b = p_base;
      const PlotOutput plot =
          render_plot(kind, to_distribution(in.cohort), cfg, in.scale.labels(), in.cohort.name() + " " + p_kind);
      write_text(p_out, plot.svg);
      write_text(fs::path(p_out).replace_extension(".csv"), plot.csv);
      out << "wrote " << p_out << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  }
  return static_cast<int>(ErrorKind::Input);
}

}  // namespace cogassess
