#include "cogassess/report.hpp"

#include "cogassess/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cogassess {

namespace {

constexpr double kRangeTolerance = 1e-12;

void check_range(const ModelResult& r, const ModelConfig& cfg) {
  const double n = cfg.n;
  double x_lo = cfg.b / 2, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  if (cfg.overlapping()) {
    x_hi = figure_extent(cfg) - cfg.b / 2;
    y_lo = cfg.a / n;
    y_hi = cfg.a;
  } else {
    x_hi = cfg.b * (n - 0.5);
    y_lo = 0.5 / n;
    y_hi = 0.5;
  }
  const auto& c = r.cog;
  if (c.xc < x_lo - kRangeTolerance || c.xc > x_hi + kRangeTolerance ||
      c.yc < y_lo - kRangeTolerance || c.yc > y_hi + kRangeTolerance) {
    throw Error(ErrorKind::Validation,
                "COG of model " + std::string(to_string(r.variant)) + " left its admissible range");
  }
}

nlohmann::json to_json(const Characterization<double>& c) {
  nlohmann::json j = {{"label", std::string(to_string(c.label))},
                      {"ratio", c.ratio},
                      {"score", c.score},
                      {"threshold", c.threshold}};
  if (c.extension) j["extension"] = "midpoint heuristic";
  return j;
}

Characterization<double> characterization_from_json(const nlohmann::json& j) {
  Characterization<double> c;
  c.label = j.at("label").get<std::string>() == "satisfactory" ? Label::Satisfactory
                                                                : Label::Unsatisfactory;
  c.ratio = j.at("ratio").get<double>();
  c.score = j.at("score").get<double>();
  c.threshold = j.at("threshold").get<double>();
  c.extension = j.contains("extension");
  return c;
}

}  // namespace

ModelSelection ModelSelection::parse(std::string_view list) {
  ModelSelection s{false, false, false, false, false, false};
  std::stringstream ss{std::string(list)};
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    any = true;
    if (item == "gpa") s.gpa = true;
    else if (item == "mean") s.mean = true;
    else {
      switch (parse_variant(item)) {
        case Variant::Rm: s.rm = true; break;
        case Variant::Grm: s.grm = true; break;
        case Variant::Tfam: s.tfam = true; break;
        case Variant::Tpfam: s.tpfam = true; break;
      }
    }
  }
  if (!any) throw InputError("model list is empty");
  return s;
}

std::string ModelSelection::to_list() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(rm, "rm");
  add(grm, "grm");
  add(tfam, "tfam");
  add(tpfam, "tpfam");
  add(gpa, "gpa");
  add(mean, "mean");
  return out;
}

bool ModelSelection::includes(Variant v) const {
  switch (v) {
    case Variant::Rm: return rm;
    case Variant::Grm: return grm;
    case Variant::Tfam: return tfam;
    case Variant::Tpfam: return tpfam;
  }
  return false;
}

const ModelResult* AssessmentReport::find(Variant v) const {
  for (const auto& r : cogs) {
    if (r.variant == v) return &r;
  }
  return nullptr;
}

AssessmentReport assess(const Cohort& cohort, const GradeScale& scale,
                        const AssessmentOptions& options) {
  if (cohort.grade_count() != scale.size()) {
    throw InputError("cohort '" + cohort.name() + "' does not match the grade scale");
  }
  const Distribution d = to_distribution(cohort);
  const int n = static_cast<int>(scale.size());

  AssessmentReport r;
  r.cohort = cohort.name();
  r.scale = scale;
  r.counts.assign(cohort.counts().begin(), cohort.counts().end());
  r.frequencies.assign(d.y().begin(), d.y().end());
  r.options = options;
  r.variance = variance(d);
  r.quality_of_knowledge = quality_of_knowledge(d);
  if (options.models.mean) {
    r.mean = mean_value(d);
    r.mean_characterization = characterize_mean(d);
  }
  if (options.models.gpa) {
    r.gpa = gpa_index(d);
    r.gpa_characterization = characterize_gpa(d);
  }
  for (Variant v : {Variant::Rm, Variant::Grm, Variant::Tfam, Variant::Tpfam}) {
    if (!options.models.includes(v)) continue;
    ModelConfig cfg = ModelConfig::defaults(v, n);
    cfg.k = options.k;
    cfg.b = options.b;
    ModelResult m{v, cfg.a, cog(d, cfg), characterize(d, cfg)};
    check_range(m, cfg);
    r.cogs.push_back(m);
  }
  return r;
}

nlohmann::json to_json(const AssessmentReport& r) {
  nlohmann::json j;
  j["cohort"] = r.cohort;
  j["scale"] = scale_to_json(r.scale);
  j["counts"] = r.counts;
  j["frequencies"] = r.frequencies;
  j["config"] = {{"n", r.scale.size()},
                 {"k", r.options.k},
                 {"b", r.options.b},
                 {"models", r.options.models.to_list()}};
  j["variance"] = r.variance;
  j["quality_of_knowledge"] = r.quality_of_knowledge;
  if (r.mean) j["mean"] = {{"value", *r.mean}, {"characterization", to_json(*r.mean_characterization)}};
  if (r.gpa) j["gpa"] = {{"value", *r.gpa}, {"characterization", to_json(*r.gpa_characterization)}};
  nlohmann::json models = nlohmann::json::object();
  for (const auto& m : r.cogs) {
    models[std::string(to_string(m.variant))] = {
        {"a", m.a},
        {"xc", m.cog.xc},
        {"yc", m.cog.yc},
        {"characterization", to_json(m.characterization)},
    };
  }
  j["models"] = models;
  return j;
}

AssessmentReport report_from_json(const nlohmann::json& j) {
  try {
    AssessmentReport r;
    r.cohort = j.at("cohort").get<std::string>();
    r.scale = scale_from_json(j.at("scale"));
    r.counts = j.at("counts").get<std::vector<std::int64_t>>();
    r.frequencies = j.at("frequencies").get<std::vector<double>>();
    const auto& cfg = j.at("config");
    r.options.k = cfg.at("k").get<double>();
    r.options.b = cfg.at("b").get<double>();
    r.options.models = ModelSelection::parse(cfg.at("models").get<std::string>());
    r.variance = j.at("variance").get<double>();
    r.quality_of_knowledge = j.at("quality_of_knowledge").get<double>();
    if (j.contains("mean")) {
      r.mean = j["mean"].at("value").get<double>();
      r.mean_characterization = characterization_from_json(j["mean"].at("characterization"));
    }
    if (j.contains("gpa")) {
      r.gpa = j["gpa"].at("value").get<double>();
      r.gpa_characterization = characterization_from_json(j["gpa"].at("characterization"));
    }
    for (Variant v : {Variant::Rm, Variant::Grm, Variant::Tfam, Variant::Tpfam}) {
      const std::string key(to_string(v));
      if (!j.at("models").contains(key)) continue;
      const auto& m = j["models"][key];
      r.cogs.push_back({v, m.at("a").get<double>(), {m.at("xc").get<double>(), m.at("yc").get<double>()},
                        characterization_from_json(m.at("characterization"))});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed assessment report: ") + e.what());
  }
}

Cohort cohort_of(const AssessmentReport& report) {
  Cohort::Counts counts(static_cast<Eigen::Index>(report.counts.size()));
  for (std::size_t i = 0; i < report.counts.size(); ++i) {
    counts(static_cast<Eigen::Index>(i)) = report.counts[i];
  }
  return Cohort(report.cohort, std::move(counts));
}

double round_to(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

std::string fixed2(double value) {
  char buf[64];
  double r = round_to(value, 2);
  if (r == 0.0) r = 0.0;  // no "-0.00"
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

std::string format_table(const AssessmentReport& r) {
  std::int64_t total = 0;
  for (auto c : r.counts) total += c;

  std::ostringstream out;
  char line[160];
  out << "cohort " << r.cohort << " (" << total << " students, k=" << r.options.k
      << ", b=" << r.options.b << ")\n";
  out << "grade  ";
  for (const auto& g : r.scale.grades()) {
    std::snprintf(line, sizeof line, "%8s", g.label.c_str());
    out << line;
  }
  out << "\ncount  ";
  for (auto c : r.counts) {
    std::snprintf(line, sizeof line, "%8lld", static_cast<long long>(c));
    out << line;
  }
  out << "\nfreq   ";
  for (double f : r.frequencies) {
    std::snprintf(line, sizeof line, "%8s", fixed2(f).c_str());
    out << line;
  }
  out << "\n\n";

  auto row = [&](const std::string& name, const std::string& xc, const std::string& yc,
                 const std::optional<Characterization<double>>& c) {
    std::string verdict = "-", half = "-";
    if (c) {
      half = fixed2(c->threshold);
      verdict = std::string(to_string(c->label));
      if (c->extension) verdict += " (midpoint heuristic)";
    }
    std::snprintf(line, sizeof line, "%-10s %8s %8s %8s  %s\n", name.c_str(), xc.c_str(),
                  yc.c_str(), half.c_str(), verdict.c_str());
    out << line;
  };
  std::snprintf(line, sizeof line, "%-10s %8s %8s %8s  %s\n", "model", "score", "yc", "half",
                "verdict");
  out << line;
  if (r.mean) row("mean", fixed2(*r.mean), "-", r.mean_characterization);
  if (r.gpa) row("gpa", fixed2(*r.gpa), "-", r.gpa_characterization);
  for (const auto& m : r.cogs) {
    row(std::string(to_string(m.variant)), fixed2(m.cog.xc), fixed2(m.cog.yc), m.characterization);
  }
  out << "\nvariance " << fixed2(r.variance) << "  quality of knowledge ("
      << r.scale.label(r.scale.size() - 2) << " or better) " << fixed2(r.quality_of_knowledge)
      << "\n";
  return out.str();
}

}  // namespace cogassess
