#pragma once

// Per-cohort assessment: every requested model evaluated on one cohort, with
// JSON (full precision) and table (2 decimals) renderings.

#include "cogassess/comparison.hpp"
#include "cogassess/distributions.hpp"
#include "cogassess/models.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cogassess {

struct ModelSelection {
  bool rm = true;
  bool grm = true;
  bool tfam = true;
  bool tpfam = true;
  bool gpa = true;
  bool mean = true;

  /// Comma-separated subset of rm,grm,tfam,tpfam,gpa,mean.
  static ModelSelection parse(std::string_view list);
  std::string to_list() const;
  bool includes(Variant v) const;

  friend bool operator==(const ModelSelection&, const ModelSelection&) = default;
};

struct AssessmentOptions {
  ModelSelection models;
  double k = 30.0;
  double b = 1.0;
};

struct ModelResult {
  Variant variant = Variant::Grm;
  double a = 0.0;
  CogPoint<double> cog;
  Characterization<double> characterization;
};

struct AssessmentReport {
  std::string cohort;
  GradeScale scale = GradeScale::standard();
  std::vector<std::int64_t> counts;
  std::vector<double> frequencies;
  AssessmentOptions options;

  double variance = 0.0;
  double quality_of_knowledge = 0.0;  // second-best grade or better
  std::optional<double> mean;
  std::optional<Characterization<double>> mean_characterization;
  std::optional<double> gpa;
  std::optional<Characterization<double>> gpa_characterization;
  std::vector<ModelResult> cogs;  // in rm, grm, tfam, tpfam order

  const ModelResult* find(Variant v) const;
};

/// Runs every selected model. Throws EmptyCohortError for an empty cohort and
/// a validation Error if a COG leaves its admissible range.
AssessmentReport assess(const Cohort& cohort, const GradeScale& scale,
                        const AssessmentOptions& options = {});

nlohmann::json to_json(const AssessmentReport& report);
/// Reads back a report written by to_json.
AssessmentReport report_from_json(const nlohmann::json& j);
Cohort cohort_of(const AssessmentReport& report);

/// Rounds half away from zero.
double round_to(double value, int digits);
std::string fixed2(double value);

std::string format_table(const AssessmentReport& report);

}  // namespace cogassess
