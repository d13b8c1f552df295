#pragma once

// File formats: cohort CSV (grade,count or student_id,score), grade-scale JSON
// (array of {label, lo, hi}) and validation records as JSON lines.

#include "cogassess/distributions.hpp"
#include "cogassess/geometry_oracle.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace cogassess {

enum class CsvFormat { Auto, Counts, Scores };

GradeScale scale_from_json(const nlohmann::json& j);
nlohmann::json scale_to_json(const GradeScale& scale);
GradeScale read_scale(const std::filesystem::path& path);

/// Parses cohort CSV. Grades may appear in any order; missing grades count
/// zero. Auto picks the format from the header.
Cohort parse_cohort_csv(std::istream& in, const GradeScale& scale, CsvFormat format,
                        const std::string& name);
Cohort read_cohort_csv(const std::filesystem::path& path, const GradeScale& scale,
                       CsvFormat format = CsvFormat::Auto);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

nlohmann::json to_json(const ValidationRecord& r);

}  // namespace cogassess
