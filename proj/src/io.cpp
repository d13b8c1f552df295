#include "cogassess/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cogassess {

namespace {

std::string trim(std::string_view s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  auto b = std::find_if(s.begin(), s.end(), not_space);
  auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
  return b < e ? std::string(b, e) : std::string();
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw InputError("malformed CSV row " + std::to_string(line_no) + ": " + why);
}

template <typename T>
T parse_number(const std::string& text, std::size_t line_no) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  if constexpr (std::is_floating_point_v<T>) {
    // std::from_chars for double is unavailable on older toolchains.
    char* end = nullptr;
    value = std::strtod(first, &end);
    if (text.empty() || end != last) malformed(line_no, "'" + text + "' is not a number");
  } else {
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
      malformed(line_no, "'" + text + "' is not an integer");
    }
  }
  return value;
}

}  // namespace

GradeScale scale_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("grade scale JSON must be an array of {label, lo, hi}");
  std::vector<GradeScale::Grade> grades;
  for (const auto& g : j) {
    if (!g.is_object() || !g.contains("label") || !g.contains("lo") || !g.contains("hi") ||
        !g["label"].is_string() || !g["lo"].is_number() || !g["hi"].is_number()) {
      throw InputError("grade scale entry needs string label and numeric lo, hi");
    }
    grades.push_back({g["label"].get<std::string>(), {g["lo"].get<double>(), g["hi"].get<double>()}});
  }
  return GradeScale(std::move(grades));
}

nlohmann::json scale_to_json(const GradeScale& scale) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : scale.grades()) {
    j.push_back({{"label", g.label}, {"lo", g.interval.lo}, {"hi", g.interval.hi}});
  }
  return j;
}

GradeScale read_scale(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("grade scale " + path.string() + " is not valid JSON: " + e.what());
  }
  return scale_from_json(j);
}

Cohort parse_cohort_csv(std::istream& in, const GradeScale& scale, CsvFormat format,
                        const std::string& name) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split_row(trim(line));
      break;
    }
  }
  if (header.empty()) throw InputError("cohort CSV is empty");
  for (auto& h : header) h = lower(h);

  const bool counts_header = header == std::vector<std::string>{"grade", "count"};
  const bool scores_header = header == std::vector<std::string>{"student_id", "score"};
  if (format == CsvFormat::Auto) {
    if (counts_header) format = CsvFormat::Counts;
    else if (scores_header) format = CsvFormat::Scores;
    else malformed(line_no, "expected header 'grade,count' or 'student_id,score'");
  } else if (format == CsvFormat::Counts && !counts_header) {
    malformed(line_no, "expected header 'grade,count'");
  } else if (format == CsvFormat::Scores && !scores_header) {
    malformed(line_no, "expected header 'student_id,score'");
  }

  Cohort::Counts counts = Cohort::Counts::Zero(static_cast<Eigen::Index>(scale.size()));
  std::vector<bool> seen(scale.size(), false);
  std::vector<double> scores;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    const auto fields = split_row(row);
    if (fields.size() != 2) malformed(line_no, "expected 2 fields, got " + std::to_string(fields.size()));
    if (format == CsvFormat::Counts) {
      const std::size_t g = scale.index_of(fields[0]);
      if (seen[g]) malformed(line_no, "grade '" + fields[0] + "' listed twice");
      seen[g] = true;
      const auto count = parse_number<std::int64_t>(fields[1], line_no);
      if (count < 0) malformed(line_no, "negative count");
      counts(static_cast<Eigen::Index>(g)) = count;
    } else {
      if (fields[0].empty()) malformed(line_no, "missing student_id");
      scores.push_back(parse_number<double>(fields[1], line_no));
    }
  }
  if (format == CsvFormat::Scores) return classify_scores(scores, scale, name);
  return Cohort(name, std::move(counts));
}

Cohort read_cohort_csv(const std::filesystem::path& path, const GradeScale& scale, CsvFormat format) {
  std::istringstream in(read_text(path));
  return parse_cohort_csv(in, scale, format, path.stem().string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

nlohmann::json to_json(const ValidationRecord& r) {
  return {
      {"distribution", std::vector<double>(r.y.begin(), r.y.end())},
      {"model", std::string(to_string(r.variant))},
      {"n", r.n},
      {"k", r.k},
      {"b", r.b},
      {"closed_form", {{"xc", r.closed.xc}, {"yc", r.closed.yc}}},
      {"oracle", {{"xc", r.oracle.xc}, {"yc", r.oracle.yc}}},
      {"dx", r.dx},
      {"dy", r.dy},
      {"pass", r.pass},
  };
}

}  // namespace cogassess
