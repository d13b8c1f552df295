#pragma once

#include <stdexcept>
#include <string>

namespace cogassess {

/// Exit-code class of a failure, shared by the library and the CLI.
enum class ErrorKind {
  Input = 2,
  Validation = 3,
  Io = 4,
  UnknownGrade = 5,
  EmptyCohort = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

struct UnknownGradeError : Error {
  explicit UnknownGradeError(const std::string& label)
      : Error(ErrorKind::UnknownGrade, "unknown grade label '" + label + "'") {}
};

struct EmptyCohortError : Error {
  explicit EmptyCohortError(const std::string& name)
      : Error(ErrorKind::EmptyCohort, "cohort '" + name + "' has no students") {}
};

struct DegenerateMembershipError : Error {
  DegenerateMembershipError()
      : Error(ErrorKind::Input, "membership vector has no positive entry") {}
};

struct ModelMisuseError : Error {
  explicit ModelMisuseError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

struct DegenerateFigureError : Error {
  DegenerateFigureError() : Error(ErrorKind::Input, "figure has zero mass") {}
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace cogassess
