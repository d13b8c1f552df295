#pragma once

// Scalar support for the templated core: double for everyday use and an exact
// rational type for golden checks on integer cohorts.

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <cstdint>
#include <type_traits>

namespace cogassess {

using Rational = boost::rational<std::int64_t>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
inline constexpr bool is_exact_v = !std::is_floating_point_v<Scalar>;

/// Tolerance used by invariant checks: 1e-12 for floating point, zero for exact scalars.
template <typename Scalar>
Scalar invariant_tolerance() {
  if constexpr (is_exact_v<Scalar>) {
    return Scalar(0);
  } else {
    return Scalar(1e-12);
  }
}

template <typename Scalar>
Scalar abs_diff(const Scalar& a, const Scalar& b) {
  return a < b ? b - a : a - b;
}

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return boost::rational_cast<double>(v); }

}  // namespace cogassess

namespace Eigen {

template <>
struct NumTraits<cogassess::Rational> : GenericNumTraits<cogassess::Rational> {
  using Real = cogassess::Rational;
  using NonInteger = cogassess::Rational;
  using Nested = cogassess::Rational;
  using Literal = cogassess::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
