#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

#include "gdp/rational.hpp"

namespace Eigen {

/// Plug gdp::Rational into Eigen's scalar machinery. All operations stay
/// exact: epsilon and dummy precision are literal zero, so Eigen never
/// introduces approximate comparisons.
template <>
struct NumTraits<gdp::Rational> : GenericNumTraits<gdp::Rational> {
  using Real = gdp::Rational;
  using NonInteger = gdp::Rational;
  using Nested = gdp::Rational;
  using Literal = long long;

  static inline Real epsilon() { return gdp::Rational(0); }
  static inline Real dummy_precision() { return gdp::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 120,
  };
};

}  // namespace Eigen

namespace gdp {

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solves A x = b by fraction-exact Gaussian elimination. Pivots are chosen
/// positionally (first nonzero in the column), which is deterministic and
/// safe because there is no rounding to control. Throws SingularMatrixError
/// when A is not invertible.
RVector solve_linear(const RMatrix& a, const RVector& b);

/// Exact determinant via elimination (avoids Eigen's cofactor fallbacks for
/// large sizes).
Rational determinant(const RMatrix& a);

/// det of the top-left k-by-k block for k = 1..n.
std::vector<Rational> leading_principal_minors(const RMatrix& a);

/// Sylvester test: symmetric M is negative definite iff the k-th leading
/// principal minor has sign (-1)^k for every k.
bool is_negative_definite(const RMatrix& a);

}  // namespace gdp
