#include "gdp/linalg.hpp"

namespace gdp {

namespace {

/// Reduces the working matrix in place, returning the determinant sign flip
/// count. Used by both the solver (with an augmented column) and the
/// determinant routine.
int eliminate(RMatrix& m) {
  const Eigen::Index n = m.rows();
  int swaps = 0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row) {
      if (!m(row, col).is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;  // caller decides what a zero column means
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      ++swaps;
    }
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (m(row, col).is_zero()) continue;
      const Rational factor = m(row, col) / m(col, col);
      for (Eigen::Index k = col; k < m.cols(); ++k) {
        m(row, k) -= factor * m(col, k);
      }
    }
  }
  return swaps;
}

}  // namespace

RVector solve_linear(const RMatrix& a, const RVector& b) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("solve_linear: matrix must be square");
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  const Eigen::Index n = a.rows();
  RMatrix work(n, n + 1);
  work.leftCols(n) = a;
  work.col(n) = b;
  eliminate(work);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (work(i, i).is_zero()) throw SingularMatrixError("solve_linear: singular matrix");
  }
  RVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational acc = work(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= work(i, j) * x(j);
    x(i) = acc / work(i, i);
  }
  return x;
}

Rational determinant(const RMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  if (a.rows() == 0) return Rational(1);
  RMatrix work = a;
  const int swaps = eliminate(work);
  Rational det(swaps % 2 == 0 ? 1 : -1);
  for (Eigen::Index i = 0; i < work.rows(); ++i) det *= work(i, i);
  return det;
}

std::vector<Rational> leading_principal_minors(const RMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("leading_principal_minors: matrix must be square");
  std::vector<Rational> minors;
  minors.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index k = 1; k <= a.rows(); ++k) {
    minors.push_back(determinant(a.topLeftCorner(k, k)));
  }
  return minors;
}

bool is_negative_definite(const RMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("is_negative_definite: matrix must be square");
  const auto minors = leading_principal_minors(a);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int expected_sign = (k % 2 == 0) ? -1 : 1;  // minor index k is order k+1
    if (minors[k].sign() != expected_sign) return false;
  }
  return true;
}

}  // namespace gdp
