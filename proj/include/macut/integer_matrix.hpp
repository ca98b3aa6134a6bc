#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace macut {

using Integer = mpz_class;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer matrix; entries never overflow.
using IntegerMatrix = MatrixX<Integer>;

template <typename Scalar>
struct SmithForm {
  std::vector<Scalar> diagonal;  // positive, each divides the next
  Eigen::Index rank = 0;
};

namespace detail {

inline Integer abs_value(const Integer& x) { return abs(x); }
template <typename T>
T abs_value(const T& x) {
  return x < 0 ? -x : x;
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
template <typename T>
bool is_zero(const T& x) {
  return x == 0;
}

// Smallest |a_ij| != 0 in the trailing block starting at (from, from);
// ties go to the smallest (row, col). Returns false if the block is zero.
template <typename Scalar>
bool find_pivot(const MatrixX<Scalar>& a, Eigen::Index from, Eigen::Index& row, Eigen::Index& col) {
  bool found = false;
  Scalar best{};
  for (Eigen::Index j = from; j < a.cols(); ++j) {
    for (Eigen::Index i = from; i < a.rows(); ++i) {
      if (is_zero(a(i, j))) continue;
      Scalar mag = abs_value(a(i, j));
      if (!found || mag < best || (mag == best && (i < row || (i == row && j < col)))) {
        best = std::move(mag);
        row = i;
        col = j;
        found = true;
      }
    }
  }
  return found;
}

template <typename Scalar>
void add_row_multiple(MatrixX<Scalar>& a, Eigen::Index target, Eigen::Index source, const Scalar& q) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) a(target, j) -= q * a(source, j);
}

template <typename Scalar>
void add_col_multiple(MatrixX<Scalar>& a, Eigen::Index target, Eigen::Index source, const Scalar& q) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, target) -= q * a(i, source);
}

}  // namespace detail

/**
 * Invariant factors of an integer matrix by unimodular row and column moves.
 *
 * Works for any exact signed integer scalar: `Integer` for the general case,
 * or a machine integer when the caller knows entries stay small. The input
 * is taken by value and consumed as scratch space.
 */
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(MatrixX<Scalar> a) {
  using detail::is_zero;
  SmithForm<Scalar> out;
  const Eigen::Index limit = std::min(a.rows(), a.cols());

  for (Eigen::Index t = 0; t < limit; ++t) {
    Eigen::Index pr = t, pc = t;
    if (!detail::find_pivot(a, t, pr, pc)) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));

    for (;;) {
      bool clean = true;
      // Clear column t below the pivot; a nonzero remainder becomes the new pivot.
      for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
        if (is_zero(a(i, t))) continue;
        Scalar q = a(i, t) / a(t, t);
        detail::add_row_multiple(a, i, t, q);
        if (!is_zero(a(i, t))) {
          a.row(t).swap(a.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
        if (is_zero(a(t, j))) continue;
        Scalar q = a(t, j) / a(t, t);
        detail::add_col_multiple(a, j, t, q);
        if (!is_zero(a(t, j))) {
          a.col(t).swap(a.col(j));
          clean = false;
        }
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      Eigen::Index bad_row = -1;
      for (Eigen::Index i = t + 1; i < a.rows() && bad_row < 0; ++i) {
        for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
          Scalar r = a(i, j) % a(t, t);
          if (!is_zero(r)) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      for (Eigen::Index j = t; j < a.cols(); ++j) a(t, j) += a(bad_row, j);
    }
    out.diagonal.push_back(detail::abs_value(a(t, t)));
  }
  out.rank = static_cast<Eigen::Index>(out.diagonal.size());
  return out;
}

}  // namespace macut
