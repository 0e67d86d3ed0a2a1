#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subfan/rational.hpp"

namespace subfan {

class RankDeficientError : public std::runtime_error {
 public:
  RankDeficientError(Eigen::Index rank, Eigen::Index rows)
      : std::runtime_error("matrix has rank " + std::to_string(rank) + " < " +
                           std::to_string(rows) + " rows"),
        rank_(rank) {}
  Eigen::Index rank() const { return rank_; }

 private:
  Eigen::Index rank_;
};

template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<Eigen::Index> pivots;
};

// Reduced row echelon form over an exact field.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e{m.eval(), {}};
  auto& a = e.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Scalar f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

// Rows span the right kernel: m * result^T = 0.
template <typename Derived>
Mat<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = rref(m);
  const Eigen::Index n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  const Eigen::Index dim = n - static_cast<Eigen::Index>(e.pivots.size());
  Mat<Scalar> basis = Mat<Scalar>::Zero(dim, n);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(k, f) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(k, e.pivots[r]) = -e.reduced(static_cast<Eigen::Index>(r), f);
    ++k;
  }
  return basis;
}

// Gale dual: basis of the kernel of a full row rank matrix.
template <typename Derived>
Mat<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  auto r = rank(m);
  if (r != m.rows()) throw RankDeficientError(r, m.rows());
  return nullspace(m);
}

// Solves a x = b for square nonsingular a; nullopt when singular.
template <typename DA, typename DB>
std::optional<Mat<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& a,
                                              const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  Mat<Scalar> aug(n, n + b.cols());
  aug << a, b;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != col) aug.row(p).swap(aug.row(col));
    Scalar inv = Scalar(1) / aug(col, col);
    for (Eigen::Index j = col; j < aug.cols(); ++j) aug(col, j) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      Scalar f = aug(i, col);
      for (Eigen::Index j = col; j < aug.cols(); ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  return Mat<Scalar>(aug.rightCols(b.cols()));
}

template <typename Derived>
std::optional<Mat<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  return solve(a, Mat<Scalar>::Identity(a.rows(), a.rows()));
}

// Fraction-free elimination over an integral domain with exact division.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  Mat<Scalar> a = m;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Scalar(-a(n - 1, n - 1));
}

// Clears denominators row by row, then runs Bareiss over the integers.
Rational determinant(const RationalMatrix& m);

template <typename Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& m) {
  return determinant(RationalMatrix(m));
}

// Positive multiple of v with coprime integer entries.
RationalVector primitive(const RationalVector& v);

RationalMatrix select_columns(const RationalMatrix& m, const std::vector<int>& cols);

}  // namespace subfan
