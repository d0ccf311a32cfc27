#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "crossed_s/cyclo.hpp"

namespace crossed_s {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMat = Mat<Cyclo>;
using CVec = Vec<Cyclo>;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational conj(const Rational& q) { return q; }

template <class Scalar>
struct Rref {
  Mat<Scalar> r;
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class Scalar>
Rref<Scalar> rref(Mat<Scalar> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < cols && row < rows; ++c) {
    Eigen::Index p = row;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, c);
    for (Eigen::Index j = c; j < cols; ++j)
      if (!is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || is_zero(a(r, c))) continue;
      Scalar f = a(r, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!is_zero(a(row, j))) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <class Scalar>
int rank(const Mat<Scalar>& a) {
  return static_cast<int>(rref(a).pivots.size());
}

/// Columns form a basis of {x : a x = 0}; one basis vector per free column,
/// with a 1 in that free position.
template <class Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& a) {
  const Eigen::Index cols = a.cols();
  Rref<Scalar> e = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!is_zero(e.r(r, f))) basis(e.pivots[r], k) = -e.r(r, f);
  }
  return basis;
}

/// Some x with a x = b, or nullopt when inconsistent.
template <class Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  Rref<Scalar> e = rref(aug);
  for (int p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat<Scalar> x = Mat<Scalar>::Zero(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x.row(e.pivots[r]) = e.r.block(r, a.cols(), 1, b.cols());
  return x;
}

template <class Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << a, Mat<Scalar>::Identity(n, n);
  Rref<Scalar> e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[n - 1] >= n) return std::nullopt;
  return Mat<Scalar>(e.r.rightCols(n));
}

/// Product that skips zero entries; faster than the generic kernel for sparse exact matrices.
template <class Scalar>
Mat<Scalar> mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = Mat<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = Mat<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class Scalar>
Mat<Scalar> conj(const Mat<Scalar>& a) {
  return a.unaryExpr([](const Scalar& x) { return conj(x); });
}

template <class Scalar>
Mat<Scalar> adjoint(const Mat<Scalar>& a) {
  return conj(a).transpose();
}

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class Scalar>
bool equal(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

template <class Scalar>
Scalar trace(const Mat<Scalar>& a) {
  Scalar acc(0);
  for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) acc += a(i, i);
  return acc;
}

}  // namespace crossed_s
