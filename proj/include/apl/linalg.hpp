#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <vector>

#include "apl/field.hpp"

namespace apl {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
Vector<S> unit_vector(int n, int i) {
  Vector<S> v = Vector<S>::Constant(n, S(0));
  v(i) = S(1);
  return v;
}

template <class S>
Matrix<S> zero_matrix(int r, int c) {
  return Matrix<S>::Constant(r, c, S(0));
}

template <class S>
Matrix<S> identity_matrix(int n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class A, class B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan reduction; the pivot in each column is the first nonzero entry
// at or below the current row, so the output is reproducible.
template <class S>
RowEchelon<S> rref(Matrix<S> m) {
  RowEchelon<S> out;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
int rank(const Matrix<S>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

// Basis of {x : m x = 0}, one vector per free column in increasing order,
// each with a 1 in its free coordinate.
template <class S>
std::vector<Vector<S>> nullspace(const Matrix<S>& m) {
  const int cols = static_cast<int>(m.cols());
  auto e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vector<S>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<S> v = Vector<S>::Constant(cols, S(0));
    v(f) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r]) = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Bareiss fraction-free determinant.
template <class S>
S determinant(Matrix<S> m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DimensionMismatch("determinant of non-square matrix");
  if (n == 0) return S(1);
  S sign(1);
  S prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(m(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(m(i, k))) {
          p = i;
          break;
        }
      if (p < 0) return S(0);
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <class S>
bool is_invertible(const Matrix<S>& m) {
  return m.rows() == m.cols() && !is_zero(determinant(m));
}

template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DimensionMismatch("inverse of non-square matrix");
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity_matrix<S>(n);
  auto e = rref(aug);
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw SingularMatrix("matrix is singular");
  return e.reduced.rightCols(n);
}

// Some x with m x = b, or nothing when the system is inconsistent.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& b) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (b.size() != rows) throw DimensionMismatch("right-hand side length");
  Matrix<S> aug(rows, cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = b;
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Vector<S> x = Vector<S>::Constant(cols, S(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(r, cols);
  return x;
}

// Coefficients of det(t I - m), highest degree first (leading 1), via the
// division-free Berkowitz recurrence.
template <class S>
std::vector<S> charpoly(const Matrix<S>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DimensionMismatch("charpoly of non-square matrix");
  std::vector<S> c{S(1)};
  for (int k = 0; k < n; ++k) {
    // Leading principal (k+1)-block: [[A, C], [R, a]] with A the k-block.
    S a = m(k, k);
    Matrix<S> A = m.topLeftCorner(k, k);
    Vector<S> C = m.block(0, k, k, 1);
    Eigen::Matrix<S, 1, Eigen::Dynamic> R = m.block(k, 0, 1, k);
    // Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
    std::vector<S> t(k + 2, S(0));
    t[0] = S(1);
    t[1] = -a;
    Vector<S> v = C;
    for (int j = 2; j <= k + 1; ++j) {
      S s(0);
      for (int i = 0; i < k; ++i) s += R(i) * v(i);
      t[j] = -s;
      v = A * v;
    }
    std::vector<S> next(k + 2, S(0));
    for (int i = 0; i < k + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(c.size()); ++j) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

template <class S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace apl
