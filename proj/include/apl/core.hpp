#pragma once

#include "apl/algebra.hpp"

namespace apl {

enum class Side { left, right };

template <class S>
Vector<S> multiply(const Algebra<S>& alg, const Vector<S>& x, const Vector<S>& y) {
  const int n = alg.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("multiply: vector length differs from dim");
  Vector<S> out = Vector<S>::Constant(n, S(0));
  for (int i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y(j))) continue;
      S w = x(i) * y(j);
      const S* p = alg.product_ptr(i, j);
      for (int k = 0; k < n; ++k)
        if (!is_zero(p[k])) out(k) += w * p[k];
    }
  }
  return out;
}

// New basis f_j = sum_i S(i,j) e_i; returns the structure constants in f.
template <class S>
Algebra<S> change_basis(const Algebra<S>& alg, const Matrix<S>& s) {
  const int n = alg.dim();
  if (s.rows() != n || s.cols() != n) throw DimensionMismatch("change_basis: matrix size");
  Matrix<S> sinv = inverse(s);
  Algebra<S> out(n, alg.role(), alg.labels());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.set(a, b, sinv * multiply(alg, Vector<S>(s.col(a)), Vector<S>(s.col(b))));
  return out;
}

template <class S>
Algebra<S> change_basis(const Algebra<S>& alg, const LinearMap<S>& s) {
  return change_basis(alg, s.matrix);
}

template <class S>
Algebra<S> commutator_algebra(const Algebra<S>& alg) {
  const int n = alg.dim();
  Algebra<S> out(n, Role::bracket, alg.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = alg(i, j, k) - alg(j, i, k);
  return out;
}

// Matrix of y -> x op y (left) or y -> y op x (right).
template <class S>
LinearMap<S> mult_operator(const Algebra<S>& alg, const Vector<S>& x, Side side) {
  const int n = alg.dim();
  if (x.size() != n) throw DimensionMismatch("mult_operator: vector length differs from dim");
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < n; ++j) {
      const S* p = side == Side::left ? alg.product_ptr(i, j) : alg.product_ptr(j, i);
      for (int k = 0; k < n; ++k) m(k, j) += x(i) * p[k];
    }
  }
  return LinearMap<S>(std::move(m), side == Side::left ? "L" : "R");
}

// rho(e_i) = sign * L(e_i).
template <class S>
Representation<S> left_multiplication_rep(const Algebra<S>& alg, const S& sign = S(1)) {
  const int n = alg.dim();
  std::vector<Matrix<S>> mats;
  for (int i = 0; i < n; ++i) mats.push_back(sign * mult_operator(alg, unit_vector<S>(n, i), Side::left).matrix);
  return Representation<S>(n, std::move(mats));
}

// (-L, A): the representation of the commutator carried by an anti-pre-Lie algebra.
template <class S>
Representation<S> negative_left_rep(const Algebra<S>& alg) {
  return left_multiplication_rep(alg, S(-1));
}

template <class S>
Representation<S> adjoint_representation(const Algebra<S>& lie) {
  return left_multiplication_rep(lie, S(1));
}

template <class S>
Representation<S> dual_representation(const Representation<S>& rho) {
  std::vector<Matrix<S>> mats;
  for (const auto& m : rho.mats) mats.push_back(-m.transpose());
  return Representation<S>(rho.carrier_dim, std::move(mats));
}

template <class S>
Representation<S> trivial_representation(int algebra_dim, int carrier_dim) {
  return Representation<S>(carrier_dim,
                           std::vector<Matrix<S>>(algebra_dim, zero_matrix<S>(carrier_dim, carrier_dim)));
}

template <class S>
Algebra<S> scale(const Algebra<S>& alg, const S& c) {
  Algebra<S> out = alg;
  for (auto& v : out.data()) v *= c;
  return out;
}

template <class S>
Algebra<S> zero_algebra(int n, Role role = Role::circ) {
  return Algebra<S>(n, role);
}

template <class S>
Algebra<S> with_role(Algebra<S> alg, Role r) {
  alg.set_role(r);
  return alg;
}

template <class T, class S>
Algebra<T> cast_algebra(const Algebra<S>& a) {
  Algebra<T> out(a.dim(), a.role(), a.labels());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = field_cast<T>(a.data()[i]);
  return out;
}

template <class T, class S>
Matrix<T> cast_matrix(const Matrix<S>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = field_cast<T>(m(i, j));
  return out;
}

template <class S>
bool is_skew_symmetric_tensor(const Algebra<S>& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a(i, j, k) != -a(j, i, k)) return false;
  return true;
}

}  // namespace apl
