#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apl/identities.hpp"

namespace apl {

enum class FormMode { cocycle, apl_invariant, assoc_invariant };

inline std::string token(FormMode m) {
  switch (m) {
    case FormMode::cocycle: return "cocycle";
    case FormMode::apl_invariant: return "apl-invariant";
    case FormMode::assoc_invariant: return "assoc-invariant";
  }
  throw UnknownId("form mode");
}

inline FormMode form_mode_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  for (auto m : {FormMode::cocycle, FormMode::apl_invariant, FormMode::assoc_invariant})
    if (token(m) == t) return m;
  throw UnknownId("unknown form mode '" + s + "'");
}

class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Linear space of rows x cols matrices given by a basis.
template <class S>
struct MatrixSpace {
  int rows = 0;
  int cols = 0;
  std::vector<Matrix<S>> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
  BilinearForm<S> form(int i) const { return BilinearForm<S>(basis[i]); }
};

template <class S>
using FormSpace = MatrixSpace<S>;

template <class S>
bool contains(const MatrixSpace<S>& space, const Matrix<S>& m) {
  if (m.rows() != space.rows || m.cols() != space.cols) return false;
  const int len = space.rows * space.cols;
  Matrix<S> a(len, space.dimension() + 1);
  for (int b = 0; b <= space.dimension(); ++b) {
    const Matrix<S>& src = b < space.dimension() ? space.basis[b] : m;
    for (int r = 0; r < space.rows; ++r)
      for (int c = 0; c < space.cols; ++c) a(r * space.cols + c, b) = src(r, c);
  }
  return rank(a) == rank(Matrix<S>(a.leftCols(space.dimension())));
}

namespace detail {

// Column index of unknown B(a,b): packed (i<=j) row-major when symmetric.
inline int form_unknown(int n, int a, int b, bool symmetric) {
  if (!symmetric) return a * n + b;
  if (a > b) std::swap(a, b);
  return a * n - a * (a - 1) / 2 + (b - a);
}

template <class S>
Matrix<S> form_from_unknowns(int n, const Vector<S>& v, bool symmetric) {
  Matrix<S> m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = v(form_unknown(n, a, b, symmetric));
  return m;
}

// Adds coef * B(e_i op e_j, e_k) to an equation row, in unknowns.
template <class S>
void add_product_first(std::vector<S>& row, const Algebra<S>& op, const S& coef, int i, int j, int k,
                       bool symmetric) {
  const int n = op.dim();
  const S* p = op.product_ptr(i, j);
  for (int l = 0; l < n; ++l)
    if (!is_zero(p[l])) row[form_unknown(n, l, k, symmetric)] += coef * p[l];
}

// Adds coef * B(e_k, e_i op e_j).
template <class S>
void add_product_second(std::vector<S>& row, const Algebra<S>& op, const S& coef, int k, int i, int j,
                        bool symmetric) {
  const int n = op.dim();
  const S* p = op.product_ptr(i, j);
  for (int l = 0; l < n; ++l)
    if (!is_zero(p[l])) row[form_unknown(n, k, l, symmetric)] += coef * p[l];
}

template <class S>
Matrix<S> form_system(const Algebra<S>& alg, FormMode mode, bool symmetric) {
  const int n = alg.dim();
  const int unknowns = symmetric ? n * (n + 1) / 2 : n * n;
  const Algebra<S> br = mode == FormMode::apl_invariant ? commutator_algebra(alg) : alg;
  std::vector<std::vector<S>> rows;
  const S one(1), minus(-1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<S> row(unknowns, S(0));
        switch (mode) {
          case FormMode::cocycle:
            add_product_first(row, alg, one, i, j, k, symmetric);
            add_product_first(row, alg, one, j, k, i, symmetric);
            add_product_first(row, alg, one, k, i, j, symmetric);
            break;
          case FormMode::apl_invariant:
            // B(e_i o e_j, e_k) - B(e_j, [e_i, e_k])
            add_product_first(row, alg, one, i, j, k, symmetric);
            add_product_second(row, br, minus, j, i, k, symmetric);
            break;
          case FormMode::assoc_invariant:
            // B(e_i e_j, e_k) - B(e_i, e_j e_k)
            add_product_first(row, alg, one, i, j, k, symmetric);
            add_product_second(row, alg, minus, i, j, k, symmetric);
            break;
        }
        bool any = false;
        for (const auto& v : row)
          if (!is_zero(v)) any = true;
        if (any) rows.push_back(std::move(row));
      }
  Matrix<S> m = zero_matrix<S>(static_cast<int>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace detail

// The cocycle mode reads alg as the bracket, apl_invariant as the
// anti-pre-Lie product (its commutator is formed here), assoc_invariant as
// the associative product.
template <class S>
FormSpace<S> solve_form_space(const Algebra<S>& alg, FormMode mode, bool symmetric) {
  const int n = alg.dim();
  FormSpace<S> out{n, n, {}};
  for (const auto& v : nullspace(detail::form_system(alg, mode, symmetric)))
    out.basis.push_back(detail::form_from_unknowns(n, v, symmetric));
  return out;
}

template <class S>
S form_value(const Matrix<S>& b, const Vector<S>& x, const Vector<S>& y) {
  return x.dot(b * y);
}

// Direct evaluation of the mode's condition on basis triples.
template <class S>
CheckReport<S> check_form(const Algebra<S>& alg, const BilinearForm<S>& form, FormMode mode) {
  const int n = alg.dim();
  if (form.dim() != n) throw DimensionMismatch("form size differs from algebra dimension");
  const Algebra<S> br = mode == FormMode::apl_invariant ? commutator_algebra(alg) : alg;
  const Matrix<S>& b = form.matrix;
  auto e = [n](int i) { return unit_vector<S>(n, i); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        S r(0);
        switch (mode) {
          case FormMode::cocycle:
            r = form_value(b, alg.product(i, j), e(k)) + form_value(b, alg.product(j, k), e(i)) +
                form_value(b, alg.product(k, i), e(j));
            break;
          case FormMode::apl_invariant:
            r = form_value(b, alg.product(i, j), e(k)) - form_value(b, e(j), br.product(i, k));
            break;
          case FormMode::assoc_invariant:
            r = form_value(b, alg.product(i, j), e(k)) - form_value(b, e(i), alg.product(j, k));
            break;
        }
        if (!is_zero(r)) return CheckReport<S>::failure(token(mode), {i, j, k}, Vector<S>::Constant(1, r));
      }
  return CheckReport<S>::ok();
}

template <class S>
struct MemberSearch {
  std::optional<Matrix<S>> member;
  std::vector<long> coefficients;
  int radius = 0;  // radius at which the member was found, or the bound searched
};

// Integer combinations sum c_i basis_i with max |c_i| = r for r = 1..radius;
// within a shell, lexicographic order with coefficient values ordered
// 0, 1, -1, 2, -2, ...
template <class S>
MemberSearch<S> nondegenerate_member(const MatrixSpace<S>& space, int radius = 3) {
  MemberSearch<S> out;
  out.radius = radius;
  const int m = space.dimension();
  if (m == 0 || space.rows != space.cols) return out;
  for (int r = 1; r <= radius; ++r) {
    std::vector<long> values;
    values.push_back(0);
    for (long v = 1; v <= r; ++v) {
      values.push_back(v);
      values.push_back(-v);
    }
    const int base = static_cast<int>(values.size());
    std::vector<int> digit(m, 0);
    while (true) {
      long top = 0;
      for (int i = 0; i < m; ++i) top = std::max(top, std::labs(values[digit[i]]));
      if (top == r) {
        Matrix<S> c = zero_matrix<S>(space.rows, space.cols);
        for (int i = 0; i < m; ++i)
          if (values[digit[i]] != 0) c += S(values[digit[i]]) * space.basis[i];
        if (!is_zero(determinant(c))) {
          out.member = c;
          out.radius = r;
          for (int i = 0; i < m; ++i) out.coefficients.push_back(values[digit[i]]);
          return out;
        }
      }
      int pos = m - 1;
      while (pos >= 0 && ++digit[pos] == base) digit[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

template <class S>
void require_compatible_form(const Algebra<S>& lie, const BilinearForm<S>& form) {
  if (form.dim() != lie.dim()) throw DimensionMismatch("form size differs from Lie algebra dimension");
  if (!form.is_symmetric()) throw PreconditionFailed("form is not symmetric");
  if (!form.is_nondegenerate()) throw PreconditionFailed("form is degenerate");
  if (!check_form(lie, form, FormMode::cocycle).pass())
    throw PreconditionFailed("form is not a commutative 2-cocycle");
}

// The unique product with B(x o y, z) = B(y, [x, z]).
template <class S>
Algebra<S> induce_compatible_product(const Algebra<S>& lie, const BilinearForm<S>& form) {
  require_compatible_form(lie, form);
  const int n = lie.dim();
  const Matrix<S> binv = inverse(Matrix<S>(form.matrix.transpose()));
  Algebra<S> out(n, Role::circ, lie.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector<S> w(n);
      for (int k = 0; k < n; ++k) w(k) = form.value(unit_vector<S>(n, j), lie.product(i, k));
      out.set(i, j, binv * w);
    }
  return out;
}

// 2B([x,w],[y,z]) - B([x o y, w], z) + B([x o z, w], y) on basis 4-tuples.
template <class S>
CheckReport<S> check_admissibility_form(const Algebra<S>& lie, const BilinearForm<S>& form) {
  const Algebra<S> circ = induce_compatible_product(lie, form);
  const int n = lie.dim();
  auto e = [n](int i) { return unit_vector<S>(n, i); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          S r = S(2) * form.value(lie.product(x, w), lie.product(y, z)) -
                form.value(multiply(lie, circ.product(x, y), e(w)), e(z)) +
                form.value(multiply(lie, circ.product(x, z), e(w)), e(y));
          if (!is_zero(r))
            return CheckReport<S>::failure("admissibility-form", {x, y, z, w}, Vector<S>::Constant(1, r));
        }
  return CheckReport<S>::ok();
}

// All phi : V_A -> V_B with phi rhoA(x) = rhoB(x) phi.
template <class S>
MatrixSpace<S> solve_intertwiners(const Representation<S>& rho_a, const Representation<S>& rho_b) {
  if (rho_a.algebra_dim() != rho_b.algebra_dim())
    throw DimensionMismatch("representations of algebras of different dimension");
  const int ma = rho_a.carrier_dim;
  const int mb = rho_b.carrier_dim;
  const int unknowns = ma * mb;
  auto idx = [ma](int r, int c) { return r * ma + c; };
  std::vector<std::vector<S>> rows;
  for (int i = 0; i < rho_a.algebra_dim(); ++i) {
    const Matrix<S>& a = rho_a.mats[i];
    const Matrix<S>& b = rho_b.mats[i];
    for (int p = 0; p < mb; ++p)
      for (int q = 0; q < ma; ++q) {
        std::vector<S> row(unknowns, S(0));
        for (int s = 0; s < ma; ++s)
          if (!is_zero(a(s, q))) row[idx(p, s)] += a(s, q);
        for (int s = 0; s < mb; ++s)
          if (!is_zero(b(p, s))) row[idx(s, q)] -= b(p, s);
        rows.push_back(std::move(row));
      }
  }
  Matrix<S> m = zero_matrix<S>(static_cast<int>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  MatrixSpace<S> out{mb, ma, {}};
  for (const auto& v : nullspace(m)) {
    Matrix<S> phi(mb, ma);
    for (int r = 0; r < mb; ++r)
      for (int c = 0; c < ma; ++c) phi(r, c) = v(idx(r, c));
    out.basis.push_back(std::move(phi));
  }
  return out;
}

}  // namespace apl
