#pragma once

#include <array>
#include <set>
#include <string>

#include "apl/cocycles.hpp"
#include "apl/operators.hpp"

namespace apl {

// x o y = f(y) x + g(x) y
template <class S>
Algebra<S> from_linear_functions(const Vector<S>& f, const Vector<S>& g, int dim) {
  if (dim < 2) throw std::invalid_argument("linear-function construction needs dim >= 2");
  if (f.size() != dim || g.size() != dim) throw DimensionMismatch("functional length differs from dim");
  Algebra<S> a(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      a(i, j, i) += f(j);
      a(i, j, j) += g(i);
    }
  return a;
}

// The case split under which the product above is anti-pre-Lie: f = 0 or g = 2f.
template <class S>
bool linear_functions_condition(const Vector<S>& f, const Vector<S>& g) {
  bool f_zero = true, g_two_f = true;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (!is_zero(f(i))) f_zero = false;
    if (g(i) != S(2) * f(i)) g_two_f = false;
  }
  return f_zero || g_two_f;
}

// x o y = B(x,y) s - B(x,s) y
template <class S>
Algebra<S> from_symmetric_form(const BilinearForm<S>& form, const Vector<S>& s) {
  if (!form.is_symmetric()) throw PreconditionFailed("form is not symmetric");
  const int n = form.dim();
  if (s.size() != n) throw DimensionMismatch("vector length differs from form size");
  Algebra<S> a(n);
  Vector<S> bs = form.matrix * s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) a(i, j, k) += form(i, j) * s(k);
      a(i, j, j) -= bs(i);
    }
  return a;
}

// x o' y = x o y + q (y o x)
template <class S>
Algebra<S> q_transform(const Algebra<S>& alg, const S& q) {
  const int n = alg.dim();
  Algebra<S> out(n, alg.role(), alg.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = alg(i, j, k) + q * alg(j, i, k);
  return out;
}

// x * y = -(1/3) x o y + (2/3) y o x, inverting q_transform(., 2).
template <class S>
Algebra<S> exact_inverse_two_transform(const Algebra<S>& alg) {
  if (is_zero(S(3))) throw std::domain_error("inverse 2-transform needs characteristic != 3");
  const S third = S(1) / S(3);
  const int n = alg.dim();
  Algebra<S> out(n, alg.role(), alg.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = third * (S(2) * alg(j, i, k) - alg(i, j, k));
  return out;
}

enum class PairMode { novikov, admissible_novikov, lie };

inline std::string token(PairMode m) {
  switch (m) {
    case PairMode::novikov: return "novikov";
    case PairMode::admissible_novikov: return "admissible-novikov";
    case PairMode::lie: return "lie";
  }
  throw UnknownId("pair mode");
}

inline PairMode pair_mode_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  for (auto m : {PairMode::novikov, PairMode::admissible_novikov, PairMode::lie})
    if (token(m) == t) return m;
  if (t == "admissible") return PairMode::admissible_novikov;
  throw UnknownId("unknown pair mode '" + s + "'");
}

template <class S>
void require_commutative_associative(const Algebra<S>& assoc) {
  if (!check_identity(assoc, IdentityId::commutative).pass() || !check_identity(assoc, IdentityId::associative).pass())
    throw PreconditionFailed("dot product is not commutative associative");
}

namespace detail {

// x.f(y) + c g(x).y as a structure tensor, f, g given as matrices.
template <class S>
Algebra<S> dot_combination(const Algebra<S>& dot, const std::vector<std::pair<S, std::array<const Matrix<S>*, 2>>>& terms,
                           Role role) {
  const int n = dot.dim();
  Algebra<S> out(n, role, dot.labels());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector<S> acc = Vector<S>::Constant(n, S(0));
      for (const auto& [c, fg] : terms) {
        Vector<S> x = unit_vector<S>(n, i), y = unit_vector<S>(n, j);
        if (fg[0]) x = *fg[0] * x;
        if (fg[1]) y = *fg[1] * y;
        acc += c * multiply(dot, x, y);
      }
      out.set(i, j, acc);
    }
  return out;
}

}  // namespace detail

// novikov: x.Q(y); admissible_novikov: x.Q(y) + 2 Q(x).y; lie: Q(x).y - x.Q(y).
template <class S>
Algebra<S> pair_based_product(const Algebra<S>& assoc, const LinearMap<S>& p, const LinearMap<S>& q, PairMode mode) {
  require_commutative_associative(assoc);
  if (!check_admissible_pair(assoc, p, q).pass()) throw PreconditionFailed("(P, Q) is not an admissible pair");
  const Matrix<S>* qm = &q.matrix;
  switch (mode) {
    case PairMode::novikov:
      return detail::dot_combination<S>(assoc, {{S(1), {nullptr, qm}}}, Role::star);
    case PairMode::admissible_novikov:
      return detail::dot_combination<S>(assoc, {{S(1), {nullptr, qm}}, {S(2), {qm, nullptr}}}, Role::circ);
    case PairMode::lie:
      return detail::dot_combination<S>(assoc, {{S(1), {qm, nullptr}}, {S(-1), {nullptr, qm}}}, Role::bracket);
  }
  throw UnknownId("pair mode");
}

// Qhat = B^-1 Q^T B, the adjoint of Q with respect to B.
template <class S>
LinearMap<S> adjoint_operator(const Algebra<S>& assoc, const BilinearForm<S>& form, const LinearMap<S>& q) {
  if (!form.is_symmetric()) throw PreconditionFailed("form is not symmetric");
  if (!form.is_nondegenerate()) throw PreconditionFailed("form is degenerate");
  if (!check_form(assoc, form, FormMode::assoc_invariant).pass())
    throw PreconditionFailed("form is not invariant on the associative algebra");
  return LinearMap<S>(inverse(form.matrix) * q.matrix.transpose() * form.matrix, "Qhat");
}

template <class S>
struct TripleProducts {
  Algebra<S> circ1, circ2, circ3;
};

// For a derivation Q of a Frobenius algebra (A, ., B):
//   x o1 y = x.Q(y) + 2 Q(x).y
//   x o2 y = -x.Qhat(y) - 2 Qhat(x).y
//   x o3 y = Q(x).y + x.Q(y) - Qhat(x).y, induced from B on the bracket of Q.
template <class S>
TripleProducts<S> triple_products(const Algebra<S>& assoc, const LinearMap<S>& q, const BilinearForm<S>& form) {
  LinearMap<S> qhat = adjoint_operator(assoc, form, q);
  LinearMap<S> minus_qhat(-qhat.matrix, "-Qhat");
  Algebra<S> bracket = pair_based_product(assoc, q, q, PairMode::lie);
  return {pair_based_product(assoc, q, q, PairMode::admissible_novikov),
          pair_based_product(assoc, q, minus_qhat, PairMode::admissible_novikov),
          induce_compatible_product(bracket, form)};
}

template <class S>
Algebra<S> circ3_formula(const Algebra<S>& assoc, const LinearMap<S>& q, const LinearMap<S>& qhat) {
  return detail::dot_combination<S>(
      assoc, {{S(1), {&q.matrix, nullptr}}, {S(1), {nullptr, &q.matrix}}, {S(-1), {&qhat.matrix, nullptr}}},
      Role::circ);
}

// [x+u, y+v] = [x,y] + rho(x)v - rho(y)u on g + V.
template <class S>
Algebra<S> semidirect_lie(const Algebra<S>& lie, const Representation<S>& rho) {
  if (!is_representation(lie, rho).pass()) throw PreconditionFailed("rho is not a representation");
  const int n = lie.dim();
  const int m = rho.carrier_dim;
  Algebra<S> out(n + m, Role::bracket);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = lie(i, j, k);
    for (int v = 0; v < m; ++v)
      for (int k = 0; k < m; ++k) {
        out(i, n + v, n + k) = rho.mats[i](k, v);
        out(n + v, i, n + k) = -rho.mats[i](k, v);
      }
  }
  return out;
}

template <class S>
BilinearForm<S> canonical_pairing_form(int n) {
  Matrix<S> m = zero_matrix<S>(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = S(1);
    m(n + i, i) = S(1);
  }
  return BilinearForm<S>(std::move(m));
}

// g(A) semidirect A* through the dual of -L.
template <class S>
Algebra<S> dual_semidirect(const Algebra<S>& apl_alg) {
  return semidirect_lie(commutator_algebra(apl_alg), dual_representation(negative_left_rep(apl_alg)));
}

enum class TensorMode { novikov, admissible };

inline TensorMode tensor_mode_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  if (t == "novikov") return TensorMode::novikov;
  if (t == "admissible" || t == "admissible-novikov") return TensorMode::admissible;
  throw UnknownId("unknown tensor mode '" + s + "'");
}

// Bracket on A (x) V, basis e_i (x) u_a at index i * dim V + a.
template <class S>
Algebra<S> tensor_lie(const Algebra<S>& assoc, const LinearMap<S>& p, const LinearMap<S>& q, const Algebra<S>& v,
                      TensorMode mode) {
  require_commutative_associative(assoc);
  if (!check_admissible_pair(assoc, p, q).pass()) throw PreconditionFailed("(P, Q) is not an admissible pair");
  if (mode == TensorMode::novikov) {
    if (!satisfies_all(v, {IdentityId::pre_lie, IdentityId::novikov_right}))
      throw PreconditionFailed("V is not a Novikov algebra");
  } else if (!satisfies_all(v, {IdentityId::anti_pre_lie_1, IdentityId::anti_pre_lie_2, IdentityId::admissible_novikov})) {
    throw PreconditionFailed("V is not an admissible Novikov algebra");
  }
  const int n = assoc.dim();
  const int m = v.dim();
  const Matrix<S>& qm = q.matrix;
  // Coefficient pairs on A: a1(x,y) goes with u.v, a2(x,y) with v.u (negated).
  Algebra<S> first = mode == TensorMode::novikov
                         ? detail::dot_combination<S>(assoc, {{S(1), {&qm, nullptr}}}, Role::dot)
                         : detail::dot_combination<S>(assoc, {{S(1), {&qm, nullptr}}, {S(2), {nullptr, &qm}}}, Role::dot);
  Algebra<S> second = mode == TensorMode::novikov
                          ? detail::dot_combination<S>(assoc, {{S(1), {nullptr, &qm}}}, Role::dot)
                          : detail::dot_combination<S>(assoc, {{S(1), {nullptr, &qm}}, {S(2), {&qm, nullptr}}}, Role::dot);
  Algebra<S> out(n * m, Role::bracket);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int k = 0; k < n; ++k)
            for (int c = 0; c < m; ++c) {
              S val = first(x, y, k) * v(a, b, c) - second(x, y, k) * v(b, a, c);
              if (!is_zero(val)) out(x * m + a, y * m + b, k * m + c) += val;
            }
  return out;
}

enum class AffinizationMode { novikov, admissible };

inline AffinizationMode affinization_mode_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  if (t == "novikov") return AffinizationMode::novikov;
  if (t == "admissible" || t == "admissible-novikov") return AffinizationMode::admissible;
  throw UnknownId("unknown affinization mode '" + s + "'");
}

// Coefficients (alpha, beta) of [x t^m, y t^n] = (alpha x.y - beta y.x) t^(m+n+1).
inline std::array<long, 2> affinization_coefficients(AffinizationMode mode, long m, long n) {
  if (mode == AffinizationMode::novikov) return {m + 1, n + 1};
  return {m + 2 * n + 3, 2 * m + n + 3};
}

// Jacobi residual of the graded bracket on A (x) F[t, t^-1] for all degrees in
// window^3. Each residual coefficient has degree <= 2 in every degree
// variable, so three distinct values per variable certify vanishing
// identically. Witness indices: (i, j, k, m, n, p).
template <class S>
CheckReport<S> affinization_check(const Algebra<S>& alg, AffinizationMode mode, const std::vector<long>& window) {
  std::set<long> distinct(window.begin(), window.end());
  if (distinct.size() < 3) throw std::invalid_argument("affinization window needs at least 3 distinct degrees");
  using namespace detail;
  const Algebra<S>* ops[1] = {&alg};
  for (long m : distinct)
    for (long n : distinct)
      for (long p : distinct) {
        Component comp{3, {}};
        // [[a t^da, b t^db], c t^dc] = (al(da,db) [ab, c] - be(da,db) [ba, c]) with
        // [u, c] = al(s,dc) u.c - be(s,dc) c.u and s = da + db + 1.
        const std::array<std::pair<std::array<int, 3>, std::array<long, 3>>, 3> cyc = {
            {{{X, Y, Z}, {m, n, p}}, {{Y, Z, X}, {n, p, m}}, {{Z, X, Y}, {p, m, n}}}};
        for (const auto& [vars, deg] : cyc) {
          auto [a_mn, b_mn] = affinization_coefficients(mode, deg[0], deg[1]);
          auto [a_sp, b_sp] = affinization_coefficients(mode, deg[0] + deg[1] + 1, deg[2]);
          const int a = vars[0], b = vars[1], c = vars[2];
          comp.terms.push_back(L(static_cast<int>(a_mn * a_sp), a, b, c));
          comp.terms.push_back(R(static_cast<int>(-a_mn * b_sp), c, a, b));
          comp.terms.push_back(L(static_cast<int>(-b_mn * a_sp), b, a, c));
          comp.terms.push_back(R(static_cast<int>(b_mn * b_sp), c, b, a));
        }
        auto rep = check_components("affinization-jacobi", {comp}, ops);
        if (!rep.pass()) {
          auto& idx = rep.witness->indices;
          idx.push_back(static_cast<int>(m));
          idx.push_back(static_cast<int>(n));
          idx.push_back(static_cast<int>(p));
          return rep;
        }
      }
  return CheckReport<S>::ok();
}

}  // namespace apl
