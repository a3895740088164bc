#pragma once

// Generators and brute-force oracles shared by the unit tests and the
// acceptance binary. The oracles evaluate products with plain loops over the
// structure constants and restate each identity directly, so they share no
// code with the library's residual engine.

#include <random>
#include <string>
#include <vector>

#include "apl/catalog.hpp"

namespace apl {

template <class S>
void PrintTo(const Algebra<S>& a, std::ostream* os) {
  *os << "Algebra(dim " << a.dim() << ":";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (!is_zero(a(i, j, k))) *os << " " << a.labels()[i] << "*" << a.labels()[j] << "+=" << a(i, j, k) << "*" << a.labels()[k];
  *os << ")";
}

}  // namespace apl

namespace testing_support {

using apl::Algebra;
using apl::Matrix;
using apl::Scalar;
using apl::Vector;

using Rng = std::mt19937_64;

inline Scalar rand_rational(Rng& rng, int num = 3, int den = 3) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return Scalar::rational(n(rng), d(rng));
}

template <class S>
S rand_scalar(Rng& rng) {
  if constexpr (apl::characteristic_of<S> == 0) {
    return rand_rational(rng);
  } else {
    std::uniform_int_distribution<int> d(0, S::modulus - 1);
    return S(d(rng));
  }
}

// Each coefficient is nonzero with probability `density`.
template <class S>
Algebra<S> rand_algebra(Rng& rng, int n, double density = 0.5, apl::Role role = apl::Role::circ) {
  std::bernoulli_distribution on(density);
  Algebra<S> a(n, role);
  for (auto& c : a.data())
    if (on(rng)) c = rand_scalar<S>(rng);
  return a;
}

template <class S>
Matrix<S> rand_matrix(Rng& rng, int r, int c) {
  Matrix<S> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rand_scalar<S>(rng);
  return m;
}

template <class S>
Vector<S> rand_vector(Rng& rng, int n) {
  Vector<S> v(n);
  for (int i = 0; i < n; ++i) v(i) = rand_scalar<S>(rng);
  return v;
}

// Product of a unit lower and a unit upper triangular matrix with a row
// permutation: invertible by construction.
template <class S>
Matrix<S> rand_invertible(Rng& rng, int n) {
  Matrix<S> l = apl::identity_matrix<S>(n), u = apl::identity_matrix<S>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      l(i, j) = rand_scalar<S>(rng);
      u(j, i) = rand_scalar<S>(rng);
    }
  for (int i = 0; i < n; ++i) {
    S d = rand_scalar<S>(rng);
    while (apl::is_zero(d)) d = rand_scalar<S>(rng);
    u(i, i) = d;
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<S> p = apl::zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i) p(i, perm[i]) = S(1);
  return p * l * u;
}

template <class S>
Matrix<S> mat2(const S& a, const S& b, const S& c, const S& d) {
  Matrix<S> m(2, 2);
  m << a, b, c, d;
  return m;
}

template <class S>
Vector<S> vec(std::initializer_list<S> xs) {
  Vector<S> v(xs.size());
  int i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

// Literal two-dimensional tables: {i, j, k, c} with one-based indices,
// meaning e_i o e_j has coefficient c on e_k.
inline Algebra<Scalar> table2(std::initializer_list<std::array<int, 4>> rows) {
  Algebra<Scalar> a(2);
  for (const auto& r : rows) a(r[0] - 1, r[1] - 1, r[2] - 1) += Scalar(r[3]);
  return a;
}

// Named algebras drawn from the catalog at sampled parameters.
inline std::vector<std::string> sample_refs() {
  std::vector<std::string> refs = apl::a_family_samples();
  for (const auto& r : apl::b_family_samples(4)) refs.push_back(r);
  for (const char* r : {"N1?lambda=-2", "N1?lambda=0", "N1?lambda=1", "N1?lambda=3", "N2", "Nprime1", "Nprime2",
                        "Nprime3?l=-2", "Nprime3?l=2", "Nprime4", "AN1?lambda=-2", "AN1?lambda=0", "AN1?lambda=3",
                        "AN2", "SL2_LIE", "SL2_APL", "DIM2_NONABELIAN_LIE", "LIE2?a=1&b=1", "DIM2_ASSOC_FROB",
                        "TRUNC_POLY?n=3", "TRUNC_POLY?n=4&k=2"})
    refs.push_back(r);
  return refs;
}

// The anti-pre-Lie members among the samples: A, B, AN families and SL2_APL.
inline std::vector<std::string> anti_pre_lie_refs() {
  std::vector<std::string> out;
  for (const auto& r : sample_refs())
    if (r[0] == 'A' || r[0] == 'B' || r == "SL2_APL") out.push_back(r);
  return out;
}

inline Algebra<Scalar> cat(const std::string& ref) { return *apl::catalog(ref).algebra; }

namespace oracle {

template <class S>
Vector<S> mul(const Algebra<S>& a, const Vector<S>& x, const Vector<S>& y) {
  const int n = a.dim();
  Vector<S> out = Vector<S>::Constant(n, S(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const S w = x(i) * y(j);
      if (apl::is_zero(w)) continue;
      for (int k = 0; k < n; ++k) out(k) += w * a(i, j, k);
    }
  return out;
}

template <class S>
bool zero(const Vector<S>& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!apl::is_zero(v(i))) return false;
  return true;
}

// Runs f on every basis triple; true when every returned vector vanishes.
template <class S, class F>
bool all_triples(int n, F f) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector<S> x = apl::unit_vector<S>(n, i), y = apl::unit_vector<S>(n, j), z = apl::unit_vector<S>(n, k);
        if (!zero<S>(f(x, y, z))) return false;
      }
  return true;
}

template <class S>
bool holds(const Algebra<S>& a, apl::IdentityId id) {
  using I = apl::IdentityId;
  auto m = [&a](const Vector<S>& x, const Vector<S>& y) { return mul(a, x, y); };
  auto br = [&m](const Vector<S>& x, const Vector<S>& y) { return Vector<S>(m(x, y) - m(y, x)); };
  const int n = a.dim();
  switch (id) {
    case I::anti_pre_lie_1:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(m(x, m(y, z)) - m(y, m(x, z)) - m(br(y, x), z));
      });
    case I::anti_pre_lie_2:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(m(br(x, y), z) + m(br(y, z), x) + m(br(z, x), y));
      });
    case I::alia_left:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(m(x, br(y, z)) + m(y, br(z, x)) + m(z, br(x, y)));
      });
    case I::lie_admissible:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y));
      });
    case I::pre_lie:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(m(m(x, y), z) - m(x, m(y, z)) - m(m(y, x), z) + m(y, m(x, z)));
      });
    case I::novikov_right:
      return all_triples<S>(n, [&](auto x, auto y, auto z) { return Vector<S>(m(m(x, y), z) - m(m(x, z), y)); });
    case I::admissible_novikov:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(S(2) * m(x, br(y, z)) - m(m(x, y), z) + m(m(x, z), y));
      });
    case I::commutative:
      return all_triples<S>(n, [&](auto x, auto y, auto) { return br(x, y); });
    case I::associative:
      return all_triples<S>(n, [&](auto x, auto y, auto z) { return Vector<S>(m(m(x, y), z) - m(x, m(y, z))); });
    case I::anti_associative:
      return all_triples<S>(n, [&](auto x, auto y, auto z) { return Vector<S>(m(m(x, y), z) + m(x, m(y, z))); });
    case I::two_step_nilpotent:
      return all_triples<S>(n, [&](auto x, auto y, auto z) { return m(x, m(y, z)); }) &&
             all_triples<S>(n, [&](auto x, auto y, auto z) { return m(m(x, y), z); });
    case I::jacobi:
      return all_triples<S>(n, [&](auto x, auto y, auto) { return Vector<S>(m(x, y) + m(y, x)); }) &&
             all_triples<S>(n, [&](auto x, auto y, auto z) {
               return Vector<S>(m(m(x, y), z) + m(m(y, z), x) + m(m(z, x), y));
             });
  }
  return false;
}

// Two-operation identities, restated from their defining equations.
template <class S>
bool holds(const apl::TwoOpAlgebra<S>& t, apl::PoissonIdentityId id) {
  using P = apl::PoissonIdentityId;
  auto d = [&t](const Vector<S>& x, const Vector<S>& y) { return mul(t.dot(), x, y); };
  auto o = [&t](const Vector<S>& x, const Vector<S>& y) { return mul(t.second(), x, y); };
  const int n = t.dim();
  const S two(2);
  switch (id) {
    case P::aplp_1:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(two * d(o(x, y), z) - two * d(o(y, x), z) - d(y, o(x, z)) + d(x, o(y, z)));
      });
    case P::aplp_2:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(two * o(x, d(y, z)) - o(d(z, x), y) - d(z, o(x, y)));
      });
    case P::np_1:
      return all_triples<S>(n, [&](auto x, auto y, auto z) { return Vector<S>(o(d(x, y), z) - d(x, o(y, z))); });
    case P::np_2:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(d(o(x, y), z) - d(o(y, x), z) - o(x, d(y, z)) + o(y, d(x, z)));
      });
    case P::transposed:
      return all_triples<S>(n, [&](auto x, auto y, auto z) {
        return Vector<S>(two * d(z, o(x, y)) - o(d(z, x), y) - o(x, d(z, y)));
      });
    default:
      break;
  }
  throw std::logic_error("no oracle for this identity");
}

// x o' y = x o y + q y o x, entry by entry.
template <class S>
Algebra<S> q_algebra(const Algebra<S>& a, const S& q) {
  Algebra<S> out(a.dim());
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = a(i, j, k) + q * a(j, i, k);
  return out;
}

// Tensor of the algebra in the new basis f_j = sum_i s(i,j) e_i, computed by
// solving s * c = product coordinates column by column with an explicit inverse.
template <class S>
Algebra<S> rebase(const Algebra<S>& a, const Matrix<S>& s, const Matrix<S>& s_inv) {
  const int n = a.dim();
  Algebra<S> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector<S> p = s_inv * mul(a, Vector<S>(s.col(i)), Vector<S>(s.col(j)));
      for (int k = 0; k < n; ++k) out(i, j, k) = p(k);
    }
  return out;
}

}  // namespace oracle

}  // namespace testing_support
