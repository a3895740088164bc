#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "apl/enumerate.hpp"
#include "apl/identities.hpp"

namespace apl {

template <class S>
struct Idempotents {
  std::vector<Vector<S>> points;  // finite list, deterministic order
  // Set when x o x = mu(x) x for every x with mu a nonzero linear form: the
  // idempotents then fill the affine hyperplane mu = 1 and are not listed.
  bool infinite = false;
};

namespace detail {

// Rational roots of an integer-coefficient polynomial (highest degree first).
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs);
// Roots of a*t^2 + b*t + c in Q(sqrt disc); empty when a = 0 or no roots.
std::vector<Scalar> quadratic_roots(const mpq_class& a, const mpq_class& b, const mpq_class& c);

template <class S>
Vector<S> square(const Algebra<S>& alg, const Vector<S>& v) {
  return multiply(alg, v, v);
}

// For a direction v with v o v = mu v, mu != 0, the idempotent v / mu.
template <class S>
std::optional<Vector<S>> idempotent_on_line(const Algebra<S>& alg, const Vector<S>& v) {
  Vector<S> q = square(alg, v);
  int piv = -1;
  for (int i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) {
      piv = i;
      break;
    }
  if (piv < 0) return std::nullopt;
  S mu = q(piv) / v(piv);
  if (is_zero(mu)) return std::nullopt;
  Vector<S> out = v / mu;
  return out;
}

template <class S>
bool canonical_less_vec(const Vector<S>& a, const Vector<S>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (canonical_less(a(i), b(i))) return true;
    if (canonical_less(b(i), a(i))) return false;
  }
  return false;
}

}  // namespace detail

class UnsupportedField : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// All x != 0 with x o x = x. Over F_p by exhaustion; over Q(sqrt d) for
// rational tensors of dimension <= 2 by solving for eigen-directions of the
// squaring map.
template <class S>
Idempotents<S> idempotents(const Algebra<S>& alg) {
  const int n = alg.dim();
  Idempotents<S> out;
  if constexpr (characteristic_of<S> != 0) {
    constexpr int P = characteristic_of<S>;
    const long total = ipow<P>(n);
    if (total > 1'000'000) throw UnsupportedField("idempotent exhaustion too large");
    for (long c = 1; c < total; ++c) {
      Vector<S> v(n);
      long code = c;
      for (int i = n - 1; i >= 0; --i) {
        v(i) = S(code % P);
        code /= P;
      }
      if (same_matrix(detail::square(alg, v), v)) out.points.push_back(v);
    }
    return out;
  } else {
    for (const auto& s : alg.data())
      if (!s.is_rational()) throw UnsupportedField("idempotents need a rational structure tensor");
    if (n > 2) throw UnsupportedField("idempotents over Q are solved in dimension <= 2 only");
    if (n == 1) {
      const Scalar& c = alg(0, 0, 0);
      if (!is_zero(c)) out.points.push_back(Vector<S>::Constant(1, S(1) / c));
      return out;
    }
    // v = (x, y); x o x = x^2 a + xy b + y^2 c with a = e1e1, b = e1e2 + e2e1, c = e2e2.
    auto a = alg.product(0, 0), c = alg.product(1, 1);
    Vector<S> b = alg.product(0, 1) + alg.product(1, 0);
    // det[v, v o v] = x Q2 - y Q1 = k3 x^3 + k2 x^2 y + k1 x y^2 + k0 y^3
    auto q = [](const Vector<S>& w, int i) { return w(i).rational_part(); };
    mpq_class k3 = q(a, 1);
    mpq_class k2 = q(b, 1) - q(a, 0);
    mpq_class k1 = q(c, 1) - q(b, 0);
    mpq_class k0 = -q(c, 0);
    std::vector<Vector<S>> dirs;
    if (k3 == 0 && k2 == 0 && k1 == 0 && k0 == 0) {
      // Every direction is an eigen-direction: v o v = mu(v) v.
      bool all_zero = is_zero_matrix(a) && is_zero_matrix(b) && is_zero_matrix(c);
      if (!all_zero) out.infinite = true;
      return out;
    }
    // Direction (1, 0) is a root iff k3 = 0.
    if (k3 == 0) {
      Vector<S> v(2);
      v << S(1), S(0);
      dirs.push_back(v);
    }
    // Directions (t, 1): k3 t^3 + k2 t^2 + k1 t + k0 = 0.
    std::vector<mpq_class> poly{k3, k2, k1, k0};
    while (!poly.empty() && poly.front() == 0) poly.erase(poly.begin());
    std::vector<mpq_class> rat = detail::rational_roots(poly);
    std::vector<Scalar> roots(rat.begin(), rat.end());
    // Deflate by the rational roots, then solve what remains if quadratic.
    std::vector<mpq_class> rest = poly;
    for (const auto& r : rat) {
      std::vector<mpq_class> next;
      mpq_class carry = 0;
      for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
        carry = carry * r + rest[i];
        next.push_back(carry);
      }
      rest = next;
    }
    if (rest.size() == 3) {
      for (const auto& s : detail::quadratic_roots(rest[0], rest[1], rest[2]))
        if (!s.is_rational()) roots.push_back(s);
    } else if (rest.size() == 4) {
      throw UnsupportedField("idempotent directions need a cubic extension");
    }
    for (const auto& t : roots) {
      Vector<S> v(2);
      v << t, S(1);
      dirs.push_back(v);
    }
    for (const auto& v : dirs) {
      auto e = detail::idempotent_on_line(alg, v);
      if (!e) continue;
      bool dup = false;
      for (const auto& w : out.points)
        if (same_matrix(w, *e)) dup = true;
      if (!dup) out.points.push_back(*e);
    }
    std::sort(out.points.begin(), out.points.end(), detail::canonical_less_vec<S>);
    return out;
  }
}

template <class S>
struct IdempotentDatum {
  Vector<S> point;
  std::vector<S> left_charpoly;
  std::vector<S> right_charpoly;
};

template <class S>
struct Fingerprint {
  bool is_commutative = false;
  int dim_product_span = 0;
  int dim_left_annihilator = 0;
  int dim_right_annihilator = 0;
  bool subadjacent_abelian = false;
  bool idempotents_computed = false;
  bool idempotent_family = false;
  // Sorted by (left, right) characteristic polynomials; the coordinates are
  // kept for display and are not compared, since they depend on the basis.
  std::vector<IdempotentDatum<S>> idempotent_data;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    if (a.is_commutative != b.is_commutative || a.dim_product_span != b.dim_product_span ||
        a.dim_left_annihilator != b.dim_left_annihilator || a.dim_right_annihilator != b.dim_right_annihilator ||
        a.subadjacent_abelian != b.subadjacent_abelian || a.idempotents_computed != b.idempotents_computed ||
        a.idempotent_family != b.idempotent_family || a.idempotent_data.size() != b.idempotent_data.size())
      return false;
    for (std::size_t i = 0; i < a.idempotent_data.size(); ++i)
      if (a.idempotent_data[i].left_charpoly != b.idempotent_data[i].left_charpoly ||
          a.idempotent_data[i].right_charpoly != b.idempotent_data[i].right_charpoly)
        return false;
    return true;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }
};

namespace detail {

template <class S>
bool poly_less(const std::vector<S>& a, const std::vector<S>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const S& x, const S& y) { return canonical_less(x, y); });
}

template <class S>
int annihilator_dim(const Algebra<S>& alg, Side side) {
  const int n = alg.dim();
  Matrix<S> m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m(j * n + k, i) = side == Side::left ? alg(i, j, k) : alg(j, i, k);
  return n - rank(m);
}

}  // namespace detail

// Basis-invariant summary; with_idempotents = false skips the idempotent part
// (needed over Q beyond dimension 2).
template <class S>
Fingerprint<S> fingerprint(const Algebra<S>& alg, bool with_idempotents = true) {
  const int n = alg.dim();
  Fingerprint<S> fp;
  fp.is_commutative = check_identity(alg, IdentityId::commutative).pass();
  Matrix<S> span(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) span(k, i * n + j) = alg(i, j, k);
  fp.dim_product_span = rank(span);
  fp.dim_left_annihilator = detail::annihilator_dim(alg, Side::left);
  fp.dim_right_annihilator = detail::annihilator_dim(alg, Side::right);
  fp.subadjacent_abelian = commutator_algebra(alg).is_zero();
  if (!with_idempotents) return fp;
  auto idem = idempotents(alg);
  fp.idempotents_computed = true;
  fp.idempotent_family = idem.infinite;
  for (const auto& e : idem.points)
    fp.idempotent_data.push_back({e, charpoly(mult_operator(alg, e, Side::left).matrix),
                                  charpoly(mult_operator(alg, e, Side::right).matrix)});
  std::sort(fp.idempotent_data.begin(), fp.idempotent_data.end(), [](const auto& a, const auto& b) {
    if (detail::poly_less(a.left_charpoly, b.left_charpoly)) return true;
    if (detail::poly_less(b.left_charpoly, a.left_charpoly)) return false;
    if (detail::poly_less(a.right_charpoly, b.right_charpoly)) return true;
    if (detail::poly_less(b.right_charpoly, a.right_charpoly)) return false;
    return detail::canonical_less_vec(a.point, b.point);
  });
  return fp;
}

template <class S>
CheckReport<S> verify_iso_witness(const Algebra<S>& a, const Algebra<S>& b, const Matrix<S>& s) {
  if (a.dim() != b.dim()) throw DimensionMismatch("algebras differ in dimension");
  if (!is_invertible(s)) throw SingularMatrix("witness matrix is singular");
  Algebra<S> t = change_basis(a, s);
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector<S> r = t.product(i, j) - b.product(i, j);
      if (!is_zero_matrix(r)) return CheckReport<S>::failure("isomorphism", {i, j}, r);
    }
  return CheckReport<S>::ok();
}

}  // namespace apl
