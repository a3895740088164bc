#pragma once

#include <string>
#include <vector>

#include "apl/constructions.hpp"

namespace apl {

enum class PoissonIdentityId {
  aplp_1,
  aplp_2,
  derived_3,
  derived_4,
  derived_5,
  derived_6,
  derived_7,
  derived_8,
  derived_9,
  np_1,
  np_2,
  transposed,
};

inline const std::vector<PoissonIdentityId>& all_poisson_identities() {
  static const std::vector<PoissonIdentityId> ids = {
      PoissonIdentityId::aplp_1,    PoissonIdentityId::aplp_2,    PoissonIdentityId::derived_3,
      PoissonIdentityId::derived_4, PoissonIdentityId::derived_5, PoissonIdentityId::derived_6,
      PoissonIdentityId::derived_7, PoissonIdentityId::derived_8, PoissonIdentityId::derived_9,
      PoissonIdentityId::np_1,      PoissonIdentityId::np_2,      PoissonIdentityId::transposed};
  return ids;
}

inline const std::vector<PoissonIdentityId>& derived_identities() {
  static const std::vector<PoissonIdentityId> ids = {
      PoissonIdentityId::derived_3, PoissonIdentityId::derived_4, PoissonIdentityId::derived_5,
      PoissonIdentityId::derived_6, PoissonIdentityId::derived_7, PoissonIdentityId::derived_8,
      PoissonIdentityId::derived_9};
  return ids;
}

inline std::string token(PoissonIdentityId id) {
  switch (id) {
    case PoissonIdentityId::aplp_1: return "aplp-1";
    case PoissonIdentityId::aplp_2: return "aplp-2";
    case PoissonIdentityId::derived_3: return "derived-3";
    case PoissonIdentityId::derived_4: return "derived-4";
    case PoissonIdentityId::derived_5: return "derived-5";
    case PoissonIdentityId::derived_6: return "derived-6";
    case PoissonIdentityId::derived_7: return "derived-7";
    case PoissonIdentityId::derived_8: return "derived-8";
    case PoissonIdentityId::derived_9: return "derived-9";
    case PoissonIdentityId::np_1: return "np-1";
    case PoissonIdentityId::np_2: return "np-2";
    case PoissonIdentityId::transposed: return "transposed";
  }
  throw UnknownId("poisson identity id");
}

inline PoissonIdentityId poisson_identity_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  for (auto id : all_poisson_identities())
    if (token(id) == t) return id;
  throw UnknownId("unknown poisson identity '" + s + "'");
}

// Role the second slot must carry for the identity to apply.
inline Role expected_second_role(PoissonIdentityId id) {
  switch (id) {
    case PoissonIdentityId::np_1:
    case PoissonIdentityId::np_2: return Role::star;
    case PoissonIdentityId::transposed: return Role::bracket;
    default: return Role::circ;
  }
}

namespace detail {

constexpr int DOT = 0;
constexpr int SEC = 1;

// Slot 0 is the dot, slot 1 the second operation. L(c, a, b, c', outer, inner)
// is (a inner b) outer c'; R is a outer (b inner c').
inline std::vector<Term> poisson_terms(PoissonIdentityId id) {
  switch (id) {
    case PoissonIdentityId::aplp_1:
      // 2(x o y).z - 2(y o x).z - y.(x o z) + x.(y o z)
      return {L(2, X, Y, Z, DOT, SEC), L(-2, Y, X, Z, DOT, SEC), R(-1, Y, X, Z, DOT, SEC), R(1, X, Y, Z, DOT, SEC)};
    case PoissonIdentityId::aplp_2:
      // 2x o (y.z) - (z.x) o y - z.(x o y)
      return {R(2, X, Y, Z, SEC, DOT), L(-1, Z, X, Y, SEC, DOT), R(-1, Z, X, Y, DOT, SEC)};
    case PoissonIdentityId::derived_3:
      // 2x o (y.z) - (y.x) o z - y.(x o z)
      return {R(2, X, Y, Z, SEC, DOT), L(-1, Y, X, Z, SEC, DOT), R(-1, Y, X, Z, DOT, SEC)};
    case PoissonIdentityId::derived_4:
      // (z.x) o y + z.(x o y) - (y.x) o z - y.(x o z)
      return {L(1, Z, X, Y, SEC, DOT), R(1, Z, X, Y, DOT, SEC), L(-1, Y, X, Z, SEC, DOT), R(-1, Y, X, Z, DOT, SEC)};
    case PoissonIdentityId::derived_5:
      // x.(y o z) - y.(x o z) - 2y o (x.z) + 2x o (y.z)
      return {R(1, X, Y, Z, DOT, SEC), R(-1, Y, X, Z, DOT, SEC), R(-2, Y, X, Z, SEC, DOT), R(2, X, Y, Z, SEC, DOT)};
    case PoissonIdentityId::derived_6:
      // x.(y o z) - y.(x o z) - 2x.(z o y) + 2y.(z o x)
      return {R(1, X, Y, Z, DOT, SEC), R(-1, Y, X, Z, DOT, SEC), R(-2, X, Z, Y, DOT, SEC), R(2, Y, Z, X, DOT, SEC)};
    case PoissonIdentityId::derived_7:
      // x o (y.z) + (y.z) o x - y o (x.z) - (x.z) o y
      return {R(1, X, Y, Z, SEC, DOT), L(1, Y, Z, X, SEC, DOT), R(-1, Y, X, Z, SEC, DOT), L(-1, X, Z, Y, SEC, DOT)};
    case PoissonIdentityId::derived_8:
      // z.(x o y) - z.(y o x) - x o (y.z) + y o (x.z)
      return {R(1, Z, X, Y, DOT, SEC), R(-1, Z, Y, X, DOT, SEC), R(-1, X, Y, Z, SEC, DOT), R(1, Y, X, Z, SEC, DOT)};
    case PoissonIdentityId::derived_9:
      // x.(z o y) - y.(z o x) - y o (x.z) + x o (y.z)
      return {R(1, X, Z, Y, DOT, SEC), R(-1, Y, Z, X, DOT, SEC), R(-1, Y, X, Z, SEC, DOT), R(1, X, Y, Z, SEC, DOT)};
    case PoissonIdentityId::np_1:
      // (x.y) * z - x.(y * z)
      return {L(1, X, Y, Z, SEC, DOT), R(-1, X, Y, Z, DOT, SEC)};
    case PoissonIdentityId::np_2:
      // (x*y).z - (y*x).z - x*(y.z) + y*(x.z)
      return {L(1, X, Y, Z, DOT, SEC), L(-1, Y, X, Z, DOT, SEC), R(-1, X, Y, Z, SEC, DOT), R(1, Y, X, Z, SEC, DOT)};
    case PoissonIdentityId::transposed:
      // 2z.[x,y] - [z.x, y] - [x, z.y]
      return {R(2, Z, X, Y, DOT, SEC), L(-1, Z, X, Y, SEC, DOT), R(-1, X, Z, Y, SEC, DOT)};
  }
  throw UnknownId("poisson identity id");
}

}  // namespace detail

template <class S>
CheckReport<S> check_poisson_identity(const TwoOpAlgebra<S>& two, PoissonIdentityId id) {
  if (two.second().role() != expected_second_role(id))
    throw PreconditionFailed("identity " + token(id) + " reads the second slot as " +
                             to_string(expected_second_role(id)) + ", found " + to_string(two.second().role()));
  const Algebra<S>* ops[2] = {&two.dot(), &two.second()};
  return detail::check_components(token(id), {{3, detail::poisson_terms(id)}}, ops);
}

template <class S>
bool is_anti_pre_lie_poisson_pair(const TwoOpAlgebra<S>& two) {
  return check_poisson_identity(two, PoissonIdentityId::aplp_1).pass() &&
         check_poisson_identity(two, PoissonIdentityId::aplp_2).pass();
}

// The lemma's hypotheses are a commutative associative dot plus aplp_1, aplp_2.
template <class S>
CheckReport<S> derived_identities_hold(const TwoOpAlgebra<S>& two) {
  require_commutative_associative(two.dot());
  if (!is_anti_pre_lie_poisson_pair(two)) throw PreconditionFailed("aplp-1 and aplp-2 do not both hold");
  for (auto id : derived_identities()) {
    auto rep = check_poisson_identity(two, id);
    if (!rep.pass()) return rep;
  }
  return CheckReport<S>::ok();
}

enum class PoissonDirection { to_novikov, to_admissible };

inline PoissonDirection poisson_direction_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  if (t == "to-novikov") return PoissonDirection::to_novikov;
  if (t == "to-admissible") return PoissonDirection::to_admissible;
  throw UnknownId("unknown transform direction '" + s + "'");
}

template <class S>
TwoOpAlgebra<S> poisson_two_transform(const TwoOpAlgebra<S>& two, PoissonDirection dir) {
  if (dir == PoissonDirection::to_novikov)
    return TwoOpAlgebra<S>(two.dot(), with_role(q_transform(two.second(), S(-2)), Role::star));
  return TwoOpAlgebra<S>(two.dot(), with_role(q_transform(two.second(), S(2)), Role::circ));
}

// (A, ., o) -> (A, ., [,]) with the commutator of o.
template <class S>
TwoOpAlgebra<S> sub_adjacent_transposed(const TwoOpAlgebra<S>& two) {
  if (!is_anti_pre_lie_poisson_pair(two)) throw PreconditionFailed("aplp-1 and aplp-2 do not both hold");
  if (!check_identity(two.second(), IdentityId::lie_admissible).pass())
    throw PreconditionFailed("second operation is not Lie-admissible");
  return TwoOpAlgebra<S>(two.dot(), commutator_algebra(two.second()));
}

template <class S>
TwoOpAlgebra<S> induce_poisson_from_form(const TwoOpAlgebra<S>& two, const BilinearForm<S>& form) {
  if (two.second().role() != Role::bracket) throw PreconditionFailed("second slot must be a bracket");
  require_commutative_associative(two.dot());
  if (!check_identity(two.second(), IdentityId::jacobi).pass()) throw PreconditionFailed("bracket fails Jacobi");
  if (!check_poisson_identity(two, PoissonIdentityId::transposed).pass())
    throw PreconditionFailed("not a transposed Poisson algebra");
  if (!check_form(two.dot(), form, FormMode::assoc_invariant).pass())
    throw PreconditionFailed("form is not invariant on the dot product");
  return TwoOpAlgebra<S>(two.dot(), induce_compatible_product(two.second(), form));
}

// Product space with basis a_i (x) b_j at index i * dim b + j.
template <class S>
TwoOpAlgebra<S> tensor_poisson(const TwoOpAlgebra<S>& a, const TwoOpAlgebra<S>& b) {
  for (const auto* t : {&a, &b})
    if (!is_anti_pre_lie_poisson_pair(*t)) throw PreconditionFailed("tensor factor fails aplp-1 or aplp-2");
  const int n = a.dim(), m = b.dim(), N = n * m;
  Algebra<S> dot(N, Role::dot), circ(N, Role::circ);
  const auto &d1 = a.dot(), &c1 = a.second(), &d2 = b.dot(), &c2 = b.second();
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < n; ++y1)
      for (int x2 = 0; x2 < m; ++x2)
        for (int y2 = 0; y2 < m; ++y2)
          for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < m; ++k2) {
              const int i = x1 * m + x2, j = y1 * m + y2, k = k1 * m + k2;
              dot(i, j, k) += d1(x1, y1, k1) * d2(x2, y2, k2);
              circ(i, j, k) += c1(x1, y1, k1) * d2(x2, y2, k2) + d1(x1, y1, k1) * c2(x2, y2, k2);
            }
  return TwoOpAlgebra<S>(std::move(dot), std::move(circ));
}

}  // namespace apl
