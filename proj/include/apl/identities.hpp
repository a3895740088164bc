#pragma once

#include <set>
#include <string>
#include <vector>

#include "apl/core.hpp"
#include "apl/trilinear.hpp"

namespace apl {

enum class IdentityId {
  anti_pre_lie_1,
  anti_pre_lie_2,
  alia_left,
  lie_admissible,
  pre_lie,
  novikov_right,
  admissible_novikov,
  commutative,
  associative,
  anti_associative,
  two_step_nilpotent,
  jacobi,
};

class UnknownId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::anti_pre_lie_1,     IdentityId::anti_pre_lie_2,   IdentityId::alia_left,
      IdentityId::lie_admissible,     IdentityId::pre_lie,          IdentityId::novikov_right,
      IdentityId::admissible_novikov, IdentityId::commutative,      IdentityId::associative,
      IdentityId::anti_associative,   IdentityId::two_step_nilpotent, IdentityId::jacobi};
  return ids;
}

inline std::string token(IdentityId id) {
  switch (id) {
    case IdentityId::anti_pre_lie_1: return "anti-pre-lie-1";
    case IdentityId::anti_pre_lie_2: return "anti-pre-lie-2";
    case IdentityId::alia_left: return "alia-left";
    case IdentityId::lie_admissible: return "lie-admissible";
    case IdentityId::pre_lie: return "pre-lie";
    case IdentityId::novikov_right: return "novikov-right";
    case IdentityId::admissible_novikov: return "admissible-novikov";
    case IdentityId::commutative: return "commutative";
    case IdentityId::associative: return "associative";
    case IdentityId::anti_associative: return "anti-associative";
    case IdentityId::two_step_nilpotent: return "two-step-nilpotent";
    case IdentityId::jacobi: return "jacobi";
  }
  throw UnknownId("identity id");
}

// Accepts kebab-case tokens and their snake_case spellings.
inline std::string normalize_token(std::string s) {
  for (auto& c : s)
    if (c == '_') c = '-';
  return s;
}

inline IdentityId identity_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  for (auto id : all_identities())
    if (token(id) == t) return id;
  throw UnknownId("unknown identity '" + s + "'");
}

namespace detail {

// Commutator monomials [a,b] op c and a op [b,c] expanded into the engine.
inline void bracket_left(std::vector<Term>& t, int coef, int a, int b, int c) {
  t.push_back(L(coef, a, b, c));
  t.push_back(L(-coef, b, a, c));
}
inline void bracket_right(std::vector<Term>& t, int coef, int a, int b, int c) {
  t.push_back(R(coef, a, b, c));
  t.push_back(R(-coef, a, c, b));
}

inline std::vector<Component> components(IdentityId id) {
  std::vector<Term> t;
  switch (id) {
    case IdentityId::anti_pre_lie_1:
      // x(yz) - y(xz) - [y,x]z
      t = {R(1, X, Y, Z), R(-1, Y, X, Z)};
      bracket_left(t, -1, Y, X, Z);
      return {{3, t}};
    case IdentityId::anti_pre_lie_2:
      bracket_left(t, 1, X, Y, Z);
      bracket_left(t, 1, Y, Z, X);
      bracket_left(t, 1, Z, X, Y);
      return {{3, t}};
    case IdentityId::alia_left:
      bracket_right(t, 1, X, Y, Z);
      bracket_right(t, 1, Y, Z, X);
      bracket_right(t, 1, Z, X, Y);
      return {{3, t}};
    case IdentityId::lie_admissible:
      // [[a,b],c] = [a,b]c - c[a,b], summed cyclically
      for (auto [a, b, c] : {std::array<int, 3>{X, Y, Z}, {Y, Z, X}, {Z, X, Y}}) {
        bracket_left(t, 1, a, b, c);
        bracket_right(t, -1, c, a, b);
      }
      return {{3, t}};
    case IdentityId::pre_lie:
      return {{3, {L(1, X, Y, Z), R(-1, X, Y, Z), L(-1, Y, X, Z), R(1, Y, X, Z)}}};
    case IdentityId::novikov_right:
      return {{3, {L(1, X, Y, Z), L(-1, X, Z, Y)}}};
    case IdentityId::admissible_novikov:
      // 2x[y,z] - (xy)z + (xz)y
      bracket_right(t, 2, X, Y, Z);
      t.push_back(L(-1, X, Y, Z));
      t.push_back(L(1, X, Z, Y));
      return {{3, t}};
    case IdentityId::commutative:
      return {{2, {F(1, X, Y), F(-1, Y, X)}}};
    case IdentityId::associative:
      return {{3, {L(1, X, Y, Z), R(-1, X, Y, Z)}}};
    case IdentityId::anti_associative:
      return {{3, {L(1, X, Y, Z), R(1, X, Y, Z)}}};
    case IdentityId::two_step_nilpotent:
      return {{3, {R(1, X, Y, Z)}}, {3, {L(1, X, Y, Z)}}};
    case IdentityId::jacobi:
      return {{2, {F(1, X, Y), F(1, Y, X)}}, {3, {L(1, X, Y, Z), L(1, Y, Z, X), L(1, Z, X, Y)}}};
  }
  throw UnknownId("identity id");
}

}  // namespace detail

template <class S>
CheckReport<S> check_identity(const Algebra<S>& alg, IdentityId id) {
  const Algebra<S>* ops[1] = {&alg};
  return detail::check_components(token(id), detail::components(id), ops);
}

template <class S>
std::set<IdentityId> identity_profile(const Algebra<S>& alg) {
  std::set<IdentityId> out;
  for (auto id : all_identities())
    if (check_identity(alg, id).pass()) out.insert(id);
  return out;
}

template <class S>
bool satisfies_all(const Algebra<S>& alg, const std::vector<IdentityId>& ids) {
  for (auto id : ids)
    if (!check_identity(alg, id).pass()) return false;
  return true;
}

template <class S>
bool satisfies_all(const Algebra<S>& alg, std::initializer_list<IdentityId> ids) {
  return satisfies_all(alg, std::vector<IdentityId>(ids));
}

// rho([e_i,e_j]) - [rho(e_i), rho(e_j)] on basis pairs; the residual is the
// offending matrix flattened column-major.
template <class S>
CheckReport<S> is_representation(const Algebra<S>& lie, const Representation<S>& rho) {
  const int n = lie.dim();
  if (rho.algebra_dim() != n) throw DimensionMismatch("representation has wrong number of matrices");
  const int m = rho.carrier_dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<S> r = rho.act(lie.product(i, j)) - (rho.mats[i] * rho.mats[j] - rho.mats[j] * rho.mats[i]);
      if (!is_zero_matrix(r)) {
        Vector<S> flat(m * m);
        for (int c = 0; c < m; ++c)
          for (int k = 0; k < m; ++k) flat(c * m + k) = r(k, c);
        return CheckReport<S>::failure("representation", {i, j}, std::move(flat));
      }
    }
  return CheckReport<S>::ok();
}

}  // namespace apl
