#pragma once

// Evaluation engine shared by the single- and two-operation identity
// catalogs. Every identity in scope is an integer combination of basis
// monomials of one of three shapes:
//   (a op_i b) op_o c     nested left
//   a op_o (b op_i c)     nested right
//   a op_o b              flat (arity 2)
// where (a, b, c) is a permutation of the variables (x, y, z) and op_o,
// op_i pick one of at most two operation slots.

#include <array>
#include <string>
#include <vector>

#include "apl/algebra.hpp"

namespace apl::detail {

enum class Shape { left, right, flat };

struct Term {
  int coef;
  Shape shape;
  int outer;  // slot of the outer operation
  int inner;  // slot of the inner operation (unused for flat)
  std::array<int, 3> vars;
};

// One multilinear expression required to vanish on all basis tuples.
struct Component {
  int arity;
  std::vector<Term> terms;
};

enum Var { X = 0, Y = 1, Z = 2 };

inline Term L(int coef, int a, int b, int c, int outer = 0, int inner = 0) {
  return {coef, Shape::left, outer, inner, {a, b, c}};
}
inline Term R(int coef, int a, int b, int c, int outer = 0, int inner = 0) {
  return {coef, Shape::right, outer, inner, {a, b, c}};
}
inline Term F(int coef, int a, int b, int op = 0) { return {coef, Shape::flat, op, op, {a, b, 0}}; }

// Writes the residual at basis tuple t into acc (length n).
template <class S>
void evaluate(const Component& comp, const Algebra<S>* const* ops, const int* t, std::vector<S>& acc) {
  const int n = ops[0]->dim();
  for (auto& v : acc) v = S(0);
  for (const Term& term : comp.terms) {
    const S coef(term.coef);
    const int a = t[term.vars[0]];
    const int b = t[term.vars[1]];
    if (term.shape == Shape::flat) {
      const S* p = ops[term.outer]->product_ptr(a, b);
      for (int k = 0; k < n; ++k)
        if (!is_zero(p[k])) acc[k] += coef * p[k];
      continue;
    }
    const int c = t[term.vars[2]];
    const Algebra<S>& in = *ops[term.inner];
    const Algebra<S>& out = *ops[term.outer];
    const S* u = term.shape == Shape::left ? in.product_ptr(a, b) : in.product_ptr(b, c);
    for (int l = 0; l < n; ++l) {
      if (is_zero(u[l])) continue;
      const S w = coef * u[l];
      const S* p = term.shape == Shape::left ? out.product_ptr(l, c) : out.product_ptr(a, l);
      for (int k = 0; k < n; ++k)
        if (!is_zero(p[k])) acc[k] += w * p[k];
    }
  }
}

// First failing basis tuple over all components, in component order and
// lexicographic tuple order within each.
template <class S>
CheckReport<S> check_components(const std::string& id, const std::vector<Component>& comps,
                                const Algebra<S>* const* ops) {
  const int n = ops[0]->dim();
  std::vector<S> acc(n, S(0));
  for (const Component& comp : comps) {
    std::array<int, 3> t{0, 0, 0};
    const int total = comp.arity == 2 ? n * n : n * n * n;
    for (int code = 0; code < total; ++code) {
      if (comp.arity == 2) {
        t = {code / n, code % n, 0};
      } else {
        t = {code / (n * n), (code / n) % n, code % n};
      }
      evaluate(comp, ops, t.data(), acc);
      bool zero = true;
      for (const auto& v : acc)
        if (!is_zero(v)) {
          zero = false;
          break;
        }
      if (!zero) {
        Vector<S> r(n);
        for (int k = 0; k < n; ++k) r(k) = acc[k];
        std::vector<int> idx(t.begin(), t.begin() + comp.arity);
        return CheckReport<S>::failure(id, std::move(idx), std::move(r));
      }
    }
  }
  return CheckReport<S>::ok();
}

}  // namespace apl::detail
