#pragma once

#include <string>

#include "apl/identities.hpp"

namespace apl {

enum class OperatorLevel { anti_o, strong, admissible, cons2, anti_derivation };

inline std::string token(OperatorLevel l) {
  switch (l) {
    case OperatorLevel::anti_o: return "anti-o";
    case OperatorLevel::strong: return "strong";
    case OperatorLevel::admissible: return "admissible";
    case OperatorLevel::cons2: return "cons2";
    case OperatorLevel::anti_derivation: return "anti-derivation";
  }
  throw UnknownId("operator level");
}

inline OperatorLevel operator_level_from_token(const std::string& s) {
  const std::string t = normalize_token(s);
  for (auto l : {OperatorLevel::anti_o, OperatorLevel::strong, OperatorLevel::admissible, OperatorLevel::cons2,
                 OperatorLevel::anti_derivation})
    if (token(l) == t) return l;
  throw UnknownId("unknown operator level '" + s + "'");
}

namespace detail {

template <class S>
bool all_zero(const Vector<S>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) return false;
  return true;
}

}  // namespace detail

// T : V -> g for anti_o, strong, admissible; R : g -> g for cons2 (rho unused);
// D : g -> V for anti_derivation.
template <class S>
CheckReport<S> check_operator(const LinearMap<S>& t, const Algebra<S>& lie, const Representation<S>& rho,
                              OperatorLevel level) {
  const int n = lie.dim();
  const int m = rho.carrier_dim;
  if (rho.algebra_dim() != n) throw DimensionMismatch("representation does not act on the Lie algebra");
  const Matrix<S>& tm = t.matrix;
  auto br = [&lie](const Vector<S>& a, const Vector<S>& b) { return multiply(lie, a, b); };
  const std::string id = token(level);

  switch (level) {
    case OperatorLevel::cons2: {
      if (t.rows() != n || t.cols() != n) throw DimensionMismatch("cons2 operator must be an endomap of g");
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            Vector<S> ex = unit_vector<S>(n, x), ey = unit_vector<S>(n, y), ez = unit_vector<S>(n, z);
            Vector<S> rx = tm * ex, ry = tm * ey;
            Vector<S> inner = br(rx, ry) + tm * (br(ex, ry) + br(rx, ey));
            Vector<S> r = br(inner, ez);
            if (!detail::all_zero(r)) return CheckReport<S>::failure(id, {x, y, z}, r);
          }
      return CheckReport<S>::ok();
    }
    case OperatorLevel::anti_derivation: {
      if (t.rows() != m || t.cols() != n) throw DimensionMismatch("anti-derivation must map g to V");
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Vector<S> r = tm * lie.product(x, y) - rho.mats[y] * tm.col(x) + rho.mats[x] * tm.col(y);
          if (!detail::all_zero(r)) return CheckReport<S>::failure(id, {x, y}, r);
        }
      return CheckReport<S>::ok();
    }
    default:
      break;
  }

  if (t.rows() != n || t.cols() != m) throw DimensionMismatch("operator must map V to g");
  std::vector<Matrix<S>> rt;  // rho(T(u_i))
  for (int i = 0; i < m; ++i) rt.push_back(rho.act(tm.col(i)));
  auto e = [m](int i) { return unit_vector<S>(m, i); };

  if (level == OperatorLevel::anti_o) {
    for (int u = 0; u < m; ++u)
      for (int v = 0; v < m; ++v) {
        Vector<S> r = br(tm.col(u), tm.col(v)) - tm * (rt[v] * e(u) - rt[u] * e(v));
        if (!detail::all_zero(r)) return CheckReport<S>::failure(id, {u, v}, r);
      }
    return CheckReport<S>::ok();
  }

  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w) {
        Vector<S> r;
        if (level == OperatorLevel::strong) {
          r = rho.act(br(tm.col(u), tm.col(v))) * e(w) + rho.act(br(tm.col(v), tm.col(w))) * e(u) +
              rho.act(br(tm.col(w), tm.col(u))) * e(v);
        } else {
          Vector<S> tuv = tm * (rt[u] * e(v));
          Vector<S> tuw = tm * (rt[u] * e(w));
          r = S(2) * (rt[u] * (rt[v] * e(w))) - S(2) * (rt[u] * (rt[w] * e(v))) - rho.act(tuv) * e(w) +
              rho.act(tuw) * e(v);
        }
        if (!detail::all_zero(r)) return CheckReport<S>::failure(id, {u, v, w}, r);
      }
  return CheckReport<S>::ok();
}

// u o v = -rho(T(u)) v on the carrier of rho.
template <class S>
Algebra<S> induced_algebra(const LinearMap<S>& t, const Representation<S>& rho) {
  const int m = rho.carrier_dim;
  if (t.cols() != m || t.rows() != rho.algebra_dim()) throw DimensionMismatch("operator must map V to g");
  Algebra<S> out(m);
  for (int u = 0; u < m; ++u) {
    Matrix<S> a = -rho.act(t.matrix.col(u));
    for (int v = 0; v < m; ++v) out.set(u, v, a.col(v));
  }
  return out;
}

enum class StructureProperty { derivation, admissible_pair, adjoint_consistency };

// Q(x.y) - Q(x).y - x.P(y) on basis pairs; P = Q gives the Leibniz rule.
template <class S>
CheckReport<S> check_admissible_pair(const Algebra<S>& assoc, const LinearMap<S>& p, const LinearMap<S>& q,
                                     const std::string& id = "admissible-pair") {
  const int n = assoc.dim();
  if (p.rows() != n || p.cols() != n || q.rows() != n || q.cols() != n)
    throw DimensionMismatch("structure maps must be endomaps of the algebra");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vector<S> r = q.matrix * assoc.product(x, y) - multiply(assoc, Vector<S>(q.matrix.col(x)), unit_vector<S>(n, y)) -
                    multiply(assoc, unit_vector<S>(n, x), Vector<S>(p.matrix.col(y)));
      if (!detail::all_zero(r)) return CheckReport<S>::failure(id, {x, y}, r);
    }
  return CheckReport<S>::ok();
}

template <class S>
CheckReport<S> check_derivation(const Algebra<S>& assoc, const LinearMap<S>& p) {
  return check_admissible_pair(assoc, p, p, "derivation");
}

// B(Q(x), y) - B(x, Qhat(y)) on basis pairs.
template <class S>
CheckReport<S> check_adjoint_consistency(const BilinearForm<S>& form, const LinearMap<S>& q,
                                         const LinearMap<S>& qhat) {
  const int n = form.dim();
  if (q.rows() != n || q.cols() != n || qhat.rows() != n || qhat.cols() != n)
    throw DimensionMismatch("maps must be endomaps of the form's space");
  Matrix<S> r = q.matrix.transpose() * form.matrix - form.matrix * qhat.matrix;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!is_zero(r(x, y)))
        return CheckReport<S>::failure("adjoint-consistency", {x, y}, Vector<S>::Constant(1, r(x, y)));
  return CheckReport<S>::ok();
}

template <class S>
struct StructureContext {
  const Algebra<S>* assoc = nullptr;
  const LinearMap<S>* p = nullptr;
  const LinearMap<S>* q = nullptr;
  const LinearMap<S>* qhat = nullptr;
  const BilinearForm<S>* form = nullptr;
};

template <class S>
CheckReport<S> check_structure_map(const StructureContext<S>& ctx, StructureProperty prop) {
  auto need = [](const void* ptr, const char* what) {
    if (!ptr) throw std::invalid_argument(std::string("structure check needs ") + what);
  };
  switch (prop) {
    case StructureProperty::derivation:
      need(ctx.assoc, "the algebra");
      need(ctx.p, "P");
      return check_derivation(*ctx.assoc, *ctx.p);
    case StructureProperty::admissible_pair:
      need(ctx.assoc, "the algebra");
      need(ctx.p, "P");
      need(ctx.q, "Q");
      return check_admissible_pair(*ctx.assoc, *ctx.p, *ctx.q);
    case StructureProperty::adjoint_consistency:
      need(ctx.form, "B");
      need(ctx.q, "Q");
      need(ctx.qhat, "Qhat");
      return check_adjoint_consistency(*ctx.form, *ctx.q, *ctx.qhat);
  }
  throw UnknownId("structure property");
}

}  // namespace apl
