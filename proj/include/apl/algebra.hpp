#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apl/linalg.hpp"

namespace apl {

// What the single operation of an Algebra stands for. Identity catalogs for
// two-operation structures read slots by this tag.
enum class Role { circ, star, dot, bracket };

inline std::string to_string(Role r) {
  switch (r) {
    case Role::circ: return "circ";
    case Role::star: return "star";
    case Role::dot: return "dot";
    case Role::bracket: return "bracket";
  }
  return "circ";
}

inline Role role_from_string(const std::string& s) {
  if (s == "circ" || s == "product") return Role::circ;
  if (s == "star") return Role::star;
  if (s == "dot") return Role::dot;
  if (s == "bracket") return Role::bracket;
  throw std::invalid_argument("unknown operation role '" + s + "'");
}

// Finite-dimensional space with one bilinear operation, stored by structure
// constants: e_i op e_j = sum_k c(i,j,k) e_k.
template <class S>
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(int dim, Role role = Role::circ, std::vector<std::string> labels = {})
      : n_(dim), role_(role), labels_(std::move(labels)),
        c_(static_cast<std::size_t>(dim) * dim * dim, S(0)) {
    if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
    if (labels_.empty())
      for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (static_cast<int>(labels_.size()) != dim)
      throw DimensionMismatch("basis label count differs from dimension");
  }

  int dim() const { return n_; }
  Role role() const { return role_; }
  void set_role(Role r) { role_ = r; }
  const std::vector<std::string>& labels() const { return labels_; }

  const S& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }
  S& operator()(int i, int j, int k) { return c_[index(i, j, k)]; }

  // Contiguous coordinates of e_i op e_j.
  const S* product_ptr(int i, int j) const { return c_.data() + index(i, j, 0); }

  Vector<S> product(int i, int j) const {
    Vector<S> v(n_);
    for (int k = 0; k < n_; ++k) v(k) = (*this)(i, j, k);
    return v;
  }

  // e_i op e_j := v
  Algebra& set(int i, int j, const Vector<S>& v) {
    for (int k = 0; k < n_; ++k) (*this)(i, j, k) = v(k);
    return *this;
  }

  const std::vector<S>& data() const { return c_; }
  std::vector<S>& data() { return c_; }

  bool is_zero() const {
    for (const auto& s : c_)
      if (!apl::is_zero(s)) return false;
    return true;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }

  int n_ = 0;
  Role role_ = Role::circ;
  std::vector<std::string> labels_;
  std::vector<S> c_;
};

// One nonzero structure constant c(i,j,k), zero-based.
template <class S>
struct ProductTerm {
  int i, j, k;
  S coeff;
};

template <class S>
Algebra<S> algebra_from_products(int dim, const std::vector<ProductTerm<S>>& terms,
                                 Role role = Role::circ, std::vector<std::string> labels = {}) {
  Algebra<S> a(dim, role, std::move(labels));
  for (const auto& t : terms) a(t.i, t.j, t.k) += t.coeff;
  return a;
}

// Pair of operations on one space. `dot` is the commutative associative slot;
// `second` is the anti-pre-Lie, Novikov or Lie slot, identified by its role.
template <class S>
class TwoOpAlgebra {
 public:
  TwoOpAlgebra() = default;
  TwoOpAlgebra(Algebra<S> dot, Algebra<S> second) : dot_(std::move(dot)), second_(std::move(second)) {
    if (dot_.dim() != second_.dim()) throw DimensionMismatch("two-op tensors differ in dimension");
    dot_.set_role(Role::dot);
    if (second_.role() == Role::dot) second_.set_role(Role::circ);
  }

  int dim() const { return dot_.dim(); }
  const std::vector<std::string>& labels() const { return dot_.labels(); }
  const Algebra<S>& dot() const { return dot_; }
  const Algebra<S>& second() const { return second_; }

  friend bool operator==(const TwoOpAlgebra& a, const TwoOpAlgebra& b) {
    return a.dot_ == b.dot_ && a.second_ == b.second_ && a.second_.role() == b.second_.role();
  }

 private:
  Algebra<S> dot_;
  Algebra<S> second_;
};

template <class S>
struct BilinearForm {
  Matrix<S> matrix;

  BilinearForm() = default;
  explicit BilinearForm(Matrix<S> m) : matrix(std::move(m)) {
    if (matrix.rows() != matrix.cols()) throw DimensionMismatch("bilinear form must be square");
  }

  int dim() const { return static_cast<int>(matrix.rows()); }
  const S& operator()(int i, int j) const { return matrix(i, j); }
  S value(const Vector<S>& x, const Vector<S>& y) const { return x.dot(matrix * y); }
  bool is_symmetric() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        if (matrix(i, j) != matrix(j, i)) return false;
    return true;
  }
  bool is_nondegenerate() const { return !is_zero(determinant(matrix)); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return same_matrix(a.matrix, b.matrix);
  }
};

// Column j holds the image of basis vector j.
template <class S>
struct LinearMap {
  Matrix<S> matrix;
  std::string role = "map";

  LinearMap() = default;
  explicit LinearMap(Matrix<S> m, std::string r = "map") : matrix(std::move(m)), role(std::move(r)) {}

  int rows() const { return static_cast<int>(matrix.rows()); }
  int cols() const { return static_cast<int>(matrix.cols()); }
  Vector<S> operator()(const Vector<S>& x) const { return matrix * x; }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return same_matrix(a.matrix, b.matrix);
  }
};

// rho(e_i) = mats[i], acting on a carrier of dimension carrier_dim.
template <class S>
struct Representation {
  int carrier_dim = 0;
  std::vector<Matrix<S>> mats;

  Representation() = default;
  Representation(int m, std::vector<Matrix<S>> ms) : carrier_dim(m), mats(std::move(ms)) {
    for (const auto& a : mats)
      if (a.rows() != m || a.cols() != m) throw DimensionMismatch("representation matrix size");
  }

  int algebra_dim() const { return static_cast<int>(mats.size()); }

  Matrix<S> act(const Vector<S>& x) const {
    if (x.size() != algebra_dim()) throw DimensionMismatch("representation argument length");
    Matrix<S> out = zero_matrix<S>(carrier_dim, carrier_dim);
    for (int i = 0; i < algebra_dim(); ++i)
      if (!is_zero(x(i))) out += x(i) * mats[i];
    return out;
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    if (a.carrier_dim != b.carrier_dim || a.mats.size() != b.mats.size()) return false;
    for (std::size_t i = 0; i < a.mats.size(); ++i)
      if (!same_matrix(a.mats[i], b.mats[i])) return false;
    return true;
  }
};

template <class S>
struct Witness {
  std::string identity;
  std::vector<int> indices;
  Vector<S> residual;
};

template <class S>
struct CheckReport {
  std::optional<Witness<S>> witness;

  bool pass() const { return !witness.has_value(); }
  explicit operator bool() const { return pass(); }

  static CheckReport ok() { return {}; }
  static CheckReport failure(std::string id, std::vector<int> idx, Vector<S> residual) {
    return CheckReport{Witness<S>{std::move(id), std::move(idx), std::move(residual)}};
  }
};

}  // namespace apl
