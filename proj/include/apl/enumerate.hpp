#pragma once

// Exhaustive oracles over small prime fields, dimension 2.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "apl/core.hpp"

namespace apl {

class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Base-p digits of code fill the flat tensor, most significant first.
template <int P>
Algebra<Zp<P>> tensor_from_code(int dim, long code, Role role = Role::circ) {
  Algebra<Zp<P>> a(dim, role);
  auto& d = a.data();
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    d[i] = Zp<P>(code % P);
    code /= P;
  }
  return a;
}

template <int P>
long code_of(const Algebra<Zp<P>>& a) {
  long code = 0;
  for (const auto& v : a.data()) code = code * P + v.value();
  return code;
}

template <int P>
Matrix<Zp<P>> matrix_from_code(int rows, int cols, long code) {
  Matrix<Zp<P>> m(rows, cols);
  for (int r = rows - 1; r >= 0; --r)
    for (int c = cols - 1; c >= 0; --c) {
      m(r, c) = Zp<P>(code % P);
      code /= P;
    }
  return m;
}

template <int P>
long ipow(long e) {
  long r = 1;
  while (e-- > 0) r *= P;
  return r;
}

template <int P>
std::vector<Matrix<Zp<P>>> general_linear_group(int n) {
  std::vector<Matrix<Zp<P>>> out;
  const long total = ipow<P>(n * n);
  for (long c = 0; c < total; ++c) {
    auto m = matrix_from_code<P>(n, n, c);
    if (!is_zero(determinant(m))) out.push_back(m);
  }
  return out;
}

template <int P>
struct Enumeration {
  std::vector<Algebra<Zp<P>>> solutions;  // ascending code order
  std::vector<long> codes;
  // Filled when orbits are requested: orbit index per solution and the
  // minimal code of each orbit, in increasing order.
  std::vector<int> orbit_of;
  std::vector<long> orbit_representatives;
  std::optional<int> orbit_count;
};

template <int P>
long orbit_min_code(const Algebra<Zp<P>>& a, const std::vector<Matrix<Zp<P>>>& group) {
  long best = code_of(a);
  for (const auto& g : group) best = std::min(best, code_of(change_basis(a, g)));
  return best;
}

template <int P>
void check_supported(int dim) {
  if (P != 2 && P != 3 && P != 5 && P != 7) throw Unsupported("finite field modulus must be 2, 3, 5 or 7");
  if (dim != 2) throw Unsupported("exhaustive enumeration is offered in dimension 2 only");
}

template <int P>
Enumeration<P> ff_enumerate_tensors(int dim, const std::function<bool(const Algebra<Zp<P>>&)>& pred,
                                    bool orbits = false, Role role = Role::circ) {
  check_supported<P>(dim);
  Enumeration<P> out;
  const long total = ipow<P>(dim * dim * dim);
  for (long c = 0; c < total; ++c) {
    auto a = tensor_from_code<P>(dim, c, role);
    if (pred(a)) {
      out.codes.push_back(c);
      out.solutions.push_back(std::move(a));
    }
  }
  if (orbits) {
    std::map<long, int> index;
    std::vector<long> mins;
    const auto group = general_linear_group<P>(dim);
    for (const auto& a : out.solutions) mins.push_back(orbit_min_code(a, group));
    std::vector<long> reps = mins;
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);
    for (long m : mins) out.orbit_of.push_back(index[m]);
    out.orbit_representatives = reps;
    out.orbit_count = static_cast<int>(reps.size());
  }
  return out;
}

template <int P>
struct MatrixEnumeration {
  std::vector<Matrix<Zp<P>>> solutions;
  std::vector<long> codes;
};

// All rows x cols matrices over F_p passing pred, in ascending code order.
template <int P>
MatrixEnumeration<P> ff_enumerate_matrices(int rows, int cols,
                                           const std::function<bool(const Matrix<Zp<P>>&)>& pred) {
  check_supported<P>(rows);
  MatrixEnumeration<P> out;
  const long total = ipow<P>(rows * cols);
  for (long c = 0; c < total; ++c) {
    auto m = matrix_from_code<P>(rows, cols, c);
    if (pred(m)) {
      out.codes.push_back(c);
      out.solutions.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace apl
