#include "apl/classify.hpp"

#include <set>

namespace apl::detail {

namespace {

std::vector<mpz_class> divisors(mpz_class m) {
  if (m < 0) m = -m;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= m; ++d)
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  return out;
}

mpq_class horner(const std::vector<mpq_class>& c, const mpq_class& t) {
  mpq_class v = 0;
  for (const auto& x : c) v = v * t + x;
  return v;
}

}  // namespace

std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
  std::vector<mpq_class> c = coeffs;
  while (!c.empty() && c.front() == 0) c.erase(c.begin());
  if (c.size() < 2) return {};
  std::set<mpq_class> roots;
  // Zero roots first, then clear them from the constant end.
  while (c.back() == 0) {
    roots.insert(0);
    c.pop_back();
  }
  mpz_class lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(mpz_class(x * lcm));
  if (z.size() >= 2)
    for (const auto& p : divisors(z.back()))
      for (const auto& q : divisors(z.front()))
        for (int sign : {1, -1}) {
          mpq_class t(sign * p, q);
          t.canonicalize();
          if (horner(c, t) == 0) roots.insert(t);
        }
  return {roots.begin(), roots.end()};
}

std::vector<Scalar> quadratic_roots(const mpq_class& a, const mpq_class& b, const mpq_class& c) {
  if (a == 0) return {};
  mpq_class disc = b * b - 4 * a * c;
  Scalar r = Scalar::sqrt_of(disc);
  Scalar two_a(mpq_class(2 * a));
  Scalar mb(mpq_class(-b));
  if (disc == 0) return {mb / two_a};
  std::vector<Scalar> out{(mb - r) / two_a, (mb + r) / two_a};
  std::sort(out.begin(), out.end(), [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
  return out;
}

}  // namespace apl::detail
