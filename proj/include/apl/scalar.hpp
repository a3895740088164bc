#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apl {

// Raised when two scalars from different quadratic extensions meet.
class FieldMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact element a + b*sqrt(d) of Q or of a quadratic extension Q(sqrt d).
// d is squarefree and != 1; d == 0 exactly when b == 0 (the rational case).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(const mpq_class& q) : a_(q) { a_.canonicalize(); }
  Scalar(const mpq_class& a, const mpq_class& b, long d);

  static Scalar rational(long num, long den = 1);
  // Exact square root of a rational, landing in Q(sqrt d) for squarefree d.
  static Scalar sqrt_of(const mpq_class& r);
  static Scalar parse(std::string_view text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& radical_coeff() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return sgn(a_) == 0 && d_ == 0; }
  bool is_one() const { return d_ == 0 && a_ == 1; }

  Scalar conjugate() const;
  // a^2 - d*b^2
  mpq_class norm() const;
  Scalar inverse() const;

  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend Scalar operator-(Scalar x) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
  }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // Total order on representations, used only for canonical sorting.
  friend bool canonical_less(const Scalar& x, const Scalar& y);

 private:
  long join(const Scalar& o) const;
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

// Squarefree part of a nonzero integer, sign kept; writes the square factor.
long squarefree_part(const mpz_class& m, mpz_class& root);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline std::string to_string(const Scalar& s) { return s.str(); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace apl
