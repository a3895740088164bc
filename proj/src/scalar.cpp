#include "apl/scalar.hpp"

#include <cctype>

namespace apl {

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0 && sgn(b_) != 0) throw std::domain_error("radical coefficient without radicand");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  } else if (d_ != 0) {
    mpz_class root;
    long sf = squarefree_part(mpz_class(d_), root);
    if (sf != d_) {
      b_ *= root;
      d_ = sf;
      if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
      }
    }
  }
  normalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return Scalar(q);
}

long squarefree_part(const mpz_class& m, mpz_class& root) {
  if (m == 0) throw std::domain_error("squarefree part of zero");
  mpz_class rest = abs(m);
  root = 1;
  mpz_class sf = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      root *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      sf *= p;
    }
  }
  sf *= rest;
  if (m < 0) sf = -sf;
  if (!sf.fits_slong_p()) throw std::overflow_error("radicand too large");
  return sf.get_si();
}

Scalar Scalar::sqrt_of(const mpq_class& r) {
  if (sgn(r) == 0) return Scalar();
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class m = r.get_num() * r.get_den();
  mpz_class root;
  long d = squarefree_part(m, root);
  mpq_class coeff(root, r.get_den());
  coeff.canonicalize();
  if (d == 1) return Scalar(coeff);
  return Scalar(mpq_class(0), coeff, d);
}

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

long Scalar::join(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw FieldMismatch("mixed quadratic extensions sqrt(" + std::to_string(d_) + ") and sqrt(" +
                      std::to_string(o.d_) + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  long d = join(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  long d = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = join(o);
  if (d == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar Scalar::conjugate() const {
  Scalar c = *this;
  c.b_ = -c.b_;
  return c;
}

mpq_class Scalar::norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (d_ == 0) return Scalar(mpq_class(1) / a_);
  mpq_class n = norm();
  return Scalar(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.d_ == 0) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool canonical_less(const Scalar& x, const Scalar& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

std::string Scalar::str() const {
  if (d_ == 0) return a_.get_str();
  std::string out;
  mpq_class mag = abs(b_);
  if (sgn(a_) != 0) {
    out = a_.get_str();
    out += sgn(b_) < 0 ? "-" : "+";
  } else if (sgn(b_) < 0) {
    out = "-";
  }
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + std::to_string(d_) + ")";
  return out;
}

namespace {

mpq_class parse_rational(std::string_view t, std::string_view whole) {
  if (t.empty()) throw ParseError("empty number in scalar '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (t[0] == '+' || t[0] == '-') i = 1;
  bool slash = false;
  bool digit = false;
  for (std::size_t k = i; k < t.size(); ++k) {
    char c = t[k];
    if (c == '/') {
      if (slash || !digit) throw ParseError("malformed rational '" + std::string(whole) + "'");
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else {
      throw ParseError("unexpected character in scalar '" + std::string(whole) + "'");
    }
  }
  if (!digit) throw ParseError("malformed rational '" + std::string(whole) + "'");
  std::string s(t[0] == '+' ? t.substr(1) : t);
  mpq_class q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Scalar(parse_rational(s, text));

  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size())
    throw ParseError("malformed radical in '" + std::string(text) + "'");
  std::string dstr = s.substr(pos + 5, close - pos - 5);
  mpq_class dq = parse_rational(dstr, text);
  if (dq.get_den() != 1 || !dq.get_num().fits_slong_p())
    throw ParseError("radicand must be an integer in '" + std::string(text) + "'");
  long d = dq.get_num().get_si();
  if (d == 0) throw ParseError("radicand zero in '" + std::string(text) + "'");

  // Split prefix into rational part and coefficient: "[a](+|-)[b*]"
  std::string pre = s.substr(0, pos);
  mpq_class coeff = 1;
  if (!pre.empty() && pre.back() == '*') {
    pre.pop_back();
    std::size_t k = pre.find_last_of("+-");
    std::string cstr = k == std::string::npos ? pre : pre.substr(k);
    coeff = parse_rational(cstr, text);
    pre = k == std::string::npos ? "" : pre.substr(0, k);
    if (!pre.empty() && cstr[0] != '+' && cstr[0] != '-')
      throw ParseError("malformed scalar '" + std::string(text) + "'");
  } else if (!pre.empty() && (pre.back() == '+' || pre.back() == '-')) {
    if (pre.back() == '-') coeff = -1;
    pre.pop_back();
  } else if (!pre.empty()) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  mpq_class a = 0;
  if (!pre.empty()) a = parse_rational(pre, text);
  return Scalar(a, coeff, d);
}

}  // namespace apl
