#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace apl {

// Integers modulo a prime P, stored in canonical range [0, P).
template <int P>
class Zp {
  static_assert(P >= 2 && P < 46341, "modulus must be a small prime");

 public:
  static constexpr int modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long v) : v_(static_cast<int>(((v % P) + P) % P)) {}

  constexpr int value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Zp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero mod p");
    // Fermat: v^(P-2)
    long r = 1, b = v_;
    for (int e = P - 2; e > 0; e >>= 1) {
      if (e & 1) r = r * b % P;
      b = b * b % P;
    }
    return Zp(r);
  }

  std::string str() const { return std::to_string(v_); }

  constexpr Zp& operator+=(Zp o) {
    v_ += o.v_;
    if (v_ >= P) v_ -= P;
    return *this;
  }
  constexpr Zp& operator-=(Zp o) {
    v_ -= o.v_;
    if (v_ < 0) v_ += P;
    return *this;
  }
  constexpr Zp& operator*=(Zp o) {
    v_ = static_cast<int>(static_cast<long>(v_) * o.v_ % P);
    return *this;
  }
  constexpr Zp& operator/=(Zp o) { return *this *= o.inverse(); }

  friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
  friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
  friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
  friend constexpr Zp operator/(Zp a, Zp b) { return a /= b; }
  friend constexpr Zp operator-(Zp a) { return Zp(0) - a; }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }
  friend constexpr bool canonical_less(Zp a, Zp b) { return a.v_ < b.v_; }

 private:
  int v_ = 0;
};

template <int P>
constexpr bool is_zero(Zp<P> x) {
  return x.is_zero();
}

template <int P>
std::string to_string(Zp<P> x) {
  return x.str();
}

template <int P>
inline std::ostream& operator<<(std::ostream& os, Zp<P> s) { return os << s.str(); }

}  // namespace apl
