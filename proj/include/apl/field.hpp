#pragma once

// Eigen integration for the exact scalar types, plus the small trait surface
// every generic algorithm uses: characteristic, conversion from Scalar.

#include <Eigen/Core>

#include "apl/modp.hpp"
#include "apl/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<apl::Scalar> : GenericNumTraits<apl::Scalar> {
  using Real = apl::Scalar;
  using NonInteger = apl::Scalar;
  using Nested = apl::Scalar;
  using Literal = apl::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <int P>
struct NumTraits<apl::Zp<P>> : GenericNumTraits<apl::Zp<P>> {
  using Real = apl::Zp<P>;
  using NonInteger = apl::Zp<P>;
  using Nested = apl::Zp<P>;
  using Literal = apl::Zp<P>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace apl {

template <class S>
struct field_traits;

template <>
struct field_traits<Scalar> {
  static constexpr int characteristic = 0;
  static Scalar from(const Scalar& s) { return s; }
  // Canonical representative in [0, P).
  template <int P>
  static Scalar from(const Zp<P>& z) {
    return Scalar(static_cast<long>(z.value()));
  }
};

template <int P>
struct field_traits<Zp<P>> {
  static constexpr int characteristic = P;
  // Reduces a rational scalar mod P; radicals and P-divisible denominators fail.
  static Zp<P> from(const Scalar& s) {
    if (!s.is_rational()) throw std::domain_error("radical scalar has no image mod p");
    const mpq_class& q = s.rational_part();
    mpz_class num = q.get_num() % P;
    mpz_class den = q.get_den() % P;
    if (den == 0) throw std::domain_error("denominator divisible by p: " + s.str());
    return Zp<P>(num.get_si()) / Zp<P>(den.get_si());
  }
};

template <class S>
constexpr int characteristic_of = field_traits<S>::characteristic;

template <class T, class S>
T field_cast(const S& s) {
  return field_traits<T>::from(s);
}

}  // namespace apl
