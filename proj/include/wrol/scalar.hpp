#pragma once

// Exact involutive scalar domains.
//
// Two fields are supported: the Gaussian rationals Q(i) with complex
// conjugation, and prime fields F_p with the identity involution. Values of
// different domains never mix; any attempt throws DomainMismatch.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "wrol/errors.hpp"

namespace wrol {

/// Arbitrary-precision rational; GMP keeps it in lowest terms with a
/// positive denominator, so equality is structural.
using Rational = mpq_class;

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {Raw{}, re_, -im_}; }
  /// |z|^2 = z * conj(z), always real.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inv() const;

  friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
    return {Raw{}, x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
    return {Raw{}, x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y);
  friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) { return x * y.inv(); }
  GaussianRational operator-() const { return {Raw{}, -re_, -im_}; }
  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }

  /// Canonical form: `a/b`, `c/di`, `a/b+c/di`, with `/1` dropped.
  std::string to_string() const;
  static GaussianRational parse(std::string_view text);

 private:
  // GMP arithmetic on canonical operands is already canonical.
  struct Raw {};
  GaussianRational(Raw, Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  Rational re_;
  Rational im_;
};

class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }
  PrimeFieldElement conj() const { return *this; }
  PrimeFieldElement inv() const;

  friend PrimeFieldElement operator+(const PrimeFieldElement& x, const PrimeFieldElement& y);
  friend PrimeFieldElement operator-(const PrimeFieldElement& x, const PrimeFieldElement& y);
  friend PrimeFieldElement operator*(const PrimeFieldElement& x, const PrimeFieldElement& y);
  friend PrimeFieldElement operator/(const PrimeFieldElement& x, const PrimeFieldElement& y) { return x * y.inv(); }
  PrimeFieldElement operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }
  friend bool operator==(const PrimeFieldElement& x, const PrimeFieldElement& y) {
    return x.modulus_ == y.modulus_ && x.value_ == y.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

class Scalar;

/// Tag describing which field a scalar lives in.
class Domain {
 public:
  enum class Kind { gaussian_rational, prime_field };

  static Domain gaussian_rational() { return Domain(Kind::gaussian_rational, 0); }
  /// Odd prime p <= 2^31, checked by trial division.
  static Domain prime_field(std::uint64_t p);
  /// Accepts `gaussian_rational` or `fp:<p>`.
  static Domain parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_gaussian() const { return kind_ == Kind::gaussian_rational; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Parses the scalar string grammar of this domain.
  Scalar parse_scalar(std::string_view text) const;

  std::string to_string() const;
  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  friend class Scalar;
  Domain(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint32_t modulus_;
};

/// A value of some involutive field. Immutable value type.
class Scalar {
 public:
  Scalar() : v_(GaussianRational()) {}
  Scalar(GaussianRational z) : v_(std::move(z)) {}
  Scalar(PrimeFieldElement x) : v_(x) {}

  Domain domain() const;
  bool is_gaussian() const { return v_.index() == 0; }
  bool is_zero() const;
  bool is_one() const;

  Scalar conj() const;
  /// Throws DivisionByZero on zero.
  Scalar inv() const;

  const GaussianRational& as_gaussian() const;
  const PrimeFieldElement& as_prime() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  /// Structural equality; values from different domains compare unequal.
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.v_ == y.v_; }

  std::string to_string() const;

 private:
  std::variant<GaussianRational, PrimeFieldElement> v_;
};

inline Scalar conj(const Scalar& x) { return x.conj(); }
inline Scalar inv(const Scalar& x) { return x.inv(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace wrol
