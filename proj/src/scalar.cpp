#include "wrol/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace wrol {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// [+|-]digits[/digits]
Rational parse_rational(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed scalar '" + std::string(whole) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same(std::uint32_t p, std::uint32_t q) {
  if (p != q) throw DomainMismatch("prime field moduli differ: " + std::to_string(p) + " vs " + std::to_string(q));
}

}  // namespace

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
  if (sgn(x.im_) == 0 && sgn(y.im_) == 0) return {GaussianRational::Raw{}, x.re_ * y.re_, Rational(0)};
  return {GaussianRational::Raw{}, x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {Raw{}, re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return rational_string(re_);
  std::string imag = rational_string(im_) + "i";
  if (sgn(re_) == 0) return imag;
  return rational_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

GaussianRational GaussianRational::parse(std::string_view whole) {
  std::string_view text = trim(whole);
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return GaussianRational(parse_rational(text, whole));

  text.remove_suffix(1);
  // The imaginary part starts at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view() : text.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? text : text.substr(split);
  // Bare `i`, `+i`, `-i` stand for a unit imaginary part.
  std::string im_buf(im_text);
  if (im_buf.empty() || im_buf == "+" || im_buf == "-") im_buf += "1";
  Rational re = re_text.empty() ? Rational(0) : parse_rational(re_text, whole);
  return GaussianRational(re, parse_rational(im_buf, whole));
}

// ---------------------------------------------------------------------------
// PrimeFieldElement

PrimeFieldElement operator+(const PrimeFieldElement& x, const PrimeFieldElement& y) {
  require_same(x.modulus_, y.modulus_);
  return {std::uint64_t(x.value_) + y.value_, x.modulus_};
}

PrimeFieldElement operator-(const PrimeFieldElement& x, const PrimeFieldElement& y) {
  require_same(x.modulus_, y.modulus_);
  return {std::uint64_t(x.value_) + x.modulus_ - y.value_, x.modulus_};
}

PrimeFieldElement operator*(const PrimeFieldElement& x, const PrimeFieldElement& y) {
  require_same(x.modulus_, y.modulus_);
  return {std::uint64_t(x.value_) * y.value_, x.modulus_};
}

PrimeFieldElement PrimeFieldElement::inv() const {
  if (value_ == 0) throw DivisionByZero();
  // Fermat: x^(p-2).
  std::uint64_t result = 1, base = value_, e = modulus_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return {result, modulus_};
}

// ---------------------------------------------------------------------------
// Domain

Domain Domain::prime_field(std::uint64_t p) {
  if (p % 2 == 0 || p > (std::uint64_t(1) << 31) || !is_prime(p))
    throw InvalidSpec("prime field modulus must be an odd prime <= 2^31, got " + std::to_string(p));
  return Domain(Kind::prime_field, static_cast<std::uint32_t>(p));
}

Domain Domain::parse(std::string_view text) {
  text = trim(text);
  if (text == "gaussian_rational") return gaussian_rational();
  if (text.starts_with("fp:") && all_digits(text.substr(3)) && text.size() < 16)
    return prime_field(std::stoull(std::string(text.substr(3))));
  throw ParseError("unknown domain '" + std::string(text) + "' (expected gaussian_rational or fp:<p>)");
}

Scalar Domain::zero() const { return from_int(0); }
Scalar Domain::one() const { return from_int(1); }

Scalar Domain::from_int(long value) const {
  if (is_gaussian()) return GaussianRational(Rational(value));
  long m = static_cast<long>(modulus_);
  long r = value % m;
  if (r < 0) r += m;
  return PrimeFieldElement(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Domain::parse_scalar(std::string_view text) const {
  if (is_gaussian()) return GaussianRational::parse(text);
  std::string_view t = trim(text);
  bool negative = !t.empty() && t.front() == '-';
  if (negative) t.remove_prefix(1);
  if (!all_digits(t)) throw ParseError("malformed prime field scalar '" + std::string(text) + "'");
  mpz_class v(std::string(t), 10);
  if (negative) v = -v;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), modulus_);
  return PrimeFieldElement(r.get_ui(), modulus_);
}

std::string Domain::to_string() const {
  return is_gaussian() ? "gaussian_rational" : "fp:" + std::to_string(modulus_);
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

template <class Op>
Scalar binary(const Scalar& x, const Scalar& y, Op op) {
  if (x.is_gaussian() != y.is_gaussian())
    throw DomainMismatch("cannot combine " + x.domain().to_string() + " with " + y.domain().to_string());
  if (x.is_gaussian()) return op(x.as_gaussian(), y.as_gaussian());
  return op(x.as_prime(), y.as_prime());
}

}  // namespace

Domain Scalar::domain() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&v_)) return Domain(Domain::Kind::prime_field, p->modulus());
  return Domain::gaussian_rational();
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&v_)) return p->value() == 1;
  const auto& z = std::get<GaussianRational>(v_);
  return sgn(z.im()) == 0 && z.re() == 1;
}

Scalar Scalar::conj() const {
  return std::visit([](const auto& x) { return Scalar(x.conj()); }, v_);
}

Scalar Scalar::inv() const {
  return std::visit([](const auto& x) { return Scalar(x.inv()); }, v_);
}

const GaussianRational& Scalar::as_gaussian() const {
  if (auto* z = std::get_if<GaussianRational>(&v_)) return *z;
  throw DomainMismatch("scalar is not a Gaussian rational");
}

const PrimeFieldElement& Scalar::as_prime() const {
  if (auto* p = std::get_if<PrimeFieldElement>(&v_)) return *p;
  throw DomainMismatch("scalar is not a prime field element");
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return Scalar(a + b); });
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return Scalar(a - b); });
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return Scalar(a * b); });
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return Scalar(a / b); });
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace wrol
