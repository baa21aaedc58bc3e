#include "wrol/geninv.hpp"

#include <optional>

namespace wrol {

namespace {

void require_transposed_shape(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.cols() || b.cols() != a.rows())
    throw DimensionMismatch("candidate must be " + std::to_string(a.cols()) + "x" + std::to_string(a.rows()));
}

void require_square_pair(const Matrix& c, const Matrix& a) {
  if (!c.is_square() || !a.is_square() || c.rows() != a.rows())
    throw DimensionMismatch("commutation needs square matrices of equal size");
}

}  // namespace

bool PenroseReport::holds(int equation) const {
  switch (equation) {
    case 1: return eq1_holds;
    case 2: return eq2_holds;
    case 3: return eq3_holds;
    case 4: return eq4_holds;
    default: throw std::out_of_range("Penrose equation index must be 1..4");
  }
}

std::optional<Matrix> try_mp_inverse(const Matrix& a) {
  auto [f, g, k] = rank_factorization(a);
  if (k == 0) return Matrix(a.domain(), a.cols(), a.rows());
  Matrix fs = star(f);
  Matrix gs = star(g);
  try {
    Matrix left = inverse(g * gs);
    Matrix right = inverse(fs * f);
    return gs * left * right * fs;
  } catch (const Singular&) {
    return std::nullopt;
  }
}

bool mp_exists(const Matrix& a) {
  if (a.domain().is_gaussian()) return true;
  std::size_t k = rank(a);
  Matrix as = star(a);
  return rank(as * a) == k && rank(a * as) == k;
}

Matrix mp_inverse(const Matrix& a) {
  if (auto x = try_mp_inverse(a)) return std::move(*x);
  throw NoMPInverse();
}

bool group_invertible(const Matrix& a) {
  if (!a.is_square()) return false;
  return rank(a * a) == rank(a);
}

Matrix group_inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("group inverse needs a square matrix");
  auto [f, g, k] = rank_factorization(a);
  if (k == 0) return Matrix(a.domain(), a.rows(), a.cols());
  try {
    Matrix gf_inv = inverse(g * f);
    return f * gf_inv * gf_inv * g;
  } catch (const Singular&) {
    throw NotGroupInvertible();
  }
}

Matrix mp_via_star_group(const Matrix& a) {
  // Over F_p, (A*A)^# can exist while A† does not (e.g. A*A = 0 with A != 0).
  if (!mp_exists(a)) throw NoMPInverse();
  Matrix as = star(a);
  try {
    return group_inverse(as * a) * as;
  } catch (const NotGroupInvertible&) {
    throw NoMPInverse("(A*A)^# does not exist");
  }
}

PenroseReport penrose_residuals(const Matrix& a, const Matrix& b) {
  require_transposed_shape(a, b);
  Matrix ab = a * b;
  Matrix ba = b * a;
  return {ab * a == a, ba * b == b, star(ab) == ab, star(ba) == ba};
}

bool prop21_check(const Matrix& a, const Matrix& b) {
  require_transposed_shape(a, b);
  Matrix bs = star(b);
  return a * star(a) * bs == a && a * b * bs == bs;
}

bool commutes_with_pair(const Matrix& c, const Matrix& a) {
  require_square_pair(c, a);
  Matrix as = star(a);
  return c * a == a * c && c * as == as * c;
}

}  // namespace wrol
