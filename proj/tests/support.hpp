#pragma once

// Test helpers and oracles that do not go through the library's own
// rank-factorization route.

#include <string>
#include <vector>

#include "wrol/matrix.hpp"
#include "wrol/random.hpp"

namespace wrol::test {

inline Matrix Q(const std::vector<std::vector<std::string>>& rows) {
  return Matrix::parse(Domain::gaussian_rational(), rows);
}

inline Matrix Fp(std::uint64_t p, const std::vector<std::vector<std::string>>& rows) {
  return Matrix::parse(Domain::prime_field(p), rows);
}

inline Scalar q(const std::string& text) { return Domain::gaussian_rational().parse_scalar(text); }

// Entrywise product with explicit loops, independent of Matrix::operator*.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.domain(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = a.domain().zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

inline Matrix naive_star(const Matrix& a) {
  Matrix out(a.domain(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

// The four Penrose equations written out with the naive kernels.
inline bool oracle_is_mp(const Matrix& a, const Matrix& x) {
  Matrix ax = naive_mul(a, x);
  Matrix xa = naive_mul(x, a);
  return naive_mul(ax, a) == a && naive_mul(xa, x) == x && naive_star(ax) == ax && naive_star(xa) == xa;
}

// Greville's column-recursive pseudoinverse. Valid over Q(i), where
// v*v = 0 forces v = 0.
inline Matrix greville_pinv(const Matrix& a) {
  const Domain& dom = a.domain();
  const std::size_t m = a.rows();
  auto column = [&](std::size_t k) {
    Matrix c(dom, m, 1);
    for (std::size_t i = 0; i < m; ++i) c(i, 0) = a(i, k);
    return c;
  };
  auto row_pinv = [&](const Matrix& v) {  // pseudoinverse of a single column
    Scalar n2 = naive_mul(naive_star(v), v)(0, 0);
    if (n2.is_zero()) return Matrix(dom, 1, v.rows());
    return n2.inv() * naive_star(v);
  };
  if (a.cols() == 0) return Matrix(dom, 0, m);

  Matrix ak = column(0);
  Matrix pk = row_pinv(ak);  // 1 x m
  for (std::size_t k = 1; k < a.cols(); ++k) {
    Matrix col = column(k);
    Matrix d = naive_mul(pk, col);     // k x 1
    Matrix c = col - naive_mul(ak, d);  // m x 1
    Matrix bstar(dom, 1, m);
    if (!c.is_zero()) {
      bstar = row_pinv(c);
    } else {
      Scalar denom = dom.one() + naive_mul(naive_star(d), d)(0, 0);
      bstar = denom.inv() * naive_mul(naive_star(d), pk);
    }
    Matrix top = pk - naive_mul(d, bstar);
    Matrix next_p(dom, k + 1, m);
    Matrix next_a(dom, m, k + 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) next_p(i, j) = top(i, j);
    for (std::size_t j = 0; j < m; ++j) next_p(k, j) = bstar(0, j);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) next_a(i, j) = ak(i, j);
      next_a(i, k) = col(i, 0);
    }
    pk = std::move(next_p);
    ak = std::move(next_a);
  }
  return pk;
}

// Random matrix with mixed rank, built as a product of random factors.
inline Matrix random_mixed_rank(const Domain& dom, std::size_t rows, std::size_t cols, Rng& rng) {
  auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(rows, cols))));
  bool complex = dom.is_gaussian() && rng.chance(1, 2);
  if (k == 0) return Matrix(dom, rows, cols);
  return random_matrix(dom, rows, k, rng, complex) * random_matrix(dom, k, cols, rng, complex);
}

}  // namespace wrol::test
