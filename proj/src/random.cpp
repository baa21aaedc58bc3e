#include "wrol/random.hpp"

namespace wrol {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Rational small_rational(Rng& rng) {
  Rational q(rng.uniform(-5, 5), rng.uniform(1, 3));
  q.canonicalize();
  return q;
}

}  // namespace

Scalar random_coefficient(const Domain& domain, Rng& rng) { return random_scalar(domain, rng, false); }

Scalar random_scalar(const Domain& domain, Rng& rng, bool complex) {
  if (!domain.is_gaussian()) return PrimeFieldElement(rng.next() % domain.modulus(), domain.modulus());
  Rational re = small_rational(rng);
  Rational im = complex ? small_rational(rng) : Rational(0);
  return GaussianRational(re, im);
}

Scalar random_nonzero_scalar(const Domain& domain, Rng& rng, bool complex) {
  for (;;) {
    Scalar x = random_scalar(domain, rng, complex);
    if (!x.is_zero()) return x;
  }
}

Matrix random_matrix(const Domain& domain, std::size_t rows, std::size_t cols, Rng& rng, bool complex) {
  std::vector<Scalar> entries;
  entries.reserve(rows * cols);
  for (std::size_t k = 0; k < rows * cols; ++k) entries.push_back(random_scalar(domain, rng, complex));
  return Matrix(domain, rows, cols, std::move(entries));
}

}  // namespace wrol
