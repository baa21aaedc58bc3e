#pragma once

// Seeded generation of small exact scalars and matrices.
//
// Magnitudes are bounded (numerators in [-5, 5], denominators in {1, 2, 3})
// so that exact entry growth stays polynomial at the sizes used here.
// Everything is a deterministic function of the seed; the draw is done with
// plain modular reduction of mt19937_64 output so streams do not depend on
// the standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "wrol/matrix.hpp"

namespace wrol {

/// Mixes a master seed with an index (splitmix64 finalizer) to give each
/// trial its own independent stream.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  long uniform(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  /// True with probability num/den.
  bool chance(long num, long den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Rational a/b with a in [-5, 5], b in {1, 2, 3}; a uniform residue over F_p.
Scalar random_coefficient(const Domain& domain, Rng& rng);
/// As random_coefficient, plus an independent imaginary part over Q(i) when `complex`.
Scalar random_scalar(const Domain& domain, Rng& rng, bool complex);
/// Nonzero variant of random_scalar.
Scalar random_nonzero_scalar(const Domain& domain, Rng& rng, bool complex);
Matrix random_matrix(const Domain& domain, std::size_t rows, std::size_t cols, Rng& rng, bool complex);

}  // namespace wrol
