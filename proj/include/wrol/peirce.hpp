#pragma once

// Peirce decompositions, K-inverse membership, the {1,3}/{1,4} families and
// commutant sampling.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrol/geninv.hpp"
#include "wrol/random.hpp"

namespace wrol {

/// x relative to idempotents (p, q):
///   x1 = p x q, x2 = p x (e-q), x3 = (e-p) x q, x4 = (e-p) x (e-q).
struct PeirceBlocks {
  Matrix x1, x2, x3, x4;
  Matrix p, q;

  /// x1 + x2 + x3 + x4.
  Matrix reassemble() const;
};

/// Throws NotIdempotent unless p^2 = p and q^2 = q.
PeirceBlocks peirce_blocks(const Matrix& x, const Matrix& p, const Matrix& q);

/// Nonempty subset of the Penrose equation indices {1, 2, 3, 4}.
class KSet {
 public:
  /// Throws EmptyK for {} and std::out_of_range for indices outside 1..4.
  KSet(std::initializer_list<int> indices);
  explicit KSet(std::span<const int> indices);
  /// "1,3" or "{1,3}".
  static KSet parse(std::string_view text);

  bool contains(int j) const { return (mask_ >> j) & 1u; }
  std::string to_string() const;
  friend bool operator==(KSet, KSet) = default;

 private:
  unsigned mask_ = 0;
};

/// X satisfies Penrose equation (j) for A for every j in K.
bool is_k_inverse(const Matrix& a, const Matrix& x, KSet k);

/// A† + (I - A†A) X. Every {1,3}-inverse of A has this form.
Matrix sample_13_inverse(const Matrix& a, const Matrix& x);
/// A† + X (I - A A†); the adjoint of a {1,3}-inverse of A*.
Matrix sample_14_inverse(const Matrix& a, const Matrix& x);

/// Block data for parametrizing a{1,3} relative to (p, r) with
/// p = b b†, q = b† b, r = a a† and d = a a*.
struct ParamContext13 {
  Matrix a;
  Matrix d;
  Matrix d_dagger;
  Matrix p, q, r;

  Matrix a1() const;  ///< r a p
  Matrix a2() const;  ///< r a (e - p)
};

/// Requires a, b square of equal size with Moore-Penrose inverses.
ParamContext13 make_param_context_13(const Matrix& a, const Matrix& b);

/// Blocks z1..z4 of a† + (e - a†a) x relative to (p, r), computed blockwise
/// from the blocks of x (also relative to (p, r)):
///   z1 = a1* d† + (e - a1* d† a1) x1 - a1* d† a2 x3
///   z2 = (e - a1* d† a1) x2 - a1* d† a2 x4
///   z3 = a2* d† - a2* d† a1 x1 + (e - a2* d† a2) x3
///   z4 = -a2* d† a1 x2 + (e - a2* d† a2) x4
PeirceBlocks structured_13_blocks(const ParamContext13& ctx, const PeirceBlocks& x_blocks);

// --- commutants -------------------------------------------------------------
//
// A matrix C (n x n) is handled through vec(C), stacking columns: entry
// C(i, j) sits at index j * n + i. Linear conditions on C become n^2-column
// matrices; a commutant is the nullspace of their vertical stack.

/// vec(M C) = (I (x) M) vec(C).
Matrix left_mul_operator(const Matrix& m);
/// vec(C M) = (M^T (x) I) vec(C).
Matrix right_mul_operator(const Matrix& m);
/// vec(C M - M C).
Matrix commutator_operator(const Matrix& m);

/// Inverse of vec for an n x n matrix.
Matrix unvec(const Matrix& v, std::size_t n);

/// Basis of { C : operator * vec(C) = 0 } for the stacked operators.
std::vector<Matrix> matrix_space_basis(std::span<const Matrix> operators, const Domain& domain, std::size_t n);
/// Basis of the matrices commuting with every generator.
std::vector<Matrix> commutant_basis(std::span<const Matrix> generators);

/// Random combination of the basis with random_scalar coefficients; the zero
/// matrix of the given shape if the basis is empty.
Matrix random_combination(std::span<const Matrix> basis, const Domain& domain, std::size_t n, Rng& rng);

/// Random element of the commutant of {B, B*}.
Matrix sample_commutant(const Matrix& b, std::uint64_t seed);
Matrix sample_commutant(const Matrix& b, Rng& rng);

}  // namespace wrol
