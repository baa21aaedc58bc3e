#pragma once

// Dense exact matrices over a scalar domain.
//
// Storage is row-major. Shapes with a zero extent (n x 0, 0 x m) are valid
// values; a product through an empty inner dimension is the zero matrix of
// the outer shape.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "wrol/scalar.hpp"

namespace wrol {

class Matrix {
 public:
  /// Zero matrix.
  Matrix(Domain domain, std::size_t rows, std::size_t cols);
  /// Row-major entries; throws DimensionMismatch / DomainMismatch on bad input.
  Matrix(Domain domain, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(Domain domain, std::size_t n);
  static Matrix scalar_identity(const Scalar& lambda, std::size_t n);
  static Matrix from_rows(Domain domain, const std::vector<std::vector<Scalar>>& rows);
  /// Convenience for literals: every entry is parsed with the domain's grammar.
  static Matrix parse(Domain domain, const std::vector<std::vector<std::string>>& rows);
  /// Diagonal matrix with the given entries.
  static Matrix diagonal(Domain domain, const std::vector<Scalar>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Domain& domain() const { return domain_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Scalar> entries() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& lambda, const Matrix& a);
  Matrix operator-() const;

 private:
  Domain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Exact product; DimensionMismatch if A.cols != B.rows, DomainMismatch across domains.
inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

/// Conjugate transpose: result(j, i) = conj(A(i, j)).
Matrix star(const Matrix& a);
/// Plain transpose, no conjugation.
Matrix transpose(const Matrix& a);

bool is_hermitian(const Matrix& a);
bool is_idempotent(const Matrix& a);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form; the pivot in each column is the first nonzero entry.
Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);

struct RankFactorization {
  Matrix F;  ///< n x k, full column rank
  Matrix G;  ///< k x m, full row rank
  std::size_t rank;
};

/// A = F * G with G the nonzero rows of rref(A) and F the pivot columns of A.
RankFactorization rank_factorization(const Matrix& a);

/// Column vectors spanning ker(A), one per free column of rref(A).
std::vector<Matrix> nullspace_basis(const Matrix& a);

/// Throws Singular when rank < n, DimensionMismatch when not square.
Matrix inverse(const Matrix& a);

/// Stack matrices with equal column count on top of each other.
Matrix vstack(std::span<const Matrix> blocks);

std::ostream& operator<<(std::ostream& os, const Matrix& a);

}  // namespace wrol
