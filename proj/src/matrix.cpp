#include "wrol/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace wrol {

namespace {

void require_same_domain(const Matrix& a, const Matrix& b) {
  if (!(a.domain() == b.domain()))
    throw DomainMismatch("matrix domains differ: " + a.domain().to_string() + " vs " + b.domain().to_string());
}

std::string shape(const Matrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  require_same_domain(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
}

}  // namespace

Matrix::Matrix(Domain domain, std::size_t rows, std::size_t cols)
    : domain_(domain), rows_(rows), cols_(cols), data_(rows * cols, domain.zero()) {}

Matrix::Matrix(Domain domain, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : domain_(domain), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw DimensionMismatch("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(data_.size()));
  for (const auto& x : data_)
    if (!(x.domain() == domain_)) throw DomainMismatch("entry " + x.to_string() + " is not in " + domain_.to_string());
}

Matrix Matrix::identity(Domain domain, std::size_t n) {
  Matrix m(domain, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = domain.one();
  return m;
}

Matrix Matrix::scalar_identity(const Scalar& lambda, std::size_t n) {
  Matrix m(lambda.domain(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = lambda;
  return m;
}

Matrix Matrix::from_rows(Domain domain, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Scalar> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(domain, r, c, std::move(entries));
}

Matrix Matrix::parse(Domain domain, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> parsed;
  for (const auto& row : rows) {
    auto& out = parsed.emplace_back();
    for (const auto& s : row) out.push_back(domain.parse_scalar(s));
  }
  return from_rows(domain, parsed);
}

Matrix Matrix::diagonal(Domain domain, const std::vector<Scalar>& diag) {
  Matrix m(domain, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return Matrix(domain, m.rows_, m.cols_, m.data_);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.domain_ == b.domain_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    if (!b.data_[k].is_zero()) c.data_[k] += b.data_[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k)
    if (!b.data_[k].is_zero()) c.data_[k] -= b.data_[k];
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_domain(a, b);
  if (a.cols_ != b.rows_) throw DimensionMismatch("mul: " + shape(a) + " * " + shape(b));
  Matrix c(a.domain_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Matrix operator*(const Scalar& lambda, const Matrix& a) {
  if (!(lambda.domain() == a.domain_)) throw DomainMismatch("scalar and matrix domains differ");
  Matrix c = a;
  for (auto& x : c.data_)
    if (!x.is_zero()) x *= lambda;
  return c;
}

Matrix Matrix::operator-() const {
  Matrix c = *this;
  for (auto& x : c.data_)
    if (!x.is_zero()) x = -x;
  return c;
}

Matrix star(const Matrix& a) {
  Matrix t(a.domain(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j).conj();
  return t;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.domain(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

bool is_hermitian(const Matrix& a) { return a.is_square() && star(a) == a; }

bool is_idempotent(const Matrix& a) { return a.is_square() && a * a == a; }

Rref rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    Scalar scale = m(row, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivot_cols.size(); }

RankFactorization rank_factorization(const Matrix& a) {
  Rref r = rref(a);
  std::size_t k = r.pivot_cols.size();
  Matrix f(a.domain(), a.rows(), k);
  Matrix g(a.domain(), k, a.cols());
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t i = 0; i < a.rows(); ++i) f(i, t) = a(i, r.pivot_cols[t]);
    for (std::size_t j = 0; j < a.cols(); ++j) g(t, j) = r.reduced(t, j);
  }
  return {std::move(f), std::move(g), k};
}

std::vector<Matrix> nullspace_basis(const Matrix& a) {
  Rref r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(a.domain(), a.cols(), 1);
    v(free, 0) = a.domain().one();
    for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) v(r.pivot_cols[t], 0) = -r.reduced(t, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square " + shape(a));
  std::size_t n = a.rows();
  Matrix aug(a.domain(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.domain().one();
  }
  Rref r = rref(aug);
  if (r.pivot_cols.size() < n || (n > 0 && r.pivot_cols[n - 1] != n - 1)) throw Singular();
  Matrix inv(a.domain(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionMismatch("vstack of nothing");
  std::size_t cols = blocks.front().cols();
  std::vector<Scalar> entries;
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_domain(blocks.front(), b);
    if (b.cols() != cols) throw DimensionMismatch("vstack: column counts differ");
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    rows += b.rows();
  }
  return Matrix(blocks.front().domain(), rows, cols, std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const Matrix& a) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : a.entries()) {
    cells.push_back(x.to_string());
    width = std::max(width, cells.back().size());
  }
  if (a.rows() == 0 || a.cols() == 0) return os << "[] (" << shape(a) << ")\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& s = cells[i * a.cols() + j];
      os << (j ? "  " : " ") << std::string(width - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
  return os;
}

}  // namespace wrol
