#include "wrol/peirce.hpp"

#include <algorithm>
#include <cctype>

namespace wrol {

Matrix PeirceBlocks::reassemble() const { return x1 + x2 + x3 + x4; }

PeirceBlocks peirce_blocks(const Matrix& x, const Matrix& p, const Matrix& q) {
  if (!is_idempotent(p)) throw NotIdempotent("left idempotent p fails p*p = p");
  if (!is_idempotent(q)) throw NotIdempotent("right idempotent q fails q*q = q");
  if (p.rows() != x.rows() || q.rows() != x.cols())
    throw DimensionMismatch("idempotent sizes do not match the decomposed matrix");
  Matrix ep = Matrix::identity(x.domain(), p.rows()) - p;
  Matrix eq = Matrix::identity(x.domain(), q.rows()) - q;
  Matrix px = p * x;
  Matrix epx = ep * x;
  return {px * q, px * eq, epx * q, epx * eq, p, q};
}

// ---------------------------------------------------------------------------

KSet::KSet(std::initializer_list<int> indices) : KSet(std::span<const int>(indices.begin(), indices.size())) {}

KSet::KSet(std::span<const int> indices) {
  for (int j : indices) {
    if (j < 1 || j > 4) throw std::out_of_range("K index " + std::to_string(j) + " not in 1..4");
    mask_ |= 1u << j;
  }
  if (mask_ == 0) throw EmptyK();
}

KSet KSet::parse(std::string_view text) {
  std::vector<int> indices;
  for (char ch : text) {
    if (ch >= '1' && ch <= '4') {
      indices.push_back(ch - '0');
    } else if (ch != ',' && ch != '{' && ch != '}' && !std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError("bad K set '" + std::string(text) + "'");
    }
  }
  return KSet(std::span<const int>(indices));
}

std::string KSet::to_string() const {
  std::string out = "{";
  for (int j = 1; j <= 4; ++j) {
    if (!contains(j)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(j);
  }
  return out + "}";
}

bool is_k_inverse(const Matrix& a, const Matrix& x, KSet k) {
  if (x.rows() != a.cols() || x.cols() != a.rows())
    throw DimensionMismatch("K-inverse candidate has the wrong shape");
  Matrix ax = a * x;
  if (k.contains(1) && !(ax * a == a)) return false;
  if (k.contains(3) && !(star(ax) == ax)) return false;
  if (k.contains(2) || k.contains(4)) {
    Matrix xa = x * a;
    if (k.contains(2) && !(xa * x == x)) return false;
    if (k.contains(4) && !(star(xa) == xa)) return false;
  }
  return true;
}

Matrix sample_13_inverse(const Matrix& a, const Matrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) throw DimensionMismatch("X must have the shape of A*");
  Matrix ad = mp_inverse(a);
  return ad + (Matrix::identity(a.domain(), a.cols()) - ad * a) * x;
}

Matrix sample_14_inverse(const Matrix& a, const Matrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) throw DimensionMismatch("X must have the shape of A*");
  Matrix ad = mp_inverse(a);
  return ad + x * (Matrix::identity(a.domain(), a.rows()) - a * ad);
}

// ---------------------------------------------------------------------------

Matrix ParamContext13::a1() const { return r * a * p; }

Matrix ParamContext13::a2() const { return r * a * (Matrix::identity(a.domain(), p.rows()) - p); }

ParamContext13 make_param_context_13(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionMismatch("parametrization context needs square a, b of equal size");
  Matrix ad = mp_inverse(a);
  Matrix bd = mp_inverse(b);
  Matrix d = a * star(a);
  return {a, d, mp_inverse(d), b * bd, bd * b, a * ad};
}

PeirceBlocks structured_13_blocks(const ParamContext13& ctx, const PeirceBlocks& x_blocks) {
  if (!(x_blocks.p == ctx.p) || !(x_blocks.q == ctx.r))
    throw NotIdempotent("x blocks must be taken relative to (p, r) of the context");
  const Domain& dom = ctx.a.domain();
  Matrix e = Matrix::identity(dom, ctx.a.rows());
  Matrix a1 = ctx.a1();
  Matrix a2 = ctx.a2();
  Matrix a1s_dd = star(a1) * ctx.d_dagger;
  Matrix a2s_dd = star(a2) * ctx.d_dagger;
  const auto& [x1, x2, x3, x4, p, r] = x_blocks;

  Matrix z1 = a1s_dd + (e - a1s_dd * a1) * x1 - a1s_dd * a2 * x3;
  Matrix z2 = (e - a1s_dd * a1) * x2 - a1s_dd * a2 * x4;
  Matrix z3 = a2s_dd - a2s_dd * a1 * x1 + (e - a2s_dd * a2) * x3;
  Matrix z4 = -(a2s_dd * a1 * x2) + (e - a2s_dd * a2) * x4;
  return {std::move(z1), std::move(z2), std::move(z3), std::move(z4), ctx.p, ctx.r};
}

// ---------------------------------------------------------------------------

Matrix left_mul_operator(const Matrix& m) {
  std::size_t n = m.rows();
  Matrix op(m.domain(), n * n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) op(j * n + i, j * n + k) = m(i, k);
  return op;
}

Matrix right_mul_operator(const Matrix& m) {
  std::size_t n = m.rows();
  Matrix op(m.domain(), n * n, n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) op(j * n + i, k * n + i) = m(k, j);
  return op;
}

Matrix commutator_operator(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("commutator needs a square matrix");
  return right_mul_operator(m) - left_mul_operator(m);
}

Matrix unvec(const Matrix& v, std::size_t n) {
  if (v.rows() != n * n || v.cols() != 1) throw DimensionMismatch("unvec: vector has the wrong length");
  Matrix c(v.domain(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) c(i, j) = v(j * n + i, 0);
  return c;
}

std::vector<Matrix> matrix_space_basis(std::span<const Matrix> operators, const Domain& domain, std::size_t n) {
  std::vector<Matrix> basis;
  if (operators.empty()) {
    for (std::size_t k = 0; k < n * n; ++k) {
      Matrix e(domain, n, n);
      e(k % n, k / n) = domain.one();
      basis.push_back(std::move(e));
    }
    return basis;
  }
  for (const auto& v : nullspace_basis(vstack(operators))) basis.push_back(unvec(v, n));
  return basis;
}

std::vector<Matrix> commutant_basis(std::span<const Matrix> generators) {
  if (generators.empty()) throw DimensionMismatch("commutant of an empty set");
  std::vector<Matrix> ops;
  for (const auto& g : generators) ops.push_back(commutator_operator(g));
  return matrix_space_basis(ops, generators.front().domain(), generators.front().rows());
}

Matrix random_combination(std::span<const Matrix> basis, const Domain& domain, std::size_t n, Rng& rng) {
  Matrix c(domain, n, n);
  for (const auto& m : basis) {
    Scalar coeff = random_scalar(domain, rng, domain.is_gaussian());
    if (!coeff.is_zero()) c = c + coeff * m;
  }
  return c;
}

Matrix sample_commutant(const Matrix& b, Rng& rng) {
  if (!b.is_square()) throw DimensionMismatch("commutant sampling needs a square matrix");
  const Matrix gens[] = {b, star(b)};
  auto basis = commutant_basis(gens);
  return random_combination(basis, b.domain(), b.rows(), rng);
}

Matrix sample_commutant(const Matrix& b, std::uint64_t seed) {
  Rng rng(seed);
  return sample_commutant(b, rng);
}

}  // namespace wrol
