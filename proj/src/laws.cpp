#include "wrol/laws.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "wrol/geninv.hpp"
#include "wrol/peirce.hpp"
#include "wrol/random.hpp"

namespace wrol {

namespace {

constexpr std::array kLaws = {LawId::T23, LawId::T24, LawId::T25, LawId::T26,      LawId::C27,
                              LawId::GREVILLE, LawId::KOLIHA_DC, LawId::T32, LawId::C33, LawId::T34,
                              LawId::C35, LawId::T36, LawId::T37, LawId::T38, LawId::T39};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

Matrix identity_like(const Matrix& m) { return Matrix::identity(m.domain(), m.rows()); }

bool is_scalar_identity(const Matrix& c) {
  return c.is_square() && c.rows() > 0 && c == Matrix::scalar_identity(c(0, 0), c.rows());
}

Matrix mp_or_throw(const Matrix& m, const char* what) {
  if (auto x = try_mp_inverse(m)) return std::move(*x);
  throw NoMPInverse(std::string(what) + " has no Moore-Penrose inverse");
}

bool has_mp(const Matrix& m) { return try_mp_inverse(m).has_value(); }

// x*x y = 0 implies x y = 0, i.e. x*x and x have the same kernel.
bool left_star_cancellable(const Matrix& x) { return rank(star(x) * x) == rank(x); }

}  // namespace

std::string_view to_string(LawId law) {
  switch (law) {
    case LawId::T23: return "T23";
    case LawId::T24: return "T24";
    case LawId::T25: return "T25";
    case LawId::T26: return "T26";
    case LawId::C27: return "C27";
    case LawId::GREVILLE: return "GREVILLE";
    case LawId::KOLIHA_DC: return "KOLIHA_DC";
    case LawId::T32: return "T32";
    case LawId::C33: return "C33";
    case LawId::T34: return "T34";
    case LawId::C35: return "C35";
    case LawId::T36: return "T36";
    case LawId::T37: return "T37";
    case LawId::T38: return "T38";
    case LawId::T39: return "T39";
  }
  return "?";
}

LawId parse_law(std::string_view text) {
  std::string u = upper(text);
  for (LawId law : kLaws)
    if (to_string(law) == u) return law;
  throw ParseError("unknown law '" + std::string(text) + "'");
}

std::span<const LawId> all_laws() { return kLaws; }

std::string_view to_string(Stmt stmt) {
  switch (stmt) {
    case Stmt::i: return "i";
    case Stmt::ii: return "ii";
    case Stmt::iii: return "iii";
    case Stmt::iv: return "iv";
  }
  return "?";
}

Stmt parse_stmt(std::string_view text) {
  std::string s(text);
  if (s.size() > 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  for (Stmt st : {Stmt::i, Stmt::ii, Stmt::iii, Stmt::iv})
    if (to_string(st) == s) return st;
  throw ParseError("unknown statement id '" + std::string(text) + "' (expected i, ii, iii or iv)");
}

std::vector<Stmt> statements_of(LawId law) {
  switch (law) {
    case LawId::T23:
    case LawId::T24:
    case LawId::T25:
    case LawId::T26:
    case LawId::C27: return {Stmt::i, Stmt::ii, Stmt::iii};
    case LawId::T38:
    case LawId::T39: return {Stmt::i, Stmt::ii, Stmt::iii, Stmt::iv};
    default: return {Stmt::i, Stmt::ii};
  }
}

bool is_sampled(LawId law, Stmt stmt) {
  switch (law) {
    case LawId::T32:
    case LawId::C33:
    case LawId::T34:
    case LawId::C35:
    case LawId::T36:
    case LawId::T37: return stmt == Stmt::i;
    case LawId::T38:
    case LawId::T39: return stmt == Stmt::ii;
    default: return false;
  }
}

CommuteSide commute_side(LawId law) {
  switch (law) {
    case LawId::T24:
    case LawId::T25:
    case LawId::T32:
    case LawId::C33:
    case LawId::T36:
    case LawId::T38: return CommuteSide::a;
    case LawId::T23:
    case LawId::T26:
    case LawId::C27:
    case LawId::T34:
    case LawId::C35:
    case LawId::T37:
    case LawId::T39: return CommuteSide::b;
    case LawId::GREVILLE:
    case LawId::KOLIHA_DC: return CommuteSide::none;
  }
  return CommuteSide::none;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::Violation: return "Violation";
    case Verdict::HypothesisNotMet: return "HypothesisNotMet";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Contexts

LawContext law_context(const Matrix& a, const Matrix& b, const Matrix& c) {
  if (!a.is_square() || !b.is_square() || !c.is_square() || a.rows() != b.rows() || a.rows() != c.rows())
    throw DimensionMismatch("laws need square a, b, c of one size");
  Matrix ad = mp_or_throw(a, "a");
  Matrix bd = mp_or_throw(b, "b");
  Matrix p = b * bd;
  Matrix q = ad * star(ad);
  Matrix r = b * star(b);
  Matrix s = ad * a;

  Matrix ads = star(ad);
  Matrix bds = star(bd);
  if (!is_hermitian(p) || !is_hermitian(q) || !is_hermitian(r) || !is_hermitian(s))
    throw std::logic_error("blanket elements are not hermitian");
  if (!(a * s == a) || !(a * q == ads) || !(r * bds == b) || !(p * bds == bds))
    throw std::logic_error("blanket identities a = as, a†* = aq, b = rb†*, b†* = pb†* fail");
  return {a, b, c, std::move(ad), std::move(bd), std::move(p), std::move(q), std::move(r), std::move(s)};
}

LawContext variant_context(const LawContext& ctx, LawId variant) {
  const auto& [a, b, c, ad, bd, p, q, r, s] = ctx;
  switch (variant) {
    case LawId::T24:
      return {star(b), star(a), star(c), star(bd), star(ad), s, mp_or_throw(r, "r"), mp_or_throw(q, "q"), p};
    case LawId::T25:
      return {bd, ad, c, b, a, s, r, q, p};
    case LawId::T26:
      return {star(ad), star(bd), star(c), star(a), star(b), p, mp_or_throw(q, "q"), mp_or_throw(r, "r"), s};
    default:
      return ctx;
  }
}

// ---------------------------------------------------------------------------
// Hypotheses

std::optional<std::string> failed_hypothesis(LawId law, const LawContext& ctx) {
  const auto& [a, b, c, ad, bd, p, q, r, s] = ctx;
  Matrix e = identity_like(a);
  Matrix ab = a * b;

  switch (commute_side(law)) {
    case CommuteSide::a:
      if (!commutes_with_pair(c, a)) return "c must commute with a and a*";
      break;
    case CommuteSide::b:
      if (!commutes_with_pair(c, b)) return "c must commute with b and b*";
      break;
    case CommuteSide::none: break;
  }

  switch (law) {
    case LawId::T23:
    case LawId::T24:
      if (!has_mp(ab)) return "ab must have a Moore-Penrose inverse";
      break;
    case LawId::GREVILLE:
    case LawId::KOLIHA_DC:
      if (!has_mp(ab)) return "ab must have a Moore-Penrose inverse";
      // Without this the law can hold while the commutation conditions fail,
      // which happens over prime fields where x*x = 0 does not force x = 0.
      if (!left_star_cancellable((e - s) * b)) return "(e - a†a)b must be left *-cancellable";
      break;
    case LawId::C27:
      if (!is_scalar_identity(c)) return "c must be a scalar multiple of e";
      if (!has_mp(ab)) return "ab must have a Moore-Penrose inverse";
      break;
    case LawId::T25:
      if (!has_mp(c * ab)) return "cab must have a Moore-Penrose inverse";
      break;
    case LawId::T26:
      if (!has_mp(ab * c)) return "abc must have a Moore-Penrose inverse";
      break;
    case LawId::C33:
      if (!has_mp(a * (e - p))) return "a(e - bb†) must have a Moore-Penrose inverse";
      break;
    case LawId::C35:
      if (!has_mp((e - s) * b)) return "(e - a†a)b must have a Moore-Penrose inverse";
      break;
    case LawId::T38:
      if (!has_mp(ab)) return "ab must have a Moore-Penrose inverse";
      if (!has_mp(a * p)) return "abb† must have a Moore-Penrose inverse";
      if (!has_mp(a * (e - p))) return "a(e - bb†) must have a Moore-Penrose inverse";
      if (!(c * ab == ab)) return "cab = ab must hold";
      if (!(star(c) * ab == ab)) return "c*ab = ab must hold";
      break;
    case LawId::T39:
      if (!has_mp(ab)) return "ab must have a Moore-Penrose inverse";
      if (!has_mp(s * b)) return "a†ab must have a Moore-Penrose inverse";
      if (!has_mp((e - s) * b)) return "(e - a†a)b must have a Moore-Penrose inverse";
      if (!(ab * c == ab)) return "abc = ab must hold";
      if (!(ab * star(c) == ab)) return "abc* = ab must hold";
      break;
    case LawId::T32:
    case LawId::T34:
    case LawId::T36:
    case LawId::T37: break;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact statements

namespace {

const KSet k1{1};
const KSet k13{1, 3};
const KSet k14{1, 4};

bool weighted_mp_statement(LawId law, Stmt stmt, const LawContext& ctx) {
  const auto& [a, b, c, ad, bd, p, q, r, s] = ctx;
  Matrix cs = star(c);
  Matrix bds = star(bd);

  switch (law) {
    case LawId::T23:
      switch (stmt) {
        case Stmt::i: return mp_inverse(a * b) == c * bd * ad;
        case Stmt::ii: return (a * (c * p * q - q * p) * bds * cs).is_zero() && (a * (r * s * cs - s * r) * bds).is_zero();
        case Stmt::iii: return s * c * p * q * p * cs == q * p * cs && s * r * s * p * cs == s * r;
        default: break;
      }
      break;
    case LawId::T24: {
      if (stmt == Stmt::i) return mp_inverse(a * b) == bd * ad * c;
      Matrix rd = mp_inverse(r);
      Matrix qd = mp_inverse(q);
      Matrix bs = star(b);
      if (stmt == Stmt::ii)
        return (bs * (cs * s * rd - rd * s) * ad * c).is_zero() && (bs * (qd * p * c - p * qd) * ad).is_zero();
      if (stmt == Stmt::iii) return p * cs * s * rd * s * c == rd * s * c && p * qd * p * s * c == p * qd;
      break;
    }
    case LawId::T25: {
      Matrix as = star(a);
      switch (stmt) {
        case Stmt::i: return mp_inverse(c * a * b) == bd * ad;
        case Stmt::ii: return (bd * (c * s * r - r * s) * as * cs).is_zero() && (bd * (q * p * cs - p * q) * as).is_zero();
        case Stmt::iii: return p * c * s * r * s * cs == r * s * cs && p * q * p * s * cs == p * q;
        default: break;
      }
      break;
    }
    case LawId::T26: {
      if (stmt == Stmt::i) return mp_inverse(a * b * c) == bd * ad;
      Matrix rd = mp_inverse(r);
      Matrix qd = mp_inverse(q);
      Matrix ads = star(ad);
      if (stmt == Stmt::ii)
        return (ads * (cs * p * qd - qd * p) * b * c).is_zero() && (ads * (rd * s * c - s * rd) * b).is_zero();
      if (stmt == Stmt::iii) return s * cs * p * qd * p * c == qd * p * c && s * rd * s * p * c == s * rd;
      break;
    }
    case LawId::C27: {
      Scalar lambda = c(0, 0);
      Scalar lambda_bar = lambda.conj();
      switch (stmt) {
        case Stmt::i: return mp_inverse(a * b) == lambda * (bd * ad);
        case Stmt::ii:
          return (a * (lambda * (p * q) - q * p) * bds).is_zero() && (a * (lambda_bar * (r * s) - s * r) * bds).is_zero();
        case Stmt::iii: return lambda * (s * p * q * p) == q * p && lambda_bar * (s * r * s * p) == s * r;
        default: break;
      }
      break;
    }
    case LawId::GREVILLE:
      if (stmt == Stmt::i) return mp_inverse(a * b) == bd * ad;
      if (stmt == Stmt::ii) return r * s == s * r && p * q == q * p;
      break;
    case LawId::KOLIHA_DC: {
      if (stmt == Stmt::i) return mp_inverse(a * b) == bd * ad;
      if (stmt == Stmt::ii) {
        Matrix qd = mp_inverse(q);
        return r * s == s * r && p * qd == qd * p;
      }
      break;
    }
    default: break;
  }
  throw std::invalid_argument("law " + std::string(to_string(law)) + " has no exact statement " +
                              std::string(to_string(stmt)));
}

bool k_inverse_statement(LawId law, Stmt stmt, const LawContext& ctx) {
  const auto& [a, b, c, ad, bd, p, q, r, s] = ctx;
  Matrix e = identity_like(a);
  Matrix ab = a * b;
  Matrix bdad = bd * ad;

  if (stmt == Stmt::ii) {
    switch (law) {
      case LawId::T32:
        return is_k_inverse(ab, bdad * c, k13) && is_k_inverse(ab, bdad, k1) && is_k_inverse(a * (e - p), ad, k1);
      case LawId::C33: return is_k_inverse(ab, bdad * c, k13) && is_k_inverse(ab, bdad, k1);
      case LawId::T34:
        return is_k_inverse(ab, c * bdad, k14) && is_k_inverse(ab, bdad, k1) && is_k_inverse((e - s) * b, bd, k1);
      case LawId::C35: return is_k_inverse(ab, c * bdad, k14) && is_k_inverse(ab, bdad, k1);
      case LawId::T36: {
        Matrix cab = c * ab;
        Matrix ca_ep = c * a * (e - p);
        return is_k_inverse(cab, bdad, k13) && cab == cab * bdad * ab && ca_ep * ad * a * (e - p) == ca_ep;
      }
      case LawId::T37: {
        // abc = abb†a†abc: the adjoint image of the T36 condition under (b*, a*, c*).
        Matrix abc = ab * c;
        Matrix es_bc = (e - s) * b * c;
        return is_k_inverse(abc, bdad, k14) && abc == ab * bdad * abc && es_bc == (e - s) * b * bd * es_bc;
      }
      default: break;
    }
  }
  if (law == LawId::T38) {
    Matrix as_ab = star(a) * ab;
    switch (stmt) {
      case Stmt::i: return p * as_ab == as_ab;
      case Stmt::iii: return is_k_inverse(ab, bdad * c, k13);
      case Stmt::iv: return is_k_inverse(ab, bdad * c, KSet{1, 2, 3});
      default: break;
    }
  }
  if (law == LawId::T39) {
    Matrix abbs = ab * star(b);
    switch (stmt) {
      case Stmt::i: return abbs * s == abbs;
      case Stmt::iii: return is_k_inverse(ab, c * bdad, k14);
      case Stmt::iv: return is_k_inverse(ab, c * bdad, KSet{1, 2, 4});
      default: break;
    }
  }
  throw std::invalid_argument("law " + std::string(to_string(law)) + " has no exact statement " +
                              std::string(to_string(stmt)));
}

bool is_k_inverse_law(LawId law) {
  switch (law) {
    case LawId::T32:
    case LawId::C33:
    case LawId::T34:
    case LawId::C35:
    case LawId::T36:
    case LawId::T37:
    case LawId::T38:
    case LawId::T39: return true;
    default: return false;
  }
}

}  // namespace

bool law_statement(LawId law, Stmt stmt, const LawContext& ctx) {
  if (is_sampled(law, stmt))
    throw std::invalid_argument("statement " + std::string(to_string(stmt)) + " of " + std::string(to_string(law)) +
                                " is a set inclusion; use inclusion_statement_sampled");
  if (auto why = failed_hypothesis(law, ctx)) throw HypothesisNotMet(*why);
  return is_k_inverse_law(law) ? k_inverse_statement(law, stmt, ctx) : weighted_mp_statement(law, stmt, ctx);
}

// ---------------------------------------------------------------------------
// Sampled inclusions

namespace {

enum class Family { f13, f14 };
enum class Weight { right, left, none };
enum class Target { ab, cab, abc };

struct InclusionShape {
  Family family;
  Weight weight;
  Target target;
  KSet k;
};

InclusionShape inclusion_shape(LawId law) {
  switch (law) {
    case LawId::T32:
    case LawId::C33:
    case LawId::T38: return {Family::f13, Weight::right, Target::ab, k13};
    case LawId::T34:
    case LawId::C35:
    case LawId::T39: return {Family::f14, Weight::left, Target::ab, k14};
    case LawId::T36: return {Family::f13, Weight::none, Target::cab, k13};
    case LawId::T37: return {Family::f14, Weight::none, Target::abc, k14};
    default: break;
  }
  throw std::invalid_argument("law " + std::string(to_string(law)) + " has no inclusion statement");
}

}  // namespace

SampledVerdict inclusion_statement_sampled(LawId law, const LawContext& ctx, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  InclusionShape shape = inclusion_shape(law);
  if (auto why = failed_hypothesis(law, ctx)) throw HypothesisNotMet(*why);

  const auto& [a, b, c, ad, bd, p, q, r, s] = ctx;
  const Domain& dom = a.domain();
  const std::size_t n = a.rows();
  Matrix e = identity_like(a);
  Matrix ab = a * b;
  Matrix target = shape.target == Target::ab ? ab : shape.target == Target::cab ? c * ab : ab * c;
  // {1,3}: x† + (e - x†x) X;  {1,4}: x† + X (e - x x†).
  Matrix a_free = shape.family == Family::f13 ? e - s : e - a * ad;
  Matrix b_free = shape.family == Family::f13 ? e - bd * b : e - p;
  auto member = [&](const Matrix& dag, const Matrix& free, const Matrix& x) {
    return shape.family == Family::f13 ? dag + free * x : dag + x * free;
  };

  Rng rng(seed);
  SampledVerdict verdict;
  for (std::size_t k = 0; k < samples; ++k) {
    // Draw 0 is the Moore-Penrose pair, draws 1 and 2 vary one factor only.
    bool vary_a = k == 1 || k >= 3;
    bool vary_b = k >= 2;
    Matrix xa = vary_a ? random_matrix(dom, n, n, rng, dom.is_gaussian()) : Matrix(dom, n, n);
    Matrix xb = vary_b ? random_matrix(dom, n, n, rng, dom.is_gaussian()) : Matrix(dom, n, n);
    Matrix a_inv = member(ad, a_free, xa);
    Matrix b_inv = member(bd, b_free, xb);
    Matrix prod = b_inv * a_inv;
    if (shape.weight == Weight::right) prod = prod * c;
    if (shape.weight == Weight::left) prod = c * prod;
    ++verdict.samples_drawn;
    if (!is_k_inverse(target, prod, shape.k)) {
      verdict.all_passed = false;
      verdict.witness = InclusionWitness{std::move(b_inv), std::move(a_inv), std::move(prod)};
      break;
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Equivalence

EquivalenceReport check_equivalence(LawId law, const LawContext& ctx, std::uint64_t seed, SampleBudget budget) {
  EquivalenceReport report;
  report.law = law;
  if (auto why = failed_hypothesis(law, ctx)) {
    report.verdict = Verdict::HypothesisNotMet;
    report.details = *why;
    return report;
  }
  report.hypotheses_met = true;

  const Matrix& c = ctx.c;
  Matrix ab = ctx.a * ctx.b;
  if (law == LawId::T25 || law == LawId::T36)
    report.zero_product = (c * ab).is_zero();
  else if (law == LawId::T26 || law == LawId::T37)
    report.zero_product = (ab * c).is_zero();
  else
    report.zero_product = ab.is_zero();

  std::optional<Stmt> sampled;
  std::optional<bool> exact_value;
  bool exact_agree = true;
  for (Stmt st : statements_of(law)) {
    if (is_sampled(law, st)) {
      sampled = st;
      continue;
    }
    bool v = is_k_inverse_law(law) ? k_inverse_statement(law, st, ctx) : weighted_mp_statement(law, st, ctx);
    report.statement_values[std::string(to_string(st))] = v;
    if (exact_value && *exact_value != v) exact_agree = false;
    if (!exact_value) exact_value = v;
  }

  bool inconclusive = false;
  if (sampled && exact_agree) {
    std::size_t draws = *exact_value ? budget.confirm : budget.falsify;
    SampledVerdict sv = inclusion_statement_sampled(law, ctx, draws, seed);
    report.samples_drawn = sv.samples_drawn;
    report.statement_values[std::string(to_string(*sampled))] = sv.all_passed;
    report.witness = std::move(sv.witness);
    // No counterexample for an existence claim is not a proof of inclusion.
    inconclusive = !*exact_value && sv.all_passed;
  }

  bool agree = exact_agree;
  if (agree && sampled && !inconclusive) agree = report.statement_values[std::string(to_string(*sampled))] == *exact_value;

  if (!agree) {
    report.verdict = Verdict::Violation;
    std::string d = "statement values differ:";
    for (const auto& [id, v] : report.statement_values) d += " (" + id + ")=" + (v ? "true" : "false");
    report.details = d;
  } else if (inconclusive) {
    report.verdict = Verdict::Inconclusive;
    report.details = "exact side false but no counterexample in " + std::to_string(report.samples_drawn) + " draws";
  } else {
    report.verdict = Verdict::Equivalent;
  }
  return report;
}

}  // namespace wrol
