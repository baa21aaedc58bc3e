#pragma once

// Weighted reverse order laws for the Moore-Penrose inverse and K-inverses.
//
// Each law is a list of statements that are claimed equivalent under the
// law's hypotheses. Algebraic statements are evaluated exactly. Set
// inclusions (x{K} . y{K} . c contained in z{K}) quantify over infinite
// families; they are evaluated by drawing members of the families through
// the {1,3}/{1,4} parametrizations and testing membership.
//
// Blanket elements for a pair (a, b):  p = b b†,  q = a† a†*,  r = b b*,  s = a† a.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wrol/matrix.hpp"

namespace wrol {

enum class LawId { T23, T24, T25, T26, C27, GREVILLE, KOLIHA_DC, T32, C33, T34, C35, T36, T37, T38, T39 };

std::string_view to_string(LawId law);
/// Case-insensitive; throws ParseError.
LawId parse_law(std::string_view text);
std::span<const LawId> all_laws();

enum class Stmt { i, ii, iii, iv };

std::string_view to_string(Stmt stmt);
Stmt parse_stmt(std::string_view text);
std::vector<Stmt> statements_of(LawId law);
/// True for the set-inclusion statement of a law, which is only sampled.
bool is_sampled(LawId law, Stmt stmt);

/// Which factor the weight c must commute with (together with its adjoint).
enum class CommuteSide { none, a, b };
CommuteSide commute_side(LawId law);

struct LawContext {
  Matrix a, b, c;
  Matrix a_dag, b_dag;
  Matrix p, q, r, s;
};

/// Builds the blanket elements and checks p, q, r, s hermitian and
/// a = a s, a†* = a q, b = r b†*, b†* = p b†*.
/// Throws DimensionMismatch unless a, b, c are square of one size,
/// NoMPInverse when a or b has no Moore-Penrose inverse.
LawContext law_context(const Matrix& a, const Matrix& b, const Matrix& c);

/// The context T23 is applied to when proving T24/T25/T26, obtained by
/// substitution rather than recomputation:
///   T24: (b*, a*, c*)     p1 = s, q1 = r†, r1 = q†, s1 = p
///   T25: (b†, a†, c)      p2 = s, q2 = r,  r2 = q,  s2 = p
///   T26: (a†*, b†*, c*)   p3 = p, q3 = q†, r3 = r†, s3 = s
/// Any other law returns the context unchanged.
LawContext variant_context(const LawContext& ctx, LawId variant);

/// Message naming the first failed hypothesis, or nullopt.
std::optional<std::string> failed_hypothesis(LawId law, const LawContext& ctx);

/// Exact truth of an algebraic statement. Throws HypothesisNotMet, and
/// std::invalid_argument for a sampled statement or one the law lacks.
bool law_statement(LawId law, Stmt stmt, const LawContext& ctx);

/// The factors drawn from the K-inverse families and their weighted product.
struct InclusionWitness {
  Matrix b_inverse;  ///< member of b{1,3} or b{1,4}
  Matrix a_inverse;  ///< member of a{1,3} or a{1,4}
  Matrix product;    ///< the element tested for membership
};

struct SampledVerdict {
  bool all_passed = true;
  std::size_t samples_drawn = 0;
  std::optional<InclusionWitness> witness;
};

/// Draws up to `samples` members of the families (the first draw is the
/// Moore-Penrose pair) and stops at the first product outside the target set.
SampledVerdict inclusion_statement_sampled(LawId law, const LawContext& ctx, std::size_t samples, std::uint64_t seed);

struct SampleBudget {
  std::size_t confirm = 200;  ///< draws when the exact side is true
  std::size_t falsify = 500;  ///< draws when the exact side is false
};

enum class Verdict { Equivalent, Violation, HypothesisNotMet, Inconclusive };
std::string_view to_string(Verdict verdict);

struct EquivalenceReport {
  LawId law{};
  std::map<std::string, bool> statement_values;
  bool hypotheses_met = false;
  Verdict verdict = Verdict::HypothesisNotMet;
  std::string details;
  std::optional<InclusionWitness> witness;
  /// The law's main product (ab, cab or abc) is zero.
  bool zero_product = false;
  std::size_t samples_drawn = 0;
};

EquivalenceReport check_equivalence(LawId law, const LawContext& ctx, std::uint64_t seed, SampleBudget budget = {});

}  // namespace wrol
