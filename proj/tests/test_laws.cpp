#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wrol/geninv.hpp"
#include "wrol/harness.hpp"
#include "wrol/laws.hpp"
#include "wrol/peirce.hpp"

using namespace wrol;
using wrol::test::Q;

namespace {

// Hypothesis-satisfying contexts for a law, from the seeded generator.
std::vector<LawContext> contexts_for(LawId law, std::size_t count, std::uint64_t seed, Domain dom = Domain::gaussian_rational()) {
  std::vector<LawContext> out;
  InstanceSpec spec;
  spec.domain = dom;
  spec.size = 3;
  spec.min_size = 1;
  spec.target_law = law;
  for (std::uint64_t t = 0; out.size() < count && t < 20 * count; ++t) {
    spec.seed = derive_seed(seed, t);
    Instance inst = gen_instance(spec);
    try {
      LawContext ctx = law_context(inst.a, inst.b, inst.c);
      if (!failed_hypothesis(law, ctx)) out.push_back(std::move(ctx));
    } catch (const NoMPInverse&) {
    }
  }
  return out;
}

bool same_context(const LawContext& x, const LawContext& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.a_dag == y.a_dag && x.b_dag == y.b_dag && x.p == y.p &&
         x.q == y.q && x.r == y.r && x.s == y.s;
}

}  // namespace

TEST_CASE("ids and statements") {
  CHECK(parse_law("t23") == LawId::T23);
  CHECK(parse_law("koliha_dc") == LawId::KOLIHA_DC);
  CHECK_THROWS_AS(parse_law("T99"), ParseError);
  CHECK(parse_stmt("(ii)") == Stmt::ii);
  CHECK(parse_stmt("iv") == Stmt::iv);
  CHECK_THROWS_AS(parse_stmt("v"), ParseError);
  CHECK(all_laws().size() == 15);
  for (LawId law : all_laws()) CHECK(parse_law(to_string(law)) == law);
  CHECK(statements_of(LawId::T23).size() == 3);
  CHECK(statements_of(LawId::T38).size() == 4);
  CHECK(statements_of(LawId::GREVILLE).size() == 2);
  CHECK(is_sampled(LawId::T32, Stmt::i));
  CHECK(is_sampled(LawId::T38, Stmt::ii));
  CHECK_FALSE(is_sampled(LawId::T38, Stmt::i));
}

TEST_CASE("law context") {
  Domain dom = Domain::gaussian_rational();
  Matrix e = Matrix::identity(dom, 2);
  LawContext id = law_context(e, e, e);
  CHECK(id.p == e);
  CHECK(id.q == e);
  CHECK(id.r == e);
  CHECK(id.s == e);

  Matrix a = Q({{"1", "0"}, {"0", "0"}});
  LawContext ctx = law_context(a, e, e);
  CHECK(ctx.a_dag == a);
  CHECK(ctx.s == a);
  CHECK(ctx.q == a);

  CHECK_THROWS_AS(law_context(e, Matrix::identity(dom, 3), Matrix::identity(dom, 3)), DimensionMismatch);
  CHECK_THROWS_AS(law_context(Q({{"1", "2"}}), Q({{"1", "2"}}), e), DimensionMismatch);
  Matrix bad = test::Fp(5, {{"1", "0"}, {"2", "0"}});
  Matrix e5 = Matrix::identity(Domain::prime_field(5), 2);
  CHECK_THROWS_AS(law_context(bad, e5, e5), NoMPInverse);

  for (const auto& c : contexts_for(LawId::T23, 40, 1)) {
    CHECK(is_hermitian(c.p));
    CHECK(is_hermitian(c.q));
    CHECK(is_hermitian(c.r));
    CHECK(is_hermitian(c.s));
    CHECK(c.a * c.s == c.a);
    CHECK(c.a * c.q == star(c.a_dag));
    CHECK(c.r * star(c.b_dag) == c.b);
    CHECK(c.p * star(c.b_dag) == star(c.b_dag));
  }
}

TEST_CASE("variant contexts equal contexts recomputed from the substituted triples") {
  Domain dom = Domain::gaussian_rational();
  Matrix e = Matrix::identity(dom, 2);
  LawContext id = law_context(e, e, e);
  CHECK(same_context(variant_context(id, LawId::T25), id));
  for (const auto& c : contexts_for(LawId::T23, 60, 2)) {
    LawContext v24 = variant_context(c, LawId::T24);
    CHECK(v24.p == c.s);
    CHECK(v24.s == c.p);
    CHECK(same_context(v24, law_context(star(c.b), star(c.a), star(c.c))));
    CHECK(same_context(variant_context(c, LawId::T25), law_context(c.b_dag, c.a_dag, c.c)));
    LawContext v26 = variant_context(c, LawId::T26);
    CHECK(v26.q == mp_inverse(c.q));
    CHECK(v26.r == mp_inverse(c.r));
    CHECK(same_context(v26, law_context(star(c.a_dag), star(c.b_dag), star(c.c))));
    CHECK(same_context(variant_context(c, LawId::T32), c));
  }
}

TEST_CASE("reduction consistency for the weighted variants") {
  for (LawId law : {LawId::T24, LawId::T25, LawId::T26}) {
    auto ctxs = contexts_for(law, 80, 3);
    CHECK(ctxs.size() >= 60);
    for (const auto& c : ctxs) {
      LawContext v = variant_context(c, law);
      REQUIRE_FALSE(failed_hypothesis(LawId::T23, v));
      for (Stmt st : statements_of(law)) CHECK(law_statement(law, st, c) == law_statement(LawId::T23, st, v));
    }
  }
}

TEST_CASE("trivial instances") {
  Domain dom = Domain::gaussian_rational();
  Matrix e = Matrix::identity(dom, 2);
  LawContext ctx = law_context(e, e, e);
  for (LawId law : all_laws()) {
    auto rep = check_equivalence(law, ctx, 1);
    CHECK(rep.verdict == Verdict::Equivalent);
    for (const auto& [id, v] : rep.statement_values) CHECK(v);
  }
  CHECK(law_statement(LawId::T23, Stmt::i, ctx));
  CHECK(inclusion_statement_sampled(LawId::T32, ctx, 50, 3).all_passed);
  CHECK_THROWS_AS(law_statement(LawId::T32, Stmt::i, ctx), std::invalid_argument);
  CHECK_THROWS_AS(law_statement(LawId::GREVILLE, Stmt::iii, ctx), std::invalid_argument);
}

TEST_CASE("scalar weight instance") {
  Domain dom = Domain::gaussian_rational();
  Matrix a = Q({{"1", "0"}, {"0", "0"}});
  Matrix b = Q({{"1", "1"}, {"1", "1"}});
  Matrix ab = a * b;
  Matrix abd = Q({{"1/2", "0"}, {"1/2", "0"}});
  Matrix bdad = Q({{"1/4", "0"}, {"1/4", "0"}});
  // Oracle values from the Penrose equations, not the library inverse.
  CHECK(test::oracle_is_mp(ab, abd));
  CHECK(test::oracle_is_mp(b, Q({{"1/4", "1/4"}, {"1/4", "1/4"}})));
  CHECK(test::oracle_is_mp(a, a));
  CHECK(Q({{"1/4", "1/4"}, {"1/4", "1/4"}}) * a == bdad);
  CHECK(abd == test::q("2") * bdad);

  for (const char* lambda : {"2", "1"}) {
    Matrix c = Matrix::scalar_identity(test::q(lambda), 2);
    LawContext ctx = law_context(a, b, c);
    auto rep = check_equivalence(LawId::C27, ctx, 1);
    bool expect = std::string(lambda) == "2";
    CHECK(rep.verdict == Verdict::Equivalent);
    CHECK(rep.statement_values.at("i") == expect);
    CHECK(rep.statement_values.at("ii") == expect);
    CHECK(rep.statement_values.at("iii") == expect);
  }
  LawContext unweighted = law_context(a, b, Matrix::identity(dom, 2));
  CHECK_FALSE(law_statement(LawId::GREVILLE, Stmt::i, unweighted));
  CHECK_FALSE(law_statement(LawId::GREVILLE, Stmt::ii, unweighted));
  CHECK_FALSE((unweighted.r * unweighted.s == unweighted.s * unweighted.r &&
               unweighted.p * unweighted.q == unweighted.q * unweighted.p));
  LawContext nonscalar = law_context(a, b, Q({{"2", "0"}, {"0", "2"}}) + Q({{"0", "1"}, {"1", "0"}}));
  CHECK(failed_hypothesis(LawId::C27, nonscalar).has_value());
}

TEST_CASE("T37 uses abc = abb+a+abc, not ab = abb+a+abc") {
  Domain dom = Domain::gaussian_rational();
  Matrix e = Matrix::identity(dom, 2);
  Matrix c = Q({{"1", "0"}, {"0", "0"}});
  LawContext ctx = law_context(e, e, c);
  REQUIRE_FALSE(failed_hypothesis(LawId::T37, ctx));
  // Statement (i): b{1,4} a{1,4} = {e} and e is a {1,4}-inverse of abc = c.
  CHECK(is_k_inverse(c, e, {1, 4}));
  auto sampled = inclusion_statement_sampled(LawId::T37, ctx, 50, 1);
  CHECK(sampled.all_passed);
  // The variant "ab = abb†a†abc" fails here.
  Matrix ab = e * e;
  CHECK_FALSE(ab == ab * ctx.b_dag * ctx.a_dag * ab * c);
  CHECK(law_statement(LawId::T37, Stmt::ii, ctx));
  CHECK(check_equivalence(LawId::T37, ctx, 1).verdict == Verdict::Equivalent);
}

TEST_CASE("hypothesis gates") {
  Domain dom = Domain::gaussian_rational();
  Matrix a = Q({{"1", "0"}, {"0", "0"}});
  Matrix b = Q({{"1", "1"}, {"0", "1"}});
  Matrix c = Q({{"1", "0"}, {"0", "2"}});
  LawContext ctx = law_context(a, b, c);
  // c commutes with a but not with b.
  CHECK_FALSE(failed_hypothesis(LawId::T32, ctx));
  CHECK(failed_hypothesis(LawId::T23, ctx).has_value());
  CHECK_THROWS_AS(law_statement(LawId::T23, Stmt::i, ctx), HypothesisNotMet);
  CHECK(check_equivalence(LawId::T23, ctx, 1).verdict == Verdict::HypothesisNotMet);

  // T38 with c commuting with a, a* but cab != ab.
  Matrix a2 = Matrix::identity(dom, 2);
  Matrix b2 = Q({{"1", "0"}, {"0", "1"}});
  LawContext t38 = law_context(a2, b2, c);
  auto why = failed_hypothesis(LawId::T38, t38);
  REQUIRE(why.has_value());
  CHECK(why->find("cab = ab") != std::string::npos);
  auto rep = check_equivalence(LawId::T38, t38, 1);
  CHECK(rep.verdict == Verdict::HypothesisNotMet);
  CHECK(rep.details == *why);
}

TEST_CASE("sampled inclusions find and validate witnesses") {
  for (LawId law : {LawId::T32, LawId::T34, LawId::T36, LawId::T37}) {
    int falsified = 0, confirmed = 0;
    for (const auto& c : contexts_for(law, 60, 4)) {
      bool exact = law_statement(law, Stmt::ii, c);
      auto sv = inclusion_statement_sampled(law, c, exact ? 200 : 500, 7);
      if (exact) {
        CHECK(sv.all_passed);
        ++confirmed;
        continue;
      }
      REQUIRE_FALSE(sv.all_passed);
      REQUIRE(sv.witness.has_value());
      ++falsified;
      const auto& w = *sv.witness;
      bool f13 = law == LawId::T32 || law == LawId::T36;
      KSet k = f13 ? KSet{1, 3} : KSet{1, 4};
      CHECK(is_k_inverse(c.b, w.b_inverse, k));
      CHECK(is_k_inverse(c.a, w.a_inverse, k));
      Matrix ab = c.a * c.b;
      Matrix target = law == LawId::T36 ? c.c * ab : law == LawId::T37 ? ab * c.c : ab;
      Matrix expected = w.b_inverse * w.a_inverse;
      if (law == LawId::T32) expected = expected * c.c;
      if (law == LawId::T34) expected = c.c * expected;
      CHECK(w.product == expected);
      CHECK_FALSE(is_k_inverse(target, w.product, k));
    }
    CHECK(falsified > 0);
    CHECK(confirmed > 0);
  }
}

TEST_CASE("randomized equivalence for every law") {
  for (LawId law : all_laws()) {
    int evaluated = 0;
    for (const auto& c : contexts_for(law, 40, 5)) {
      auto rep = check_equivalence(law, c, 11);
      CHECK_MESSAGE(rep.verdict == Verdict::Equivalent, to_string(law), ": ", rep.details);
      CHECK(rep.statement_values.size() == statements_of(law).size());
      ++evaluated;
    }
    CHECK(evaluated >= 30);
  }
}

TEST_CASE("greville and koliha agree with unweighted T23 over Q(i)") {
  Domain dom = Domain::gaussian_rational();
  InstanceSpec spec;
  spec.size = 3;
  spec.min_size = 1;
  spec.weight_mode = WeightMode::identity;
  spec.target_law = LawId::GREVILLE;
  int yes = 0, no = 0;
  for (std::uint64_t t = 0; t < 150; ++t) {
    spec.seed = t;
    Instance inst = gen_instance(spec);
    LawContext c = law_context(inst.a, inst.b, inst.c);
    bool g = law_statement(LawId::GREVILLE, Stmt::ii, c);
    CHECK(g == law_statement(LawId::KOLIHA_DC, Stmt::ii, c));
    CHECK(g == law_statement(LawId::GREVILLE, Stmt::i, c));
    CHECK(g == law_statement(LawId::T23, Stmt::i, c));
    CHECK(g == law_statement(LawId::T23, Stmt::iii, c));
    (g ? yes : no)++;
    // Rescaling a and b by nonzero rationals does not change the verdict.
    LawContext scaled = law_context(test::q("-3/2") * inst.a, test::q("2/5") * inst.b, inst.c);
    CHECK(law_statement(LawId::GREVILLE, Stmt::ii, scaled) == g);
    CHECK(law_statement(LawId::GREVILLE, Stmt::i, scaled) == g);
  }
  CHECK(yes > 0);
  CHECK(no > 0);
  (void)dom;
}

TEST_CASE("reverse order law without *-cancellation over F_3") {
  // The law holds while rs = sr and pq = qp fail; the gate reports the
  // missing cancellation hypothesis instead of a violation.
  Matrix a = test::Fp(3, {{"2", "2", "0"}, {"1", "1", "0"}, {"0", "0", "0"}});
  Matrix b = test::Fp(3, {{"0", "0", "0"}, {"2", "0", "1"}, {"1", "0", "2"}});
  Matrix e = Matrix::identity(Domain::prime_field(3), 3);
  LawContext c = law_context(a, b, e);
  CHECK(mp_inverse(a * b) == c.b_dag * c.a_dag);
  CHECK_FALSE((c.r * c.s == c.s * c.r && c.p * c.q == c.q * c.p));
  Matrix x = (e - c.s) * b;
  CHECK(rank(star(x) * x) < rank(x));
  CHECK(check_equivalence(LawId::GREVILLE, c, 1).verdict == Verdict::HypothesisNotMet);
  CHECK(check_equivalence(LawId::KOLIHA_DC, c, 1).verdict == Verdict::HypothesisNotMet);
  // T23 needs no cancellation and still applies.
  auto t23 = check_equivalence(LawId::T23, c, 1);
  CHECK(t23.verdict == Verdict::Equivalent);
  CHECK(t23.statement_values.at("i"));
}

TEST_CASE("equivalence over prime fields") {
  for (LawId law : {LawId::T23, LawId::T25, LawId::T32, LawId::T38, LawId::T39}) {
    for (const auto& c : contexts_for(law, 30, 6, Domain::prime_field(7))) {
      auto rep = check_equivalence(law, c, 3);
      CHECK_MESSAGE(rep.verdict != Verdict::Violation, to_string(law), ": ", rep.details);
    }
  }
}

TEST_CASE("constrained weights for T38 and T39") {
  for (LawId law : {LawId::T38, LawId::T39}) {
    int nontrivial = 0;
    for (const auto& c : contexts_for(law, 40, 8)) {
      Matrix ab = c.a * c.b;
      if (law == LawId::T38) {
        CHECK(c.c * ab == ab);
        CHECK(star(c.c) * ab == ab);
        CHECK(commutes_with_pair(c.c, c.a));
      } else {
        CHECK(ab * c.c == ab);
        CHECK(ab * star(c.c) == ab);
        CHECK(commutes_with_pair(c.c, c.b));
      }
      if (!(c.c == Matrix::identity(c.a.domain(), c.a.rows()))) ++nontrivial;
    }
    CHECK(nontrivial > 0);
  }
}
