#include "wrol/harness.hpp"

#include <algorithm>

#include <omp.h>

#include "wrol/geninv.hpp"
#include "wrol/matrix_json.hpp"
#include "wrol/peirce.hpp"

namespace wrol {

using nlohmann::json;

std::string_view to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::identity: return "identity";
    case WeightMode::scalar: return "scalar";
    case WeightMode::commutant: return "commutant";
    case WeightMode::mixed: return "mixed";
  }
  return "?";
}

WeightMode parse_weight_mode(std::string_view text, const Domain& domain, std::optional<Scalar>& lambda) {
  if (text == "identity") return WeightMode::identity;
  if (text == "commutant" || text == "commutant_sample") return WeightMode::commutant;
  if (text == "mixed") return WeightMode::mixed;
  if (text == "scalar") return WeightMode::scalar;
  if (text.starts_with("scalar:")) {
    lambda = domain.parse_scalar(text.substr(7));
    return WeightMode::scalar;
  }
  throw ParseError("unknown weight mode '" + std::string(text) + "'");
}

void InstanceSpec::validate() const {
  std::size_t lo = min_size == 0 ? size : min_size;
  if (size < 1 || size > 8) throw InvalidSpec("size must be in 1..8");
  if (lo > size) throw InvalidSpec("min size exceeds size");
  if ((rank_a && *rank_a > lo) || (rank_b && *rank_b > lo)) throw InvalidSpec("target rank exceeds matrix size");
  if (lambda && !(lambda->domain() == domain)) throw InvalidSpec("lambda is not in the instance domain");
}

Matrix random_rank_matrix(const Domain& domain, std::size_t n, std::size_t k, Rng& rng, bool complex) {
  if (k == 0) return Matrix(domain, n, n);
  for (;;) {
    Matrix m = random_matrix(domain, n, k, rng, complex) * random_matrix(domain, k, n, rng, complex);
    if (rank(m) == k) return m;
  }
}

namespace {

// Block diagonal diag(B1, B2) of total rank k with B1 of size split; the
// commutant of such a matrix contains diag(x I, y I), so sampled weights are
// not just scalars.
Matrix random_reducible_matrix(const Domain& domain, std::size_t n, std::size_t split, std::size_t k, Rng& rng,
                               bool complex) {
  std::size_t lo = k > n - split ? k - (n - split) : 0;
  std::size_t hi = std::min(k, split);
  auto k1 = static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
  Matrix top = random_rank_matrix(domain, split, k1, rng, complex);
  Matrix bottom = random_rank_matrix(domain, n - split, k - k1, rng, complex);
  Matrix m(domain, n, n);
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = 0; j < split; ++j) m(i, j) = top(i, j);
  for (std::size_t i = split; i < n; ++i)
    for (std::size_t j = split; j < n; ++j) m(i, j) = bottom(i - split, j - split);
  return m;
}

std::size_t draw_rank(std::optional<std::size_t> requested, std::size_t n, Rng& rng) {
  if (requested) return *requested;
  if (rng.chance(1, 16)) return 0;
  return static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
}

}  // namespace

std::vector<Matrix> constrained_weight_basis(LawId law, const Matrix& a, const Matrix& b) {
  Matrix ab = a * b;
  Matrix abs = star(ab);
  std::vector<Matrix> ops;
  if (law == LawId::T38) {
    ops = {commutator_operator(a), commutator_operator(star(a)), right_mul_operator(ab), left_mul_operator(abs)};
  } else if (law == LawId::T39) {
    ops = {commutator_operator(b), commutator_operator(star(b)), left_mul_operator(ab), right_mul_operator(abs)};
  } else {
    throw std::invalid_argument("constrained weights exist only for T38 and T39");
  }
  return matrix_space_basis(ops, a.domain(), a.rows());
}

Instance gen_instance(const InstanceSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const Domain& dom = spec.domain;
  std::size_t lo = spec.min_size == 0 ? spec.size : spec.min_size;
  auto n = static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(spec.size)));
  bool complex = dom.is_gaussian() && rng.chance(2, 3);

  WeightMode mode = spec.weight_mode;
  if (mode == WeightMode::mixed) {
    constexpr WeightMode choices[] = {WeightMode::identity, WeightMode::scalar, WeightMode::commutant};
    mode = choices[rng.uniform(0, 2)];
  }
  CommuteSide side = commute_side(spec.target_law);
  bool reducible = mode == WeightMode::commutant && n >= 2 && rng.chance(1, 3);

  std::size_t ka = draw_rank(spec.rank_a, n, rng);
  std::size_t kb = draw_rank(spec.rank_b, n, rng);
  // Sharing the split between a and b makes the law hold with non-scalar
  // block weights often enough to exercise the true direction.
  std::size_t split = reducible ? static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1)) : 0;
  Matrix a = reducible ? random_reducible_matrix(dom, n, split, ka, rng, complex)
                       : random_rank_matrix(dom, n, ka, rng, complex);
  Matrix b = reducible ? random_reducible_matrix(dom, n, split, kb, rng, complex)
                       : random_rank_matrix(dom, n, kb, rng, complex);

  Matrix e = Matrix::identity(dom, n);
  auto scalar_weight = [&] {
    Scalar lambda = spec.lambda ? *spec.lambda : random_nonzero_scalar(dom, rng, complex);
    return Matrix::scalar_identity(lambda, n);
  };

  Matrix c = e;
  if (side == CommuteSide::none || mode == WeightMode::identity) {
    c = e;
  } else if (mode == WeightMode::scalar || spec.target_law == LawId::C27) {
    c = scalar_weight();
  } else if (spec.target_law == LawId::T38 || spec.target_law == LawId::T39) {
    // Falls back to c = e when the constrained space is trivial.
    auto basis = constrained_weight_basis(spec.target_law, a, b);
    c = e + random_combination(basis, dom, n, rng);
  } else if (rng.chance(1, 6)) {
    c = e;
  } else {
    c = sample_commutant(side == CommuteSide::a ? a : b, rng);
  }
  return {std::move(a), std::move(b), std::move(c)};
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct TrialOutcome {
  bool skipped = false;
  EquivalenceReport report;
  std::uint64_t sample_seed = 0;
  std::optional<Instance> instance;  // kept only for violations
};

TrialOutcome evaluate_trial(LawId law, const InstanceSpec& spec, std::size_t trial, SampleBudget budget) {
  InstanceSpec local = spec;
  local.seed = derive_seed(spec.seed, trial);
  local.target_law = law;
  TrialOutcome out;
  out.sample_seed = derive_seed(local.seed, 1);
  Instance inst = gen_instance(local);
  try {
    LawContext ctx = law_context(inst.a, inst.b, inst.c);
    out.report = check_equivalence(law, ctx, out.sample_seed, budget);
  } catch (const NoMPInverse& e) {
    out.report.law = law;
    out.report.verdict = Verdict::HypothesisNotMet;
    out.report.details = e.what();
  }
  out.skipped = out.report.verdict == Verdict::HypothesisNotMet;
  if (out.report.verdict == Verdict::Violation) out.instance = std::move(inst);
  return out;
}

SuiteResult aggregate(LawId law, const InstanceSpec& spec, std::vector<TrialOutcome>& outcomes) {
  SuiteResult res;
  res.law = law;
  res.seed = spec.seed;
  res.trials = outcomes.size();
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    auto& o = outcomes[t];
    const auto& rep = o.report;
    switch (rep.verdict) {
      case Verdict::HypothesisNotMet: ++res.hypothesis_skips; continue;
      case Verdict::Equivalent: ++res.equivalent; break;
      case Verdict::Inconclusive: ++res.inconclusive; break;
      case Verdict::Violation:
        res.violations.push_back(
            {t, o.sample_seed, o.instance->a, o.instance->b, o.instance->c, rep.statement_values, rep.details});
        break;
    }
    bool any_true = false, any_false = false;
    for (const auto& [id, v] : rep.statement_values) (v ? any_true : any_false) = true;
    if (any_true && !any_false) ++res.all_true;
    if (any_false && !any_true) ++res.all_false;
    if (rep.zero_product) ++res.zero_product;
    if (rep.witness && rep.verdict == Verdict::Equivalent) ++res.falsified;
  }
  return res;
}

}  // namespace

SuiteResult run_suite(LawId law, const InstanceSpec& spec, std::size_t trials, SampleBudget budget) {
  if (trials == 0) throw InvalidSpec("trials must be >= 1");
  spec.validate();
  auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(trials);
  std::vector<std::string> errors(trials);
  const auto count = static_cast<long>(trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < count; ++t) {
    try {
      outcomes[t] = evaluate_trial(law, spec, static_cast<std::size_t>(t), budget);
    } catch (const std::exception& e) {
      errors[t] = e.what();
    }
  }
  for (std::size_t t = 0; t < trials; ++t)
    if (!errors[t].empty()) throw Error("trial " + std::to_string(t) + " failed: " + errors[t]);
  SuiteResult res = aggregate(law, spec, outcomes);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

SuiteResult run_suite_serial(LawId law, const InstanceSpec& spec, std::size_t trials, SampleBudget budget) {
  if (trials == 0) throw InvalidSpec("trials must be >= 1");
  spec.validate();
  auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes;
  outcomes.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) outcomes.push_back(evaluate_trial(law, spec, t, budget));
  SuiteResult res = aggregate(law, spec, outcomes);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

json suite_report_json(const SuiteResult& r, const InstanceSpec& spec) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"trial", v.trial},
                          {"seed", v.sample_seed},
                          {"a", matrix_to_json(v.a)},
                          {"b", matrix_to_json(v.b)},
                          {"c", matrix_to_json(v.c)},
                          {"statement_values", v.statement_values},
                          {"details", v.details}});
  }
  return json{{"law", std::string(to_string(r.law))},
              {"domain", spec.domain.to_string()},
              {"size", spec.size},
              {"min_size", spec.min_size == 0 ? spec.size : spec.min_size},
              {"weight_mode", std::string(to_string(spec.weight_mode))},
              {"seed", r.seed},
              {"trials", r.trials},
              {"equivalent", r.equivalent},
              {"violations", violations},
              {"inconclusive", r.inconclusive},
              {"hypothesis_skips", r.hypothesis_skips},
              {"all_true", r.all_true},
              {"all_false", r.all_false},
              {"zero_product", r.zero_product},
              {"falsified", r.falsified}};
}

// ---------------------------------------------------------------------------
// Search

std::optional<Witness> search_counterexample(const SearchTarget& target, const InstanceSpec& spec, std::size_t budget,
                                             SampleBudget samples) {
  if (budget == 0) throw InvalidSpec("budget must be >= 1");
  spec.validate();
  if (target.stmt) {
    auto stmts = statements_of(target.law);
    if (std::find(stmts.begin(), stmts.end(), *target.stmt) == stmts.end())
      throw InvalidSpec("law " + std::string(to_string(target.law)) + " has no statement " +
                        std::string(to_string(*target.stmt)));
  }
  for (std::size_t t = 0; t < budget; ++t) {
    InstanceSpec local = spec;
    local.seed = derive_seed(spec.seed, t);
    local.target_law = target.law;
    std::uint64_t sample_seed = derive_seed(local.seed, 1);
    Instance inst = gen_instance(local);
    std::optional<LawContext> ctx;
    try {
      ctx = law_context(inst.a, inst.b, inst.c);
    } catch (const NoMPInverse&) {
      continue;
    }
    if (failed_hypothesis(target.law, *ctx)) continue;

    bool found = false;
    if (target.stmt) {
      if (is_sampled(target.law, *target.stmt))
        found = !inclusion_statement_sampled(target.law, *ctx, samples.falsify, sample_seed).all_passed;
      else
        found = !law_statement(target.law, *target.stmt, *ctx);
    }
    EquivalenceReport rep;
    if (found || !target.stmt) {
      rep = check_equivalence(target.law, *ctx, sample_seed, samples);
      if (!target.stmt) found = rep.verdict == Verdict::Violation;
    }
    if (found)
      return Witness{t, sample_seed, std::move(inst.a), std::move(inst.b), std::move(inst.c), rep.statement_values,
                     rep.verdict};
  }
  return std::nullopt;
}

json witness_json(const Witness& w, const SearchTarget& target) {
  return json{{"law", std::string(to_string(target.law))},
              {"stmt", target.stmt ? json(std::string(to_string(*target.stmt))) : json(nullptr)},
              {"trial", w.trial},
              {"seed", w.sample_seed},
              {"a", matrix_to_json(w.a)},
              {"b", matrix_to_json(w.b)},
              {"c", matrix_to_json(w.c)},
              {"statement_values", w.statement_values},
              {"verdict", std::string(to_string(w.verdict))}};
}

}  // namespace wrol
