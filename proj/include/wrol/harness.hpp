#pragma once

// Seeded instance generation and randomized verification suites.
//
// Trial t of a suite with master seed S uses the instance seed
// derive_seed(S, t) and the sampling seed derive_seed(instance seed, 1), so
// trials are independent and can run in any order. `run_suite` distributes
// trials over OpenMP threads; `run_suite_serial` is the single-threaded
// reference. Both aggregate by trial index and yield identical reports.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wrol/laws.hpp"
#include "wrol/matrix.hpp"
#include "wrol/random.hpp"

namespace wrol {

enum class WeightMode {
  identity,   ///< c = e
  scalar,     ///< c = lambda e
  commutant,  ///< random element of the commutant the target law requires
  mixed,      ///< one of the three above, drawn per instance
};

std::string_view to_string(WeightMode mode);
/// `identity`, `scalar`, `scalar:<lambda>`, `commutant`, `mixed`.
WeightMode parse_weight_mode(std::string_view text, const Domain& domain, std::optional<Scalar>& lambda);

struct InstanceSpec {
  Domain domain = Domain::gaussian_rational();
  std::size_t size = 3;
  /// Lower end of the per-instance size range; 0 means `size`.
  std::size_t min_size = 0;
  std::optional<std::size_t> rank_a;
  std::optional<std::size_t> rank_b;
  WeightMode weight_mode = WeightMode::commutant;
  /// Used by WeightMode::scalar; random nonzero when absent.
  std::optional<Scalar> lambda;
  std::uint64_t seed = 0;
  /// Decides which side c commutes with and the extra constraints on c.
  LawId target_law = LawId::T23;

  /// Throws InvalidSpec: sizes must satisfy 1 <= min_size <= size <= 8 and ranks <= size.
  void validate() const;
};

struct Instance {
  Matrix a, b, c;
};

/// a and b with the requested (or random) ranks, built as U V with full-rank
/// factors; c according to the weight mode. Deterministic in spec.seed.
Instance gen_instance(const InstanceSpec& spec);

/// n x n matrix of exact rank k, as a product of full-rank n x k and k x n factors.
Matrix random_rank_matrix(const Domain& domain, std::size_t n, std::size_t k, Rng& rng, bool complex);

/// Basis of l such that c = e + l satisfies the weight hypotheses of T38
/// (c commutes with a, a*, cab = ab, c*ab = ab) or T39 (c commutes with
/// b, b*, abc = ab, abc* = ab).
std::vector<Matrix> constrained_weight_basis(LawId law, const Matrix& a, const Matrix& b);

struct ViolationRecord {
  std::size_t trial = 0;
  std::uint64_t sample_seed = 0;
  Matrix a, b, c;
  std::map<std::string, bool> statement_values;
  std::string details;
};

struct SuiteResult {
  LawId law = LawId::T23;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t equivalent = 0;
  std::size_t inconclusive = 0;
  std::size_t hypothesis_skips = 0;
  std::vector<ViolationRecord> violations;  ///< sorted by trial
  /// Among evaluated trials: statement values all true / all false.
  std::size_t all_true = 0;
  std::size_t all_false = 0;
  std::size_t zero_product = 0;
  /// Inclusion laws: trials where the exact side was false and a
  /// counterexample to the inclusion was found.
  std::size_t falsified = 0;
  std::chrono::duration<double> elapsed{};
};

SuiteResult run_suite(LawId law, const InstanceSpec& spec, std::size_t trials, SampleBudget budget = {});
SuiteResult run_suite_serial(LawId law, const InstanceSpec& spec, std::size_t trials, SampleBudget budget = {});

/// `{law, trials, equivalent, violations: [{a, b, c, statement_values, ...}],
///   inconclusive, hypothesis_skips, seed, ...}`; no timing data, so equal
/// inputs give byte-identical dumps.
nlohmann::json suite_report_json(const SuiteResult& result, const InstanceSpec& spec);

struct SearchTarget {
  LawId law = LawId::T23;
  /// Search for an instance where this statement is false; without it,
  /// search for an equivalence violation.
  std::optional<Stmt> stmt;
};

struct Witness {
  std::size_t trial = 0;
  std::uint64_t sample_seed = 0;
  Matrix a, b, c;
  std::map<std::string, bool> statement_values;
  Verdict verdict = Verdict::Equivalent;
};

/// First generated instance (in trial order) matching the target, skipping
/// instances whose hypotheses fail.
std::optional<Witness> search_counterexample(const SearchTarget& target, const InstanceSpec& spec, std::size_t budget,
                                             SampleBudget samples = {});

nlohmann::json witness_json(const Witness& w, const SearchTarget& target);

}  // namespace wrol
