// Command-line front end: generalized inverses of matrix files, single law
// checks, counterexample search and randomized suites.
//
// Exit codes: 0 verified / nothing found, 1 counterexample, violation or
// nonexistent inverse, 2 inconclusive, 3 malformed input or unmet hypothesis.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wrol/geninv.hpp"
#include "wrol/harness.hpp"
#include "wrol/laws.hpp"
#include "wrol/matrix_json.hpp"
#include "wrol/peirce.hpp"

namespace {

using namespace wrol;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void print_values(const std::map<std::string, bool>& values) {
  for (const auto& [id, v] : values) std::cout << "  (" << id << ") " << (v ? "true" : "false") << "\n";
}

struct GenOptions {
  std::string domain = "gaussian_rational";
  std::size_t size = 3;
  std::size_t min_size = 0;
  std::optional<std::size_t> rank_a, rank_b;
  std::string weight = "commutant";
  std::uint64_t seed = 0;

  void add_to(CLI::App* app) {
    app->add_option("--domain", domain, "gaussian_rational or fp:<p>");
    app->add_option("--size", size, "matrix size n (1..8)");
    app->add_option("--min-size", min_size, "draw n uniformly from [min-size, size]");
    app->add_option("--rank-a", rank_a, "target rank of a");
    app->add_option("--rank-b", rank_b, "target rank of b");
    app->add_option("--weight", weight, "identity, scalar, scalar:<lambda>, commutant or mixed");
    app->add_option("--seed", seed, "master seed");
  }

  InstanceSpec spec(LawId law) const {
    InstanceSpec s;
    s.domain = Domain::parse(domain);
    s.size = size;
    s.min_size = min_size;
    s.rank_a = rank_a;
    s.rank_b = rank_b;
    s.weight_mode = parse_weight_mode(weight, s.domain, s.lambda);
    s.seed = seed;
    s.target_law = law;
    s.validate();
    return s;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized inverses and weighted reverse order laws"};
  app.require_subcommand(1);
  std::function<int()> action;

  // mp / groupinv
  std::string in_path, json_path;
  auto* mp = app.add_subcommand("mp", "Moore-Penrose inverse of a matrix file");
  mp->add_option("--in", in_path, "matrix JSON file")->required();
  mp->add_option("--json", json_path, "write the inverse as matrix JSON ('-' for stdout)");
  mp->callback([&] {
    action = [&] {
      Matrix a = read_matrix_file(in_path);
      auto inv = try_mp_inverse(a);
      if (!inv) {
        std::cout << "no Moore-Penrose inverse\n";
        return kFound;
      }
      std::cout << *inv;
      write_json(json_path, matrix_to_json(*inv));
      return kOk;
    };
  });

  auto* gi = app.add_subcommand("groupinv", "group inverse of a square matrix file");
  gi->add_option("--in", in_path, "matrix JSON file")->required();
  gi->add_option("--json", json_path, "write the inverse as matrix JSON ('-' for stdout)");
  gi->callback([&] {
    action = [&] {
      Matrix a = read_matrix_file(in_path);
      if (!a.is_square()) throw DimensionMismatch("group inverse needs a square matrix");
      if (!group_invertible(a)) {
        std::cout << "not group invertible\n";
        return kFound;
      }
      Matrix g = group_inverse(a);
      std::cout << g;
      write_json(json_path, matrix_to_json(g));
      return kOk;
    };
  });

  // kcheck
  std::string k_text, a_path, x_path;
  auto* kc = app.add_subcommand("kcheck", "test whether X is a K-inverse of A");
  kc->add_option("--k", k_text, "index set, e.g. 1,3")->required();
  kc->add_option("--a", a_path, "matrix A")->required();
  kc->add_option("--x", x_path, "candidate X")->required();
  kc->callback([&] {
    action = [&] {
      KSet k = KSet::parse(k_text);
      bool member = is_k_inverse(read_matrix_file(a_path), read_matrix_file(x_path), k);
      std::cout << "X " << (member ? "is" : "is not") << " a " << k.to_string() << "-inverse of A\n";
      return member ? kOk : kFound;
    };
  });

  // law check / law search
  auto* law = app.add_subcommand("law", "single-instance law evaluation and search");
  law->require_subcommand(1);
  std::string law_text, stmt_text, b_path, c_path, lambda_text;
  std::uint64_t check_seed = 0;
  auto* check = law->add_subcommand("check", "evaluate every statement of a law on one instance");
  check->add_option("--law", law_text, "law id, e.g. T23, C27, GREVILLE")->required();
  check->add_option("--stmt", stmt_text, "report only this statement");
  check->add_option("--a", a_path, "matrix a")->required();
  check->add_option("--b", b_path, "matrix b")->required();
  auto* c_opt = check->add_option("--c", c_path, "weight matrix c (default: identity)");
  check->add_option("--lambda", lambda_text, "use c = lambda e")->excludes(c_opt);
  check->add_option("--seed", check_seed, "seed for sampled inclusion statements");
  check->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");
  check->callback([&] {
    action = [&] {
      LawId id = parse_law(law_text);
      Matrix a = read_matrix_file(a_path);
      Matrix b = read_matrix_file(b_path);
      Matrix c = Matrix::identity(a.domain(), a.rows());
      if (!c_path.empty()) c = read_matrix_file(c_path);
      if (!lambda_text.empty()) c = Matrix::scalar_identity(a.domain().parse_scalar(lambda_text), a.rows());

      EquivalenceReport rep;
      try {
        LawContext ctx = law_context(a, b, c);
        rep = check_equivalence(id, ctx, check_seed);
      } catch (const NoMPInverse& e) {
        rep.law = id;
        rep.verdict = Verdict::HypothesisNotMet;
        rep.details = e.what();
      }
      std::optional<Stmt> only;
      if (!stmt_text.empty()) only = parse_stmt(stmt_text);

      json j{{"law", std::string(to_string(id))},
             {"verdict", std::string(to_string(rep.verdict))},
             {"statement_values", rep.statement_values},
             {"details", rep.details},
             {"zero_product", rep.zero_product},
             {"seed", check_seed}};
      std::cout << to_string(id) << ": " << to_string(rep.verdict) << "\n";
      if (!rep.details.empty()) std::cout << "  " << rep.details << "\n";
      if (only) {
        auto it = rep.statement_values.find(std::string(to_string(*only)));
        if (rep.verdict != Verdict::HypothesisNotMet && it == rep.statement_values.end())
          throw InvalidSpec("law " + std::string(to_string(id)) + " has no statement " + stmt_text);
        if (it != rep.statement_values.end()) {
          std::cout << "  (" << it->first << ") " << (it->second ? "true" : "false") << "\n";
          j["stmt"] = it->first;
        }
      } else {
        print_values(rep.statement_values);
      }
      write_json(json_path, j);
      switch (rep.verdict) {
        case Verdict::Equivalent: return kOk;
        case Verdict::Violation: return kFound;
        case Verdict::Inconclusive: return kInconclusive;
        case Verdict::HypothesisNotMet: return kInputError;
      }
      return kInputError;
    };
  });

  GenOptions gen;
  std::size_t budget = 100;
  auto* search = law->add_subcommand("search", "find an instance falsifying a statement or the equivalence");
  search->add_option("--law", law_text, "law id")->required();
  search->add_option("--stmt", stmt_text, "statement to falsify; without it, search for an equivalence violation");
  search->add_option("--budget", budget, "number of generated instances");
  search->add_option("--json", json_path, "write the witness as JSON ('-' for stdout)");
  gen.add_to(search);
  search->callback([&] {
    action = [&] {
      SearchTarget target{parse_law(law_text), std::nullopt};
      if (!stmt_text.empty()) target.stmt = parse_stmt(stmt_text);
      auto w = search_counterexample(target, gen.spec(target.law), budget);
      if (!w) {
        std::cout << "no witness within " << budget << " instances\n";
        return kOk;
      }
      std::cout << "witness at trial " << w->trial << " (sampling seed " << w->sample_seed << ")\n"
                << "a =\n" << w->a << "b =\n" << w->b << "c =\n" << w->c;
      print_values(w->statement_values);
      write_json(json_path, witness_json(*w, target));
      return kFound;
    };
  });

  // suite
  std::size_t trials = 100;
  bool serial = false;
  auto* suite = app.add_subcommand("suite", "randomized equivalence suite for one law");
  suite->add_option("--law", law_text, "law id")->required();
  suite->add_option("--trials", trials, "number of instances");
  suite->add_option("--json", json_path, "write the report as JSON ('-' for stdout)");
  suite->add_flag("--serial", serial, "run on one thread");
  gen.add_to(suite);
  suite->callback([&] {
    action = [&] {
      LawId id = parse_law(law_text);
      InstanceSpec spec = gen.spec(id);
      SuiteResult r = serial ? run_suite_serial(id, spec, trials) : run_suite(id, spec, trials);
      std::cout << to_string(id) << ": trials " << r.trials << ", equivalent " << r.equivalent << ", violations "
                << r.violations.size() << ", inconclusive " << r.inconclusive << ", hypothesis skips "
                << r.hypothesis_skips << " (" << r.elapsed.count() << " s)\n";
      for (const auto& v : r.violations) std::cout << "  violation at trial " << v.trial << ": " << v.details << "\n";
      write_json(json_path, suite_report_json(r, spec));
      if (!r.violations.empty()) return kFound;
      return r.inconclusive > 0 ? kInconclusive : kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
