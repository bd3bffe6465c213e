// Command-line front end. Defaults sit on the Fibonacci point (r = 5, k = 6).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlrep/braidrep.hpp"
#include "tlrep/errors.hpp"
#include "tlrep/fibonacci.hpp"
#include "tlrep/io.hpp"
#include "tlrep/networks.hpp"
#include "tlrep/recoupling.hpp"
#include "tlrep/tldiag.hpp"
#include "tlrep/verify.hpp"

namespace {

using namespace tlrep;
using nlohmann::json;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  int r = 5;
  int k = 6;
  double tol = 1e-9;
  bool json = false;
  std::uint64_t seed = 1;

  BracketParams params() const { return {r, k, tol}; }
};

void print_real(const CliConfig& cfg, double x) {
  if (cfg.json)
    std::cout << json{{"value", x}}.dump() << "\n";
  else
    std::cout << io::format_real(x) << "\n";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

int cmd_params(const CliConfig& cfg) {
  const BracketParams p = cfg.params();
  std::vector<double> qints, deltas;
  for (int n = 0; n <= 2 * p.r(); ++n) {
    qints.push_back(qint(p, n));
    deltas.push_back(delta(p, n));
  }
  if (cfg.json) {
    std::cout << json{{"r", p.r()},
                      {"k", p.k()},
                      {"tol", p.tol()},
                      {"A", complex_json(p.A())},
                      {"loop_value", p.loop_value()},
                      {"max_label", p.max_label()},
                      {"qint", qints},
                      {"delta", deltas}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "r = " << p.r() << ", k = " << p.k() << ", A = " << io::format_real(p.A().real())
            << " + " << io::format_real(p.A().imag()) << "i, d = "
            << io::format_real(p.loop_value()) << ", labels 0.." << p.max_label() << "\n";
  std::cout << "n\t[n]\tDelta_n\n";
  for (int n = 0; n <= 2 * p.r(); ++n)
    std::cout << n << "\t" << io::format_real(qints[n]) << "\t" << io::format_real(deltas[n])
              << "\n";
  return 0;
}

int emit_unitary(const UnitaryMatrix& u) {
  std::cout << io::to_json(u).dump() << "\n";
  return 0;
}

int cmd_rep(const CliConfig& cfg, const std::string& labels, const std::string& word_text) {
  const io::LabelSpec spec = io::parse_labels(labels);
  const FusionSpace space = make_space(cfg.params(), spec.inputs, spec.output);
  return emit_unitary(compile(space, io::parse_braid_word(word_text, space.strands())));
}

int cmd_fib(int n, const std::string& word_text) {
  if (n < 2) throw ParseError("--n must be at least 2");
  const FusionSpace space = fibonacci::space(n);
  return emit_unitary(compile(space, io::parse_braid_word(word_text, n)));
}

int cmd_check(const CliConfig& cfg, const std::string& grid_text) {
  const io::GridSpec grid = io::parse_grid(grid_text);
  SuiteConfig suite;
  suite.r_min = grid.r_min;
  suite.r_max = grid.r_max;
  suite.tol = cfg.tol;
  suite.seed = cfg.seed;
  const std::vector<CheckReport> reports = run_suite(suite);
  bool all = true;
  json out = json::array();
  for (const CheckReport& r : reports) {
    all = all && r.passed;
    if (cfg.json) {
      out.push_back(io::to_json(r));
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.parameters
                << "] residual=" << io::format_real(r.residual)
                << " tol=" << io::format_real(r.tolerance);
      if (!r.passed && !r.detail.empty()) std::cout << " (" << r.detail << ")";
      std::cout << "\n";
    }
  }
  if (cfg.json) std::cout << out.dump(2) << "\n";
  return all ? 0 : kExitFailed;
}

int cmd_density(const CliConfig& cfg, int length, const std::string& targets_file,
                std::optional<int> random) {
  std::vector<Unitary2> targets;
  if (!targets_file.empty()) {
    std::ifstream in(targets_file);
    if (!in) throw ParseError("cannot open targets file '" + targets_file + "'");
    targets = io::read_targets(in, cfg.tol);
  } else {
    targets = random_su2_targets(random.value_or(20), cfg.seed);
  }
  const std::vector<DensityResult> results = density_probe(length, targets);
  if (cfg.json) {
    json out = json::array();
    for (std::size_t t = 0; t < results.size(); ++t) {
      json target = json::array();
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) target.push_back(complex_json(results[t].target(r, c)));
      out.push_back({{"target", std::move(target)},
                     {"word", results[t].best_word},
                     {"distance", results[t].distance},
                     {"best_by_length", results[t].best_by_length}});
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "target\tdistance\tlength\tword\n";
  double mean = 0.0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    const DensityResult& r = results[t];
    mean += r.distance;
    std::cout << t << "\t" << io::format_real(r.distance) << "\t" << r.best_word.size() << "\t"
              << BraidWord(3, r.best_word).to_string() << "\n";
  }
  if (!results.empty())
    std::cout << "mean\t" << io::format_real(mean / static_cast<double>(results.size())) << "\n";
  return 0;
}

int cmd_oracle_jw(const CliConfig& cfg, int n) {
  const TLElement proj = jw_projector(cfg.params(), n);
  json terms = json::array();
  for (const auto& [diagram, coeff] : proj.terms()) {
    std::vector<int> partners;
    for (int t = 0; t < diagram.points(); ++t) partners.push_back(diagram.partner(t));
    terms.push_back({{"partners", partners}, {"coeff", complex_json(coeff)}});
  }
  if (cfg.json) {
    std::cout << json{{"strands", n}, {"terms", terms}}.dump() << "\n";
  } else {
    std::cout << "p_" << n << ": " << proj.size() << " diagrams, closure "
              << io::format_real(markov_closure(cfg.params(), proj).real()) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Temperley-Lieb recoupling and braid representations at roots of unity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--r", cfg.r, "Root of unity order r (A = exp(i k pi / 2r))")->capture_default_str();
  app.add_option("--k", cfg.k, "Numerator k, not divisible by r")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Tolerance for consistency assertions")->capture_default_str();
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--seed", cfg.seed, "Seed for random probes")->capture_default_str();

  int result = 0;
  auto* params = app.add_subcommand("params", "Print [n] and Delta_n for n <= 2r");
  params->callback([&] { result = cmd_params(cfg); });

  std::vector<int> theta_args, tet_args, fm_args;
  auto* theta_cmd = app.add_subcommand("theta", "Evaluate the theta net Theta(a,b,c)");
  theta_cmd->add_option("labels", theta_args, "a b c")->expected(3)->required();
  theta_cmd->callback([&] {
    print_real(cfg, theta(cfg.params(), theta_args[0], theta_args[1], theta_args[2]));
  });

  auto* tet_cmd = app.add_subcommand("tet", "Evaluate the tetrahedral net Tet(a,b,i,c,d,j)");
  tet_cmd->add_option("labels", tet_args, "a b i c d j")->expected(6)->required();
  tet_cmd->callback([&] {
    print_real(cfg, tet(cfg.params(), tet_args[0], tet_args[1], tet_args[2], tet_args[3],
                        tet_args[4], tet_args[5]));
  });

  auto* fm_cmd = app.add_subcommand("fmatrix", "Print the recoupling matrix M[a,b,c,d] as JSON");
  fm_cmd->add_option("labels", fm_args, "a b c d")->expected(4)->required();
  fm_cmd->callback([&] {
    std::cout << io::to_json(fmatrix(cfg.params(), fm_args[0], fm_args[1], fm_args[2], fm_args[3]))
                     .dump()
              << "\n";
  });

  std::string labels, word;
  auto* rep_cmd = app.add_subcommand("rep", "Compile a braid word on V[a1..an : out]");
  rep_cmd->add_option("--labels", labels, "\"a1,a2,...,an:out\"")->required();
  rep_cmd->add_option("--word", word, "Signed generators, e.g. \"1 -2 1\"");
  rep_cmd->callback([&] { result = cmd_rep(cfg, labels, word); });

  int fib_n = 3;
  auto* fib_cmd = app.add_subcommand("fib", "Compile a braid word in the Fibonacci model");
  fib_cmd->add_option("--n", fib_n, "Number of strands")->capture_default_str();
  fib_cmd->add_option("--word", word, "Signed generators, e.g. \"1 -2 1\"");
  fib_cmd->callback([&] { result = cmd_fib(fib_n, word); });

  std::string grid = "3..8";
  auto* check_cmd = app.add_subcommand("check", "Run the consistency suites (k = 1 grid plus Fibonacci)");
  check_cmd->add_option("--grid", grid, "rmin..rmax")->capture_default_str();
  check_cmd->callback([&] { result = cmd_check(cfg, grid); });

  int length = 12;
  std::string targets_file;
  std::optional<int> random;
  auto* density_cmd =
      app.add_subcommand("density", "Search Fibonacci B3 braid words closest to targets");
  density_cmd->add_option("--length", length, "Maximum word length")->capture_default_str();
  auto* targets_opt = density_cmd->add_option("--targets", targets_file,
                                              "File with one unitary per line (8 reals)");
  density_cmd->add_option("--random", random, "Number of seeded Haar SU(2) targets")
      ->excludes(targets_opt);
  density_cmd->callback([&] { result = cmd_density(cfg, length, targets_file, random); });

  auto* oracle = app.add_subcommand("oracle", "Diagrammatic evaluations (slow; small labels)");
  oracle->require_subcommand(1);
  int oracle_n = 0;
  std::vector<int> oracle_labels;
  auto* o_delta = oracle->add_subcommand("delta", "Closure of the projector p_n");
  o_delta->add_option("n", oracle_n)->required();
  o_delta->callback([&] {
    const BracketParams p = cfg.params();
    print_real(cfg, markov_closure(p, jw_projector(p, oracle_n)).real());
  });
  auto* o_theta = oracle->add_subcommand("theta", "Theta net by diagram composition");
  o_theta->add_option("labels", oracle_labels, "a b c")->expected(3)->required();
  o_theta->callback([&] {
    print_real(cfg, theta_oracle(cfg.params(), oracle_labels[0], oracle_labels[1],
                                 oracle_labels[2])
                        .real());
  });
  auto* o_tet = oracle->add_subcommand("tet", "Tetrahedral net by diagram composition");
  o_tet->add_option("labels", oracle_labels, "a b i c d j")->expected(6)->required();
  o_tet->callback([&] {
    print_real(cfg, tet_oracle(cfg.params(), oracle_labels[0], oracle_labels[1],
                               oracle_labels[2], oracle_labels[3], oracle_labels[4],
                               oracle_labels[5])
                        .real());
  });
  auto* o_jw = oracle->add_subcommand("jw", "Expand the projector p_n into diagrams");
  o_jw->add_option("n", oracle_n)->required();
  o_jw->callback([&] { result = cmd_oracle_jw(cfg, oracle_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const InadmissibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return result;
}
