#include "tlrep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "tlrep/braidrep.hpp"
#include "tlrep/networks.hpp"
#include "tlrep/recoupling.hpp"
#include "tlrep/tldiag.hpp"

namespace tlrep {

namespace {

std::string params_text(const BracketParams& p) {
  return "r=" + std::to_string(p.r()) + " k=" + std::to_string(p.k());
}

std::string labels_text(const std::vector<int>& inputs, int output) {
  std::string s;
  for (std::size_t t = 0; t < inputs.size(); ++t) s += (t ? "," : "") + std::to_string(inputs[t]);
  return s + ":" + std::to_string(output);
}

/// Runs `body`, which returns the residual and may set `detail`, and fills
/// in timing and the verdict.
template <typename Body>
CheckReport run_check(std::string name, std::string parameters, double tol, Body&& body) {
  CheckReport report;
  report.name = std::move(name);
  report.parameters = std::move(parameters);
  report.tolerance = tol;
  const auto start = std::chrono::steady_clock::now();
  try {
    report.residual = body(report.detail);
  } catch (const std::exception& e) {
    report.residual = std::numeric_limits<double>::infinity();
    report.detail = e.what();
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.passed = report.residual < tol;
  return report;
}

void track(double& worst, std::string& detail, double value, const std::string& where) {
  if (!(value <= worst)) {  // also catches NaN
    worst = std::isnan(value) ? std::numeric_limits<double>::infinity() : value;
    detail = where;
  }
}

// M[a,b,c,d]_{row, col}, zero where the internal labels are not admissible.
double recoupling_entry(const BracketParams& p, int a, int b, int c, int d, int row, int col) {
  if (!admissible(p, c, a, col) || !admissible(p, col, b, d) || !admissible(p, a, b, row) ||
      !admissible(p, c, row, d))
    return 0.0;
  return fmatrix(p, a, b, c, d).at(row, col);
}

}  // namespace

CheckReport check_orthogonality(const BracketParams& p) {
  return run_check("orthogonality", params_text(p), p.tol(), [&](std::string& detail) {
    double worst = 0.0;
    const int top = p.max_label();
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        for (int c = 0; c <= top; ++c)
          for (int d = 0; d <= top; ++d) {
            if (recoupling_col_labels(p, a, b, c, d).empty()) continue;
            const std::string where = "M[" + std::to_string(a) + "," + std::to_string(b) + "," +
                                      std::to_string(c) + "," + std::to_string(d) + "]";
            const RecouplingMatrix m = fmatrix_unchecked(p, a, b, c, d);
            track(worst, detail, m.imag_residue, where + " realness");
            track(worst, detail, m.orthogonality_residue, where + " orthogonality");
            track(worst, detail, transpose_relation_check(p, a, b, c, d).residual,
                  where + " transpose relation");
          }
    return worst;
  });
}

// Matrix of a word read left to right as a map out of `source`; `end`
// receives the space it lands in (labels permuted by the word).
static ComplexMatrix colored_word(const FusionSpace& source, const std::vector<int>& letters,
                                  FusionSpace* end = nullptr) {
  FusionSpace space = source;
  const auto dim = static_cast<Eigen::Index>(source.dim());
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (int g : letters) {
    ColoredGenerator step = colored_generator(space, std::abs(g), g > 0 ? 1 : -1);
    u = step.matrix * u;
    space = std::move(step.target);
  }
  if (end) *end = std::move(space);
  return u;
}

CheckReport check_braid_group(const BracketParams& p, const std::vector<int>& inputs, int output,
                              double tol) {
  return run_check(
      "braid_group", params_text(p) + " labels=" + labels_text(inputs, output), tol,
      [&](std::string& detail) {
        const FusionSpace space = make_space(p, inputs, output);
        const int n = space.strands();
        const auto dim = static_cast<Eigen::Index>(space.dim());
        const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
        double worst = 0.0;
        for (int i = 1; i < n; ++i) {
          const std::string s = "s" + std::to_string(i);
          const ColoredGenerator g = colored_generator(space, i, +1);
          track(worst, detail, unitarity_residual(g.matrix), "unitarity " + s);
          track(worst, detail, (colored_word(space, {i, -i}) - id).cwiseAbs().maxCoeff(),
                "inverse pair " + s);
          if (inputs[i - 1] == inputs[i])
            track(worst, detail, (g.matrix - generator_matrix(space, i, +1)).cwiseAbs().maxCoeff(),
                  "block construction " + s);
        }
        for (int i = 1; i + 1 < n; ++i)
          track(worst, detail,
                (colored_word(space, {i, i + 1, i}) - colored_word(space, {i + 1, i, i + 1}))
                    .cwiseAbs()
                    .maxCoeff(),
                "braid relation s" + std::to_string(i) + " s" + std::to_string(i + 1));
        for (int i = 1; i < n; ++i)
          for (int j = i + 2; j < n; ++j)
            track(worst, detail,
                  (colored_word(space, {i, j}) - colored_word(space, {j, i})).cwiseAbs().maxCoeff(),
                  "far commutation s" + std::to_string(i) + " s" + std::to_string(j));
        return worst;
      });
}

CheckReport check_pentagon(const BracketParams& p, int a, int b, int c, int d, int e, double tol) {
  return run_check(
      "pentagon", params_text(p) + " labels=" + labels_text({a, b, c, d}, e), tol,
      [&](std::string& detail) -> double {
        const int top = p.max_label();
        // left-associated basis (x2, x3): (a,b,x2), (x2,c,x3), (x3,d,e)
        std::vector<std::pair<int, int>> from;
        for (int x2 = 0; x2 <= top; ++x2)
          for (int x3 = 0; x3 <= top; ++x3)
            if (admissible(p, a, b, x2) && admissible(p, x2, c, x3) && admissible(p, x3, d, e))
              from.emplace_back(x2, x3);
        // right-associated basis (u, v): (c,d,u), (b,u,v), (a,v,e)
        std::vector<std::pair<int, int>> to;
        for (int u = 0; u <= top; ++u)
          for (int v = 0; v <= top; ++v)
            if (admissible(p, c, d, u) && admissible(p, b, u, v) && admissible(p, a, v, e))
              to.emplace_back(u, v);
        if (from.empty() && to.empty()) return 0.0;
        if (from.size() != to.size()) {
          detail = "basis sizes differ";
          return std::numeric_limits<double>::infinity();
        }
        // M[y,z,x,w] moves ((x y) z) -> w to (x (y z)) -> w.
        Eigen::MatrixXd two_moves(to.size(), from.size());
        Eigen::MatrixXd three_moves(to.size(), from.size());
        for (std::size_t col = 0; col < from.size(); ++col) {
          const auto [x2, x3] = from[col];
          for (std::size_t row = 0; row < to.size(); ++row) {
            const auto [u, v] = to[row];
            two_moves(row, col) = recoupling_entry(p, c, d, x2, e, u, x3) *
                                  recoupling_entry(p, b, u, a, e, v, x2);
            double sum = 0.0;
            for (int w = 0; w <= top; ++w)
              sum += recoupling_entry(p, b, c, a, x3, w, x2) *
                     recoupling_entry(p, w, d, a, e, v, x3) *
                     recoupling_entry(p, c, d, b, v, u, w);
            three_moves(row, col) = sum;
          }
        }
        return (two_moves - three_moves).cwiseAbs().maxCoeff();
      });
}

CheckReport check_pentagon_sweep(const BracketParams& p, std::size_t max_dim, double tol) {
  return run_check("pentagon_sweep", params_text(p) + " max_dim=" + std::to_string(max_dim), tol,
                   [&](std::string& detail) {
                     double worst = 0.0;
                     const int top = p.max_label();
                     for (int a = 0; a <= top; ++a)
                       for (int b = 0; b <= top; ++b)
                         for (int c = 0; c <= top; ++c)
                           for (int d = 0; d <= top; ++d)
                             for (int e = 0; e <= top; ++e) {
                               std::size_t dim = 0;
                               try {
                                 dim = make_space(p, {a, b, c, d}, e).dim();
                               } catch (const std::invalid_argument&) {
                                 continue;
                               }
                               if (dim > max_dim) continue;
                               const CheckReport one = check_pentagon(p, a, b, c, d, e, tol);
                               track(worst, detail, one.residual, one.parameters + " " + one.detail);
                             }
                     return worst;
                   });
}

CheckReport check_braid_sweep(const BracketParams& p, int max_strands, int random_spaces,
                              std::uint64_t seed, double tol) {
  return run_check(
      "braid_sweep",
      params_text(p) + " n<=" + std::to_string(max_strands) +
          " random=" + std::to_string(random_spaces) + " seed=" + std::to_string(seed),
      tol, [&](std::string& detail) {
        std::vector<std::pair<std::vector<int>, int>> spaces;
        for (int n = 2; n <= max_strands; ++n)
          for (int label = 0; label <= p.max_label(); ++label)
            for (int out = 0; out <= p.max_label(); ++out)
              spaces.emplace_back(std::vector<int>(n, label), out);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> label_dist(0, p.max_label());
        std::uniform_int_distribution<int> strand_dist(2, std::max(2, max_strands));
        for (int t = 0, attempts = 0; t < random_spaces && attempts < 1000 * (random_spaces + 1);
             ++attempts) {
          std::vector<int> inputs(strand_dist(rng));
          for (int& x : inputs) x = label_dist(rng);
          const int out = label_dist(rng);
          try {
            make_space(p, inputs, out);
          } catch (const std::invalid_argument&) {
            continue;
          }
          spaces.emplace_back(std::move(inputs), out);
          ++t;
        }

        std::vector<CheckReport> results(spaces.size());
        const long count = static_cast<long>(spaces.size());
#pragma omp parallel for schedule(dynamic)
        for (long s = 0; s < count; ++s) {
          try {
            make_space(p, spaces[s].first, spaces[s].second);
          } catch (const std::invalid_argument&) {
            results[s].passed = true;  // empty space: nothing to check
            continue;
          }
          results[s] = check_braid_group(p, spaces[s].first, spaces[s].second, tol);
        }
        double worst = 0.0;
        for (const auto& r : results)
          if (!r.name.empty()) track(worst, detail, r.residual, r.parameters + " " + r.detail);
        return worst;
      });
}

CheckReport check_delta_closure(const BracketParams& p, double tol) {
  return run_check("delta_closure", params_text(p), tol, [&](std::string& detail) {
    double worst = 0.0;
    for (int n = 0; n <= p.max_label(); ++n)
      track(worst, detail, std::abs(markov_closure(p, jw_projector(p, n)) - delta(p, n)),
            "n=" + std::to_string(n));
    return worst;
  });
}

CheckReport check_theta_oracle(const BracketParams& p, int cap, double tol) {
  return run_check("theta_oracle", params_text(p) + " cap=" + std::to_string(cap), tol,
                   [&](std::string& detail) {
                     double worst = 0.0;
                     const int top = p.max_label();
                     for (int a = 0; a <= top; ++a)
                       for (int b = a; b <= top; ++b)
                         for (int c = b; c <= top; ++c) {
                           if (!admissible(p, a, b, c) || a + b + c > cap) continue;
                           const double diff =
                               std::abs(theta_oracle(p, a, b, c, cap) - theta(p, a, b, c));
                           track(worst, detail, diff,
                                 "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
                         }
                     return worst;
                   });
}

CheckReport check_symmetrizer(const BracketParams& p, int max_n, double tol) {
  return run_check("symmetrizer", params_text(p) + " n<=" + std::to_string(max_n), tol,
                   [&](std::string& detail) {
                     double worst = 0.0;
                     for (int n = 0; n <= std::min(max_n, p.r() - 1); ++n)
                       track(worst, detail,
                             jw_by_symmetrizer(p, n).max_abs_diff(jw_projector(p, n)),
                             "n=" + std::to_string(n));
                     return worst;
                   });
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  std::vector<BracketParams> points;
  for (int r = config.r_min; r <= config.r_max; ++r) points.emplace_back(r, 1, config.tol);
  if (config.include_fibonacci) points.push_back(BracketParams::fibonacci(config.tol));

  std::vector<CheckReport> reports;
  for (const BracketParams& p : points) {
    reports.push_back(check_orthogonality(p));
    reports.push_back(check_braid_sweep(p, config.max_strands, 4, config.seed));
    reports.push_back(check_pentagon_sweep(p));
    if (p.r() <= 6) {
      reports.push_back(check_delta_closure(p));
      reports.push_back(check_theta_oracle(p, 12));
      reports.push_back(check_symmetrizer(p, std::min(4, p.r() - 1)));
    }
  }
  std::sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
    return std::tie(x.name, x.parameters) < std::tie(y.name, y.parameters);
  });
  return reports;
}

}  // namespace tlrep
