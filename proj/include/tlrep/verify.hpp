#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlrep/qarith.hpp"

namespace tlrep {

/// Outcome of one consistency suite. passed == (residual < tolerance);
/// an exception inside the suite yields residual = +inf and the message in
/// `detail`.
struct CheckReport {
  std::string name;
  std::string parameters;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  double elapsed_seconds = 0.0;
  std::string detail;
};

inline constexpr double kBraidTolerance = 1e-8;
inline constexpr double kPentagonTolerance = 1e-8;
inline constexpr double kOracleTolerance = 1e-8;

/// Every admissible (a,b,c,d) at p: worst of realness, |MM^T - I| and the
/// transpose relation, against p.tol().
CheckReport check_orthogonality(const BracketParams& p);

/// Unitarity, inverse pairs, braid relations and far commutation of the
/// generators on V[inputs : output]. With unequal neighbouring labels the
/// generators map between spaces with permuted inputs (colored_generator),
/// and the relations are compared as such maps.
CheckReport check_braid_group(const BracketParams& p, const std::vector<int>& inputs,
                              int output, double tol = kBraidTolerance);

/// The two composites of recoupling moves ((ab)c)d -> a(b(cd)) on
/// V[abcd : e], as matrices from the left-associated to the right-associated
/// basis; residual is their max entry difference. Empty spaces pass.
CheckReport check_pentagon(const BracketParams& p, int a, int b, int c, int d, int e,
                           double tol = kPentagonTolerance);

/// check_pentagon over every label tuple whose space has dimension <= max_dim.
CheckReport check_pentagon_sweep(const BracketParams& p, std::size_t max_dim = 6,
                                 double tol = kPentagonTolerance);

/// check_braid_group over uniform labelings (every label, every output) on
/// 2..max_strands strands plus `random_spaces` seeded random labelings.
CheckReport check_braid_sweep(const BracketParams& p, int max_strands, int random_spaces,
                              std::uint64_t seed, double tol = kBraidTolerance);

/// markov_closure(jw_projector(n)) against delta(n) for n <= r-2.
CheckReport check_delta_closure(const BracketParams& p, double tol = kOracleTolerance);

/// theta() against theta_oracle() for admissible triples with a+b+c <= cap.
CheckReport check_theta_oracle(const BracketParams& p, int cap, double tol = kOracleTolerance);

/// jw_by_symmetrizer(n) against jw_projector(n) for n <= max_n.
CheckReport check_symmetrizer(const BracketParams& p, int max_n, double tol = 1e-9);

struct SuiteConfig {
  int r_min = 3;
  int r_max = 8;
  bool include_fibonacci = true;
  double tol = 1e-9;
  int max_strands = 5;
  std::uint64_t seed = 1;
};

/// Every suite over the grid (k = 1 for each r, plus the Fibonacci point),
/// sorted by (name, parameters).
std::vector<CheckReport> run_suite(const SuiteConfig& config);

// ---------------------------------------------------------------------------
// Density probe on the Fibonacci B_3 representation.

using Unitary2 = Eigen::Matrix2cd;

/// min over phi of the Frobenius norm |U - e^{i phi} T|.
double projective_distance(const Unitary2& u, const Unitary2& t);

/// Haar-random SU(2) matrices from a seeded generator.
std::vector<Unitary2> random_su2_targets(int count, std::uint64_t seed);

struct DensityResult {
  Unitary2 target;
  std::vector<int> best_word;  // letters in {+-1, +-2}
  double distance = 0.0;
  /// best_by_length[l] is the best distance over words of length <= l.
  std::vector<double> best_by_length;
};

inline constexpr int kDensityLengthCap = 14;

/// Exhaustive search over freely reduced words of length <= max_length.
/// Ties break towards shorter, then lexicographically smaller words, so the
/// result does not depend on thread count.
std::vector<DensityResult> density_probe(int max_length, const std::vector<Unitary2>& targets,
                                         int length_cap = kDensityLengthCap);
std::vector<DensityResult> density_probe(int max_length, int random_targets,
                                         std::uint64_t seed,
                                         int length_cap = kDensityLengthCap);
/// Single-threaded reference for density_probe.
std::vector<DensityResult> density_probe_serial(int max_length,
                                                const std::vector<Unitary2>& targets,
                                                int length_cap = kDensityLengthCap);

}  // namespace tlrep
