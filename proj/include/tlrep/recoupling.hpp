#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlrep/qarith.hpp"

namespace tlrep {

/// Real orthogonal change of basis M[a,b,c,d] between the two fusion trees
/// with leaves (c, a, b) and root d:
///
///   columns i: (c a) -> i, (i b) -> d     (left-associated)
///   rows    j: (a b) -> j, (c j) -> d     (right-associated)
///
/// so that F|i> = sum_j M_{j i} |j>. Labels are sorted ascending.
struct RecouplingMatrix {
  BracketParams params;
  int a = 0, b = 0, c = 0, d = 0;
  std::vector<int> row_labels;
  std::vector<int> col_labels;
  Eigen::MatrixXd entries;
  /// max |Im| of the complex bracket form of every quantum integer used.
  double imag_residue = 0.0;
  /// max |M M^T - I|.
  double orthogonality_residue = 0.0;

  std::optional<int> row_index(int label) const;
  std::optional<int> col_index(int label) const;
  /// Entry for internal labels (j, i); zero when either is not admissible.
  double at(int row_label, int col_label) const;
  int dim() const { return static_cast<int>(row_labels.size()); }
};

/// Internal labels i with (c,a,i) and (i,b,d) admissible.
std::vector<int> recoupling_col_labels(const BracketParams& p, int a, int b, int c, int d);
/// Internal labels j with (a,b,j) and (c,j,d) admissible.
std::vector<int> recoupling_row_labels(const BracketParams& p, int a, int b, int c, int d);

/// Denominator sqrt|Delta_a Delta_b Delta_c Delta_d| with the sign the
/// vertex normalization produces for row label j: sign(Delta_j Theta(a,b,j) Theta(c,d,j)).
double recoupling_denominator(const BracketParams& p, int a, int b, int c, int d, int j);

/// The same magnitude assembled per row as
/// sqrt|Delta_a Delta_b / Delta_j| sqrt|Delta_c Delta_d / Delta_j| |Delta_j|.
double recoupling_denominator_by_row(const BracketParams& p, int a, int b, int c, int d, int j);

/// Cached construction. Throws std::invalid_argument for an empty basis and
/// ConventionError when the result is not real orthogonal within p.tol().
RecouplingMatrix fmatrix(const BracketParams& p, int a, int b, int c, int d);
RecouplingMatrix fmatrix_uncached(const BracketParams& p, int a, int b, int c, int d);
/// Cached construction without the realness/orthogonality assertion; the
/// residue fields say how far off it is. For sweeps that report failures.
RecouplingMatrix fmatrix_unchecked(const BracketParams& p, int a, int b, int c, int d);

struct TransposeCheck {
  bool ok = false;
  double residual = 0.0;
  std::string diagnostic;
};

/// Compares fmatrix(a,b,c,d)^T with fmatrix(b,d,a,c) after aligning labels.
TransposeCheck transpose_relation_check(const BracketParams& p, int a, int b, int c, int d);

void clear_recoupling_cache();
std::size_t recoupling_cache_size();

}  // namespace tlrep
