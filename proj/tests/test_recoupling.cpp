#include <doctest.h>

#include <cmath>

#include "tlrep/errors.hpp"
#include "tlrep/networks.hpp"
#include "tlrep/recoupling.hpp"
#include "tlrep/tldiag.hpp"

using namespace tlrep;

namespace {
const double tau = (std::sqrt(5.0) - 1.0) / 2.0;

std::vector<BracketParams> supported_grid() {
  std::vector<BracketParams> out;
  for (int r = 3; r <= 8; ++r)
    for (int k : {1, r - 1, r + 1, 2 * r - 1}) out.emplace_back(r, k);
  return out;
}
}  // namespace

TEST_CASE("Fibonacci F matrix") {
  const RecouplingMatrix m = fmatrix(BracketParams::fibonacci(), 2, 2, 2, 2);
  CHECK(m.row_labels == std::vector<int>{0, 2});
  CHECK(m.col_labels == std::vector<int>{0, 2});
  CHECK(m.entries(0, 0) == doctest::Approx(tau).epsilon(1e-12));
  CHECK(m.entries(0, 1) == doctest::Approx(std::sqrt(tau)).epsilon(1e-12));
  CHECK(m.entries(1, 0) == doctest::Approx(std::sqrt(tau)).epsilon(1e-12));
  CHECK(m.entries(1, 1) == doctest::Approx(-tau).epsilon(1e-12));
  CHECK(m.at(2, 0) == m.entries(1, 0));
  CHECK(m.at(1, 0) == 0.0);
  CHECK(m.row_index(2) == 1);
  CHECK_FALSE(m.col_index(1).has_value());
}

TEST_CASE("r = 4 spin-1/2 recoupling") {
  const BracketParams p(4, 1);
  const RecouplingMatrix m = fmatrix(p, 1, 1, 1, 1);
  CHECK(m.row_labels == std::vector<int>{0, 2});
  CHECK(m.col_labels == std::vector<int>{0, 2});
  const Eigen::MatrixXd q = m.entries;
  CHECK((q * q.transpose() - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-9);
  // The tetrahedra inside the entries agree with the diagrammatic evaluation.
  for (int i : m.col_labels)
    for (int j : m.row_labels)
      CHECK(std::abs(tet_oracle(p, 1, 1, i, 1, 1, j) - tet(p, 1, 1, i, 1, 1, j)) < 1e-9);
}

TEST_CASE("orthogonal, real and transpose-symmetric on the supported grid") {
  for (const BracketParams& p : supported_grid()) {
    const int top = p.max_label();
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        for (int c = 0; c <= top; ++c)
          for (int d = 0; d <= top; ++d) {
            if (recoupling_col_labels(p, a, b, c, d).empty()) continue;
            const RecouplingMatrix m = fmatrix(p, a, b, c, d);
            CHECK(m.row_labels.size() == m.col_labels.size());
            CHECK(m.imag_residue < 1e-9);
            CHECK(m.orthogonality_residue < 1e-9);
            CHECK(transpose_relation_check(p, a, b, c, d).residual < 1e-9);
          }
  }
}

TEST_CASE("sign convention matches (-1)^{(a+b+c+d)/2} at k = 1") {
  for (int r = 3; r <= 9; ++r) {
    const BracketParams p(r, 1);
    const int top = p.max_label();
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        for (int c = 0; c <= top; ++c)
          for (int d = 0; d <= top; ++d)
            for (int j : recoupling_row_labels(p, a, b, c, d)) {
              const double den = recoupling_denominator(p, a, b, c, d, j);
              const double mag = std::sqrt(std::abs(delta(p, a) * delta(p, b) * delta(p, c) * delta(p, d)));
              CHECK(den == doctest::Approx(parity_sign((a + b + c + d) / 2) * mag).epsilon(1e-12));
              CHECK(std::abs(den) ==
                    doctest::Approx(recoupling_denominator_by_row(p, a, b, c, d, j)).epsilon(1e-12));
            }
  }
}

TEST_CASE("one-dimensional blocks") {
  for (const BracketParams& p : {BracketParams(6, 1), BracketParams::fibonacci()}) {
    const int top = p.max_label();
    int negative = 0;
    for (int a = 0; a <= top; ++a)
      for (int b = 0; b <= top; ++b)
        for (int c = 0; c <= top; ++c)
          for (int d = 0; d <= top; ++d) {
            const auto cols = recoupling_col_labels(p, a, b, c, d);
            if (cols.size() != 1) continue;
            const double x = fmatrix(p, a, b, c, d).entries(0, 0);
            CHECK(std::abs(x) == doctest::Approx(1.0).epsilon(1e-12));
            // A vacuum leg makes the move an identity.
            if (a == 0 || b == 0 || c == 0 || d == 0) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
            if (x < 0) ++negative;
          }
    // Blocks cut down to 1x1 by the root-of-unity cutoff keep their sign:
    // the pentagon needs it.
    if (p.k() == 1) CHECK(negative > 0);
  }
  CHECK(fmatrix(BracketParams(6, 1), 1, 1, 4, 4).entries(0, 0) == doctest::Approx(-1.0));
}

TEST_CASE("errors") {
  const BracketParams fib = BracketParams::fibonacci();
  CHECK_THROWS_AS(fmatrix(fib, 1, 1, 1, 0), std::invalid_argument);
  // Only k = +-1 mod r gives orthogonal recoupling.
  const BracketParams bad(5, 2);
  CHECK_THROWS_AS(fmatrix(bad, 2, 2, 2, 2), ConventionError);
  CHECK(fmatrix_unchecked(bad, 2, 2, 2, 2).orthogonality_residue > 1e-3);
}

TEST_CASE("cache is transparent") {
  clear_recoupling_cache();
  CHECK(recoupling_cache_size() == 0);
  const BracketParams p(7, 1);
  const RecouplingMatrix a = fmatrix(p, 2, 3, 3, 2);
  CHECK(recoupling_cache_size() == 1);
  const RecouplingMatrix b = fmatrix(p, 2, 3, 3, 2);
  const RecouplingMatrix c = fmatrix_uncached(p, 2, 3, 3, 2);
  CHECK(recoupling_cache_size() == 1);
  CHECK(a.entries == b.entries);
  CHECK(a.entries == c.entries);
  CHECK(a.row_labels == c.row_labels);
  // Cached matrices carry the caller's tolerance.
  CHECK(fmatrix(p.with_tol(1e-6), 2, 3, 3, 2).params.tol() == 1e-6);
}
