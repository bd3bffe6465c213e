#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tlrep/fibonacci.hpp"
#include "tlrep/recoupling.hpp"

using namespace tlrep;
using tlrep::testing::max_diff;

TEST_CASE("dimension law") {
  CHECK(fibonacci::fibonacci_number(1) == 1);
  CHECK(fibonacci::fibonacci_number(2) == 1);
  CHECK(fibonacci::fibonacci_number(6) == 8);
  for (int n = 2; n <= 16; ++n) {
    CHECK(fibonacci::space(n).dim() == std::size_t(fibonacci::fibonacci_number(n)));
    CHECK(fibonacci::basis_strings(n).size() == fibonacci::space(n).dim());
  }
  CHECK(fibonacci::space(3).dim() == 2);
  CHECK(fibonacci::space(4).dim() == 3);
  CHECK(fibonacci::space(6).dim() == 8);
}

TEST_CASE("basis strings are the admissible chains") {
  for (int n = 2; n <= 10; ++n) {
    const FusionSpace s = fibonacci::space(n);
    const auto strings = fibonacci::basis_strings(n);
    for (std::size_t t = 0; t < s.dim(); ++t) {
      std::string from_chain;
      for (int x : s.basis()[t].chain) from_chain += (x == 0 ? '*' : 'P');
      CHECK(from_chain == strings[t]);
      CHECK(strings[t].find("**") == std::string::npos);
    }
  }
}

TEST_CASE("constants") {
  const fibonacci::Constants c = fibonacci::constants();
  const RecouplingMatrix f = fmatrix(BracketParams::fibonacci(), 2, 2, 2, 2);
  CHECK(max_diff(c.F, f.entries) < 1e-12);
  const Eigen::Matrix2cd fc = c.F.cast<Complex>();
  CHECK(max_diff(c.N, fc * c.R * fc) < 1e-14);
  CHECK(max_diff(c.F * c.F, Eigen::Matrix2d::Identity()) < 1e-14);
}

TEST_CASE("closed form equals the generic construction") {
  for (int n = 2; n <= 8; ++n) {
    const FusionSpace s = fibonacci::space(n);
    for (int i = 1; i < n; ++i)
      CHECK(max_diff(fibonacci::closed_form_generator(n, i), generator_matrix(s, i, +1)) < 1e-10);
  }
}

TEST_CASE("the literal neighbour rule is not a representation") {
  using fibonacci::NeighbourRule;
  // Identical for n <= 4, where x_{i-1} = x_{i+1} = * cannot occur.
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      CHECK(max_diff(fibonacci::closed_form_generator(n, i, NeighbourRule::kLiteral),
                     fibonacci::closed_form_generator(n, i)) < 1e-14);
  const auto s2 = fibonacci::closed_form_generator(5, 2, NeighbourRule::kLiteral);
  const auto s3 = fibonacci::closed_form_generator(5, 3, NeighbourRule::kLiteral);
  CHECK(max_diff(s2 * s3 * s2, s3 * s2 * s3) > 0.5);
}
