#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"
#include "tlrep/braidrep.hpp"
#include "tlrep/fibonacci.hpp"
#include "tlrep/recoupling.hpp"

using namespace tlrep;
using tlrep::testing::max_diff;

namespace {
Complex expi(double x) { return std::polar(1.0, x); }
const double pi = std::numbers::pi;
}  // namespace

TEST_CASE("fusion spaces") {
  const BracketParams fib = BracketParams::fibonacci();
  const FusionSpace v3 = make_space(fib, {2, 2, 2}, 2);
  REQUIRE(v3.dim() == 2);
  CHECK(v3.basis()[0].chain == std::vector<int>{0});
  CHECK(v3.basis()[1].chain == std::vector<int>{2});
  CHECK(make_space(fib, {2, 2, 2, 2}, 2).dim() == 3);
  const FusionSpace vac = make_space(fib, {0, 0}, 0);
  CHECK(vac.dim() == 1);
  CHECK(vac.basis()[0].chain.empty());
  CHECK(v3.label(1, 1) == 2);
  CHECK(v3.label(1, 2) == 2);
  CHECK(v3.label(0, 3) == 2);
  CHECK(v3.index_of({2}) == 1);
  CHECK_FALSE(v3.index_of({1}).has_value());
  CHECK_THROWS_AS(make_space(fib, {2, 2}, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_space(fib, {2, 4}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_space(fib, {2}, 2), std::invalid_argument);

  // Lexicographic and admissible everywhere.
  const FusionSpace big = make_space(BracketParams(6, 1), {1, 2, 3, 1, 2}, 3);
  for (std::size_t s = 1; s < big.dim(); ++s) CHECK(big.basis()[s - 1] < big.basis()[s]);
}

TEST_CASE("braiding phases") {
  const BracketParams fib = BracketParams::fibonacci();
  CHECK(std::abs(braiding_phase(fib, 2, 2, 0) - expi(4 * pi / 5)) < 1e-14);
  CHECK(std::abs(braiding_phase(fib, 2, 2, 2) + expi(2 * pi / 5)) < 1e-14);
  CHECK(std::abs(braiding_phase(fib, 2, 2, 0) - a_power(fib, 8)) < 1e-14);
  CHECK(std::abs(braiding_phase(fib, 2, 2, 2) + a_power(fib, 4)) < 1e-14);
  const BracketParams p(7, 1);
  for (int b = 0; b <= p.max_label(); ++b) CHECK(braiding_phase(p, 0, b, b) == Complex(1.0, 0.0));
  CHECK(std::abs(std::abs(braiding_phase(p, 3, 4, 3)) - 1.0) < 1e-15);
}

TEST_CASE("Fibonacci generators") {
  const FusionSpace v3 = fibonacci::space(3);
  UnitaryMatrix r(2, 2);
  r << expi(4 * pi / 5), 0.0, 0.0, -expi(2 * pi / 5);
  CHECK(max_diff(generator_matrix(v3, 1, +1), r) < 1e-12);
  const Eigen::MatrixXcd f = fmatrix(BracketParams::fibonacci(), 2, 2, 2, 2).entries.cast<Complex>();
  CHECK(max_diff(generator_matrix(v3, 2, +1), f * r * f) < 1e-12);
  CHECK(max_diff(generator_matrix(v3, 2, -1), generator_matrix(v3, 2, +1).adjoint()) < 1e-12);
  CHECK_THROWS_AS(generator_matrix(v3, 3, +1), std::out_of_range);
  CHECK_THROWS_AS(generator_matrix(v3, 0, +1), std::out_of_range);
}

TEST_CASE("braid words") {
  CHECK(BraidWord(3, {1, -2, 1}).letters() == std::vector<int>{1, -2, 1});
  CHECK(BraidWord(3, {1, -2}).inverse() == BraidWord(3, {2, -1}));
  CHECK(BraidWord(3, {1, -2}).to_string() == "1 -2");
  CHECK_THROWS_AS(BraidWord(3, {0}), std::out_of_range);
  CHECK_THROWS_AS(BraidWord(3, {3}), std::out_of_range);
  CHECK_THROWS_AS(BraidWord(1, {}), std::invalid_argument);
}

TEST_CASE("compilation") {
  const FusionSpace v3 = fibonacci::space(3);
  const auto id = UnitaryMatrix::Identity(2, 2);
  CHECK(max_diff(compile(v3, BraidWord(3)), id) == 0.0);
  CHECK(max_diff(compile(v3, BraidWord(3, {1})), generator_matrix(v3, 1, +1)) < 1e-15);
  CHECK(max_diff(compile(v3, BraidWord(3, {1, -1})), id) < 1e-12);
  // Leftmost letter first: U("1 2") = s2 s1.
  CHECK(max_diff(compile(v3, BraidWord(3, {1, 2})),
                 generator_matrix(v3, 2, +1) * generator_matrix(v3, 1, +1)) < 1e-14);
  for (const FusionSpace& s : {v3, make_space(BracketParams(6, 1), {2, 2, 2, 2}, 2),
                               make_space(BracketParams(7, 8), {3, 3, 3}, 1)}) {
    const int n = s.strands();
    CHECK(max_diff(compile(s, BraidWord(n, {1, 2, 1})), compile(s, BraidWord(n, {2, 1, 2}))) < 1e-9);
  }
  CHECK_THROWS_AS(compile(v3, BraidWord(4, {1})), std::invalid_argument);
}

TEST_CASE("apply matches compile") {
  const FusionSpace v3 = fibonacci::space(3);
  StateVector e0 = StateVector::Zero(2);
  e0(0) = 1.0;
  const StateVector out = apply(v3, BraidWord(3, {1}), e0);
  CHECK(std::abs(out(0) - expi(4 * pi / 5)) < 1e-12);
  CHECK(std::abs(out(1)) == 0.0);
  CHECK(max_diff(apply(v3, BraidWord(3), e0), e0) == 0.0);
  CHECK_THROWS_AS(apply(v3, BraidWord(3, {1}), StateVector::Zero(3)), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> letter(1, 7);
  std::bernoulli_distribution flip;
  const BraidRepresentation rep(fibonacci::space(8));
  StateVector psi(rep.dim());
  for (auto& z : psi) z = Complex(normal(rng), normal(rng));
  psi.normalize();
  std::vector<int> letters;
  for (int t = 0; t < 20; ++t) letters.push_back(flip(rng) ? letter(rng) : -letter(rng));
  const BraidWord w(8, letters);
  CHECK(max_diff(apply(rep, w, psi), compile(rep, w) * psi) < 1e-9);
}

TEST_CASE("generators are block structured and unitary") {
  const FusionSpace s = make_space(BracketParams(7, 1), {2, 2, 2, 2, 2}, 2);
  for (int i = 1; i < s.strands(); ++i) {
    const GeneratorAction g = generator_action(s, i, +1);
    CHECK(g.max_block() <= 3);
    std::vector<int> seen(s.dim(), 0);
    for (const auto& b : g.blocks)
      for (std::size_t st : b.states) ++seen[st];
    for (int c : seen) CHECK(c == 1);
    CHECK(unitarity_residual(to_dense(g)) < 1e-12);
  }
}

TEST_CASE("colored generators between spaces") {
  const BracketParams p(6, 1);
  const FusionSpace s = make_space(p, {1, 2, 3, 2}, 2);
  const ColoredGenerator g = colored_generator(s, 2, +1);
  CHECK(g.target.inputs() == std::vector<int>{1, 3, 2, 2});
  CHECK(unitarity_residual(g.matrix) < 1e-12);
  const ColoredGenerator back = colored_generator(g.target, 2, -1);
  CHECK(max_diff(back.matrix * g.matrix, UnitaryMatrix::Identity(s.dim(), s.dim())) < 1e-12);
  // Equal neighbours reduce to the ordinary generator.
  const FusionSpace u = make_space(p, {2, 2, 2, 2}, 2);
  for (int i = 1; i <= 3; ++i)
    CHECK(max_diff(colored_generator(u, i, +1).matrix, generator_matrix(u, i, +1)) < 1e-14);
}
