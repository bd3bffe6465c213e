#include <doctest.h>

#include <cmath>

#include "tlrep/braidrep.hpp"
#include "tlrep/fibonacci.hpp"
#include "tlrep/verify.hpp"

using namespace tlrep;

namespace {
Unitary2 generator(int letter) {
  const BraidRepresentation rep(fibonacci::space(3));
  return to_dense(rep.action(letter));
}
}  // namespace

TEST_CASE("projective distance") {
  const Unitary2 u = generator(1);
  CHECK(projective_distance(u, u) == 0.0);
  CHECK(projective_distance(u, std::polar(1.0, 0.7) * u) < 1e-15);
  const Unitary2 v = generator(2);
  CHECK(projective_distance(u, v) == doctest::Approx(projective_distance(v, u)).epsilon(1e-12));
  CHECK(projective_distance(u, v) > 0.1);
}

TEST_CASE("random targets") {
  const auto a = random_su2_targets(5, 9);
  const auto b = random_su2_targets(5, 9);
  REQUIRE(a.size() == 5);
  for (std::size_t t = 0; t < a.size(); ++t) {
    CHECK(a[t] == b[t]);
    CHECK((a[t] * a[t].adjoint() - Unitary2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(a[t].determinant() - 1.0) < 1e-14);
  }
  CHECK_FALSE(random_su2_targets(1, 10)[0] == a[0]);
}

TEST_CASE("trivial targets") {
  const auto res = density_probe(3, {Unitary2::Identity(), generator(1), generator(-2)});
  CHECK(res[0].distance == 0.0);
  CHECK(res[0].best_word.empty());
  CHECK(res[0].best_by_length[0] == 0.0);
  CHECK(res[1].best_by_length[0] > 0.1);
  CHECK(res[1].best_by_length[1] == 0.0);
  CHECK(res[1].best_word == std::vector<int>{1});
  CHECK(res[2].best_word == std::vector<int>{-2});
}

TEST_CASE("monotone and thread-independent") {
  const auto targets = random_su2_targets(6, 21);
  const auto par = density_probe(9, targets);
  const auto ser = density_probe_serial(9, targets);
  REQUIRE(par.size() == ser.size());
  for (std::size_t t = 0; t < par.size(); ++t) {
    CHECK(par[t].distance == ser[t].distance);
    CHECK(par[t].best_word == ser[t].best_word);
    CHECK(par[t].best_by_length == ser[t].best_by_length);
    CHECK(par[t].best_by_length.size() == 10);
    for (std::size_t l = 1; l < par[t].best_by_length.size(); ++l)
      CHECK(par[t].best_by_length[l] <= par[t].best_by_length[l - 1]);
    // Best words are freely reduced.
    for (std::size_t l = 1; l < par[t].best_word.size(); ++l)
      CHECK(par[t].best_word[l] != -par[t].best_word[l - 1]);
  }
}

TEST_CASE("length cap") {
  CHECK_THROWS_AS(density_probe(15, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(density_probe(5, 1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(density_probe(-1, 1, 1), std::invalid_argument);
}
