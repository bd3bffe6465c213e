#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tlrep/qarith.hpp"

using namespace tlrep;

namespace {
const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(BracketParams(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(BracketParams(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(BracketParams(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(BracketParams(5, 10), std::invalid_argument);
  CHECK_THROWS_AS(BracketParams(5, 1, 0.0), std::invalid_argument);
  CHECK_NOTHROW(BracketParams(3, 1));
  const BracketParams fib = BracketParams::fibonacci();
  CHECK(fib.r() == 5);
  CHECK(fib.k() == 6);
  CHECK(fib.max_label() == 3);
}

TEST_CASE("A and the loop value") {
  const BracketParams fib = BracketParams::fibonacci();
  const Complex expected = std::polar(1.0, 3.0 * std::numbers::pi / 5.0);
  CHECK(std::abs(fib.A() - expected) < 1e-15);
  CHECK(fib.loop_value() == doctest::Approx(phi).epsilon(1e-14));
  CHECK(BracketParams(5, 1).loop_value() == doctest::Approx(-phi).epsilon(1e-14));
  const Complex a = fib.A();
  CHECK(std::abs(Complex(fib.loop_value()) - (-a * a - 1.0 / (a * a))) < 1e-14);
}

TEST_CASE("quantum integers") {
  const BracketParams p(5, 1);
  CHECK(qint(p, 0) == 0.0);
  CHECK(qint(p, 1) == doctest::Approx(1.0));
  CHECK(qint(p, 2) == doctest::Approx(phi));
  CHECK(qint(p, 3) == doctest::Approx(phi));
  CHECK(qint(p, 4) == doctest::Approx(1.0));
  CHECK(qint(p, 5) == 0.0);  // exact, not a rounding residue
  CHECK(qint(p, 10) == 0.0);
  CHECK(qint(p, 6) == doctest::Approx(-1.0));
  CHECK(!std::signbit(qint(p, 0)));

  // [n] at k = 6 is (-1)^{n-1} [n] at k = 1.
  const BracketParams fib = BracketParams::fibonacci();
  for (int n = 1; n <= 9; ++n)
    CHECK(qint(fib, n) == doctest::Approx(parity_sign(n - 1) * qint(p, n)).epsilon(1e-13));
}

TEST_CASE("quantum integers agree with the A-power form") {
  for (int r = 3; r <= 9; ++r)
    for (int k : {1, r - 1, r + 1, 2 * r - 1}) {
      const BracketParams p(r, k);
      for (int n = 0; n <= 2 * r; ++n) {
        CHECK(std::abs(qint_bracket_form(p, n) - qint(p, n)) < 1e-12);
        CHECK(std::abs(delta_bracket_form(p, n) - delta(p, n)) < 1e-12);
      }
    }
}

TEST_CASE("factorials and loop values") {
  const BracketParams p(7, 1);
  CHECK(qfact(p, 0) == 1.0);
  CHECK(qfact(p, 3) == doctest::Approx(qint(p, 1) * qint(p, 2) * qint(p, 3)));
  CHECK_THROWS_AS(qfact(p, -1), std::invalid_argument);
  CHECK(delta(p, 0) == 1.0);
  CHECK(delta(p, 1) == doctest::Approx(p.loop_value()));
  // Chebyshev recursion Delta_{n+1} = d Delta_n - Delta_{n-1}.
  for (int n = 1; n < 6; ++n)
    CHECK(delta(p, n + 1) ==
          doctest::Approx(p.loop_value() * delta(p, n) - delta(p, n - 1)).epsilon(1e-12));
  for (int n = 0; n <= p.max_label(); ++n) CHECK(std::abs(delta(p, n)) > 1e-3);
  CHECK(delta(p, p.r() - 1) == 0.0);

  const BracketParams fib = BracketParams::fibonacci();
  CHECK(delta(fib, 0) == doctest::Approx(1.0));
  CHECK(delta(fib, 1) == doctest::Approx(phi));
  CHECK(delta(fib, 2) == doctest::Approx(phi));
  CHECK(delta(fib, 3) == doctest::Approx(1.0));
}

TEST_CASE("powers of A") {
  const BracketParams p(5, 6);
  CHECK(a_power(p, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(a_power(p, 4 * p.r()) - 1.0) < 1e-15);
  CHECK(std::abs(a_power(p, -1) - std::conj(p.A())) < 1e-15);
  CHECK(std::abs(a_power(p, 8) - std::polar(1.0, 4.0 * std::numbers::pi / 5.0)) < 1e-14);
  CHECK(std::abs(a_power(p, 13) - a_power(p, 13 + 40 * p.r())) < 1e-15);
}
