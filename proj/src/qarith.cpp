#include "tlrep/qarith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tlrep {

namespace {

// sin(t pi / r) for integer t, exact at the zeros.
double sin_pi_over(long long t, int r) {
  const long long period = 2LL * r;
  t %= period;
  if (t < 0) t += period;
  if (t == 0 || t == r) return 0.0;
  return std::sin(static_cast<double>(t) * std::numbers::pi / r);
}

}  // namespace

BracketParams::BracketParams(int r, int k, double tol) : r_(r), k_(k), tol_(tol) {
  if (r < 3) throw std::invalid_argument("r must be >= 3, got " + std::to_string(r));
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  if (k % r == 0)
    throw std::invalid_argument("k must not be divisible by r (sin(k pi / r) = 0)");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

BracketParams BracketParams::fibonacci(double tol) { return {5, 6, tol}; }

Complex BracketParams::A() const { return a_power(*this, 1); }

double BracketParams::loop_value() const {
  return -2.0 * std::cos(static_cast<double>(k_) * std::numbers::pi / r_);
}

double qint(const BracketParams& p, int n) {
  const long long k = p.k();
  if ((n * k) % p.r() == 0) return 0.0;
  return sin_pi_over(n * k, p.r()) / sin_pi_over(k, p.r());
}

double qfact(const BracketParams& p, int n) {
  if (n < 0) throw std::invalid_argument("qfact of a negative integer");
  double out = 1.0;
  for (int m = 1; m <= n; ++m) out *= qint(p, m);
  return out;
}

double delta(const BracketParams& p, int n) {
  if (n < 0) throw std::invalid_argument("delta of a negative integer");
  return parity_sign(n) * qint(p, n + 1);
}

Complex a_power(const BracketParams& p, long long m) {
  const long long period = 4LL * p.r();
  long long t = (m % period) * (p.k() % period) % period;
  if (t < 0) t += period;
  if (t == 0) return {1.0, 0.0};
  return std::polar(1.0, static_cast<double>(t) * std::numbers::pi / (2.0 * p.r()));
}

Complex qint_bracket_form(const BracketParams& p, int n) {
  const Complex num = a_power(p, 2LL * n) - a_power(p, -2LL * n);
  const Complex den = a_power(p, 2) - a_power(p, -2);
  return num / den;
}

Complex delta_bracket_form(const BracketParams& p, int n) {
  const Complex num = a_power(p, 2LL * n + 2) - a_power(p, -2LL * n - 2);
  const Complex den = a_power(p, 2) - a_power(p, -2);
  return static_cast<double>(parity_sign(n)) * num / den;
}

}  // namespace tlrep
