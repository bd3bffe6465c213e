#pragma once

#include <complex>

namespace tlrep {

using Complex = std::complex<double>;

/// Evaluation point A = exp(i k pi / 2r) of the bracket, plus the
/// comparison tolerance used by every downstream assertion.
///
/// Requires r >= 3 and k not divisible by r, so sin(k pi / r) != 0.
/// Usable labels are 0..r-2; every Delta_n with n in that range is nonzero.
class BracketParams {
 public:
  BracketParams(int r, int k, double tol = 1e-9);

  /// r = 5, k = 6, i.e. A = exp(3 pi i / 5).
  static BracketParams fibonacci(double tol = 1e-9);

  int r() const noexcept { return r_; }
  int k() const noexcept { return k_; }
  double tol() const noexcept { return tol_; }
  int max_label() const noexcept { return r_ - 2; }

  Complex A() const;
  /// d = -A^2 - A^-2 = -2 cos(k pi / r).
  double loop_value() const;

  BracketParams with_tol(double tol) const { return {r_, k_, tol}; }

  bool operator==(const BracketParams&) const = default;

 private:
  int r_;
  int k_;
  double tol_;
};

/// [n] = sin(n k pi / r) / sin(k pi / r). Exact zero when n k = 0 mod r.
double qint(const BracketParams& p, int n);

/// [n]! = [1][2]...[n], with [0]! = 1.
double qfact(const BracketParams& p, int n);

/// Delta_n = (-1)^n [n+1], the closed n-strand projector.
double delta(const BracketParams& p, int n);

/// A^m, with the exponent reduced modulo 4r first.
Complex a_power(const BracketParams& p, long long m);

/// (A^{2n} - A^{-2n}) / (A^2 - A^{-2}) evaluated in complex arithmetic.
/// Mathematically equal to qint; kept as an independent route.
Complex qint_bracket_form(const BracketParams& p, int n);

/// (-1)^n (A^{2n+2} - A^{-2n-2}) / (A^2 - A^{-2}).
Complex delta_bracket_form(const BracketParams& p, int n);

inline int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace tlrep
