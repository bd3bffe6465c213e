#pragma once

// The two-label model (* = 0, P = 2) at r = 5, A = exp(3 pi i / 5).

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlrep/braidrep.hpp"

namespace tlrep::fibonacci {

inline constexpr int kVacuum = 0;
inline constexpr int kAnyon = 2;

/// V(P P ... P : P) on n >= 2 strands.
FusionSpace space(int n);

/// f_n with f_1 = f_2 = 1.
long long fibonacci_number(int n);

struct Constants {
  Eigen::Matrix2d F;   // [[tau, sqrt tau], [sqrt tau, -tau]], rows/cols (*, P)
  Eigen::Matrix2cd R;  // diag(A^8, -A^4)
  Eigen::Matrix2cd N;  // F R F
};

/// Built from tau = (sqrt 5 - 1)/2 and powers of A directly, not from the
/// recoupling machinery.
Constants constants();

/// Strings x_2..x_{n-1} over {'*','P'} with no two consecutive '*', in
/// lexicographic order ('*' < 'P').
std::vector<std::string> basis_strings(int n);

/// How the closed form picks the phase when a neighbour of x_i is '*'.
enum class NeighbourRule {
  /// The fusion channel of strands i, i+1 forced by the neighbours:
  /// lambda(*) when x_{i-1} = x_{i+1} = *, lambda(P) otherwise.
  kForcedChannel,
  /// lambda(x_i) unconditionally, as the formula is usually quoted. Not a
  /// braid group representation for n >= 5; kept to demonstrate that.
  kLiteral,
};

/// s_i on basis_strings(n) from F, R, N only:
///   s_1|x> = lambda(x_2)|x>;
///   s_i|x> = sum_a N_{a, x_i} |..a..>        if x_{i-1} = x_{i+1} = P;
///   s_i|x> = (phase per `rule`) |x>          otherwise,
/// with x_1 = x_n = P.
UnitaryMatrix closed_form_generator(int n, int i,
                                    NeighbourRule rule = NeighbourRule::kForcedChannel);

}  // namespace tlrep::fibonacci
