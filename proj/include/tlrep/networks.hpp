#pragma once

#include <cstddef>

#include "tlrep/qarith.hpp"

namespace tlrep {

/// Parity, triangle inequalities, labels in [0, r-2], and a+b+c <= 2r-4.
bool admissible(const BracketParams& p, int a, int b, int c);

/// Throws InadmissibleError naming `context` when the triple is not admissible.
void require_admissible(const BracketParams& p, int a, int b, int c, const char* context);

/// Theta net, with a = m+p, b = m+n, c = n+p:
///   (-1)^{m+n+p} [m+n+p+1]! [m]! [n]! [p]! / ([m+n]! [n+p]! [p+m]!)
/// Memoized on (r, k, sorted labels).
double theta(const BracketParams& p, int a, int b, int c);
double theta_uncached(const BracketParams& p, int a, int b, int c);

/// Tetrahedral net with vertices (a,b,i), (c,d,i), (b,c,j), (a,d,j).
/// Opposite edge pairs are (a,c), (b,d), (i,j). Memoized on (r, k, labels).
double tet(const BracketParams& p, int a, int b, int i, int c, int d, int j);
double tet_uncached(const BracketParams& p, int a, int b, int i, int c, int d, int j);

/// Magnitude form of the vertex normalization
///   (|Delta_a| |Delta_b| |Delta_c|)^{1/4} / |Theta(a,b,c)|^{1/2}.
double vertex_factor(const BracketParams& p, int a, int b, int c);

/// (-1)^{(b+c-a)/2} sqrt(|[b+1][c+1] / [a+1]|).
double bubble_coeff(const BracketParams& p, int a, int b, int c);

/// tet(...) times vertex_factor at each of its four vertices.
double mod_tet(const BracketParams& p, int a, int b, int i, int c, int d, int j);

struct NetworkCacheStats {
  std::size_t theta_entries = 0;
  std::size_t tet_entries = 0;
};

NetworkCacheStats network_cache_stats();
void clear_network_caches();

}  // namespace tlrep
