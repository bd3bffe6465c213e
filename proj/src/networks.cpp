#include "tlrep/networks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "tlrep/errors.hpp"

namespace tlrep {

namespace {

template <std::size_t N>
class MemoTable {
 public:
  using Key = std::array<int, N + 2>;

  template <typename Compute>
  double get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    const double value = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, value).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, double> table_;
};

MemoTable<3>& theta_table() {
  static MemoTable<3> table;
  return table;
}

MemoTable<6>& tet_table() {
  static MemoTable<6> table;
  return table;
}

std::string triple_text(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

bool admissible(const BracketParams& p, int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  const int top = p.max_label();
  if (a > top || b > top || c > top) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a + b < c || b + c < a || c + a < b) return false;
  return a + b + c <= 2 * p.r() - 4;
}

void require_admissible(const BracketParams& p, int a, int b, int c, const char* context) {
  if (!admissible(p, a, b, c))
    throw InadmissibleError(std::string(context) + ": triple " + triple_text(a, b, c) +
                            " is not admissible at r = " + std::to_string(p.r()));
}

double theta_uncached(const BracketParams& p, int a, int b, int c) {
  require_admissible(p, a, b, c, "theta");
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  const int m = (s[0] + s[1] - s[2]) / 2;
  const int n = (s[1] + s[2] - s[0]) / 2;
  const int q = (s[0] + s[2] - s[1]) / 2;
  const double num = qfact(p, m + n + q + 1) * qfact(p, m) * qfact(p, n) * qfact(p, q);
  const double den = qfact(p, m + n) * qfact(p, n + q) * qfact(p, q + m);
  return parity_sign(m + n + q) * num / den;
}

double theta(const BracketParams& p, int a, int b, int c) {
  require_admissible(p, a, b, c, "theta");
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return theta_table().get({p.r(), p.k(), s[0], s[1], s[2]},
                           [&] { return theta_uncached(p, a, b, c); });
}

double tet_uncached(const BracketParams& p, int a, int b, int i, int c, int d, int j) {
  require_admissible(p, a, b, i, "tet");
  require_admissible(p, c, d, i, "tet");
  require_admissible(p, b, c, j, "tet");
  require_admissible(p, a, d, j, "tet");

  const std::array<int, 4> vertex_half = {(a + b + i) / 2, (c + d + i) / 2, (b + c + j) / 2,
                                          (a + d + j) / 2};
  // Each face sum omits one opposite pair: (a,c), (b,d), (i,j).
  const std::array<int, 3> face_half = {(b + d + i + j) / 2, (a + c + i + j) / 2,
                                        (a + b + c + d) / 2};

  double outer = 1.0;
  for (int v : vertex_half)
    for (int f : face_half) outer *= qfact(p, f - v);
  double edges = 1.0;
  for (int e : {a, b, c, d, i, j}) edges *= qfact(p, e);

  const int lo = *std::max_element(vertex_half.begin(), vertex_half.end());
  const int hi = *std::min_element(face_half.begin(), face_half.end());
  double sum = 0.0;
  for (int z = lo; z <= hi; ++z) {
    double den = 1.0;
    for (int v : vertex_half) den *= qfact(p, z - v);
    for (int f : face_half) den *= qfact(p, f - z);
    if (den == 0.0)
      throw std::domain_error("tet: vanishing quantum factorial in a denominator");
    sum += parity_sign(z) * qfact(p, z + 1) / den;
  }
  return outer / edges * sum;
}

double tet(const BracketParams& p, int a, int b, int i, int c, int d, int j) {
  return tet_table().get({p.r(), p.k(), a, b, i, c, d, j},
                         [&] { return tet_uncached(p, a, b, i, c, d, j); });
}

double vertex_factor(const BracketParams& p, int a, int b, int c) {
  const double th = theta(p, a, b, c);
  if (std::abs(th) < p.tol())
    throw std::domain_error("vertex_factor: Theta" + triple_text(a, b, c) + " vanishes");
  const double deltas = std::abs(delta(p, a) * delta(p, b) * delta(p, c));
  return std::sqrt(std::sqrt(deltas)) / std::sqrt(std::abs(th));
}

double bubble_coeff(const BracketParams& p, int a, int b, int c) {
  require_admissible(p, a, b, c, "bubble_coeff");
  const double ratio = qint(p, b + 1) * qint(p, c + 1) / qint(p, a + 1);
  return parity_sign((b + c - a) / 2) * std::sqrt(std::abs(ratio));
}

double mod_tet(const BracketParams& p, int a, int b, int i, int c, int d, int j) {
  const double t = tet(p, a, b, i, c, d, j);
  return t * vertex_factor(p, a, b, i) * vertex_factor(p, c, d, i) *
         vertex_factor(p, b, c, j) * vertex_factor(p, a, d, j);
}

NetworkCacheStats network_cache_stats() {
  return {theta_table().size(), tet_table().size()};
}

void clear_network_caches() {
  theta_table().clear();
  tet_table().clear();
}

}  // namespace tlrep
