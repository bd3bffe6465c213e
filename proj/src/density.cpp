#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>

#include "tlrep/fibonacci.hpp"
#include "tlrep/verify.hpp"

namespace tlrep {

namespace {

constexpr std::array<int, 4> kLetters = {-2, -1, 1, 2};

struct Generators {
  std::array<Unitary2, 4> by_slot;  // same order as kLetters
};

Generators fibonacci_b3() {
  const BraidRepresentation rep(fibonacci::space(3));
  Generators g;
  for (std::size_t s = 0; s < kLetters.size(); ++s) g.by_slot[s] = to_dense(rep.action(kLetters[s]));
  return g;
}

struct Candidate {
  double distance = std::numeric_limits<double>::infinity();
  std::vector<int> word;
  bool found = false;
};

// Strict total order used for every tie: distance, then length, then letters.
bool better(double d, const std::vector<int>& w, const Candidate& c) {
  if (!c.found) return true;
  if (d != c.distance) return d < c.distance;
  if (w.size() != c.word.size()) return w.size() < c.word.size();
  return w < c.word;
}

using Table = std::vector<std::vector<Candidate>>;  // [target][length]

void consider(Table& table, const std::vector<Unitary2>& targets, const Unitary2& u,
              const std::vector<int>& word) {
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const double d = projective_distance(u, targets[t]);
    Candidate& slot = table[t][word.size()];
    if (better(d, word, slot)) slot = {d, word, true};
  }
}

// All reduced extensions of `word` (whose matrix is u) up to max_length.
void extend(Table& table, const Generators& g, const std::vector<Unitary2>& targets,
            std::vector<int>& word, const Unitary2& u, int max_length) {
  consider(table, targets, u, word);
  if (static_cast<int>(word.size()) == max_length) return;
  for (std::size_t s = 0; s < kLetters.size(); ++s) {
    if (!word.empty() && word.back() == -kLetters[s]) continue;
    word.push_back(kLetters[s]);
    // The new letter acts after the existing ones.
    const Unitary2 next = g.by_slot[s] * u;
    extend(table, g, targets, word, next, max_length);
    word.pop_back();
  }
}

void check_length(int max_length, int length_cap) {
  if (max_length < 0) throw std::invalid_argument("density probe length must be >= 0");
  if (max_length > length_cap)
    throw std::invalid_argument("density probe length " + std::to_string(max_length) +
                                " exceeds the exhaustive-search cap " +
                                std::to_string(length_cap));
}

std::vector<DensityResult> summarize(const Table& table, const std::vector<Unitary2>& targets,
                                     int max_length) {
  std::vector<DensityResult> out(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    Candidate best;
    out[t].target = targets[t];
    for (int len = 0; len <= max_length; ++len) {
      const Candidate& c = table[t][len];
      if (c.found && better(c.distance, c.word, best)) best = c;
      out[t].best_by_length.push_back(best.distance);
    }
    out[t].best_word = best.word;
    out[t].distance = best.distance;
  }
  return out;
}

Table empty_table(std::size_t targets, int max_length) {
  return Table(targets, std::vector<Candidate>(max_length + 1));
}

}  // namespace

double projective_distance(const Unitary2& u, const Unitary2& t) {
  const Complex overlap = (t.adjoint() * u).trace();
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex(1.0, 0.0);
  return (u - phase * t).norm();
}

std::vector<Unitary2> random_su2_targets(int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("target count must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Unitary2> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    double q[4];
    double norm2 = 0.0;
    for (double& x : q) {
      x = normal(rng);
      norm2 += x * x;
    }
    if (norm2 < 1e-24) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    const Complex alpha(q[0] * inv, q[1] * inv);
    const Complex beta(q[2] * inv, q[3] * inv);
    Unitary2 u;
    u << alpha, beta, -std::conj(beta), std::conj(alpha);
    out.push_back(u);
  }
  return out;
}

std::vector<DensityResult> density_probe_serial(int max_length,
                                                const std::vector<Unitary2>& targets,
                                                int length_cap) {
  check_length(max_length, length_cap);
  const Generators g = fibonacci_b3();
  Table table = empty_table(targets.size(), max_length);
  std::vector<int> word;
  extend(table, g, targets, word, Unitary2::Identity(), max_length);
  return summarize(table, targets, max_length);
}

std::vector<DensityResult> density_probe(int max_length, const std::vector<Unitary2>& targets,
                                         int length_cap) {
  check_length(max_length, length_cap);
  const Generators g = fibonacci_b3();
  Table table = empty_table(targets.size(), max_length);

  // Words of length <= 1 here; each two-letter prefix is an independent subtree.
  std::vector<int> word;
  consider(table, targets, Unitary2::Identity(), word);
  std::vector<std::pair<int, int>> prefixes;
  for (std::size_t s = 0; s < kLetters.size() && max_length >= 1; ++s) {
    word = {kLetters[s]};
    consider(table, targets, g.by_slot[s], word);
    for (std::size_t t = 0; t < kLetters.size() && max_length >= 2; ++t)
      if (kLetters[t] != -kLetters[s]) prefixes.emplace_back(s, t);
  }

  const long count = static_cast<long>(prefixes.size());
#pragma omp parallel
  {
    Table local = empty_table(targets.size(), max_length);
#pragma omp for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
      const auto [s, t] = prefixes[k];
      std::vector<int> w = {kLetters[s], kLetters[t]};
      extend(local, g, targets, w, g.by_slot[t] * g.by_slot[s], max_length);
    }
#pragma omp critical
    for (std::size_t tg = 0; tg < targets.size(); ++tg)
      for (int len = 2; len <= max_length; ++len) {
        const Candidate& c = local[tg][len];
        if (c.found && better(c.distance, c.word, table[tg][len]))
          table[tg][len] = c;
      }
  }
  return summarize(table, targets, max_length);
}

std::vector<DensityResult> density_probe(int max_length, int random_targets, std::uint64_t seed,
                                         int length_cap) {
  return density_probe(max_length, random_su2_targets(random_targets, seed), length_cap);
}

}  // namespace tlrep
