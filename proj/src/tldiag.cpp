#include "tlrep/tldiag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tlrep/errors.hpp"
#include "tlrep/networks.hpp"

namespace tlrep {

struct DiagramOps {
  static PlanarDiagram make(int bottom, int top, std::vector<std::uint8_t> partner) {
    return PlanarDiagram(bottom, top, std::move(partner));
  }
  static const std::vector<std::uint8_t>& raw(const PlanarDiagram& d) { return d.partner_; }
};

namespace {

constexpr int kMaxPoints = 255;

void check_generator_index(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n - 1));
}

// Position of a boundary point when walking the rectangle boundary
// counter-clockwise from the bottom-left corner.
int circle_position(int point, int bottom, int top) {
  return point < bottom ? point : bottom + (top - 1 - (point - bottom));
}

}  // namespace

bool is_planar_matching(int bottom, int top, const std::vector<int>& partners) {
  const int n = bottom + top;
  if (bottom < 0 || top < 0 || static_cast<int>(partners.size()) != n || n % 2 != 0)
    return false;
  for (int q = 0; q < n; ++q) {
    const int w = partners[q];
    if (w < 0 || w >= n || w == q || partners[w] != q) return false;
  }
  std::vector<int> at(n);
  for (int q = 0; q < n; ++q) at[circle_position(q, bottom, top)] = q;
  std::vector<int> open;
  for (int pos = 0; pos < n; ++pos) {
    const int other = circle_position(partners[at[pos]], bottom, top);
    if (other > pos) {
      open.push_back(pos);
    } else {
      if (open.empty() || open.back() != other) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

PlanarDiagram PlanarDiagram::identity(int n) {
  if (n < 0 || 2 * n > kMaxPoints) throw std::invalid_argument("bad strand count");
  std::vector<std::uint8_t> partner(2 * n);
  for (int t = 0; t < n; ++t) {
    partner[t] = static_cast<std::uint8_t>(n + t);
    partner[n + t] = static_cast<std::uint8_t>(t);
  }
  return PlanarDiagram(n, n, std::move(partner));
}

PlanarDiagram PlanarDiagram::cup_cap(int n, int i) {
  check_generator_index(n, i);
  PlanarDiagram d = identity(n);
  const int lo = i - 1;
  const int hi = i;
  d.partner_[lo] = static_cast<std::uint8_t>(hi);
  d.partner_[hi] = static_cast<std::uint8_t>(lo);
  d.partner_[n + lo] = static_cast<std::uint8_t>(n + hi);
  d.partner_[n + hi] = static_cast<std::uint8_t>(n + lo);
  return d;
}

PlanarDiagram PlanarDiagram::from_partners(int bottom, int top,
                                           const std::vector<int>& partners) {
  if (bottom + top > kMaxPoints) throw std::invalid_argument("diagram too large");
  if (!is_planar_matching(bottom, top, partners))
    throw std::invalid_argument("not a planar perfect matching");
  std::vector<std::uint8_t> raw(partners.begin(), partners.end());
  return PlanarDiagram(bottom, top, std::move(raw));
}

PlanarDiagram PlanarDiagram::flipped() const {
  const int b = bottom_;
  const int t = top_;
  // old top point j becomes new bottom j; old bottom j becomes new top j
  auto relabel = [b, t](int q) { return q < b ? t + q : q - b; };
  std::vector<std::uint8_t> out(partner_.size());
  for (int q = 0; q < b + t; ++q)
    out[relabel(q)] = static_cast<std::uint8_t>(relabel(partner_[q]));
  return PlanarDiagram(t, b, std::move(out));
}

StackResult stack(const PlanarDiagram& upper, const PlanarDiagram& lower) {
  const int glue = lower.top();
  if (glue != upper.bottom()) throw std::invalid_argument("stack: shape mismatch");
  const int lb = lower.bottom();
  const int offset = lower.points();  // upper's points start here
  const int ut = upper.top();
  const auto& lp = DiagramOps::raw(lower);
  const auto& up = DiagramOps::raw(upper);

  auto partner_of = [&](int node) {
    return node < offset ? static_cast<int>(lp[node]) : offset + up[node - offset];
  };
  auto is_outer = [&](int node) {
    return node < lb || node >= offset + glue;
  };
  // Middle node on one side -> the node it is glued to on the other side.
  auto across = [&](int node) { return node < offset ? offset + (node - lb) : lb + (node - offset); };
  auto result_index = [&](int node) { return node < lb ? node : lb + (node - offset - glue); };

  std::vector<std::uint8_t> out(lb + ut);
  std::vector<char> seen(lb + glue, 0);  // middle points, indexed by lower's numbering
  auto mark = [&](int node) { seen[node < offset ? node : lb + (node - offset)] = 1; };

  for (int start = 0; start < offset + upper.points(); ++start) {
    if (start >= lb && start < offset + glue) continue;
    const int ri = result_index(start);
    if (ri < static_cast<int>(out.size()) && out[ri] != 0) continue;
    int cur = start;
    for (;;) {
      const int next = partner_of(cur);
      if (is_outer(next)) {
        out[ri] = static_cast<std::uint8_t>(result_index(next) + 1);
        out[result_index(next)] = static_cast<std::uint8_t>(ri + 1);
        break;
      }
      mark(next);
      cur = across(next);
      mark(cur);
    }
  }
  for (auto& v : out) --v;  // stored +1 so that 0 means unvisited

  int loops = 0;
  for (int m = lb; m < lb + glue; ++m) {
    if (seen[m]) continue;
    ++loops;
    int cur = m;
    do {
      mark(cur);
      const int next = partner_of(cur);
      mark(next);
      cur = across(next);
    } while (cur != m);
  }
  return {DiagramOps::make(lb, ut, std::move(out)), loops};
}

PlanarDiagram juxtapose(const PlanarDiagram& left, const PlanarDiagram& right) {
  const int lb = left.bottom(), lt = left.top();
  const int rb = right.bottom(), rt = right.top();
  const int b = lb + rb;
  const int t = lt + rt;
  if (b + t > kMaxPoints) throw std::invalid_argument("diagram too large");
  auto map_left = [&](int q) { return q < lb ? q : b + (q - lb); };
  auto map_right = [&](int q) { return q < rb ? lb + q : b + lt + (q - rb); };
  std::vector<std::uint8_t> out(b + t);
  for (int q = 0; q < left.points(); ++q)
    out[map_left(q)] = static_cast<std::uint8_t>(map_left(left.partner(q)));
  for (int q = 0; q < right.points(); ++q)
    out[map_right(q)] = static_cast<std::uint8_t>(map_right(right.partner(q)));
  return DiagramOps::make(b, t, std::move(out));
}

int closure_loops(const PlanarDiagram& d) {
  if (!d.is_square()) throw std::invalid_argument("closure of a non-square diagram");
  const int n = d.bottom();
  std::vector<char> seen(2 * n, 0);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int cur = s;
    do {
      seen[cur] = 1;
      const int next = d.partner(cur);
      seen[next] = 1;
      cur = next < n ? next + n : next - n;  // around the side
    } while (cur != s);
  }
  return loops;
}

std::vector<PlanarDiagram> enumerate_diagrams(int n) {
  // Non-crossing matchings of the 2n-gon, then read back as diagrams.
  const int m = 2 * n;
  std::vector<PlanarDiagram> out;
  std::vector<int> circle(m, -1);
  auto rec = [&](auto&& self, int pos) -> void {
    while (pos < m && circle[pos] != -1) ++pos;
    if (pos == m) {
      std::vector<int> partners(m);
      auto point_at = [n](int c) { return c < n ? c : n + (n - 1 - (c - n)); };
      for (int c = 0; c < m; ++c) partners[point_at(c)] = point_at(circle[c]);
      out.push_back(PlanarDiagram::from_partners(n, n, partners));
      return;
    }
    // pair pos with q, leaving an even-sized interval between them
    for (int q = pos + 1; q < m; q += 2) {
      if (circle[q] != -1) break;
      circle[pos] = q;
      circle[q] = pos;
      self(self, pos + 1);
      circle[pos] = circle[q] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

TLElement::TLElement(int bottom, int top) : bottom_(bottom), top_(top) {
  if (bottom < 0 || top < 0 || (bottom + top) % 2 != 0)
    throw std::invalid_argument("TL element shape needs an even number of points");
}

TLElement::TLElement(const PlanarDiagram& d, Complex coeff)
    : TLElement(d.bottom(), d.top()) {
  add(d, coeff);
}

TLElement TLElement::identity(int n) { return TLElement(PlanarDiagram::identity(n)); }

TLElement TLElement::cup_cap(int n, int i) { return TLElement(PlanarDiagram::cup_cap(n, i)); }

int TLElement::strands() const {
  if (bottom_ != top_) throw std::logic_error("rectangular TL element has no strand count");
  return bottom_;
}

Complex TLElement::coefficient(const PlanarDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Complex{} : it->second;
}

void TLElement::add(const PlanarDiagram& d, Complex coeff) {
  if (d.bottom() != bottom_ || d.top() != top_)
    throw std::invalid_argument("diagram shape does not match element");
  auto [it, inserted] = terms_.try_emplace(d, coeff);
  if (!inserted) it->second += coeff;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

void TLElement::check_shape(const TLElement& other) const {
  if (other.bottom_ != bottom_ || other.top_ != top_)
    throw std::invalid_argument("strand-count mismatch between TL elements");
}

TLElement& TLElement::operator+=(const TLElement& other) {
  check_shape(other);
  for (const auto& [d, c] : other.terms_) add(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  check_shape(other);
  for (const auto& [d, c] : other.terms_) add(d, -c);
  return *this;
}

TLElement& TLElement::operator*=(Complex s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) < kPruneThreshold)
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

TLElement TLElement::flipped() const {
  TLElement out(top_, bottom_);
  for (const auto& [d, c] : terms_) out.add(d.flipped(), c);
  return out;
}

double TLElement::max_abs_diff(const TLElement& other) const {
  check_shape(other);
  double worst = 0.0;
  for (const auto& [d, c] : terms_) worst = std::max(worst, std::abs(c - other.coefficient(d)));
  for (const auto& [d, c] : other.terms_)
    if (!terms_.contains(d)) worst = std::max(worst, std::abs(c));
  return worst;
}

TLElement operator+(TLElement x, const TLElement& y) { return x += y; }
TLElement operator-(TLElement x, const TLElement& y) { return x -= y; }
TLElement operator*(Complex s, TLElement x) { return x *= s; }

TLElement compose(const BracketParams& p, const TLElement& x, const TLElement& y) {
  if (y.top() != x.bottom()) throw std::invalid_argument("strand-count mismatch in compose");
  const double d = p.loop_value();
  const int max_loops = x.bottom();
  std::vector<double> d_pow(max_loops + 1, 1.0);
  for (int m = 1; m <= max_loops; ++m) d_pow[m] = d_pow[m - 1] * d;

  TLElement out(y.bottom(), x.top());
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      auto [diagram, loops] = stack(dx, dy);
      out.add(diagram, cx * cy * d_pow[loops]);
    }
  }
  return out;
}

TLElement tensor(const TLElement& left, const TLElement& right) {
  TLElement out(left.bottom() + right.bottom(), left.top() + right.top());
  for (const auto& [dl, cl] : left.terms())
    for (const auto& [dr, cr] : right.terms()) out.add(juxtapose(dl, dr), cl * cr);
  return out;
}

TLElement expand_crossing(const BracketParams& p, int n, int i, int sign) {
  check_generator_index(n, i);
  if (sign != 1 && sign != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
  TLElement out(n);
  out.add(PlanarDiagram::identity(n), a_power(p, sign));
  out.add(PlanarDiagram::cup_cap(n, i), a_power(p, -sign));
  return out;
}

TLElement jw_projector(const BracketParams& p, int n) {
  if (n < 0) throw std::invalid_argument("projector size must be non-negative");
  if (n > p.r() - 1)
    throw std::domain_error("projector p_" + std::to_string(n) +
                            " needs Delta_" + std::to_string(n - 1) +
                            " != 0, which fails for r = " + std::to_string(p.r()));
  TLElement proj = TLElement::identity(std::min(n, 1));
  for (int m = 2; m <= n; ++m) {
    const double denom = delta(p, m - 1);
    if (std::abs(denom) < p.tol())
      throw std::domain_error("Wenzl recursion hit Delta_" + std::to_string(m - 1) + " = 0");
    const TLElement lifted = tensor(proj, TLElement::identity(1));
    const TLElement sandwich =
        compose(p, lifted, compose(p, TLElement::cup_cap(m, m - 1), lifted));
    proj = lifted - Complex(delta(p, m - 2) / denom) * sandwich;
  }
  return proj;
}

TLElement jw_by_symmetrizer(const BracketParams& p, int n) {
  if (n < 0 || n > 5) throw std::out_of_range("symmetrizer oracle supports 0 <= n <= 5");
  TLElement sum(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Bubble sort yields a reduced word for perm; its positive lift is the
    // product of the expanded crossings along that word.
    std::vector<int> work = perm;
    TLElement lift = TLElement::identity(n);
    int length = 0;
    for (int pass = 0; pass < n; ++pass) {
      for (int t = 0; t + 1 < n; ++t) {
        if (work[t] > work[t + 1]) {
          std::swap(work[t], work[t + 1]);
          lift = compose(p, lift, expand_crossing(p, n, t + 1, +1));
          ++length;
        }
      }
    }
    sum += a_power(p, 3LL * length) * lift;
  } while (std::next_permutation(perm.begin(), perm.end()));

  const Complex norm = sum.coefficient(PlanarDiagram::identity(n));
  if (std::abs(norm) < p.tol())
    throw std::domain_error("symmetrizer normalization vanishes at this root of unity");
  return (1.0 / norm) * sum;
}

Complex markov_closure(const BracketParams& p, const TLElement& x) {
  const double d = p.loop_value();
  Complex total{};
  for (const auto& [diagram, c] : x.terms())
    total += c * std::pow(d, closure_loops(diagram));
  return total;
}

TLElement trivalent_vertex(const BracketParams& p, int a, int b, int c) {
  if ((a + b + c) % 2 != 0 || a + b < c || b + c < a || a + c < b)
    throw InadmissibleError("trivalent vertex needs even sum and triangle inequalities");
  const int left = (a + c - b) / 2;   // strands from c into a
  const int shared = (a + b - c) / 2; // arcs from a over to b
  const int right = (b + c - a) / 2;  // strands from c into b
  const int top_base = c;
  std::vector<int> partners(c + a + b);
  auto link = [&](int x, int y) {
    partners[x] = y;
    partners[y] = x;
  };
  for (int t = 0; t < left; ++t) link(t, top_base + t);
  for (int s = 0; s < shared; ++s) link(top_base + a - 1 - s, top_base + a + s);
  for (int t = 0; t < right; ++t) link(left + t, top_base + a + shared + t);
  const TLElement skeleton(PlanarDiagram::from_partners(c, a + b, partners));
  const TLElement legs = tensor(jw_projector(p, a), jw_projector(p, b));
  return compose(p, legs, compose(p, skeleton, jw_projector(p, c)));
}

Complex theta_oracle(const BracketParams& p, int a, int b, int c, int cap) {
  if (!admissible(p, a, b, c))
    throw InadmissibleError("theta oracle: inadmissible triple");
  if (a + b + c > cap) throw std::out_of_range("theta oracle: a+b+c exceeds the size cap");
  const TLElement v = trivalent_vertex(p, a, b, c);
  return markov_closure(p, compose(p, v.flipped(), v));
}

Complex tet_oracle(const BracketParams& p, int a, int b, int i, int c, int d, int j,
                   int cap) {
  if (!admissible(p, a, b, i) || !admissible(p, c, d, i) || !admissible(p, b, c, j) ||
      !admissible(p, a, d, j))
    throw InadmissibleError("tet oracle: inadmissible vertex");
  if (a + b + c > cap) throw std::out_of_range("tet oracle: a+b+c exceeds the size cap");
  // Two fusion trees from d up to the legs (a, b, c):
  //   left:  (a b) -> i, (i c) -> d      right: (b c) -> j, (a j) -> d
  // The tetrahedron is the closure of one glued onto the mirror of the other.
  const TLElement left = compose(p, tensor(trivalent_vertex(p, a, b, i), jw_projector(p, c)),
                                 trivalent_vertex(p, i, c, d));
  const TLElement right = compose(p, tensor(jw_projector(p, a), trivalent_vertex(p, b, c, j)),
                                  trivalent_vertex(p, a, j, d));
  return markov_closure(p, compose(p, right.flipped(), left));
}

}  // namespace tlrep
