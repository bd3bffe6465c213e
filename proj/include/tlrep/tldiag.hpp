#pragma once

// Temperley-Lieb diagram algebra at a root of unity.
//
// This layer is a brute-force oracle: it evaluates projectors, theta nets
// and tetrahedral nets by literally composing planar diagrams and counting
// loops. It is exponential in the strand count and is only used by tests and
// the `oracle` CLI commands, never by the recoupling pipeline.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "tlrep/qarith.hpp"

namespace tlrep {

/// A non-crossing perfect matching between `bottom` points and `top` points
/// of a rectangle. Boundary points are numbered bottom 0..bottom-1 left to
/// right, then top bottom..bottom+top-1 left to right. Closed loops are never
/// stored; they turn into scalar factors when diagrams are stacked.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  static PlanarDiagram identity(int n);
  /// e_i on n strands: strands i and i+1 (1-based) capped at the bottom and
  /// cupped at the top.
  static PlanarDiagram cup_cap(int n, int i);
  /// Validates that `partners` is an involution without fixed points and
  /// that it is planar.
  static PlanarDiagram from_partners(int bottom, int top, const std::vector<int>& partners);

  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }
  int points() const noexcept { return bottom_ + top_; }
  bool is_square() const noexcept { return bottom_ == top_; }
  int partner(int point) const { return partner_.at(point); }

  /// Mirror image in a horizontal line (swaps bottom and top).
  PlanarDiagram flipped() const;

  auto operator<=>(const PlanarDiagram&) const = default;

 private:
  PlanarDiagram(int bottom, int top, std::vector<std::uint8_t> partner)
      : bottom_(static_cast<std::uint8_t>(bottom)),
        top_(static_cast<std::uint8_t>(top)),
        partner_(std::move(partner)) {}

  std::uint8_t bottom_ = 0;
  std::uint8_t top_ = 0;
  std::vector<std::uint8_t> partner_;

  friend struct DiagramOps;
};

/// Nesting test on the boundary circle (bottom left-to-right, then top
/// right-to-left).
bool is_planar_matching(int bottom, int top, const std::vector<int>& partners);

struct StackResult {
  PlanarDiagram diagram;
  int loops = 0;
};

/// `upper` placed on top of `lower`; requires lower.top() == upper.bottom().
StackResult stack(const PlanarDiagram& upper, const PlanarDiagram& lower);

/// Side-by-side placement, `left` first.
PlanarDiagram juxtapose(const PlanarDiagram& left, const PlanarDiagram& right);

/// Loops formed by joining top point t to bottom point t of a square diagram.
int closure_loops(const PlanarDiagram& d);

/// All non-crossing diagrams on n strands, sorted. There are Catalan(n).
std::vector<PlanarDiagram> enumerate_diagrams(int n);

/// Formal complex combination of diagrams sharing one (bottom, top) shape.
/// Coefficients with magnitude below kPruneThreshold are dropped after every
/// operation, so equality is term-wise.
class TLElement {
 public:
  using Terms = std::map<PlanarDiagram, Complex>;
  static constexpr double kPruneThreshold = 1e-13;

  /// The zero element on n strands.
  explicit TLElement(int n) : TLElement(n, n) {}
  TLElement(int bottom, int top);
  explicit TLElement(const PlanarDiagram& d, Complex coeff = 1.0);

  static TLElement identity(int n);
  static TLElement cup_cap(int n, int i);

  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }
  /// Strand count of a square element; throws for rectangular ones.
  int strands() const;

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex coefficient(const PlanarDiagram& d) const;

  void add(const PlanarDiagram& d, Complex coeff);

  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  TLElement& operator*=(Complex s);

  TLElement flipped() const;

  /// Largest coefficient difference over the union of supports.
  double max_abs_diff(const TLElement& other) const;

 private:
  void check_shape(const TLElement& other) const;

  int bottom_;
  int top_;
  Terms terms_;
};

TLElement operator+(TLElement x, const TLElement& y);
TLElement operator-(TLElement x, const TLElement& y);
TLElement operator*(Complex s, TLElement x);

/// Stacking product x*y: y is applied first (drawn below), x on top. Every
/// closed loop contributes a factor d.
TLElement compose(const BracketParams& p, const TLElement& x, const TLElement& y);

TLElement tensor(const TLElement& left, const TLElement& right);

/// Bracket smoothing of the crossing between strands i and i+1:
/// sign +1 gives A*1 + A^-1*e_i, sign -1 gives A^-1*1 + A*e_i.
TLElement expand_crossing(const BracketParams& p, int n, int i, int sign);

/// Jones-Wenzl projector p_n by the Wenzl recursion
///   p_n = (p_{n-1} x 1) - (Delta_{n-2}/Delta_{n-1}) (p_{n-1} x 1) e_{n-1} (p_{n-1} x 1).
/// Requires n <= r-1.
TLElement jw_projector(const BracketParams& p, int n);

/// p_n as the weighted sum of expanded positive braid lifts of S_n,
/// normalized so the identity diagram has coefficient 1. Requires n <= 5.
TLElement jw_by_symmetrizer(const BracketParams& p, int n);

/// Sum over terms of coeff * d^(loops of the closure).
Complex markov_closure(const BracketParams& p, const TLElement& x);

/// The trivalent vertex as a map from c strands (bottom) to a+b strands
/// (top), with projectors on all three legs.
TLElement trivalent_vertex(const BracketParams& p, int a, int b, int c);

inline constexpr int kDefaultOracleCap = 12;

/// Theta net evaluated diagrammatically. Requires a+b+c <= cap.
Complex theta_oracle(const BracketParams& p, int a, int b, int c,
                     int cap = kDefaultOracleCap);

/// Tetrahedral net with vertices (a,b,i), (c,d,i), (b,c,j), (a,d,j),
/// evaluated diagrammatically. Requires a+b+c <= cap.
Complex tet_oracle(const BracketParams& p, int a, int b, int i, int c, int d, int j,
                   int cap = kDefaultOracleCap);

}  // namespace tlrep
