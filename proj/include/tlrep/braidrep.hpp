#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlrep/qarith.hpp"

namespace tlrep {

using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using UnitaryMatrix = ComplexMatrix;
using StateVector = Eigen::VectorXcd;

/// Internal labels x_2..x_{n-1} of a left-associated fusion tree.
struct BasisState {
  std::vector<int> chain;
  auto operator<=>(const BasisState&) const = default;
};

/// V[a_1 ... a_n : a_{n+1}]: the span of admissible chains with
/// (a_1, a_2, x_2), (x_i, a_{i+1}, x_{i+1}), ..., (x_{n-1}, a_n, a_{n+1})
/// all admissible. Boundary convention: x_1 = a_1 and x_n = a_{n+1}.
/// Basis order is lexicographic in the chain.
class FusionSpace {
 public:
  FusionSpace(const BracketParams& p, std::vector<int> inputs, int output);

  const BracketParams& params() const noexcept { return params_; }
  const std::vector<int>& inputs() const noexcept { return inputs_; }
  int output() const noexcept { return output_; }
  int strands() const noexcept { return static_cast<int>(inputs_.size()); }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisState>& basis() const noexcept { return basis_; }

  /// x_position for 1 <= position <= n, boundary labels included.
  int label(std::size_t state, int position) const;
  std::optional<std::size_t> index_of(const std::vector<int>& chain) const;

 private:
  BracketParams params_;
  std::vector<int> inputs_;
  int output_;
  std::vector<BasisState> basis_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Throws std::invalid_argument on labels outside [0, r-2] or an empty basis.
FusionSpace make_space(const BracketParams& p, std::vector<int> inputs, int output);

/// Signed generator letters: +i is s_i, -i is s_i^{-1}, 1 <= |i| <= n-1.
class BraidWord {
 public:
  BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// Phase picked up when the two input legs of vertex (a, b -> c) are exchanged:
///   lambda(a,b,c) = (-1)^{(a+b-c)/2} A^{(a(a+2) + b(b+2) - c(c+2))/2}.
Complex braiding_phase(const BracketParams& p, int a, int b, int c);

/// One generator acts independently on groups of basis states that differ
/// only in x_i. `block(m, n)` is the amplitude <states[m]| s |states[n]>.
struct GeneratorBlock {
  std::vector<std::size_t> states;
  ComplexMatrix block;
};

struct GeneratorAction {
  int index = 0;
  int sign = 1;
  std::size_t dim = 0;
  std::vector<GeneratorBlock> blocks;  // partition of the basis
  std::size_t max_block() const;
};

/// s_1 is diagonal; for i >= 2 each block is M^T diag(lambda) M with
/// M = fmatrix(a_i, a_{i+1}, x_{i-1}, x_{i+1}). sign = -1 gives the inverse.
GeneratorAction generator_action(const FusionSpace& space, int i, int sign);
UnitaryMatrix generator_matrix(const FusionSpace& space, int i, int sign);
UnitaryMatrix to_dense(const GeneratorAction& action);

/// s_i as a map between spaces when the two strands carry different labels:
/// V[.. a_i, a_{i+1} ..] -> V[.. a_{i+1}, a_i ..]. Blocks are
/// M[a_{i+1},a_i,x_{i-1},x_{i+1}]^T diag(lambda) M[a_i,a_{i+1},x_{i-1},x_{i+1}].
/// Equals generator_matrix when a_i = a_{i+1}.
struct ColoredGenerator {
  FusionSpace target;
  ComplexMatrix matrix;  // target.dim() x source.dim()
};
ColoredGenerator colored_generator(const FusionSpace& source, int i, int sign);

/// A space together with every generator action, built once.
class BraidRepresentation {
 public:
  explicit BraidRepresentation(FusionSpace space);

  const FusionSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const GeneratorAction& action(int letter) const;

 private:
  FusionSpace space_;
  std::vector<GeneratorAction> positive_;
  std::vector<GeneratorAction> negative_;
};

/// rho(g_L) ... rho(g_1) for the word g_1 ... g_L: the leftmost letter acts
/// first on kets.
UnitaryMatrix compile(const FusionSpace& space, const BraidWord& word);
UnitaryMatrix compile(const BraidRepresentation& rep, const BraidWord& word);

/// compile(space, word) * state without forming the dense matrix.
StateVector apply(const FusionSpace& space, const BraidWord& word, const StateVector& state);
StateVector apply(const BraidRepresentation& rep, const BraidWord& word,
                  const StateVector& state);

/// max |U U^dagger - I|.
double unitarity_residual(const ComplexMatrix& u);

}  // namespace tlrep
