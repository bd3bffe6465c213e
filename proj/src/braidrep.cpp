#include "tlrep/braidrep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tlrep/errors.hpp"
#include "tlrep/kernels.hpp"
#include "tlrep/networks.hpp"
#include "tlrep/recoupling.hpp"

namespace tlrep {

namespace {

void check_generator(int strands, int i) {
  if (i < 1 || i > strands - 1)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(strands - 1));
}

}  // namespace

FusionSpace::FusionSpace(const BracketParams& p, std::vector<int> inputs, int output)
    : params_(p), inputs_(std::move(inputs)), output_(output) {
  const int n = strands();
  if (n < 2) throw std::invalid_argument("a fusion space needs at least two inputs");
  for (int a : inputs_)
    if (a < 0 || a > p.max_label())
      throw std::invalid_argument("input label " + std::to_string(a) + " outside [0, " +
                                  std::to_string(p.max_label()) + "]");
  if (output_ < 0 || output_ > p.max_label())
    throw std::invalid_argument("output label " + std::to_string(output_) + " outside [0, " +
                                std::to_string(p.max_label()) + "]");

  // Depth-first over x_2..x_{n-1}; labels ascend so the result is lexicographic.
  std::vector<int> chain;
  auto extend = [&](auto&& self, int prev, int next_input) -> void {
    if (next_input == n - 1) {
      if (admissible(p, prev, inputs_[n - 1], output_)) basis_.push_back({chain});
      return;
    }
    for (int x = 0; x <= p.max_label(); ++x) {
      if (!admissible(p, prev, inputs_[next_input], x)) continue;
      chain.push_back(x);
      self(self, x, next_input + 1);
      chain.pop_back();
    }
  };
  extend(extend, inputs_[0], 1);

  if (basis_.empty()) {
    std::ostringstream os;
    os << "fusion space V[";
    for (std::size_t t = 0; t < inputs_.size(); ++t) os << (t ? "," : "") << inputs_[t];
    os << ":" << output_ << "] is empty at r = " << p.r();
    throw std::invalid_argument(os.str());
  }
  for (std::size_t s = 0; s < basis_.size(); ++s) index_.emplace(basis_[s].chain, s);
}

int FusionSpace::label(std::size_t state, int position) const {
  const int n = strands();
  if (position < 1 || position > n) throw std::out_of_range("chain position out of range");
  if (position == 1) return inputs_[0];
  if (position == n) return output_;
  return basis_.at(state).chain[position - 2];
}

std::optional<std::size_t> FusionSpace::index_of(const std::vector<int>& chain) const {
  auto it = index_.find(chain);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FusionSpace make_space(const BracketParams& p, std::vector<int> inputs, int output) {
  return FusionSpace(p, std::move(inputs), output);
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) throw std::invalid_argument("a braid word needs at least two strands");
  for (int g : letters_)
    if (g == 0 || std::abs(g) > strands - 1)
      throw std::out_of_range("braid letter " + std::to_string(g) + " outside +-1..+-" +
                              std::to_string(strands - 1));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& g : inv) g = -g;
  return {strands_, std::move(inv)};
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (t) out += ' ';
    out += std::to_string(letters_[t]);
  }
  return out;
}

Complex braiding_phase(const BracketParams& p, int a, int b, int c) {
  require_admissible(p, a, b, c, "braiding_phase");
  const long long twist = (1LL * a * (a + 2) + 1LL * b * (b + 2) - 1LL * c * (c + 2)) / 2;
  return static_cast<double>(parity_sign((a + b - c) / 2)) * a_power(p, twist);
}

std::size_t GeneratorAction::max_block() const {
  std::size_t m = 0;
  for (const auto& b : blocks) m = std::max(m, b.states.size());
  return m;
}

GeneratorAction generator_action(const FusionSpace& space, int i, int sign) {
  const int n = space.strands();
  check_generator(n, i);
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  const BracketParams& p = space.params();
  const int ai = space.inputs()[i - 1];
  const int aj = space.inputs()[i];

  GeneratorAction action{i, sign, space.dim(), {}};
  auto phase = [&](int a, int b, int c) {
    const Complex z = braiding_phase(p, a, b, c);
    return sign > 0 ? z : std::conj(z);
  };

  if (i == 1) {
    for (std::size_t s = 0; s < space.dim(); ++s) {
      ComplexMatrix one(1, 1);
      one(0, 0) = phase(ai, aj, space.label(s, 2));
      action.blocks.push_back({{s}, std::move(one)});
    }
    return action;
  }

  // States differing only in x_i share a block; the rest of the chain is the key.
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t s = 0; s < space.dim(); ++s) {
    std::vector<int> key = space.basis()[s].chain;
    key.erase(key.begin() + (i - 2));
    groups[key].push_back(s);
  }
  for (auto& [key, states] : groups) {
    const std::size_t rep = states.front();
    const int left = space.label(rep, i - 1);
    const int right = space.label(rep, i + 1);
    const RecouplingMatrix m = fmatrix(p, ai, aj, left, right);
    if (m.col_labels.size() != states.size())
      throw ConventionError("recoupling block does not match the fusion-space block");
    for (std::size_t t = 0; t < states.size(); ++t)
      if (m.col_labels[t] != space.label(states[t], i))
        throw ConventionError("recoupling labels out of order with the basis");

    const int dim = m.dim();
    Eigen::VectorXcd lambda(dim);
    for (int r = 0; r < dim; ++r) lambda(r) = phase(ai, aj, m.row_labels[r]);
    const Eigen::MatrixXcd mc = m.entries.cast<Complex>();
    ComplexMatrix block = mc.transpose() * lambda.asDiagonal() * mc;
    action.blocks.push_back({std::move(states), std::move(block)});
  }
  return action;
}

ColoredGenerator colored_generator(const FusionSpace& source, int i, int sign) {
  const int n = source.strands();
  check_generator(n, i);
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  const BracketParams& p = source.params();
  const int ai = source.inputs()[i - 1];
  const int aj = source.inputs()[i];
  std::vector<int> swapped = source.inputs();
  std::swap(swapped[i - 1], swapped[i]);
  ColoredGenerator out{FusionSpace(p, swapped, source.output()), {}};
  out.matrix = ComplexMatrix::Zero(static_cast<Eigen::Index>(out.target.dim()),
                                   static_cast<Eigen::Index>(source.dim()));
  auto phase = [&](int c) {
    const Complex z = braiding_phase(p, ai, aj, c);
    return sign > 0 ? z : std::conj(z);
  };

  for (std::size_t s = 0; s < source.dim(); ++s) {
    const std::vector<int>& chain = source.basis()[s].chain;
    if (i == 1) {
      out.matrix(static_cast<Eigen::Index>(*out.target.index_of(chain)), s) =
          phase(source.label(s, 2));
      continue;
    }
    const int left = source.label(s, i - 1);
    const int right = source.label(s, i + 1);
    const int mid = source.label(s, i);
    const RecouplingMatrix from = fmatrix(p, ai, aj, left, right);
    const RecouplingMatrix to = fmatrix(p, aj, ai, left, right);
    if (from.row_labels != to.row_labels)
      throw ConventionError("recoupling row labels differ between the two strand orders");
    const int col = *from.col_index(mid);
    std::vector<int> image = chain;
    for (int t = 0; t < to.dim(); ++t) {
      image[i - 2] = to.col_labels[t];
      const auto target = out.target.index_of(image);
      if (!target) throw ConventionError("colored generator leaves the target space");
      Complex sum = 0.0;
      for (int r = 0; r < from.dim(); ++r)
        sum += to.entries(r, t) * phase(from.row_labels[r]) * from.entries(r, col);
      out.matrix(static_cast<Eigen::Index>(*target), s) = sum;
    }
  }
  return out;
}

UnitaryMatrix to_dense(const GeneratorAction& action) {
  const auto n = static_cast<Eigen::Index>(action.dim);
  UnitaryMatrix u = UnitaryMatrix::Zero(n, n);
  for (const auto& b : action.blocks)
    for (std::size_t r = 0; r < b.states.size(); ++r)
      for (std::size_t c = 0; c < b.states.size(); ++c)
        u(b.states[r], b.states[c]) = b.block(r, c);
  return u;
}

UnitaryMatrix generator_matrix(const FusionSpace& space, int i, int sign) {
  return to_dense(generator_action(space, i, sign));
}

BraidRepresentation::BraidRepresentation(FusionSpace space) : space_(std::move(space)) {
  for (int i = 1; i < space_.strands(); ++i) {
    positive_.push_back(generator_action(space_, i, +1));
    negative_.push_back(generator_action(space_, i, -1));
  }
}

const GeneratorAction& BraidRepresentation::action(int letter) const {
  check_generator(space_.strands(), std::abs(letter));
  return letter > 0 ? positive_[letter - 1] : negative_[-letter - 1];
}

namespace {

void check_word(const FusionSpace& space, const BraidWord& word) {
  if (word.strands() != space.strands())
    throw std::invalid_argument("braid word has " + std::to_string(word.strands()) +
                                " strands but the space has " +
                                std::to_string(space.strands()) + " inputs");
}

}  // namespace

UnitaryMatrix compile(const BraidRepresentation& rep, const BraidWord& word) {
  check_word(rep.space(), word);
  return kernels::compile_parallel(rep, word);
}

UnitaryMatrix compile(const FusionSpace& space, const BraidWord& word) {
  return compile(BraidRepresentation(space), word);
}

StateVector apply(const BraidRepresentation& rep, const BraidWord& word,
                  const StateVector& state) {
  check_word(rep.space(), word);
  if (static_cast<std::size_t>(state.size()) != rep.dim())
    throw std::invalid_argument("state has length " + std::to_string(state.size()) +
                                " but the space has dimension " + std::to_string(rep.dim()));
  return kernels::apply_word_parallel(rep, word, state);
}

StateVector apply(const FusionSpace& space, const BraidWord& word, const StateVector& state) {
  return apply(BraidRepresentation(space), word, state);
}

double unitarity_residual(const ComplexMatrix& u) {
  const auto n = u.rows();
  return (u * u.adjoint() - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

}  // namespace tlrep
