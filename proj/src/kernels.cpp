#include "tlrep/kernels.hpp"

#include <vector>

namespace tlrep::kernels {

namespace {

inline void apply_block(const GeneratorBlock& b, const Complex* in, Complex* out) {
  const std::size_t m = b.states.size();
  for (std::size_t r = 0; r < m; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < m; ++c) acc += b.block(r, c) * in[b.states[c]];
    out[b.states[r]] = acc;
  }
}

}  // namespace

void apply_letter_serial(const GeneratorAction& g, const Complex* in, Complex* out) {
  for (const auto& b : g.blocks) apply_block(b, in, out);
}

void apply_letter_parallel(const GeneratorAction& g, const Complex* in, Complex* out) {
  // Even a serialized parallel region costs about a microsecond per letter.
  if (g.dim <= kParallelApplyThreshold) return apply_letter_serial(g, in, out);
  const auto count = static_cast<long>(g.blocks.size());
  // Blocks partition the basis, so writes never collide.
#pragma omp parallel for schedule(static)
  for (long t = 0; t < count; ++t) apply_block(g.blocks[t], in, out);
}

StateVector apply_word_serial(const BraidRepresentation& rep, const BraidWord& word,
                              const StateVector& state) {
  StateVector cur = state;
  StateVector next(state.size());
  for (int letter : word.letters()) {
    apply_letter_serial(rep.action(letter), cur.data(), next.data());
    cur.swap(next);
  }
  return cur;
}

StateVector apply_word_parallel(const BraidRepresentation& rep, const BraidWord& word,
                                const StateVector& state) {
  StateVector cur = state;
  StateVector next(state.size());
  for (int letter : word.letters()) {
    apply_letter_parallel(rep.action(letter), cur.data(), next.data());
    cur.swap(next);
  }
  return cur;
}

UnitaryMatrix compile_reference(const BraidRepresentation& rep, const BraidWord& word) {
  const auto n = static_cast<Eigen::Index>(rep.dim());
  UnitaryMatrix u = UnitaryMatrix::Identity(n, n);
  for (int letter : word.letters()) u = to_dense(rep.action(letter)) * u;
  return u;
}

UnitaryMatrix compile_parallel(const BraidRepresentation& rep, const BraidWord& word) {
  const auto n = static_cast<long>(rep.dim());
  // Row c of `cols` holds column c of the result, contiguous in memory.
  UnitaryMatrix cols = UnitaryMatrix::Identity(n, n);
#pragma omp parallel if (n >= 64)
  {
    std::vector<Complex> scratch(n);
#pragma omp for schedule(static)
    for (long c = 0; c < n; ++c) {
      Complex* col = cols.row(c).data();
      for (int letter : word.letters()) {
        apply_letter_serial(rep.action(letter), col, scratch.data());
        std::copy(scratch.begin(), scratch.end(), col);
      }
    }
  }
  return cols.transpose();
}

}  // namespace tlrep::kernels
