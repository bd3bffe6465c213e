#pragma once

// Braid application kernels. Each parallel kernel has a serial reference
// that it must agree with; tests compare the two and bench_kernels times them.

#include "tlrep/braidrep.hpp"

namespace tlrep::kernels {

/// Below this dimension apply_letter_parallel runs the serial loop.
inline constexpr std::size_t kParallelApplyThreshold = 4096;

/// out = G in, for one generator. `in` and `out` must not alias.
void apply_letter_serial(const GeneratorAction& g, const Complex* in, Complex* out);
void apply_letter_parallel(const GeneratorAction& g, const Complex* in, Complex* out);

StateVector apply_word_serial(const BraidRepresentation& rep, const BraidWord& word,
                              const StateVector& state);
StateVector apply_word_parallel(const BraidRepresentation& rep, const BraidWord& word,
                                const StateVector& state);

/// Dense product of generator matrices, one letter at a time.
UnitaryMatrix compile_reference(const BraidRepresentation& rep, const BraidWord& word);

/// Pushes every basis column through the block actions, columns in parallel.
UnitaryMatrix compile_parallel(const BraidRepresentation& rep, const BraidWord& word);

}  // namespace tlrep::kernels
