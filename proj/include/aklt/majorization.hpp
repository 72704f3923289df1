#pragma once

#include "aklt/rational.hpp"
#include "aklt/spectrum.hpp"

#include <optional>
#include <vector>

namespace aklt {

// Squared Schmidt coefficients of a bipartite pure state, stored
// nonincreasing. Entries must be nonnegative and sum to exactly 1.
struct SchmidtSpectrum {
    std::vector<Rational> probs;
    explicit SchmidtSpectrum(std::vector<Rational> p);  // sorts, validates
};

struct ConversionVerdict {
    bool possible;
    std::optional<int> witness_K;  // first violated prefix (1-based) when impossible
};

// Flatten a multiplet spectrum: each sigma contributes 2*sigma+1 equal
// entries, giving the full (S+1)^2 Schmidt spectrum of the block.
SchmidtSpectrum expand(const BoundarySpectrum& spec);

// M copies of 1/M, the spectrum of the maximally entangled state of
// dimension M x M.
SchmidtSpectrum uniform_spectrum(int M);

// Deterministic LOCC convertibility to the M x M maximally entangled state:
// possible iff sum_{k<=K} a_k <= K/M for all K in [1,M]. For this target the
// full prefix test collapses to a_1 <= 1/M; both are evaluated and a
// disagreement (impossible) would throw.
ConversionVerdict nielsen_max_entangled_check(const SchmidtSpectrum& spec, int M);

// Largest M with a_1 <= 1/M, i.e. floor(1/a_1) with exact integer boundaries
// included.
int max_distillable_dim(const SchmidtSpectrum& spec);

// -log2(a_1), the continuous single-copy entanglement. The integer singlet
// count is log2(max_distillable_dim) and is reported separately by callers.
double e1_bits(const SchmidtSpectrum& spec);

// a majorized by b (prefix sums of a never exceed those of b, zero-padding
// the shorter): the state with spectrum a converts deterministically to the
// state with spectrum b under LOCC.
bool majorizes(const SchmidtSpectrum& a, const SchmidtSpectrum& b);

}  // namespace aklt
