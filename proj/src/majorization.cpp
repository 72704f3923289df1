#include "aklt/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aklt {

SchmidtSpectrum::SchmidtSpectrum(std::vector<Rational> p) : probs(std::move(p)) {
    if (probs.empty()) throw std::invalid_argument("Schmidt spectrum must be nonempty");
    std::sort(probs.begin(), probs.end(), std::greater<Rational>());
    Rational sum = 0;
    for (const Rational& q : probs) {
        if (q < 0) throw std::invalid_argument("Schmidt spectrum entries must be nonnegative");
        sum += q;
    }
    if (sum != 1) throw std::invalid_argument("Schmidt spectrum must sum to exactly 1");
}

SchmidtSpectrum expand(const BoundarySpectrum& spec) {
    std::vector<Rational> probs;
    probs.reserve((spec.spin.S + 1) * (spec.spin.S + 1));
    for (const MultipletLevel& level : spec.levels)
        probs.insert(probs.end(), level.degeneracy, level.eigenvalue);
    return SchmidtSpectrum(std::move(probs));
}

SchmidtSpectrum uniform_spectrum(int M) {
    if (M < 1) throw std::invalid_argument("target dimension M must be positive");
    return SchmidtSpectrum(std::vector<Rational>(M, Rational(1, M)));
}

ConversionVerdict nielsen_max_entangled_check(const SchmidtSpectrum& spec, int M) {
    if (M < 1) throw std::invalid_argument("target dimension M must be positive");
    ConversionVerdict verdict{true, std::nullopt};
    Rational prefix = 0;
    for (int K = 1; K <= M; ++K) {
        if (K <= static_cast<int>(spec.probs.size())) prefix += spec.probs[K - 1];
        if (prefix > Rational(K, M)) {
            verdict = {false, K};
            break;
        }
    }
    // Self-check against the largest-coefficient shortcut; the two cannot
    // disagree for a uniform target.
    const bool shortcut = spec.probs[0] <= Rational(1, M);
    if (shortcut != verdict.possible)
        throw std::logic_error("prefix criterion and largest-coefficient shortcut disagree");
    return verdict;
}

int max_distillable_dim(const SchmidtSpectrum& spec) {
    const Rational& a1 = spec.probs[0];
    if (a1 == 0) throw std::invalid_argument("spectrum has no support");
    return static_cast<int>(floor_rational(1 / a1));
}

double e1_bits(const SchmidtSpectrum& spec) {
    return -std::log2(to_double(spec.probs[0]));
}

bool majorizes(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
    const std::size_t n = std::max(a.probs.size(), b.probs.size());
    Rational pa = 0, pb = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k < a.probs.size()) pa += a.probs[k];
        if (k < b.probs.size()) pb += b.probs[k];
        if (pa > pb) return false;
    }
    return true;
}

}  // namespace aklt
