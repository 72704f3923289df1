#pragma once

#include "aklt/rational.hpp"

#include <utility>
#include <vector>

namespace aklt {

// Bulk spin magnitude of the chain. The two chain ends carry spin S/2, and a
// block of L contiguous bulk spins has a reduced density matrix supported on
// the two effective boundary spin-S/2's, i.e. at most (S+1)^2 nonzero
// eigenvalues organized into total-spin multiplets sigma = 0..S.
struct SpinParams {
    int S;
    explicit SpinParams(int spin);  // rejects S < 1
};

struct MultipletLevel {
    int sigma;           // total boundary spin of the multiplet
    int degeneracy;      // 2*sigma + 1
    Rational eigenvalue; // p_sigma, exact
};

struct BoundarySpectrum {
    SpinParams spin;
    int length;  // block length L (number of bulk sites)
    std::vector<MultipletLevel> levels;  // one entry per sigma = 0..S
    // Trace of the unnormalized multiplet sum. The closed form is
    // self-consistent, so this is exactly 1; it is kept as a diagnostic and
    // the spectrum is divided by it either way.
    Rational raw_trace;
};

struct EntanglementReport {
    double e1_bits;            // single-copy entanglement, -log2(largest eigenvalue)
    double vn_entropy_bits;    // von Neumann entropy of the block
    int largest_sigma;
    Rational largest_eigenvalue;
    double asymptote_bits;     // 2*log2(S+1), the common large-L limit
    // Distances to the asymptote, evaluated cancellation-free (log1p on the
    // exact rational offset) so they stay meaningful long after e1_bits and
    // vn_entropy_bits round to the asymptote in double precision.
    double e1_gap_bits;
    double vn_gap_bits;
};

// lambda(l) = (-1)^l S!(S+1)! / ((S-l)!(S+l+1)!), the decay rate of the l-th
// isotropic tensor channel along the chain. lambda(0) = 1, |lambda(l)| < 1
// for l >= 1.
Rational transfer_eigenvalue(SpinParams spin, int l);

// Coefficient of P_l(x) in ((1+x)/2)^S: (2l+1) S!S! / ((S-l)!(S+l+1)!).
Rational legendre_coefficient(SpinParams spin, int l);

// Boundary polynomial It_j(X) with the 1/4pi of the raw recursion folded
// out: It_0 = 1, It_1 = 3X/(S/2+1)^2, and
//   It_{j+1} = (2j+3)/(S+j+2)^2 (4X/(j+1) + j) It_j
//              - j/(j+1) (2j+3)/(2j-1) ((S-j+1)/(S+j+2))^2 It_{j-1}.
// Evaluated at the multiplet values X(sigma) these form a complete set of
// isotropic two-site tensors on the boundary pair, orthogonal under the
// weight 2*sigma+1.
Rational boundary_polynomial(SpinParams spin, int j, const Rational& X);

// X(sigma) = sigma(sigma+1)/2 - (S/2)(S/2+1), the boundary-pair spin dot
// product on the total-spin-sigma multiplet. Half-integer in general.
Rational multiplet_X(SpinParams spin, int sigma);

// Exact multiplet-resolved block spectrum:
//   p_sigma(L) = sum_j (2j+1)/(S+1)^2 * lambda(j)^(L+1)
//                * It_j(X(sigma)) / It_j(X(S)).
// Each channel is normalized on the top multiplet sigma = S, whose expansion
// coefficients are pinned to (2j+1)/(S+1)^2 by the flat large-L limit; the
// trace sum rule then holds exactly for every L (recorded in raw_trace, and
// enforced by division so the returned spectrum is trace-one regardless).
BoundarySpectrum spectrum(SpinParams spin, int length);

// Maximal p_sigma by exact comparison; ties broken toward smaller sigma.
// The even/odd-L pattern of the winning sigma is an observed output here,
// never an assumption.
std::pair<int, Rational> largest_eigenvalue(const BoundarySpectrum& spec);

// E1 = -log2(Lambda_1) in bits.
double single_copy_entanglement(SpinParams spin, int length);

// -sum_sigma (2sigma+1) p_sigma log2 p_sigma, skipping exact zeros.
double von_neumann_entropy(const BoundarySpectrum& spec);
double von_neumann_entropy(SpinParams spin, int length);

// 2*log2(S+1), the saturation value shared by E1 and the entropy.
double asymptotic_e1(SpinParams spin);

EntanglementReport entanglement_report(const BoundarySpectrum& spec);
EntanglementReport entanglement_report(SpinParams spin, int length);

}  // namespace aklt
