#pragma once

#include "aklt/spectrum.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <vector>

// Brute-force ground truth for small chains: the valence-bond state is built
// explicitly (one spin-S/2 singlet per bond, symmetric projection at each
// bulk site) and block spectra come from dense diagonalization. Everything
// here is double precision with 1e-10/1e-12 tolerances; the closed-form side
// stays exact.
namespace aklt::oracle {

struct resource_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense amplitude cap for build_vbs, overridable via AKLT_ORACLE_GUARD.
std::size_t amplitude_guard();

struct DenseState {
    std::vector<int> site_dims;  // first and last are S+1, interior 2S+1
    Eigen::VectorXcd amplitudes; // site 0 slowest index
    int bulk_sites() const { return static_cast<int>(site_dims.size()) - 2; }
};

// Inclusive range of bulk sites 1..N.
struct BlockSelection {
    int first;
    int last;
};

struct SpinOperatorTriple {
    Eigen::MatrixXcd sz, sp, sm;
};

// S_z, S_+, S_- on a spin-j site (dimension two_j+1, basis m = j..-j).
SpinOperatorTriple spin_operators(int two_j);

// <j1 m1 j2 m2 | J M>, all spins passed doubled. Zero outside the coupling
// triangle or when M != m1 + m2.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

// sum_m (-1)^(j-m)/sqrt(2j+1) |j,m>|j,-m>, annihilated by every total-spin
// component.
Eigen::VectorXcd singlet_pair(int two_j);

// (2S+1) x (S+1)^2 isometry from the total-spin-S subspace of two spin-S/2's
// onto a single spin-S site; P P^dag = identity.
Eigen::MatrixXd symmetric_projector(SpinParams spin);

// Chain of N bulk spin-S sites with spin-S/2 ends: a singlet on each of the
// N+1 bonds, each bulk pair projected to its symmetric space, normalized.
DenseState build_vbs(SpinParams spin, int N, std::size_t guard = amplitude_guard());

// Projector onto total spin J of a (j1, j2) pair, by Lagrange interpolation
// in S1.S2.
Eigen::MatrixXcd aklt_projector(int two_j1, int two_j2, int two_J);

// Norms of every Hamiltonian projector applied to the state: bulk bonds with
// J in [S+1, 2S] followed by the two boundary terms with J in [S/2+1, 3S/2].
// All vanish exactly on the valence-bond state.
std::vector<double> annihilation_norms(const DenseState& state, SpinParams spin);

bool verify_ground_state(SpinParams spin, int N, double tol = 1e-10,
                         std::size_t guard = amplitude_guard());

// Nonzero eigenvalues (> 1e-12) of the block reduced density matrix, sorted
// nonincreasing. Diagonalizes whichever side of the cut is smaller.
std::vector<double> reduced_spectrum(const DenseState& state, BlockSelection block);

// Reduced density matrix of the two end spins (dimension (S+1)^2); for N = L
// this carries the full block spectrum.
Eigen::MatrixXcd end_pair_density(const DenseState& state);

// Multiplet-resolved eigenvalues tr(P_sigma rho_ends)/(2sigma+1) of the end
// pair, sigma = 0..S.
std::vector<double> multiplet_weights(const DenseState& state, SpinParams spin);

// Spin-S coherent state along (theta, phi).
Eigen::VectorXcd coherent_state(SpinParams spin, double theta, double phi);

}  // namespace aklt::oracle
