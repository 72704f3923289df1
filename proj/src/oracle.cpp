#include "aklt/oracle.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

namespace aklt::oracle {

namespace {

using Complex = std::complex<double>;

long double lfact(int n) {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(71, 1.0L);
        for (int k = 1; k <= 70; ++k) t[k] = t[k - 1] * k;
        return t;
    }();
    return table.at(n);
}

bool triangle_ok(int two_j1, int two_j2, int two_J) {
    return two_J >= std::abs(two_j1 - two_j2) && two_J <= two_j1 + two_j2 &&
           (two_j1 + two_j2 + two_J) % 2 == 0;
}

std::size_t product_of(const std::vector<int>& dims, int from, int to_exclusive) {
    std::size_t p = 1;
    for (int i = from; i < to_exclusive; ++i) p *= static_cast<std::size_t>(dims[i]);
    return p;
}

// std::pow on complex goes through log and breaks at exact zero
Complex ipow(Complex base, int n) {
    Complex r(1.0, 0.0);
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

// New amplitudes after acting with a two-site operator on adjacent sites
// (site, site+1).
Eigen::VectorXcd apply_two_site(const DenseState& state, int site, const Eigen::MatrixXcd& op) {
    const auto& dims = state.site_dims;
    const std::size_t dl = product_of(dims, 0, site);
    const int da = dims[site];
    const int db = dims[site + 1];
    const std::size_t dr = product_of(dims, site + 2, static_cast<int>(dims.size()));
    const int dab = da * db;

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.amplitudes.size());
    for (std::size_t l = 0; l < dl; ++l) {
        const std::size_t base = l * dab * dr;
        for (int to = 0; to < dab; ++to) {
            for (int from = 0; from < dab; ++from) {
                const Complex c = op(to, from);
                if (c == Complex(0.0, 0.0)) continue;
                const Complex* src = state.amplitudes.data() + base + from * dr;
                Complex* dst = out.data() + base + to * dr;
                for (std::size_t r = 0; r < dr; ++r) dst[r] += c * src[r];
            }
        }
    }
    return out;
}

}  // namespace

std::size_t amplitude_guard() {
    static const std::size_t guard = [] {
        if (const char* env = std::getenv("AKLT_ORACLE_GUARD")) {
            const unsigned long long v = std::strtoull(env, nullptr, 10);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(10'000'000);
    }();
    return guard;
}

SpinOperatorTriple spin_operators(int two_j) {
    if (two_j < 1) throw std::invalid_argument("spin must be at least 1/2");
    const int d = two_j + 1;
    const double j = two_j / 2.0;
    SpinOperatorTriple ops{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d),
                           Eigen::MatrixXcd::Zero(d, d)};
    for (int k = 0; k < d; ++k) {
        const double m = j - k;
        ops.sz(k, k) = m;
        if (k >= 1) ops.sp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
        if (k + 1 < d) ops.sm(k + 1, k) = std::sqrt(j * (j + 1) - m * (m - 1));
    }
    return ops;
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
    if (two_M != two_m1 + two_m2) return 0.0;
    if (!triangle_ok(two_j1, two_j2, two_J)) return 0.0;
    if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J)
        return 0.0;
    if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0) return 0.0;

    // integer combinations (all halves cancel)
    const int a = (two_j1 + two_j2 - two_J) / 2;
    const int b = (two_j1 - two_j2 + two_J) / 2;
    const int c = (-two_j1 + two_j2 + two_J) / 2;
    const int j1m1 = (two_j1 - two_m1) / 2, j1p1 = (two_j1 + two_m1) / 2;
    const int j2m2 = (two_j2 - two_m2) / 2, j2p2 = (two_j2 + two_m2) / 2;
    const int JpM = (two_J + two_M) / 2, JmM = (two_J - two_M) / 2;

    const long double pref =
        sqrtl((two_J + 1) * lfact(a) * lfact(b) * lfact(c) / lfact(a + b + c + 1)) *
        sqrtl(lfact(JpM) * lfact(JmM) * lfact(j1m1) * lfact(j1p1) * lfact(j2m2) * lfact(j2p2));

    const int t3 = (two_J - two_j2 + two_m1) / 2;  // J - j2 + m1
    const int t4 = (two_J - two_j1 - two_m2) / 2;  // J - j1 - m2
    const int kmin = std::max({0, -t3, -t4});
    const int kmax = std::min({a, j1m1, j2p2});

    long double sum = 0.0L;
    for (int k = kmin; k <= kmax; ++k) {
        const long double term = 1.0L / (lfact(k) * lfact(a - k) * lfact(j1m1 - k) *
                                         lfact(j2p2 - k) * lfact(t3 + k) * lfact(t4 + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(pref * sum);
}

Eigen::VectorXcd singlet_pair(int two_j) {
    if (two_j < 1) throw std::invalid_argument("spin must be at least 1/2");
    const int d = two_j + 1;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        // m = j - k pairs with -m at index two_j - k
        v[k * d + (two_j - k)] = (k % 2 == 0 ? norm : -norm);
    }
    return v;
}

Eigen::MatrixXd symmetric_projector(SpinParams spin) {
    const int S = spin.S;
    const int dh = S + 1;  // spin-S/2 half
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(2 * S + 1, dh * dh);
    for (int mi = 0; mi <= 2 * S; ++mi) {
        const int two_M = 2 * S - 2 * mi;
        for (int ai = 0; ai < dh; ++ai) {
            const int two_m1 = S - 2 * ai;
            for (int bi = 0; bi < dh; ++bi) {
                const int two_m2 = S - 2 * bi;
                if (two_m1 + two_m2 != two_M) continue;
                P(mi, ai * dh + bi) = clebsch_gordan(S, two_m1, S, two_m2, 2 * S, two_M);
            }
        }
    }
    return P;
}

DenseState build_vbs(SpinParams spin, int N, std::size_t guard) {
    if (N < 1) throw std::invalid_argument("chain needs at least one bulk site");
    const int S = spin.S;
    const std::size_t dh = static_cast<std::size_t>(S + 1);
    const std::size_t ds = static_cast<std::size_t>(2 * S + 1);

    std::size_t total = dh * dh;
    for (int i = 0; i < N; ++i) {
        if (total > guard / ds)
            throw resource_guard_error("dense state would exceed the amplitude guard");
        total *= ds;
    }

    // One step absorbs the next bond singlet and projects the two adjacent
    // spin-S/2 halves onto the new bulk site:
    //   psi'[prev, s, c] = sum_{a,b} P[s, (a,b)] singlet[(b,c)] psi[prev, a].
    const Eigen::MatrixXd proj = symmetric_projector(spin);
    const Eigen::VectorXcd bond = singlet_pair(S);
    Eigen::MatrixXcd step = Eigen::MatrixXcd::Zero(dh, ds * dh);
    for (std::size_t a = 0; a < dh; ++a)
        for (std::size_t s = 0; s < ds; ++s)
            for (std::size_t c = 0; c < dh; ++c) {
                Complex acc(0.0, 0.0);
                for (std::size_t b = 0; b < dh; ++b)
                    acc += proj(s, a * dh + b) * bond[b * dh + c];
                step(a, s * dh + c) = acc;
            }

    Eigen::VectorXcd psi = singlet_pair(S);  // [site0, pending half of site 1]
    for (int i = 0; i < N; ++i) {
        const Eigen::Index prev = psi.size() / static_cast<Eigen::Index>(dh);
        Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            cur(psi.data(), prev, dh);
        Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> next = cur * step;
        psi = Eigen::Map<Eigen::VectorXcd>(next.data(), next.size());
    }
    psi.normalize();

    DenseState state;
    state.site_dims.assign(static_cast<std::size_t>(N) + 2, 2 * S + 1);
    state.site_dims.front() = S + 1;
    state.site_dims.back() = S + 1;
    state.amplitudes = std::move(psi);
    return state;
}

Eigen::MatrixXcd aklt_projector(int two_j1, int two_j2, int two_J) {
    if (!triangle_ok(two_j1, two_j2, two_J))
        throw std::invalid_argument("total spin J outside the coupling range");
    const SpinOperatorTriple s1 = spin_operators(two_j1);
    const SpinOperatorTriple s2 = spin_operators(two_j2);
    const Eigen::MatrixXcd dot = kroneckerProduct(s1.sz, s2.sz).eval() +
                                 0.5 * (kroneckerProduct(s1.sp, s2.sm).eval() +
                                        kroneckerProduct(s1.sm, s2.sp).eval());
    const double c1 = (two_j1 / 2.0) * (two_j1 / 2.0 + 1.0);
    const double c2 = (two_j2 / 2.0) * (two_j2 / 2.0 + 1.0);
    auto coupling = [&](int two_K) {
        return 0.5 * ((two_K / 2.0) * (two_K / 2.0 + 1.0) - c1 - c2);
    };

    const int d = (two_j1 + 1) * (two_j2 + 1);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(d, d);
    const double xJ = coupling(two_J);
    for (int two_K = std::abs(two_j1 - two_j2); two_K <= two_j1 + two_j2; two_K += 2) {
        if (two_K == two_J) continue;
        const double xK = coupling(two_K);
        P = P * (dot - xK * Eigen::MatrixXcd::Identity(d, d)) / (xJ - xK);
    }
    return P;
}

std::vector<double> annihilation_norms(const DenseState& state, SpinParams spin) {
    const int S = spin.S;
    const int N = state.bulk_sites();
    std::vector<double> norms;

    // bulk bonds: project (S, S) pairs onto J in [S+1, 2S]
    std::vector<Eigen::MatrixXcd> bulk;
    for (int two_J = 2 * S + 2; two_J <= 4 * S; two_J += 2)
        bulk.push_back(aklt_projector(2 * S, 2 * S, two_J));
    for (int site = 1; site < N; ++site)
        for (const auto& P : bulk) norms.push_back(apply_two_site(state, site, P).norm());

    // boundary pairs: (S/2, S) and (S, S/2) onto J in [S/2+1, 3S/2]
    for (int two_J = S + 2; two_J <= 3 * S; two_J += 2) {
        norms.push_back(apply_two_site(state, 0, aklt_projector(S, 2 * S, two_J)).norm());
        norms.push_back(apply_two_site(state, N, aklt_projector(2 * S, S, two_J)).norm());
    }
    return norms;
}

bool verify_ground_state(SpinParams spin, int N, double tol, std::size_t guard) {
    const DenseState state = build_vbs(spin, N, guard);
    const std::vector<double> norms = annihilation_norms(state, spin);
    return std::all_of(norms.begin(), norms.end(), [tol](double n) { return n <= tol; });
}

namespace {

struct CutDims {
    std::size_t dl, db, dr;
};

CutDims cut_dims(const DenseState& state, BlockSelection block) {
    const auto& dims = state.site_dims;
    const int N = state.bulk_sites();
    if (block.first < 1 || block.first > block.last || block.last > N)
        throw std::invalid_argument("block must select contiguous bulk sites 1..N");
    return {product_of(dims, 0, block.first), product_of(dims, block.first, block.last + 1),
            product_of(dims, block.last + 1, static_cast<int>(dims.size()))};
}

Eigen::MatrixXcd block_side_density(const DenseState& state, BlockSelection block) {
    const auto [dl, db, dr] = cut_dims(state, block);
    const Complex* psi = state.amplitudes.data();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(db, db);
    for (std::size_t l = 0; l < dl; ++l)
        for (std::size_t r = 0; r < dr; ++r)
            for (std::size_t b = 0; b < db; ++b) {
                const Complex vb = psi[(l * db + b) * dr + r];
                if (vb == Complex(0.0, 0.0)) continue;
                for (std::size_t b2 = 0; b2 < db; ++b2)
                    rho(b, b2) += vb * std::conj(psi[(l * db + b2) * dr + r]);
            }
    return rho;
}

Eigen::MatrixXcd env_side_density(const DenseState& state, BlockSelection block) {
    const auto [dl, db, dr] = cut_dims(state, block);
    const Complex* psi = state.amplitudes.data();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dl * dr, dl * dr);
    for (std::size_t b = 0; b < db; ++b)
        for (std::size_t l = 0; l < dl; ++l)
            for (std::size_t r = 0; r < dr; ++r) {
                const Complex v = psi[(l * db + b) * dr + r];
                if (v == Complex(0.0, 0.0)) continue;
                const std::size_t row = l * dr + r;
                for (std::size_t l2 = 0; l2 < dl; ++l2)
                    for (std::size_t r2 = 0; r2 < dr; ++r2)
                        rho(row, l2 * dr + r2) += v * std::conj(psi[(l2 * db + b) * dr + r2]);
            }
    return rho;
}

}  // namespace

std::vector<double> reduced_spectrum(const DenseState& state, BlockSelection block) {
    const auto [dl, db, dr] = cut_dims(state, block);
    const Eigen::MatrixXcd rho =
        db <= dl * dr ? block_side_density(state, block) : env_side_density(state, block);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    std::vector<double> ev;
    for (Eigen::Index i = solver.eigenvalues().size() - 1; i >= 0; --i) {
        const double v = solver.eigenvalues()[i];
        if (v > 1e-12) ev.push_back(v);
    }
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

Eigen::MatrixXcd end_pair_density(const DenseState& state) {
    return env_side_density(state, {1, state.bulk_sites()});
}

std::vector<double> multiplet_weights(const DenseState& state, SpinParams spin) {
    const int S = spin.S;
    const Eigen::MatrixXcd rho = end_pair_density(state);
    std::vector<double> weights;
    for (int sigma = 0; sigma <= S; ++sigma) {
        const Eigen::MatrixXcd P = aklt_projector(S, S, 2 * sigma);
        weights.push_back((P * rho).trace().real() / (2 * sigma + 1));
    }
    return weights;
}

Eigen::VectorXcd coherent_state(SpinParams spin, double theta, double phi) {
    const int S = spin.S;
    const Complex u = std::polar(std::cos(theta / 2.0), phi / 2.0);
    const Complex v = std::polar(std::sin(theta / 2.0), -phi / 2.0);
    Eigen::VectorXcd state(2 * S + 1);
    for (int k = 0; k <= 2 * S; ++k) {
        // m = S - k: amplitude u^(S+m) v^(S-m) sqrt(C(2S, S+m))
        const int spm = 2 * S - k;
        const double binom = static_cast<double>(lfact(2 * S) / (lfact(spm) * lfact(k)));
        state[k] = ipow(u, spm) * ipow(v, k) * std::sqrt(binom);
    }
    return state;
}

}  // namespace aklt::oracle
