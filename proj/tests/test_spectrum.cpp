#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aklt/spectrum.hpp"

#include <cmath>
#include <vector>

using aklt::BoundarySpectrum;
using aklt::Rational;
using aklt::SpinParams;

namespace {

// Exact Legendre values by the three-term recurrence
// (l+1) P_{l+1} = (2l+1) x P_l - l P_{l-1}.
Rational legendre_value(int l, const Rational& x) {
    Rational pm1 = 1, p = x;
    if (l == 0) return pm1;
    for (int k = 1; k < l; ++k) {
        Rational pnext = (Rational(2 * k + 1) * x * p - k * pm1) / (k + 1);
        pm1 = p;
        p = pnext;
    }
    return p;
}

Rational p_of(const BoundarySpectrum& spec, int sigma) {
    return spec.levels.at(sigma).eigenvalue;
}

}  // namespace

TEST_CASE("spin parameter validation") {
    CHECK_THROWS_AS(SpinParams(0), std::invalid_argument);
    CHECK_THROWS_AS(SpinParams(-3), std::invalid_argument);
    CHECK(SpinParams(1).S == 1);
}

TEST_CASE("transfer eigenvalues") {
    for (int S = 1; S <= 8; ++S) CHECK(aklt::transfer_eigenvalue(SpinParams(S), 0) == 1);
    CHECK(aklt::transfer_eigenvalue(SpinParams(1), 1) == Rational(-1, 3));
    CHECK(aklt::transfer_eigenvalue(SpinParams(2), 2) == Rational(1, 10));
    CHECK(aklt::transfer_eigenvalue(SpinParams(2), 1) == Rational(-1, 2));
    CHECK(aklt::transfer_eigenvalue(SpinParams(3), 1) == Rational(-3, 5));

    CHECK_THROWS_AS(aklt::transfer_eigenvalue(SpinParams(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(aklt::transfer_eigenvalue(SpinParams(2), -1), std::invalid_argument);

    // magnitude decay |lambda(l+1)/lambda(l)| = (S-l)/(S+l+2), strictly below 1
    for (int S = 1; S <= 8; ++S) {
        for (int l = 0; l < S; ++l) {
            const Rational a = aklt::transfer_eigenvalue(SpinParams(S), l);
            const Rational b = aklt::transfer_eigenvalue(SpinParams(S), l + 1);
            CHECK(abs(b) / abs(a) == Rational(S - l, S + l + 2));
        }
        for (int l = 1; l <= S; ++l)
            CHECK(abs(aklt::transfer_eigenvalue(SpinParams(S), l)) < 1);
    }

    // sign alternation: the signed ordering claim fails (S=2: -1/2 < 1/10),
    // only magnitudes decay
    CHECK(aklt::transfer_eigenvalue(SpinParams(2), 1) < aklt::transfer_eigenvalue(SpinParams(2), 2));
}

TEST_CASE("legendre coefficients") {
    CHECK(aklt::legendre_coefficient(SpinParams(1), 0) == Rational(1, 2));
    CHECK(aklt::legendre_coefficient(SpinParams(1), 1) == Rational(1, 2));
    CHECK_THROWS_AS(aklt::legendre_coefficient(SpinParams(1), 2), std::invalid_argument);

    // sum at x = 1 is 1 (P_l(1) = 1)
    for (int S = 1; S <= 10; ++S) {
        Rational sum = 0;
        for (int l = 0; l <= S; ++l) sum += aklt::legendre_coefficient(SpinParams(S), l);
        CHECK(sum == 1);
    }

    // full expansion identity sum_l K_l P_l(x) = ((1+x)/2)^S, exact on a
    // rational grid
    for (int S = 1; S <= 8; ++S) {
        for (int k = -8; k <= 8; ++k) {
            const Rational x(k, 8);
            Rational lhs = 0;
            for (int l = 0; l <= S; ++l)
                lhs += aklt::legendre_coefficient(SpinParams(S), l) * legendre_value(l, x);
            CHECK(lhs == aklt::rational_pow((1 + x) / 2, static_cast<unsigned long>(S)));
        }
    }
}

TEST_CASE("multiplet X values") {
    CHECK(aklt::multiplet_X(SpinParams(1), 0) == Rational(-3, 4));
    CHECK(aklt::multiplet_X(SpinParams(1), 1) == Rational(1, 4));
    CHECK(aklt::multiplet_X(SpinParams(2), 2) == 1);
    CHECK_THROWS_AS(aklt::multiplet_X(SpinParams(2), 3), std::invalid_argument);
}

TEST_CASE("boundary polynomials") {
    const Rational any_x(7, 5);
    for (int S = 1; S <= 6; ++S) CHECK(aklt::boundary_polynomial(SpinParams(S), 0, any_x) == 1);
    CHECK(aklt::boundary_polynomial(SpinParams(1), 1, Rational(1, 4)) == Rational(1, 3));

    // frozen recursion values at the top multiplet X(S) = S^2/4
    CHECK(aklt::boundary_polynomial(SpinParams(2), 1, Rational(1)) == Rational(3, 4));
    CHECK(aklt::boundary_polynomial(SpinParams(2), 2, Rational(1)) == Rational(1, 20));
    CHECK(aklt::boundary_polynomial(SpinParams(3), 1, Rational(9, 4)) == Rational(27, 25));
    CHECK(aklt::boundary_polynomial(SpinParams(3), 2, Rational(9, 4)) == Rational(1, 5));
    CHECK(aklt::boundary_polynomial(SpinParams(3), 3, Rational(9, 4)) == Rational(1, 175));

    // orthogonality on the multiplet grid under weight 2*sigma+1
    for (int S = 1; S <= 8; ++S) {
        for (int a = 0; a <= S; ++a)
            for (int b = 0; b < a; ++b) {
                Rational dot = 0;
                for (int sigma = 0; sigma <= S; ++sigma) {
                    const Rational X = aklt::multiplet_X(SpinParams(S), sigma);
                    dot += Rational(2 * sigma + 1) *
                           aklt::boundary_polynomial(SpinParams(S), a, X) *
                           aklt::boundary_polynomial(SpinParams(S), b, X);
                }
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("block spectra match dense diagonalization ground truth") {
    // frozen by an independent brute-force computation
    const std::vector<std::vector<Rational>> spin1 = {
        {Rational(0), Rational(1, 3)},       {Rational(1, 3), Rational(2, 9)},
        {Rational(2, 9), Rational(7, 27)},   {Rational(7, 27), Rational(20, 81)},
        {Rational(20, 81), Rational(61, 243)}, {Rational(61, 243), Rational(182, 729)}};
    for (int L = 1; L <= 6; ++L) {
        const BoundarySpectrum spec = aklt::spectrum(SpinParams(1), L);
        REQUIRE(spec.levels.size() == 2);
        CHECK(p_of(spec, 0) == spin1[L - 1][0]);
        CHECK(p_of(spec, 1) == spin1[L - 1][1]);
        CHECK(spec.raw_trace == 1);
    }

    const std::vector<std::vector<Rational>> spin2 = {
        {Rational(0), Rational(0), Rational(1, 5)},
        {Rational(1, 5), Rational(3, 20), Rational(7, 100)},
        {Rational(7, 100), Rational(9, 100), Rational(33, 250)},
        {Rational(33, 250), Rational(243, 2000), Rational(1007, 10000)},
        {Rational(1007, 10000), Rational(1059, 10000), Rational(727, 6250)},
        {Rational(727, 6250), Rational(22743, 200000), Rational(108507, 1000000)}};
    for (int L = 1; L <= 6; ++L) {
        const BoundarySpectrum spec = aklt::spectrum(SpinParams(2), L);
        REQUIRE(spec.levels.size() == 3);
        for (int sigma = 0; sigma <= 2; ++sigma) CHECK(p_of(spec, sigma) == spin2[L - 1][sigma]);
        CHECK(spec.raw_trace == 1);
    }

    CHECK_THROWS_AS(aklt::spectrum(SpinParams(1), 0), std::invalid_argument);
    CHECK_THROWS_AS(aklt::spectrum(SpinParams(1), -2), std::invalid_argument);
}

TEST_CASE("trace and positivity invariants") {
    for (int S = 1; S <= 5; ++S)
        for (int L = 1; L <= 12; ++L) {
            const BoundarySpectrum spec = aklt::spectrum(SpinParams(S), L);
            Rational trace = 0;
            for (const auto& lvl : spec.levels) {
                CHECK(lvl.degeneracy == 2 * lvl.sigma + 1);
                CHECK(lvl.eigenvalue >= 0);
                CHECK(lvl.eigenvalue <= 1);
                trace += Rational(lvl.degeneracy) * lvl.eigenvalue;
            }
            CHECK(trace == 1);
        }
}

TEST_CASE("largest eigenvalue and tie-breaking") {
    const auto [s2, v2] = aklt::largest_eigenvalue(aklt::spectrum(SpinParams(1), 2));
    CHECK(s2 == 0);
    CHECK(v2 == Rational(1, 3));

    const auto [s1, v1] = aklt::largest_eigenvalue(aklt::spectrum(SpinParams(1), 1));
    CHECK(s1 == 1);
    CHECK(v1 == Rational(1, 3));

    // exact tie breaks toward smaller sigma
    BoundarySpectrum flat{SpinParams(1), 1, {{0, 1, Rational(1, 4)}, {1, 3, Rational(1, 4)}}, 1};
    const auto [st, vt] = aklt::largest_eigenvalue(flat);
    CHECK(st == 0);
    CHECK(vt == Rational(1, 4));

    // pigeonhole floor: Lambda_1 >= 1/(S+1)^2 exactly
    for (int S = 1; S <= 6; ++S)
        for (int L : {1, 2, 3, 7, 20, 51}) {
            const auto [s, v] = aklt::largest_eigenvalue(aklt::spectrum(SpinParams(S), L));
            CHECK(v >= Rational(1, (S + 1) * (S + 1)));
        }
}

TEST_CASE("entanglement quantities") {
    CHECK(aklt::single_copy_entanglement(SpinParams(1), 2) ==
          doctest::Approx(std::log2(3.0)).epsilon(1e-14));
    CHECK(aklt::von_neumann_entropy(SpinParams(1), 2) ==
          doctest::Approx(std::log2(3.0) / 3.0 + 2.0 / 3.0 * std::log2(4.5)).epsilon(1e-14));

    CHECK(aklt::asymptotic_e1(SpinParams(1)) == doctest::Approx(2.0));
    CHECK(aklt::asymptotic_e1(SpinParams(3)) == doctest::Approx(4.0));
    CHECK(aklt::asymptotic_e1(SpinParams(2)) == doctest::Approx(2.0 * std::log2(3.0)));

    // one multiplet carrying everything: uniform distribution entropy
    BoundarySpectrum single{
        SpinParams(2), 1, {{0, 1, Rational(0)}, {1, 3, Rational(1, 3)}, {2, 5, Rational(0)}}, 1};
    CHECK(aklt::von_neumann_entropy(single) == doctest::Approx(std::log2(3.0)).epsilon(1e-14));

    // large L: every eigenvalue reaches the flat value 1/(S+1)^2
    const BoundarySpectrum far = aklt::spectrum(SpinParams(1), 60);
    for (const auto& lvl : far.levels)
        CHECK(aklt::to_double(lvl.eigenvalue) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("report gaps are cancellation-free") {
    const SpinParams spin(1);

    // at small L the naive difference is still meaningful; both must agree
    const aklt::EntanglementReport small = aklt::entanglement_report(spin, 2);
    CHECK(small.e1_gap_bits ==
          doctest::Approx(small.asymptote_bits - small.e1_bits).epsilon(1e-12));
    CHECK(small.vn_gap_bits ==
          doctest::Approx(small.asymptote_bits - small.vn_entropy_bits).epsilon(1e-10));
    CHECK(small.largest_sigma == 0);
    CHECK(small.largest_eigenvalue == Rational(1, 3));

    // far beyond double cancellation the gaps stay positive and tiny
    const aklt::EntanglementReport far = aklt::entanglement_report(spin, 40);
    CHECK(far.e1_gap_bits > 0.0);
    CHECK(far.e1_gap_bits < 1e-9);
    CHECK(far.vn_gap_bits > 0.0);
    CHECK(far.vn_gap_bits < 1e-9);
    // leading channel decay: gap(L+2)/gap(L) -> lambda(1)^2 = 1/9
    const aklt::EntanglementReport far2 = aklt::entanglement_report(spin, 42);
    CHECK(far2.e1_gap_bits / far.e1_gap_bits == doctest::Approx(1.0 / 9.0).epsilon(1e-6));

    // ordering invariant with tolerance
    for (int S = 1; S <= 6; ++S)
        for (int L : {1, 2, 3, 5, 10, 33}) {
            const aklt::EntanglementReport rep = aklt::entanglement_report(SpinParams(S), L);
            CHECK(rep.e1_bits <= rep.vn_entropy_bits + 1e-12);
            CHECK(rep.vn_entropy_bits <= rep.asymptote_bits + 1e-12);
            CHECK(rep.e1_gap_bits >= 0.0);
            CHECK(rep.vn_gap_bits >= 0.0);
        }
}
