// Spectral-side checks: lattice Hamiltonians, moment traces, nested-sum
// polynomials, cluster coefficients, secular determinants, and the
// clock-and-shift distribution extraction.  Closed-form pins were computed by
// hand; cross-module expectations come from the exact enumeration oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "areaenum/combinatorics.hpp"
#include "areaenum/oracle.hpp"
#include "areaenum/spectral.hpp"
#include "areaenum/square_enum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

using namespace areaenum;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

/// sum_A C(A) Q^A with exact counts converted to double at the end.
cd weighted_sum(const AreaDistribution& dist, double theta) {
    detail::Accumulator<cd> acc;
    for (const auto& [area, count] : dist.counts)
        acc.add(count.convert_to<double>() * std::polar(1.0, theta * area));
    return acc.value();
}

}  // namespace

TEST_CASE("rational flux validates and exposes the unit root") {
    CHECK_THROWS_AS(RationalFlux(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(RationalFlux(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(RationalFlux(3, 9), std::invalid_argument);
    RationalFlux flux(2, 7);
    CHECK(flux.angle() == doctest::Approx(4.0 * kPi / 7).epsilon(1e-15));
    CHECK(std::abs(flux.unit_root() - std::polar(1.0, 4.0 * kPi / 7)) < 1e-15);
    CHECK(RationalFlux(0, 1).unit_root() == cd(1.0, 0.0));
}

TEST_CASE("hamiltonian matrix is hermitian and q = 1 is the free cosine") {
    std::mt19937 rng(20260815);
    std::uniform_real_distribution<double> k(-kPi, kPi);
    for (const RationalFlux& flux :
         {RationalFlux(0, 1), RationalFlux(1, 2), RationalFlux(1, 5), RationalFlux(3, 8)}) {
        const double kx = k(rng), ky = k(rng);
        Eigen::MatrixXcd H = hofstadter_matrix(flux, kx, ky);
        REQUIRE(H.rows() == flux.q);
        CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }
    Eigen::MatrixXcd free1 = hofstadter_matrix(RationalFlux(0, 1), 0.3, -1.1);
    CHECK(free1(0, 0).real() ==
          doctest::Approx(2 * std::cos(0.3) + 2 * std::cos(-1.1)).epsilon(1e-14));
    CHECK(free1(0, 0).imag() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("moment trace at flux 1/5 matches the n = 4 closed form") {
    // sum_A C_4(A) Q^A = 28 + 4 Q + 4 Q^-1 from the by-hand distribution.
    const cd t = quantum_trace(RationalFlux(1, 5), 4);
    CHECK(t.real() == doctest::Approx(28 + 8 * std::cos(2 * kPi / 5)).epsilon(1e-12));
    CHECK(std::abs(t.imag()) < 1e-12);
}

TEST_CASE("odd moments vanish") {
    for (int n : {1, 3, 5, 7})
        CHECK(std::abs(quantum_trace(RationalFlux(2, 7), n)) < 1e-10);
}

TEST_CASE("zero flux reproduces free walk totals") {
    CHECK(quantum_trace(RationalFlux(0, 1), 4).real() == doctest::Approx(36).epsilon(1e-12));
    CHECK(quantum_trace(RationalFlux(0, 1), 6).real() == doctest::Approx(400).epsilon(1e-12));
}

TEST_CASE("moment trace equals the area-weighted count sum at every tested flux") {
    for (const RationalFlux& flux :
         {RationalFlux(1, 2), RationalFlux(1, 5), RationalFlux(2, 7), RationalFlux(3, 8)}) {
        for (int n = 2; n <= 12; n += 2) {
            const auto dist = brute_force_distribution_square_bigint(n);
            const cd expect = weighted_sum(dist, flux.angle());
            const cd got = quantum_trace(flux, n);
            CHECK(std::abs(got - expect) < 1e-6 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("moment trace matches the expansion engine at a fine flux") {
    // 64 x 64 matrix, 17^2 k-grid against the exact n = 16 distribution.
    const RationalFlux flux(1, 64);
    const auto dist = area_distribution_square(16);
    const cd expect = weighted_sum(dist, flux.angle());
    CHECK(std::abs(quantum_trace(flux, 16) - expect) < 1e-6 * std::abs(expect));
}

TEST_CASE("clock-and-shift traces agree with the k-averaged moments") {
    for (int p : {1, 2, 3}) {
        const cd a = clock_shift_trace(Lattice::Square, 4, p, 7);
        const cd b = quantum_trace(RationalFlux(p, 7), 4);
        CHECK(std::abs(a - b) < 1e-9);
    }
    CHECK(std::abs(clock_shift_trace(Lattice::Square, 6, 1, 13) -
                   quantum_trace(RationalFlux(1, 13), 6)) < 1e-9);
    CHECK(std::abs(clock_shift_trace(Lattice::Square, 8, 2, 11) -
                   quantum_trace(RationalFlux(2, 11), 8)) < 1e-9);
    CHECK_THROWS_AS(clock_shift_trace(Lattice::Square, 4, 0, 0), std::invalid_argument);
}

TEST_CASE("triangular clock-and-shift trace matches the hand count at n = 3") {
    // C_3 = {-1: 3, +1: 3}, so the weighted sum is 6 cos(theta).
    for (int p : {1, 2, 3}) {
        const double theta = 2.0 * kPi * p / 7;
        const cd t = clock_shift_trace(Lattice::Triangular, 3, p, 7);
        CHECK(std::abs(t - cd(6 * std::cos(theta), 0.0)) < 1e-9);
    }
}

TEST_CASE("band energy tables") {
    const RationalFlux flux(2, 5);
    const auto hs = hofstadter_s_table(flux);
    REQUIRE(hs.size() == 5);
    for (int k = 1; k <= 5; ++k) {
        const double want = 4 * std::pow(std::sin(kPi * k * 2 / 5), 2);
        CHECK(hs[static_cast<std::size_t>(k - 1)] == doctest::Approx(want).epsilon(1e-14));
    }
    CHECK(hs.back() == doctest::Approx(0.0).epsilon(1e-14));  // sin(pi p) = 0

    const auto ts = triangular_s_table(flux);
    REQUIRE(ts.size() == 5);
    const double theta = 4 * kPi / 5;
    for (int k = 1; k <= 5; ++k) {
        const double want = 4 * std::sin(theta * k) * std::sin(theta * (k + 1));
        CHECK(ts[static_cast<std::size_t>(k - 1)] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("nested band sums: closed-form pins") {
    for (int q : {3, 5, 8}) {
        const RationalFlux flux(1, q);
        CHECK(kreft_Z(flux, 0) == doctest::Approx(1.0));
        // Z(1) = sum_k 4 sin^2(pi k p / q) = 2q.
        CHECK(kreft_Z(flux, 1) == doctest::Approx(2.0 * q).epsilon(1e-12));
    }
    // q = 4: s = {2, 4, 2, 0}; Z(2) = s_3 s_1 + s_4 (s_1 + s_2) = 4.
    CHECK(kreft_Z(RationalFlux(1, 4), 2) == doctest::Approx(4.0).epsilon(1e-12));
    // Outer bound K = q - 2(n - 1) below 1 empties the sum.
    CHECK(kreft_Z(RationalFlux(1, 5), 4) == doctest::Approx(0.0));
}

TEST_CASE("characteristic polynomial of the hamiltonian encodes the band sums") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> kdist(-kPi, kPi);
    for (const RationalFlux& flux :
         {RationalFlux(1, 5), RationalFlux(2, 7), RationalFlux(1, 7), RationalFlux(2, 9)}) {
        const int q = flux.q;
        const double kx = kdist(rng), ky = kdist(rng);
        const auto c = char_poly_coeffs(hofstadter_matrix(flux, kx, ky));
        REQUIRE(static_cast<int>(c.size()) == q + 1);
        CHECK(std::abs(c[0] - cd(1.0, 0.0)) < 1e-12);
        for (int m = 1; m < q; ++m) {
            if (m % 2 != 0) {
                CHECK(std::abs(c[static_cast<std::size_t>(m)]) < 1e-9);
                continue;
            }
            const int n = m / 2;
            const double want = (n % 2 ? -1.0 : 1.0) * kreft_Z(flux, n);
            CHECK(std::abs(c[static_cast<std::size_t>(m)] - cd(want, 0.0)) < 1e-9);
        }
        // Only the top coefficient carries the momenta.
        const double corner = -2 * (std::cos(q * kx) + std::cos(q * ky));
        CHECK(std::abs(c[static_cast<std::size_t>(q)] - cd(corner, 0.0)) < 1e-9);
    }
    // At k = 0 the top coefficient of an odd-q polynomial is -4.
    const auto c0 = char_poly_coeffs(hofstadter_matrix(RationalFlux(1, 7), 0.0, 0.0));
    CHECK(std::abs(c0[7] - cd(-4.0, 0.0)) < 1e-9);
}

TEST_CASE("even denominators fold the middle band sum into the top coefficient") {
    // For even q the z^q coefficient is (-1)^(q/2) Z(q/2) - 2(cos q kx + cos q ky):
    // the highest nested sum shares the order of the momentum loop.
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> kdist(-kPi, kPi);
    for (const RationalFlux& flux : {RationalFlux(1, 4), RationalFlux(1, 6)}) {
        const int q = flux.q;
        const double kx = kdist(rng), ky = kdist(rng);
        const auto c = char_poly_coeffs(hofstadter_matrix(flux, kx, ky));
        for (int m = 1; m < q; ++m) {
            if (m % 2 != 0) {
                CHECK(std::abs(c[static_cast<std::size_t>(m)]) < 1e-9);
                continue;
            }
            const int n = m / 2;
            const double want = (n % 2 ? -1.0 : 1.0) * kreft_Z(flux, n);
            CHECK(std::abs(c[static_cast<std::size_t>(m)] - cd(want, 0.0)) < 1e-9);
        }
        const double want_top = (q / 2 % 2 ? -1.0 : 1.0) * kreft_Z(flux, q / 2) -
                                2 * (std::cos(q * kx) + std::cos(q * ky));
        CHECK(std::abs(c[static_cast<std::size_t>(q)] - cd(want_top, 0.0)) < 1e-9);
    }
}

TEST_CASE("sub-leading coefficients are momentum independent") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> kdist(-kPi, kPi);
    for (const RationalFlux& flux : {RationalFlux(1, 5), RationalFlux(3, 8), RationalFlux(5, 12)}) {
        const auto a = char_poly_coeffs(hofstadter_matrix(flux, kdist(rng), kdist(rng)));
        const auto b = char_poly_coeffs(hofstadter_matrix(flux, kdist(rng), kdist(rng)));
        for (int m = 0; m < flux.q; ++m)
            CHECK(std::abs(a[static_cast<std::size_t>(m)] - b[static_cast<std::size_t>(m)]) <
                  1e-9);
    }
}

TEST_CASE("generic nested sum reduces to the two-band form at g = 2") {
    for (int q : {5, 9}) {
        const RationalFlux flux(1, q);
        const auto s = hofstadter_s_table(flux);
        for (int n = 0; n <= 5; ++n)
            CHECK(general_Z(n, s, 2) == doctest::Approx(kreft_Z(flux, n)).epsilon(1e-12));
    }
    CHECK(general_Z(0, std::vector<double>{1.0, 2.0}, 3) == doctest::Approx(1.0));
    CHECK(general_Z(2, std::vector<double>{1.0, 2.0, 3.0}, 3) == doctest::Approx(0.0));
}

TEST_CASE("cluster coefficients: log-series recursion equals the composition sum") {
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    std::vector<double> s(11);
    for (auto& v : s) v = dist(rng);
    for (int g : {2, 3, 4}) {
        const int n_max = 5;
        std::vector<double> Z(static_cast<std::size_t>(n_max));
        for (int n = 1; n <= n_max; ++n) Z[static_cast<std::size_t>(n - 1)] = general_Z(n, s, g);
        const auto b = cluster_from_logseries(Z);
        for (int n = 1; n <= n_max; ++n) {
            const double direct = cluster_b_compositions(n, s, g);
            CHECK(b[static_cast<std::size_t>(n - 1)] ==
                  doctest::Approx(direct).epsilon(1e-10).scale(std::abs(direct) + 1));
        }
    }
}

TEST_CASE("cluster coefficients agree exactly in rational arithmetic") {
    std::vector<BigRational> s = {BigRational(1, 2),  BigRational(2, 3), BigRational(3, 5),
                                  BigRational(1, 7),  BigRational(4, 3), BigRational(5, 2),
                                  BigRational(7, 4),  BigRational(2, 9), BigRational(3, 11),
                                  BigRational(1, 13), BigRational(8, 5)};
    for (int g : {2, 3}) {
        std::vector<BigRational> Z(4);
        for (int n = 1; n <= 4; ++n) Z[static_cast<std::size_t>(n - 1)] = general_Z(n, s, g);
        const auto b = cluster_from_logseries(Z);
        for (int n = 1; n <= 4; ++n)
            CHECK(b[static_cast<std::size_t>(n - 1)] == cluster_b_compositions(n, s, g));
    }
}

TEST_CASE("moment traces match the cluster prediction") {
    for (const auto& [flux, n_max] :
         std::vector<std::pair<RationalFlux, int>>{{RationalFlux(1, 7), 3},
                                                   {RationalFlux(2, 9), 4},
                                                   {RationalFlux(1, 13), 6}}) {
        for (int n = 1; n <= n_max; ++n) {
            const auto r = trace_identity_check(flux, n);
            CHECK(r.gap < 1e-9 * std::max(1.0, std::abs(r.predicted)));
        }
    }
    CHECK_THROWS_AS(trace_identity_check(RationalFlux(1, 5), 3), std::invalid_argument);
    CHECK_THROWS_AS(trace_identity_check(RationalFlux(1, 5), 0), std::invalid_argument);
}

TEST_CASE("band descriptors expose the same energy tables") {
    const RationalFlux flux(2, 9);
    const auto hb = BandedSpectral::hofstadter(flux);
    REQUIRE(hb.span == 2);
    const auto hs = hofstadter_s_table(flux);
    const auto hbs = hb.s_table();
    for (std::size_t k = 0; k < hs.size(); ++k) CHECK(std::abs(hbs[k] - cd(hs[k], 0)) < 1e-12);

    const auto tb = BandedSpectral::triangular(flux);
    REQUIRE(tb.span == 3);
    const auto ts = triangular_s_table(flux);
    const auto tbs = tb.s_table();
    for (std::size_t k = 0; k < ts.size(); ++k) CHECK(std::abs(tbs[k] - cd(ts[k], 0)) < 1e-12);
}

TEST_CASE("secular determinant generates the two-band nested sums") {
    for (const RationalFlux& flux : {RationalFlux(2, 9), RationalFlux(1, 7)}) {
        const auto bands = BandedSpectral::hofstadter(flux);
        const auto s = hofstadter_s_table(flux);
        for (cd z : {cd(0.25, -0.15), cd(-0.3, 0.2), cd(0.1, 0.4)}) {
            const cd det = secular_matrix(bands, z).determinant();
            detail::Accumulator<cd> series;
            for (int n = 0; 2 * n <= flux.q; ++n)
                series.add((n % 2 ? -1.0 : 1.0) * general_Z(n, s, 2) * std::pow(z, 2 * n));
            CHECK(std::abs(det - series.value()) < 1e-10);
        }
    }
}

TEST_CASE("secular determinant generates the three-band nested sums plus one winding term") {
    // The unit lower band survives a full wrap around the cycle, contributing
    // exactly -z^q for odd q; everything else is the alternating Z series.
    for (const RationalFlux& flux : {RationalFlux(1, 7), RationalFlux(3, 7), RationalFlux(1, 13)}) {
        const auto bands = BandedSpectral::triangular(flux);
        const auto s = triangular_s_table(flux);
        for (cd z : {cd(0.25, -0.15), cd(-0.3, 0.2)}) {
            const cd det = secular_matrix(bands, z).determinant();
            detail::Accumulator<cd> series;
            for (int n = 0; 3 * n <= flux.q; ++n)
                series.add((n % 2 ? -1.0 : 1.0) * general_Z(n, s, 3) * std::pow(z, 3 * n));
            series.add(-std::pow(z, flux.q));
            CHECK(std::abs(det - series.value()) < 1e-12);
        }
    }
}

TEST_CASE("random three-band instance with silent boundary matches the nested sums") {
    // With f(q) = g(q) = 0 no single band wraps, and mixed wrap terms start at
    // order ceil(q/2), so every coefficient below that is a pure nested sum.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int q = 19;
    BandedSpectral bands;
    bands.span = 3;
    bands.f.resize(q);
    bands.g.resize(q);
    for (int k = 0; k < q; ++k) {
        bands.f[static_cast<std::size_t>(k)] = cd(dist(rng), dist(rng));
        bands.g[static_cast<std::size_t>(k)] = cd(dist(rng), dist(rng));
    }
    bands.f.back() = 0.0;
    bands.g.back() = 0.0;
    const Eigen::MatrixXcd A =
        -(secular_matrix(bands, 1.0) - Eigen::MatrixXcd::Identity(q, q));
    const auto c = char_poly_coeffs(A);
    const auto s = bands.s_table();
    for (int m = 1; m <= 9; ++m) {
        cd expect = 0.0;
        if (m % 3 == 0) expect = ((m / 3) % 2 ? -1.0 : 1.0) * general_Z(m / 3, s, 3);
        CHECK(std::abs(c[static_cast<std::size_t>(m)] - expect) < 1e-12);
    }
}

TEST_CASE("newton recurrence reproduces a direct determinant") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::MatrixXcd M(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) M(i, j) = cd(dist(rng), dist(rng));
    const auto c = char_poly_coeffs(M);
    for (cd z : {cd(0.2, 0.1), cd(-0.4, 0.3)}) {
        cd direct = (Eigen::MatrixXcd::Identity(5, 5) - z * M).determinant();
        cd series = 0;
        for (std::size_t m = 0; m < c.size(); ++m) series += c[m] * std::pow(z, m);
        CHECK(std::abs(direct - series) < 1e-10);
    }
}

TEST_CASE("distribution extraction: explicit denominators") {
    const auto d4 = extract_distribution_dft(Lattice::Square, 4, 7);
    CHECK(d4.counts == std::map<long, BigInt>{{-1, 4}, {0, 28}, {1, 4}});
    const auto d2 = extract_distribution_dft(Lattice::Square, 2, 5);
    CHECK(d2.counts == std::map<long, BigInt>{{0, 4}});
}

TEST_CASE("distribution extraction: degenerate lengths") {
    CHECK(extract_distribution_dft(Lattice::Square, 0).counts ==
          std::map<long, BigInt>{{0, 1}});
    CHECK(extract_distribution_dft(Lattice::Square, 5).counts.empty());
    CHECK(extract_distribution_dft(Lattice::Triangular, 4).counts.empty());
}

TEST_CASE("distribution extraction matches the square oracle") {
    for (int n = 2; n <= 10; n += 2) {
        const auto got = extract_distribution_dft(Lattice::Square, n);
        const auto want = brute_force_distribution_square_bigint(n);
        CHECK(got == want);
    }
}

TEST_CASE("distribution extraction matches the triangular oracle") {
    const auto d3 = extract_distribution_dft(Lattice::Triangular, 3);
    CHECK(d3.counts == std::map<long, BigInt>{{-1, 3}, {1, 3}});
    const auto d6 = extract_distribution_dft(Lattice::Triangular, 6, 13);
    CHECK(d6 == brute_force_distribution_triangular(6));
    const auto d9 = extract_distribution_dft(Lattice::Triangular, 9);
    CHECK(d9 == brute_force_distribution_triangular(9));
}

TEST_CASE("distribution extraction rejects unusable denominators") {
    CHECK_THROWS_AS(extract_distribution_dft(Lattice::Square, 4, 9), std::invalid_argument);
    CHECK_THROWS_AS(extract_distribution_dft(Lattice::Square, 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(extract_distribution_dft(Lattice::Square, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(extract_distribution_dft(Lattice::Square, -1), std::invalid_argument);
}
