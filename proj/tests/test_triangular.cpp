// Triangular-lattice enumeration: distribution extraction against the
// word-expansion oracle, closure multinomials, and the cluster cross-check.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "areaenum/combinatorics.hpp"
#include "areaenum/oracle.hpp"
#include "areaenum/triangular.hpp"

#include <cmath>
#include <map>

using namespace areaenum;

TEST_CASE("lengths not divisible by three have no closed walks") {
    CHECK(triangular_distribution(4).counts.empty());
    CHECK(triangular_distribution(5).counts.empty());
    CHECK(triangular_distribution(7).counts.empty());
    CHECK(triangular_distribution(4).n_steps == 4);
}

TEST_CASE("three steps: one triangle each way around, three rotations") {
    const auto d = triangular_distribution(3);
    CHECK(d.counts == std::map<long, BigInt>{{-1, 3}, {1, 3}});
    CHECK(d.total() == 6);
}

TEST_CASE("distribution matches the oracle pointwise") {
    for (int n : {3, 6, 9, 12}) {
        const auto got = triangular_distribution(n);
        const auto want = brute_force_distribution_triangular(n);
        CHECK(got == want);
        if (n == 6) CHECK(got.total() == 90);
    }
}

TEST_CASE("totals follow the closure multinomial") {
    for (int n : {3, 6, 9, 12}) {
        const int m = n / 3;
        const BigInt want = factorial(n) / (factorial(m) * factorial(m) * factorial(m));
        CHECK(triangular_distribution(n).total() == want);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(triangular_distribution(2), std::invalid_argument);
    CHECK_THROWS_AS(triangular_distribution(0), std::invalid_argument);
    CHECK_THROWS_AS(triangular_distribution(48), ResourceLimitError);
}

TEST_CASE("cross-check: first cluster coefficient is the plain band sum") {
    const RationalFlux flux(1, 7);
    const auto s = triangular_s_table(flux);
    double plain = 0;
    for (double v : s) plain += v;
    const auto r = triangular_cluster_crosscheck(1, flux);
    CHECK(r.b_compositions == doctest::Approx(plain).epsilon(1e-12));
    CHECK(r.b_logseries == doctest::Approx(plain).epsilon(1e-12));
    CHECK(r.b_gap < 1e-12);
}

TEST_CASE("cross-check: the two b(2) pipelines agree") {
    const auto r = triangular_cluster_crosscheck(2, RationalFlux(1, 11));
    CHECK(r.b_gap < 1e-10);
}

TEST_CASE("cross-check: measured constant is flux independent") {
    // The suite measures q * Re(sum_A C(A) Q^A) / b(n) rather than assuming a
    // value; across denominators it must come out identical, and the measured
    // value is frozen here as a regression pin.
    double first = 0;
    for (int q : {13, 17, 19}) {
        const auto r = triangular_cluster_crosscheck(2, RationalFlux(1, q));
        CHECK(std::abs(r.weighted_sum.imag()) < 1e-9 * std::abs(r.weighted_sum.real()));
        if (q == 13)
            first = r.measured_constant;
        else
            CHECK(r.measured_constant == doctest::Approx(first).epsilon(1e-8));
    }
    CHECK(first == doctest::Approx(-6.0).epsilon(1e-8));
}

TEST_CASE("cross-check: measured constants alternate with order") {
    CHECK(triangular_cluster_crosscheck(1, RationalFlux(1, 17)).measured_constant ==
          doctest::Approx(3.0).epsilon(1e-8));
    CHECK(triangular_cluster_crosscheck(3, RationalFlux(1, 17)).measured_constant ==
          doctest::Approx(9.0).epsilon(1e-8));
    CHECK(triangular_cluster_crosscheck(4, RationalFlux(2, 17)).measured_constant ==
          doctest::Approx(-12.0).epsilon(1e-8));
}

TEST_CASE("cross-check validates its window") {
    CHECK_THROWS_AS(triangular_cluster_crosscheck(5, RationalFlux(1, 13)),
                    std::invalid_argument);
    CHECK_THROWS_AS(triangular_cluster_crosscheck(0, RationalFlux(1, 13)),
                    std::invalid_argument);
}
