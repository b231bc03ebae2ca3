#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "areaenum/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace areaenum;

namespace {

std::vector<std::vector<int>> collect(const CompositionRange& range) {
    return {range.begin(), range.end()};
}

std::vector<std::vector<int>> collect(const GCompositionRange& range) {
    return {range.begin(), range.end()};
}

}  // namespace

TEST_CASE("binomial basics and out-of-range zeros") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(2, -1) == 0);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    // Pascal rule on a grid of values, including boundary columns.
    for (int n = 1; n <= 40; ++n)
        for (int k = -2; k <= n + 2; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("compositions of small n") {
    CHECK(CompositionRange(0).size() == 0);
    CHECK(collect(CompositionRange(1)) == std::vector<std::vector<int>>{{1}});

    auto c3 = collect(CompositionRange(3));
    CHECK(c3.size() == 4);
    std::set<std::vector<int>> as_set(c3.begin(), c3.end());
    CHECK(as_set == std::set<std::vector<int>>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
    // Index 0 is the single-part composition; the all-cuts index is last.
    CHECK(c3.front() == std::vector<int>{3});
    CHECK(c3.back() == std::vector<int>{1, 1, 1});
}

TEST_CASE("composition stream has 2^(n-1) items, each a composition of n") {
    for (int n = 1; n <= 12; ++n) {
        CompositionRange range(n);
        CHECK(range.size() == (std::uint64_t{1} << (n - 1)));
        std::set<std::vector<int>> seen;
        for (const auto& parts : range) {
            int sum = 0;
            for (int l : parts) {
                CHECK(l >= 1);
                sum += l;
            }
            CHECK(sum == n);
            seen.insert(parts);
        }
        CHECK(seen.size() == range.size());
    }
}

TEST_CASE("g-compositions reproduce listed small cases") {
    auto g24 = collect(GCompositionRange(2, 4));
    CHECK(g24 == std::vector<std::vector<int>>{{2}, {1, 1}, {1, 0, 1}, {1, 0, 0, 1}});

    auto g33 = collect(GCompositionRange(3, 3));
    CHECK(g33.size() == 9);
    std::set<std::vector<int>> as_set(g33.begin(), g33.end());
    CHECK(as_set == std::set<std::vector<int>>{{3},
                                               {1, 2},
                                               {2, 1},
                                               {1, 1, 1},
                                               {1, 0, 2},
                                               {2, 0, 1},
                                               {1, 0, 1, 1},
                                               {1, 1, 0, 1},
                                               {1, 0, 1, 0, 1}});
}

TEST_CASE("g-composition stream invariants") {
    for (int g = 2; g <= 5; ++g) {
        for (int n = 1; n <= 8; ++n) {
            GCompositionRange range(n, g);
            std::uint64_t expected = 1;
            for (int i = 0; i + 1 < n; ++i) expected *= static_cast<std::uint64_t>(g);
            CHECK(range.size() == expected);
            std::set<std::vector<int>> seen;
            for (const auto& parts : range) {
                REQUIRE(!parts.empty());
                CHECK(parts.front() >= 1);
                CHECK(parts.back() >= 1);
                int sum = 0, zero_run = 0;
                for (int l : parts) {
                    CHECK(l >= 0);
                    sum += l;
                    zero_run = l == 0 ? zero_run + 1 : 0;
                    CHECK(zero_run <= g - 2);
                }
                CHECK(sum == n);
                seen.insert(parts);
            }
            CHECK(seen.size() == range.size());
        }
    }
}

TEST_CASE("g = 2 stream matches the plain composition stream item by item") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(collect(GCompositionRange(n, 2)) == collect(CompositionRange(n)));
    }
}

TEST_CASE("coeff_c on pinned small compositions") {
    CHECK(coeff_c({1}) == BigRational(1));
    CHECK(coeff_c({2}) == BigRational(1, 2));
    CHECK(coeff_c({3}) == BigRational(1, 3));
    CHECK(coeff_c({1, 1}) == BigRational(1));
    CHECK(coeff_c({2, 1}) == BigRational(1));
    CHECK(coeff_c({1, 2}) == BigRational(1));
    CHECK(coeff_c({2, 2}) == BigRational(3, 2));
    CHECK(coeff_c({1, 1, 1}) == BigRational(1));
    CHECK_THROWS_AS(coeff_c({}), std::invalid_argument);
    CHECK_THROWS_AS(coeff_c({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("coeff_c is invariant under reversal") {
    for (int n = 1; n <= 10; ++n) {
        for (auto parts : CompositionRange(n)) {
            auto reversed = parts;
            std::reverse(reversed.begin(), reversed.end());
            CHECK(coeff_c(parts) == coeff_c(reversed));
        }
    }
}

TEST_CASE("coeff_cg on pinned small generalized compositions") {
    CHECK(coeff_cg({3}, 3) == BigRational(1, 3));
    CHECK(coeff_cg({1, 0, 1, 0, 1}, 3) == BigRational(1));
    CHECK(coeff_cg({1, 1}, 3) == BigRational(1));
    CHECK(coeff_cg({2, 1}, 3) == BigRational(1));
    CHECK(coeff_cg({1, 0, 2}, 3) == BigRational(1));
    CHECK(coeff_cg({2, 0, 1}, 3) == BigRational(1));
    CHECK_THROWS_AS(coeff_cg({1, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(coeff_cg({0, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(coeff_cg({1, 0, 0, 1}, 3), std::invalid_argument);
}

TEST_CASE("coeff_cg with g = 2 equals coeff_c on every composition") {
    for (int n = 1; n <= 10; ++n) {
        for (auto parts : CompositionRange(n)) {
            CHECK(coeff_cg(parts, 2) == coeff_c(parts));
        }
    }
}

TEST_CASE("coeff_cg is positive on valid g-compositions") {
    for (int g = 2; g <= 4; ++g)
        for (int n = 1; n <= 7; ++n)
            for (auto parts : GCompositionRange(n, g))
                CHECK(coeff_cg(parts, g) > 0);
}
