#include "areaenum/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace areaenum {

namespace {

BigInt to_bigint(unsigned __int128 value) {
    const std::uint64_t hi = static_cast<std::uint64_t>(value >> 64);
    const std::uint64_t lo = static_cast<std::uint64_t>(value);
    return (BigInt(hi) << 64) | lo;
}

BigInt to_bigint(const BigInt& value) { return value; }

template <class Count>
AreaDistribution square_dp(int n) {
    AreaDistribution dist;
    dist.n_steps = n;
    if (n == 0) {
        dist.counts[0] = 1;
        return dist;
    }
    if (n % 2 != 0) return dist;

    const int radius = n / 2;
    const int area_max = n * n / 16;
    const int width = 2 * radius + 1;
    const int area_dim = 2 * area_max + 1;
    const std::size_t cells = static_cast<std::size_t>(width) * width * area_dim;
    auto index = [&](int x, int y, int a) {
        return (static_cast<std::size_t>(x + radius) * width + (y + radius)) * area_dim +
               (a + area_max);
    };

    std::vector<Count> cur(cells, Count{0}), next(cells, Count{0});
    cur[index(0, 0, 0)] = 1;

    for (int k = 0; k < n; ++k) {
        const int reach = std::min(k, n - k);       // live source states
        const int dest_reach = n - (k + 1);         // closability after the step
        for (int x = -reach; x <= reach; ++x) {
            for (int y = -(reach - std::abs(x)); y <= reach - std::abs(x); ++y) {
                if (((x + y) & 1) != (k & 1)) continue;
                const std::size_t base = index(x, y, -area_max);
                for (int a = -area_max; a <= area_max; ++a) {
                    const Count& count = cur[base + (a + area_max)];
                    if (count == Count{0}) continue;
                    // Right / Left keep the area; Up adds x, Down subtracts x.
                    if (std::abs(x + 1) + std::abs(y) <= dest_reach)
                        next[index(x + 1, y, a)] += count;
                    if (std::abs(x - 1) + std::abs(y) <= dest_reach)
                        next[index(x - 1, y, a)] += count;
                    if (std::abs(x) + std::abs(y + 1) <= dest_reach)
                        next[index(x, y + 1, a + x)] += count;
                    if (std::abs(x) + std::abs(y - 1) <= dest_reach)
                        next[index(x, y - 1, a - x)] += count;
                }
            }
        }
        cur.swap(next);
        next.assign(cells, Count{0});
    }

    for (int a = -area_max; a <= area_max; ++a) {
        const Count& count = cur[index(0, 0, a)];
        if (!(count == Count{0})) dist.counts[a] = to_bigint(count);
    }
    return dist;
}

}  // namespace

AreaDistribution brute_force_distribution_square(int n_steps) {
    if (n_steps < 0) throw std::invalid_argument("brute_force_distribution_square: n < 0");
    if (n_steps > 64)
        throw ResourceLimitError(
            "brute_force_distribution_square: n > 64 exceeds the 128-bit counter bound");
    return square_dp<unsigned __int128>(n_steps);
}

AreaDistribution brute_force_distribution_square_bigint(int n_steps) {
    if (n_steps < 0) throw std::invalid_argument("brute_force_distribution_square: n < 0");
    if (n_steps > 64)
        throw ResourceLimitError("brute_force_distribution_square_bigint: n > 64");
    return square_dp<BigInt>(n_steps);
}

AreaDistribution brute_force_distribution_triangular(int n_steps) {
    if (n_steps < 0) throw std::invalid_argument("brute_force_distribution_triangular: n < 0");
    if (n_steps > 21)
        throw ResourceLimitError("brute_force_distribution_triangular: n > 21");

    AreaDistribution dist;
    dist.n_steps = n_steps;
    if (n_steps == 0) {
        dist.counts[0] = 1;
        return dist;
    }
    if (n_steps % 3 != 0) return dist;

    // State: exponents of the normal-ordered word u^a v^b Q^c built from the
    // three hops U = -i u v, V = i u^-1 v, W = v^-2. The i-phase of a word is
    // i^(-a mod 4), so words sharing (a,b,c) cannot cancel and plain counters
    // suffice; closed words have a = b = 0 and phase 1.
    const int n = n_steps;
    const int a_max = n;
    const int b_max = 2 * n;
    const long c_max = static_cast<long>(n) * (n - 1);
    const int a_dim = 2 * a_max + 1;
    const int b_dim = 2 * b_max + 1;
    const long c_dim = 2 * c_max + 1;
    const std::size_t cells = static_cast<std::size_t>(a_dim) * b_dim * c_dim;
    auto index = [&](int a, int b, long c) {
        return (static_cast<std::size_t>(a + a_max) * b_dim + (b + b_max)) * c_dim +
               (c + c_max);
    };

    std::vector<std::int64_t> cur(cells, 0), next(cells, 0);
    cur[index(0, 0, 0)] = 1;
    for (int k = 0; k < n; ++k) {
        for (int a = -std::min(k, a_max); a <= std::min(k, a_max); ++a) {
            for (int b = -2 * k; b <= k; ++b) {
                const long c_reach = static_cast<long>(k) * (k - 1);
                for (long c = -c_reach; c <= c_reach; ++c) {
                    const std::int64_t count = cur[index(a, b, c)];
                    if (count == 0) continue;
                    next[index(a + 1, b + 1, c + b)] += count;  // U: v^b u = Q^b u v^b
                    next[index(a - 1, b + 1, c - b)] += count;  // V: v^b u^-1 = Q^-b u^-1 v^b
                    next[index(a, b - 2, c)] += count;          // W = v^-2
                }
            }
        }
        cur.swap(next);
        next.assign(cells, 0);
    }

    for (long c = -c_max; c <= c_max; ++c) {
        const std::int64_t count = cur[index(0, 0, c)];
        if (count != 0) dist.counts[c] = count;
    }
    return dist;
}

AreaDistribution distribution_from_expansion(const std::vector<QPolynomial>& generators,
                                             int n_steps) {
    if (n_steps < 0) throw std::invalid_argument("distribution_from_expansion: n < 0");
    AreaDistribution dist;
    dist.n_steps = n_steps;
    for (const auto& [c, coeff] : expand_power(generators, n_steps).identity_component()) {
        if (coeff.im != 0)
            throw std::logic_error(
                "distribution_from_expansion: imaginary coefficient survived on a closed word");
        if (coeff.re < 0)
            throw std::logic_error("distribution_from_expansion: negative count");
        if (coeff.re != 0) dist.counts[c] = coeff.re;
    }
    return dist;
}

std::vector<QPolynomial> square_generators() {
    return {QPolynomial::u(1), QPolynomial::u(-1), QPolynomial::v(1), QPolynomial::v(-1)};
}

std::vector<QPolynomial> triangular_generators() {
    return {QPolynomial::monomial(GaussianInt(0, -1), 1, 1, 0),
            QPolynomial::monomial(GaussianInt(0, 1), -1, 1, 0),
            QPolynomial::monomial(1, 0, -2, 0)};
}

}  // namespace areaenum
