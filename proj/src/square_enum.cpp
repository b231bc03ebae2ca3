#include "areaenum/square_enum.hpp"

#include "areaenum/combinatorics.hpp"
#include "areaenum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace areaenum {

namespace {

/// Odometer over the interior indices k_3..k_j; reports each tuple's
/// binomial product together with the two running shifts
/// sigma1 = sum (i-2)(k_i - l_i) and sigma2 = sum (i-1)(k_i - l_i).
template <class Visit>
void for_each_interior_tuple(const std::vector<int>& parts, Visit&& visit) {
    const int j = static_cast<int>(parts.size());
    const int vars = j - 2;
    std::vector<int> k(static_cast<std::size_t>(std::max(vars, 0)), 0);
    std::vector<std::vector<BigInt>> rows(k.size());
    for (int t = 0; t < vars; ++t) {
        const int l = parts[static_cast<std::size_t>(t) + 2];
        auto& row = rows[static_cast<std::size_t>(t)];
        row.reserve(static_cast<std::size_t>(2 * l + 1));
        for (int kk = 0; kk <= 2 * l; ++kk) row.push_back(binomial(2 * l, kk));
    }
    // Start with every k_i = 0, i.e. shifts from k_i - l_i = -l_i.
    long sigma1 = 0, sigma2 = 0;
    for (int t = 0; t < vars; ++t) {
        sigma1 -= static_cast<long>(t + 1) * parts[static_cast<std::size_t>(t) + 2];
        sigma2 -= static_cast<long>(t + 2) * parts[static_cast<std::size_t>(t) + 2];
    }
    while (true) {
        BigInt prod = 1;
        for (int t = 0; t < vars; ++t)
            prod *= rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(k[static_cast<std::size_t>(t)])];
        visit(prod, sigma1, sigma2);

        int t = 0;
        while (t < vars) {
            if (k[static_cast<std::size_t>(t)] < 2 * parts[static_cast<std::size_t>(t) + 2]) {
                ++k[static_cast<std::size_t>(t)];
                sigma1 += t + 1;
                sigma2 += t + 2;
                break;
            }
            sigma1 -= static_cast<long>(t + 1) * k[static_cast<std::size_t>(t)];
            sigma2 -= static_cast<long>(t + 2) * k[static_cast<std::size_t>(t)];
            k[static_cast<std::size_t>(t)] = 0;
            ++t;
        }
        if (t == vars) break;
    }
}

void validate_parts(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("single_sum_expansion: empty composition");
    for (int l : parts)
        if (l < 1) throw std::invalid_argument("single_sum_expansion: parts must be positive");
}

/// Kernel value at one fixed area.
BigInt single_sum_at(const std::vector<int>& parts, long area) {
    const int j = static_cast<int>(parts.size());
    if (j == 1) return area == 0 ? binomial(2 * parts[0], parts[0]) : BigInt(0);
    const long l1 = parts[0], l2 = parts[1];
    BigInt total = 0;
    for_each_interior_tuple(parts, [&](const BigInt& prod, long sigma1, long sigma2) {
        if (prod == 0) return;
        total += prod * binomial(2 * l1, l1 + area + sigma1) * binomial(2 * l2, l2 - area - sigma2);
    });
    return total;
}

int clamp_workers(int workers, std::uint64_t items) {
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers),
                                                    std::max<std::uint64_t>(items, 1)));
}

/// Composition-sum accumulator over a contiguous bitmask range, one area.
BigRational accumulate_count(const CompositionRange& range, std::uint64_t lo, std::uint64_t hi,
                             long area) {
    BigRational acc = 0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const auto parts = range.at(mask);
        const BigInt kernel = single_sum_at(parts, area);
        if (kernel != 0) acc += coeff_c(parts) * BigRational(kernel);
    }
    return acc;
}

/// Composition-sum accumulator over a contiguous bitmask range, all areas.
std::map<long, BigRational> accumulate_distribution(const CompositionRange& range,
                                                    std::uint64_t lo, std::uint64_t hi) {
    std::map<long, BigRational> acc;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const auto parts = range.at(mask);
        const BigRational weight = coeff_c(parts);
        for (const auto& [area, kernel] : single_sum_expansion(parts))
            acc[area] += weight * BigRational(kernel);
    }
    return acc;
}

BigInt to_integer(const BigRational& value, int n_steps) {
    const BigRational scaled = value * n_steps;
    if (boost::multiprecision::denominator(scaled) != 1)
        throw std::logic_error("composition sum did not produce an integer count");
    return boost::multiprecision::numerator(scaled);
}

}  // namespace

std::map<long, BigInt> single_sum_expansion(const std::vector<int>& parts) {
    validate_parts(parts);
    const int j = static_cast<int>(parts.size());
    std::map<long, BigInt> result;
    if (j == 1) {
        result[0] = binomial(2 * parts[0], parts[0]);
        return result;
    }
    const long l1 = parts[0], l2 = parts[1];
    for_each_interior_tuple(parts, [&](const BigInt& prod, long sigma1, long sigma2) {
        if (prod == 0) return;
        // Both trailing binomials are nonzero only inside this area window.
        const long lo = std::max(-l1 - sigma1, -l2 - sigma2);
        const long hi = std::min(l1 - sigma1, l2 - sigma2);
        for (long area = lo; area <= hi; ++area) {
            result[area] +=
                prod * binomial(2 * l1, l1 + area + sigma1) * binomial(2 * l2, l2 - area - sigma2);
        }
    });
    return result;
}

BigInt count_closed_paths_square(int n_steps, long area, int workers) {
    if (n_steps < 0) throw std::invalid_argument("count_closed_paths_square: n < 0");
    if (n_steps == 0) return area == 0 ? 1 : 0;
    if (n_steps % 2 != 0) return 0;

    CompositionRange range(n_steps / 2);
    const std::uint64_t items = range.size();
    const int used = clamp_workers(workers, items);
    std::vector<BigRational> partial(static_cast<std::size_t>(used));
    std::vector<std::thread> pool;
    for (int w = 0; w < used; ++w) {
        const std::uint64_t lo = items * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(used);
        const std::uint64_t hi = items * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(used);
        pool.emplace_back([&, w, lo, hi] { partial[static_cast<std::size_t>(w)] = accumulate_count(range, lo, hi, area); });
    }
    for (auto& t : pool) t.join();
    BigRational acc = 0;
    for (const auto& p : partial) acc += p;
    return to_integer(acc, n_steps);
}

AreaDistribution area_distribution_square(int n_steps, int workers) {
    if (n_steps < 0) throw std::invalid_argument("area_distribution_square: n < 0");
    AreaDistribution dist;
    dist.n_steps = n_steps;
    if (n_steps == 0) {
        dist.counts[0] = 1;
        return dist;
    }
    if (n_steps % 2 != 0) return dist;

    CompositionRange range(n_steps / 2);
    const std::uint64_t items = range.size();
    const int used = clamp_workers(workers, items);
    std::vector<std::map<long, BigRational>> partial(static_cast<std::size_t>(used));
    std::vector<std::thread> pool;
    for (int w = 0; w < used; ++w) {
        const std::uint64_t lo = items * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(used);
        const std::uint64_t hi = items * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(used);
        pool.emplace_back([&, w, lo, hi] { partial[static_cast<std::size_t>(w)] = accumulate_distribution(range, lo, hi); });
    }
    for (auto& t : pool) t.join();

    std::map<long, BigRational> acc;
    for (const auto& p : partial)
        for (const auto& [area, value] : p) acc[area] += value;
    for (const auto& [area, value] : acc) {
        BigInt count = to_integer(value, n_steps);
        if (count < 0) throw std::logic_error("negative path count");
        if (count != 0) dist.counts[area] = count;
    }
    return dist;
}

BigInt count_closed_paths_square_mirror_reduced(int n_steps, long area) {
    if (n_steps < 0) throw std::invalid_argument("count_closed_paths_square_mirror_reduced: n < 0");
    if (n_steps == 0) return area == 0 ? 1 : 0;
    if (n_steps % 2 != 0) return 0;

    CompositionRange range(n_steps / 2);
    const int gaps = n_steps / 2 - 1;
    auto mirror = [gaps](std::uint64_t mask) {
        std::uint64_t rev = 0;
        for (int b = 0; b < gaps; ++b)
            if (mask >> b & 1) rev |= std::uint64_t{1} << (gaps - 1 - b);
        return rev;
    };

    BigRational acc = 0;
    for (std::uint64_t mask = 0; mask < range.size(); ++mask) {
        const std::uint64_t rev = mirror(mask);
        if (rev < mask) continue;  // counted at its mirror image
        const auto parts = range.at(mask);
        const BigInt kernel = single_sum_at(parts, area);
        if (kernel == 0) continue;
        const int weight = rev == mask ? 1 : 2;
        acc += coeff_c(parts) * BigRational(kernel) * weight;
    }
    return to_integer(acc, n_steps);
}

std::vector<LevyRow> levy_comparison(int n_steps) {
    if (n_steps < 2 || n_steps % 2 != 0)
        throw std::invalid_argument("levy_comparison: n must be a positive even number");
    AreaDistribution dist;
    if (n_steps <= 24) {
        const unsigned hw = std::thread::hardware_concurrency();
        dist = area_distribution_square(n_steps, hw ? static_cast<int>(hw) : 1);
    } else if (n_steps <= 64) {
        dist = brute_force_distribution_square(n_steps);
    } else {
        throw ResourceLimitError("levy_comparison: n > 64");
    }

    const BigInt total = dist.total();
    std::vector<LevyRow> rows;
    rows.reserve(dist.counts.size());
    for (const auto& [area, count] : dist.counts) {
        LevyRow row;
        row.area = area;
        row.scaled = (BigRational(count * n_steps) / BigRational(total)).convert_to<double>();
        const double u = 2.0 * std::numbers::pi * static_cast<double>(area) / n_steps;
        row.levy = std::numbers::pi / (std::cosh(u) * std::cosh(u));
        row.abs_error = std::abs(row.scaled - row.levy);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace areaenum
