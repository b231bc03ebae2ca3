#pragma once

#include "areaenum/types.hpp"

#include <map>
#include <vector>

namespace areaenum {

/// Double-binomial kernel of a single composition (l_1,...,l_j) of n/2:
/// the area-resolved sum over the interior indices k_3..k_j,
///   sum_k prod_{i>=3} C(2 l_i, k_i)
///         * C(2 l_1, l_1 + A + sum_{i>=3} (i-2)(k_i - l_i))
///         * C(2 l_2, l_2 - A - sum_{i>=3} (i-1)(k_i - l_i)),
/// with one-part compositions contributing C(2 l_1, l_1) at A = 0 only.
/// Out-of-range binomials vanish, which truncates every sum to finitely
/// many live terms.
std::map<long, BigInt> single_sum_expansion(const std::vector<int>& parts);

/// Exact count of closed n-step square-lattice paths enclosing the given
/// algebraic area, assembled from the composition kernels:
///   C_n(A) = n * sum over compositions p of n/2 of coeff_c(p) * kernel_p(A).
/// Zero for odd n.
BigInt count_closed_paths_square(int n_steps, long area, int workers = 1);

/// Full area distribution from the same composition sum. The composition
/// bitmask space is split into contiguous index ranges per worker and the
/// partial sums are merged in index order; the arithmetic is exact rational,
/// so the result is identical for every worker count.
AreaDistribution area_distribution_square(int n_steps, int workers = 1);

/// Composition sum restricted to bitmask indices not exceeding their
/// bit-reversed mirror, with non-palindromic compositions weighted twice.
/// Equals count_closed_paths_square because mirrored compositions have equal
/// weights and kernels.
BigInt count_closed_paths_square_mirror_reduced(int n_steps, long area);

/// One area bin of the distribution scaled for comparison with the limiting
/// area law: scaled = n * C_n(A) / C(n, n/2)^2 against pi / cosh^2(2 pi A/n).
struct LevyRow {
    long area = 0;
    double scaled = 0.0;
    double levy = 0.0;
    double abs_error = 0.0;
};

/// Rows for every area in the support of the n-step distribution, ordered by
/// area. Uses the composition formula for n <= 24 and the dynamic-programming
/// counter beyond (n <= 64).
std::vector<LevyRow> levy_comparison(int n_steps);

}  // namespace areaenum
