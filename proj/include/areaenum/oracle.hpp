#pragma once

#include "areaenum/qword.hpp"
#include "areaenum/types.hpp"

namespace areaenum {

/// Exact area distribution of closed n-step square-lattice paths, by dynamic
/// programming over (position, partial area). Closable states after k steps
/// satisfy |x|+|y| <= min(k, n-k), which also bounds every partial area by
/// floor(n^2/16); 128-bit counters therefore suffice through n = 64.
/// Supports n <= 64; throws ResourceLimitError beyond.
AreaDistribution brute_force_distribution_square(int n_steps);

/// Same distribution with arbitrary-precision counters throughout, as an
/// independent check of the 128-bit fast path.
AreaDistribution brute_force_distribution_square_bigint(int n_steps);

/// Closed n-step chiral paths on the triangular lattice, counted per Q
/// exponent by dynamic programming over normal-ordered word exponents.
/// Nonempty only when n is a multiple of 3. Supports n <= 21.
AreaDistribution brute_force_distribution_triangular(int n_steps);

/// Identity component of (sum of generators)^n as an area distribution.
/// Every surviving coefficient must be a plain non-negative integer (no
/// imaginary part); throws std::logic_error otherwise.
AreaDistribution distribution_from_expansion(const std::vector<QPolynomial>& generators,
                                             int n_steps);

/// Hopping operators whose n-th power's identity component enumerates the
/// corresponding closed paths by area.
std::vector<QPolynomial> square_generators();
std::vector<QPolynomial> triangular_generators();

}  // namespace areaenum
