#pragma once

// Closed chiral walks on the triangular lattice, counted by algebraic area.
// The distribution itself comes from clock-and-shift traces; the cross-check
// ties those counts to the g = 3 cluster coefficients of the band spectrum.

#include "areaenum/spectral.hpp"
#include "areaenum/types.hpp"

#include <complex>

namespace areaenum {

/// Exact distribution of algebraic area over closed chiral triangular walks
/// of n_steps hops.  Closure needs equal numbers of the three hop directions,
/// so the result is empty unless 3 | n_steps.
///
/// Throws std::invalid_argument for n_steps < 3 and ResourceLimitError above
/// kTriangularMaxSteps (the trace denominator grows like (n/3)^2, so matrix
/// powers dominate beyond that).
AreaDistribution triangular_distribution(int n_steps);

inline constexpr int kTriangularMaxSteps = 45;

/// Consistency report linking the cluster coefficient b(n) of the triangular
/// band spectrum at the given flux to the area distribution of closed walks
/// of 3n steps.  b(n) is evaluated twice (composition sum and log-series of
/// the nested band sums); the walk side enters through the phase-weighted
/// count sum_A C_{3n}(A) Q^A.  measured_constant reports
/// q * Re(weighted_sum) / b(n), which comes out flux independent; the suite
/// records the measured value rather than assuming one.
struct TriangularCrosscheck {
    int n = 0;                  // cluster order; the walk length is 3n
    RationalFlux flux{0, 1};
    double b_compositions = 0;  // g = 3 composition sum
    double b_logseries = 0;     // from the log-series recursion
    double b_gap = 0;           // relative disagreement between the two
    std::complex<double> weighted_sum;  // sum_A C_{3n}(A) Q^A
    double measured_constant = 0;       // q * Re(weighted_sum) / b(n)
};

/// Requires 3n < flux.q so the phase sum determines b(n) without aliasing.
TriangularCrosscheck triangular_cluster_crosscheck(int n, const RationalFlux& flux);

}  // namespace areaenum
