#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace areaenum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a computation would exceed the configured desk-scale bounds
/// (state space, word count, matrix size).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a floating-point pipeline fails its own consistency check,
/// e.g. a DFT-extracted count that does not round cleanly to an integer.
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact count of closed paths per enclosed algebraic area.
///
/// Areas are signed integers (one square-lattice cell or one Q-exponent unit
/// on the triangular lattice); counts are arbitrary-precision integers.
struct AreaDistribution {
    int n_steps = 0;
    std::map<long, BigInt> counts;

    /// Count at a given area, zero outside the support.
    const BigInt& at(long area) const {
        static const BigInt kZero = 0;
        auto it = counts.find(area);
        return it == counts.end() ? kZero : it->second;
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [area, count] : counts) t += count;
        return t;
    }

    bool symmetric() const {
        for (const auto& [area, count] : counts)
            if (count != at(-area)) return false;
        return true;
    }

    long min_area() const { return counts.empty() ? 0 : counts.begin()->first; }
    long max_area() const { return counts.empty() ? 0 : counts.rbegin()->first; }

    friend bool operator==(const AreaDistribution& lhs, const AreaDistribution& rhs) {
        return lhs.n_steps == rhs.n_steps && lhs.counts == rhs.counts;
    }
};

}  // namespace areaenum
