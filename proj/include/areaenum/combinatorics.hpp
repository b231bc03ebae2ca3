#pragma once

#include "areaenum/types.hpp"

#include <cstdint>
#include <iterator>
#include <vector>

namespace areaenum {

/// Binomial coefficient C(n, k). Returns 0 whenever k < 0 or k > n, so sums
/// over shifted indices can be written without explicit range guards.
BigInt binomial(long long n, long long k);

BigInt factorial(int n);

/// Compositions of n into positive parts, enumerated by a bitmask over the
/// n-1 gaps between unit cells. Bit i (least significant = leftmost gap) set
/// means "cut here", so index 0 is the single part (n) and index 2^(n-1)-1 is
/// (1,1,...,1). The index doubles as a stable work-partitioning key.
class CompositionRange {
public:
    explicit CompositionRange(int n);

    std::uint64_t size() const { return n_ == 0 ? 0 : std::uint64_t{1} << (n_ - 1); }
    int n() const { return n_; }

    /// Decode the composition at a given bitmask index.
    std::vector<int> at(std::uint64_t index) const;

    class const_iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        using reference = std::vector<int>;
        using pointer = void;

        const_iterator(const CompositionRange* range, std::uint64_t index)
            : range_(range), index_(index) {}

        value_type operator*() const { return range_->at(index_); }
        const_iterator& operator++() { ++index_; return *this; }
        const_iterator operator++(int) { auto copy = *this; ++index_; return copy; }
        bool operator==(const const_iterator& other) const { return index_ == other.index_; }
        bool operator!=(const const_iterator& other) const { return !(*this == other); }

    private:
        const CompositionRange* range_;
        std::uint64_t index_;
    };

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size()}; }

private:
    int n_;
};

/// Compositions of n whose parts may be zero, with nonzero first and last
/// part and fewer than g-1 consecutive zeros. Enumerated by a base-g counter
/// over the n-1 gaps: digit 0 joins the neighbouring units, digit d >= 1 cuts
/// and inserts d-1 zero parts. g = 2 reproduces CompositionRange.
class GCompositionRange {
public:
    GCompositionRange(int n, int g);

    std::uint64_t size() const;
    int n() const { return n_; }
    int g() const { return g_; }

    std::vector<int> at(std::uint64_t index) const;

    class const_iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        using reference = std::vector<int>;
        using pointer = void;

        const_iterator(const GCompositionRange* range, std::uint64_t index)
            : range_(range), index_(index) {}

        value_type operator*() const { return range_->at(index_); }
        const_iterator& operator++() { ++index_; return *this; }
        const_iterator operator++(int) { auto copy = *this; ++index_; return copy; }
        bool operator==(const const_iterator& other) const { return index_ == other.index_; }
        bool operator!=(const const_iterator& other) const { return !(*this == other); }

    private:
        const GCompositionRange* range_;
        std::uint64_t index_;
    };

    const_iterator begin() const { return {this, 0}; }
    const_iterator end() const { return {this, size()}; }

private:
    int n_;
    int g_;
};

/// Weight c(l_1,...,l_j) attached to a composition in the area enumeration:
///   prod_{i=1}^{j-1} C(l_i + l_{i+1}, l_i) / (l_i + l_{i+1})  *  prod_{i=2}^{j-1} l_i
/// with the one-part convention c((l)) = 1/l. Invariant under reversal.
BigRational coeff_c(const std::vector<int>& parts);

/// Generalized weight for compositions with zero parts and window span g:
///   (l_1+...+l_{g-1}-1)! / (l_1! ... l_{g-1}!)
///     * prod_{i=1}^{j-g+1} C(l_i+...+l_{i+g-1}-1, l_{i+g-1})
/// where parts beyond j count as zero. Reduces to coeff_c when g = 2.
BigRational coeff_cg(const std::vector<int>& parts, int g);

}  // namespace areaenum
