#include "areaenum/combinatorics.hpp"

#include <stdexcept>

namespace areaenum {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    // r stays integral at every step: after i factors it equals C(n-k+i, i).
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

CompositionRange::CompositionRange(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("CompositionRange: n must be >= 0");
    if (n > 63) throw ResourceLimitError("CompositionRange: n > 63 exceeds the 64-bit index space");
}

std::vector<int> CompositionRange::at(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("CompositionRange::at: index out of range");
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < n_ - 1; ++gap) {
        if (index >> gap & 1) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    if (n_ > 0) parts.push_back(run);
    return parts;
}

GCompositionRange::GCompositionRange(int n, int g) : n_(n), g_(g) {
    if (n < 0) throw std::invalid_argument("GCompositionRange: n must be >= 0");
    if (g < 2) throw std::invalid_argument("GCompositionRange: g must be >= 2");
    // size() must fit in 64 bits: g^(n-1) < 2^63.
    std::uint64_t count = 1;
    for (int i = 0; i + 1 < n; ++i) {
        if (count > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(g))
            throw ResourceLimitError("GCompositionRange: g^(n-1) exceeds the 64-bit index space");
        count *= static_cast<std::uint64_t>(g);
    }
}

std::uint64_t GCompositionRange::size() const {
    if (n_ == 0) return 0;
    std::uint64_t count = 1;
    for (int i = 0; i + 1 < n_; ++i) count *= static_cast<std::uint64_t>(g_);
    return count;
}

std::vector<int> GCompositionRange::at(std::uint64_t index) const {
    if (index >= size()) throw std::out_of_range("GCompositionRange::at: index out of range");
    std::vector<int> parts;
    int run = 1;
    for (int gap = 0; gap < n_ - 1; ++gap) {
        int digit = static_cast<int>(index % static_cast<std::uint64_t>(g_));
        index /= static_cast<std::uint64_t>(g_);
        if (digit == 0) {
            ++run;
        } else {
            parts.push_back(run);
            for (int z = 1; z < digit; ++z) parts.push_back(0);
            run = 1;
        }
    }
    if (n_ > 0) parts.push_back(run);
    return parts;
}

BigRational coeff_c(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("coeff_c: empty composition");
    for (int l : parts)
        if (l < 1) throw std::invalid_argument("coeff_c: parts must be positive");
    const int j = static_cast<int>(parts.size());
    if (j == 1) return BigRational(1, parts[0]);
    BigRational r = 1;
    for (int i = 0; i + 1 < j; ++i) {
        const int s = parts[i] + parts[i + 1];
        r *= BigRational(binomial(s, parts[i]), s);
    }
    for (int i = 1; i + 1 < j; ++i) r *= parts[i];
    return r;
}

BigRational coeff_cg(const std::vector<int>& parts, int g) {
    if (g < 2) throw std::invalid_argument("coeff_cg: g must be >= 2");
    if (parts.empty()) throw std::invalid_argument("coeff_cg: empty composition");
    if (parts.front() < 1 || parts.back() < 1)
        throw std::invalid_argument("coeff_cg: first and last part must be positive");
    int zero_run = 0;
    for (int l : parts) {
        if (l < 0) throw std::invalid_argument("coeff_cg: negative part");
        zero_run = l == 0 ? zero_run + 1 : 0;
        if (zero_run > g - 2)
            throw std::invalid_argument("coeff_cg: more than g-2 consecutive zero parts");
    }
    const int j = static_cast<int>(parts.size());
    auto part = [&](int i) { return i < j ? parts[i] : 0; };  // zero-padded, 0-based

    int head = 0;
    for (int i = 0; i < g - 1; ++i) head += part(i);
    BigRational r(factorial(head - 1), 1);
    for (int i = 0; i < g - 1; ++i) r /= factorial(part(i));

    for (int i = 0; i + g - 1 < j; ++i) {
        int window = 0;
        for (int t = 0; t < g; ++t) window += part(i + t);
        if (window < 1) throw std::logic_error("coeff_cg: empty part window");
        r *= binomial(window - 1, part(i + g - 1));
    }
    return r;
}

}  // namespace areaenum
