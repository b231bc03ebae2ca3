#pragma once

#include "areaenum/combinatorics.hpp"
#include "areaenum/types.hpp"

#include <Eigen/Dense>

#include <complex>
#include <type_traits>
#include <vector>

namespace areaenum {

/// Rational magnetic flux p/q per unit cell, in lowest terms.
struct RationalFlux {
    int p;
    int q;

    RationalFlux(int p_, int q_);

    /// Q = exp(2 pi i p / q).
    std::complex<double> unit_root() const;
    double angle() const;
};

/// q x q one-magnetic-cell Bloch Hamiltonian of a charged particle hopping
/// on the square lattice: diagonal entry j is Q^j e^(i ky) + Q^-j e^(-i ky),
/// the cyclic superdiagonal carries e^(i kx) and the cyclic subdiagonal
/// e^(-i kx). Hermitian for real momenta.
Eigen::MatrixXcd hofstadter_matrix(const RationalFlux& flux, double kx, double ky);

/// (1/q) tr H^n averaged over the Brillouin zone, evaluated exactly on the
/// uniform (n+1) x (n+1) momentum grid (the integrand is a trigonometric
/// polynomial of degree n per axis). Equals sum_A C_n(A) Q^A for every q.
std::complex<double> quantum_trace(const RationalFlux& flux, int n_steps);

/// Hofstadter band ingredients s_k = 4 sin^2(pi k p / q), k = 1..q.
std::vector<double> hofstadter_s_table(const RationalFlux& flux);

/// Triangular-lattice analogue s_k = 4 sin(2 pi k p/q) sin(2 pi (k+1) p/q).
std::vector<double> triangular_s_table(const RationalFlux& flux);

namespace detail {

inline void neumaier_add(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
        comp += (sum - t) + x;
    else
        comp += (x - t) + sum;
    sum = t;
}

/// Compensated accumulator in floating point, plain sum otherwise.
template <class T, class = void>
struct Accumulator {
    T sum{};
    void add(const T& x) { sum += x; }
    T value() const { return sum; }
};

template <>
struct Accumulator<double> {
    double sum = 0, comp = 0;
    void add(double x) { neumaier_add(sum, comp, x); }
    double value() const { return sum + comp; }
};

template <>
struct Accumulator<std::complex<double>> {
    double re = 0, re_comp = 0, im = 0, im_comp = 0;
    void add(const std::complex<double>& x) {
        neumaier_add(re, re_comp, x.real());
        neumaier_add(im, im_comp, x.imag());
    }
    std::complex<double> value() const { return {re + re_comp, im + im_comp}; }
};

template <class T>
T from_rational(const BigRational& r) {
    if constexpr (std::is_same_v<T, BigRational>)
        return r;
    else
        return T(r.convert_to<double>());
}

}  // namespace detail

/// Nested band sum with argument shifts of g between levels:
///   Z(n) = sum_{k1=1}^{q-g(n-1)} s(k1 + g(n-1))
///          sum_{k2=1}^{k1} s(k2 + g(n-2)) ... sum_{kn=1}^{k_{n-1}} s(kn),
/// computed by a prefix-sum recursion in O(n q). s is 1-indexed through
/// s[k-1]; Z(0) = 1 and Z(n) = 0 once the outer range is empty.
template <class T>
T general_Z(int n, const std::vector<T>& s, int g) {
    if (n < 0) throw std::invalid_argument("general_Z: n < 0");
    if (g < 2) throw std::invalid_argument("general_Z: g < 2");
    const int q = static_cast<int>(s.size());
    if (n == 0) return T(1);
    if (q - g * (n - 1) < 1) return T(0);

    // level[k-1] = A_t(k); prefix accumulates sum_{k' <= k} A_t(k').
    std::vector<T> level(s.begin(), s.end());
    for (int t = 2; t <= n; ++t) {
        const int len = q - g * (t - 1);
        std::vector<T> next(static_cast<std::size_t>(len));
        detail::Accumulator<T> prefix;
        for (int k = 1; k <= len; ++k) {
            prefix.add(level[static_cast<std::size_t>(k - 1)]);
            next[static_cast<std::size_t>(k - 1)] =
                s[static_cast<std::size_t>(k + g * (t - 1) - 1)] * prefix.value();
        }
        level.swap(next);
    }
    detail::Accumulator<T> total;
    for (const T& x : level) total.add(x);
    return total.value();
}

/// Kreft coefficient Z(n) of the Hofstadter secular determinant at flux p/q.
double kreft_Z(const RationalFlux& flux, int n);

/// Logarithm coefficients of the series 1 + sum_{m>=1} Z_m z^m: input
/// Z[i] = Z(i+1), output b[i] = b(i+1) with
///   b_n = Z_n - (1/n) sum_{k=1}^{n-1} k b_k Z_{n-k}.
template <class T>
std::vector<T> cluster_from_logseries(const std::vector<T>& Z) {
    std::vector<T> b(Z.size());
    for (std::size_t n = 1; n <= Z.size(); ++n) {
        detail::Accumulator<T> acc;
        acc.add(Z[n - 1] * T(static_cast<int>(n)));
        for (std::size_t k = 1; k < n; ++k)
            acc.add(-(T(static_cast<int>(k)) * b[k - 1] * Z[n - k - 1]));
        b[n - 1] = acc.value() / T(static_cast<int>(n));
    }
    return b;
}

/// The same cluster coefficient directly as a sum over compositions with
/// zero parts admitted (span g):
///   b(n) = (-1)^(n+1) sum_p coeff_cg(p, g)
///          sum_{k=1}^{q-j+1} s(k)^(l_1) s(k+1)^(l_2) ... s(k+j-1)^(l_j).
template <class T>
T cluster_b_compositions(int n, const std::vector<T>& s, int g);

/// Coefficients c_0..c_q of det(I - z M) via the Newton trace recurrence
/// c_m = -(1/m) sum_{j=1}^m tr(M^j) c_{m-j}.
std::vector<std::complex<double>> char_poly_coeffs(const Eigen::MatrixXcd& M);

/// Band data (f, g) of a secular matrix whose determinant generates the
/// Z(n): unit diagonal, -f(k) z on the cyclic superdiagonal (row k, column
/// k+1) and -g(k) z placed g-1 rows below the diagonal (row k+g-2, column k,
/// cyclically). The band product reconstructs s(k) = g(k) prod_t f(k+t).
struct BandedSpectral {
    int span;  // the g of the Z recursion
    std::vector<std::complex<double>> f;
    std::vector<std::complex<double>> g;

    int q() const { return static_cast<int>(f.size()); }
    std::vector<std::complex<double>> s_table() const;

    static BandedSpectral hofstadter(const RationalFlux& flux);
    static BandedSpectral triangular(const RationalFlux& flux);
};

Eigen::MatrixXcd secular_matrix(const BandedSpectral& bands, std::complex<double> z);

/// Both sides of the trace identity
///   (1/q) integral tr H^(2n) = 2n (-1)^(n+1) b(n) / q
/// with b(n) from the Kreft coefficients. Requires 2n < q.
struct TraceIdentity {
    std::complex<double> trace;
    double predicted;
    double gap;
};
TraceIdentity trace_identity_check(const RationalFlux& flux, int n);

enum class Lattice { Square, Triangular };

/// (1/q) tr H_p^n for the q x q clock-and-shift realization of the hopping
/// operators at flux p/q (p need not be coprime to q). Equals the aliased
/// series sum_A C(A) Q^A once q exceeds the dealiasing bound.
std::complex<double> clock_shift_trace(Lattice lattice, int n_steps, int p, int q);

/// Area distribution recovered from the clock-and-shift traces by an inverse
/// DFT over p = 0..q-1. q = 0 picks the smallest safe prime; an explicit q
/// must be prime (so every nonzero p has a primitive phase and the p = 0
/// trace can be replaced by the exact walk total) and must exceed both the
/// winding bound (n for square, 2n for triangular) and twice the maximal
/// area. Counts must round to integers within 1e-6 or NumericFailure is
/// thrown.
AreaDistribution extract_distribution_dft(Lattice lattice, int n_steps, int q = 0);

template <class T>
T cluster_b_compositions(int n, const std::vector<T>& s, int g) {
    if (n < 1) throw std::invalid_argument("cluster_b_compositions: n < 1");
    const int q = static_cast<int>(s.size());
    detail::Accumulator<T> acc;
    for (const auto& parts : GCompositionRange(n, g)) {
        const int j = static_cast<int>(parts.size());
        if (j > q) continue;
        const T weight = detail::from_rational<T>(coeff_cg(parts, g));
        detail::Accumulator<T> window_sum;
        for (int k = 1; k + j - 1 <= q; ++k) {
            T term(1);
            for (int i = 0; i < j; ++i) {
                const T& base = s[static_cast<std::size_t>(k + i - 1)];
                for (int e = 0; e < parts[static_cast<std::size_t>(i)]; ++e) term = term * base;
            }
            window_sum.add(term);
        }
        acc.add(weight * window_sum.value());
    }
    const T sign = n % 2 == 0 ? T(-1) : T(1);
    return sign * acc.value();
}

}  // namespace areaenum
