#include "areaenum/spectral.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace areaenum {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& M, int n) {
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(M.rows(), M.cols());
    for (int i = 0; i < n; ++i) P = P * M;
    return P;
}

}  // namespace

RationalFlux::RationalFlux(int p_, int q_) : p(p_), q(q_) {
    if (q < 1) throw std::invalid_argument("RationalFlux: q must be >= 1");
    if (std::gcd(std::abs(p), q) != 1)
        throw std::invalid_argument("RationalFlux: p/q must be in lowest terms");
}

std::complex<double> RationalFlux::unit_root() const {
    return std::polar(1.0, angle());
}

double RationalFlux::angle() const { return 2.0 * kPi * p / q; }

Eigen::MatrixXcd hofstadter_matrix(const RationalFlux& flux, double kx, double ky) {
    const int q = flux.q;
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(q, q);
    const std::complex<double> ex = std::polar(1.0, kx);
    const std::complex<double> ey = std::polar(1.0, ky);
    for (int j = 1; j <= q; ++j) {
        const std::complex<double> qj = std::polar(1.0, flux.angle() * j);
        M(j - 1, j - 1) = qj * ey + std::conj(qj * ey);
        M(j - 1, j % q) += ex;        // cyclic superdiagonal
        M(j % q, j - 1) += std::conj(ex);
    }
    return M;
}

std::complex<double> quantum_trace(const RationalFlux& flux, int n_steps) {
    if (n_steps < 0) throw std::invalid_argument("quantum_trace: n < 0");
    const int grid = n_steps + 1;  // exact for trigonometric degree n
    detail::Accumulator<std::complex<double>> acc;
    for (int a = 0; a < grid; ++a) {
        for (int b = 0; b < grid; ++b) {
            const double kx = 2.0 * kPi * a / grid;
            const double ky = 2.0 * kPi * b / grid;
            const Eigen::MatrixXcd H = hofstadter_matrix(flux, kx, ky);
            acc.add(matrix_power(H, n_steps).trace());
        }
    }
    return acc.value() / (static_cast<double>(grid) * grid * flux.q);
}

std::vector<double> hofstadter_s_table(const RationalFlux& flux) {
    std::vector<double> s(static_cast<std::size_t>(flux.q));
    for (int k = 1; k <= flux.q; ++k) {
        const double x = 2.0 * std::sin(kPi * k * flux.p / flux.q);
        s[static_cast<std::size_t>(k - 1)] = x * x;
    }
    return s;
}

std::vector<double> triangular_s_table(const RationalFlux& flux) {
    std::vector<double> s(static_cast<std::size_t>(flux.q));
    const double theta = flux.angle();
    for (int k = 1; k <= flux.q; ++k)
        s[static_cast<std::size_t>(k - 1)] =
            4.0 * std::sin(theta * k) * std::sin(theta * (k + 1));
    return s;
}

double kreft_Z(const RationalFlux& flux, int n) {
    return general_Z(n, hofstadter_s_table(flux), 2);
}

std::vector<std::complex<double>> char_poly_coeffs(const Eigen::MatrixXcd& M) {
    const int q = static_cast<int>(M.rows());
    std::vector<std::complex<double>> traces(static_cast<std::size_t>(q) + 1);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(q, q);
    for (int j = 1; j <= q; ++j) {
        P = P * M;
        traces[static_cast<std::size_t>(j)] = P.trace();
    }
    std::vector<std::complex<double>> c(static_cast<std::size_t>(q) + 1);
    c[0] = 1.0;
    for (int m = 1; m <= q; ++m) {
        detail::Accumulator<std::complex<double>> acc;
        for (int j = 1; j <= m; ++j)
            acc.add(traces[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(m - j)]);
        c[static_cast<std::size_t>(m)] = -acc.value() / static_cast<double>(m);
    }
    return c;
}

std::vector<std::complex<double>> BandedSpectral::s_table() const {
    const int n = q();
    std::vector<std::complex<double>> s(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        std::complex<double> prod = g[static_cast<std::size_t>(k - 1)];
        for (int t = 0; t + 1 < span; ++t)
            prod *= f[static_cast<std::size_t>((k - 1 + t) % n)];
        s[static_cast<std::size_t>(k - 1)] = prod;
    }
    return s;
}

BandedSpectral BandedSpectral::hofstadter(const RationalFlux& flux) {
    BandedSpectral bands;
    bands.span = 2;
    bands.f.resize(static_cast<std::size_t>(flux.q));
    bands.g.resize(static_cast<std::size_t>(flux.q));
    for (int k = 1; k <= flux.q; ++k) {
        const std::complex<double> qk = std::polar(1.0, flux.angle() * k);
        bands.f[static_cast<std::size_t>(k - 1)] = 1.0 - qk;
        bands.g[static_cast<std::size_t>(k - 1)] = 1.0 - std::conj(qk);
    }
    return bands;
}

BandedSpectral BandedSpectral::triangular(const RationalFlux& flux) {
    BandedSpectral bands;
    bands.span = 3;
    bands.f.resize(static_cast<std::size_t>(flux.q));
    bands.g.assign(static_cast<std::size_t>(flux.q), 1.0);
    for (int k = 1; k <= flux.q; ++k)
        bands.f[static_cast<std::size_t>(k - 1)] = 2.0 * std::sin(flux.angle() * k);
    return bands;
}

Eigen::MatrixXcd secular_matrix(const BandedSpectral& bands, std::complex<double> z) {
    const int q = bands.q();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(q, q);
    for (int k = 1; k <= q; ++k) {
        M(k - 1, k % q) -= bands.f[static_cast<std::size_t>(k - 1)] * z;
        M((k - 1 + bands.span - 1) % q, k - 1) -= bands.g[static_cast<std::size_t>(k - 1)] * z;
    }
    return M;
}

TraceIdentity trace_identity_check(const RationalFlux& flux, int n) {
    if (n < 1) throw std::invalid_argument("trace_identity_check: n < 1");
    if (2 * n >= flux.q)
        throw std::invalid_argument("trace_identity_check: requires 2n < q");
    TraceIdentity result;
    result.trace = quantum_trace(flux, 2 * n);
    std::vector<double> Z(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) Z[static_cast<std::size_t>(m - 1)] = kreft_Z(flux, m);
    const double b = cluster_from_logseries(Z).back();
    const double sign = n % 2 == 0 ? -1.0 : 1.0;
    result.predicted = 2.0 * n * sign * b / flux.q;
    result.gap = std::abs(result.trace - result.predicted);
    return result;
}

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Total closed walks of the given length, all areas combined.
BigInt total_closed(Lattice lattice, int n) {
    if (lattice == Lattice::Square) {
        const BigInt half = binomial(n, n / 2);
        return half * half;
    }
    const int m = n / 3;
    return factorial(n) / (factorial(m) * factorial(m) * factorial(m));
}

Eigen::MatrixXcd clock_shift_hamiltonian(Lattice lattice, int p, int q) {
    // u is the cyclic shift (u e_j = e_{j+1}), v the clock diag(Q^j); then
    // vu = Q uv and (1/q) tr(u^a v^b Q^c) = Q^c exactly when q | a and q | b.
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(q, q);
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(q, q);
    const double theta = 2.0 * kPi * p / q;
    for (int j = 0; j < q; ++j) {
        u((j + 1) % q, j) = 1.0;
        v(j, j) = std::polar(1.0, theta * j);
    }
    const Eigen::MatrixXcd uh = u.adjoint();
    const Eigen::MatrixXcd vh = v.adjoint();
    if (lattice == Lattice::Square) return u + uh + v + vh;
    // Chiral triangular hops U = -i u v, V = i u^-1 v, W = v^-2.
    const std::complex<double> i_unit(0.0, 1.0);
    return -i_unit * (u * v) + i_unit * (uh * v) + vh * vh;
}

}  // namespace

std::complex<double> clock_shift_trace(Lattice lattice, int n_steps, int p, int q) {
    if (q < 1) throw std::invalid_argument("clock_shift_trace: q < 1");
    if (n_steps < 0) throw std::invalid_argument("clock_shift_trace: n < 0");
    const Eigen::MatrixXcd H = clock_shift_hamiltonian(lattice, p, q);
    return matrix_power(H, n_steps).trace() / static_cast<double>(q);
}

AreaDistribution extract_distribution_dft(Lattice lattice, int n_steps, int q) {
    if (n_steps < 0) throw std::invalid_argument("extract_distribution_dft: n < 0");
    AreaDistribution dist;
    dist.n_steps = n_steps;
    if (n_steps == 0) {
        dist.counts[0] = 1;
        return dist;
    }
    if (lattice == Lattice::Square && n_steps % 2 != 0) return dist;
    if (lattice == Lattice::Triangular && n_steps % 3 != 0) return dist;

    // Winding bound: u/v exponents along a word stay below w_max, so only
    // genuinely closed words hit a = b = 0 (mod q). Area bound: |A| <= a_max
    // keeps the inverse DFT alias-free.
    const int w_max = lattice == Lattice::Square ? n_steps : 2 * n_steps;
    const long a_tight = lattice == Lattice::Square
                             ? static_cast<long>(n_steps) * n_steps / 16
                             : static_cast<long>(n_steps / 3) * (n_steps / 3);
    if (q == 0) {
        const long a_safe = lattice == Lattice::Square
                                ? static_cast<long>(n_steps) * n_steps / 16 + n_steps
                                : static_cast<long>(n_steps / 3) * (n_steps / 3) + n_steps / 3;
        long candidate = std::max<long>(w_max, 2 * a_safe + 1) + 1;
        while (!is_prime(candidate)) ++candidate;
        q = static_cast<int>(candidate);
    } else {
        if (q <= w_max || q <= 2 * a_tight + 1)
            throw std::invalid_argument(
                "extract_distribution_dft: q too small to dealias this length");
        if (!is_prime(q))
            throw std::invalid_argument(
                "extract_distribution_dft: q must be prime so every nonzero flux has a "
                "primitive phase");
    }

    // At p = 0 the clock matrix degenerates to the identity and the trace no
    // longer filters closed words; the exact value of sum_A C(A) Q^A there is
    // simply the total number of closed walks.
    std::vector<std::complex<double>> traces(static_cast<std::size_t>(q));
    traces[0] = total_closed(lattice, n_steps).convert_to<double>();
    for (int p = 1; p < q; ++p)
        traces[static_cast<std::size_t>(p)] = clock_shift_trace(lattice, n_steps, p, q);

    for (int r = 0; r < q; ++r) {
        detail::Accumulator<std::complex<double>> acc;
        for (int p = 0; p < q; ++p)
            acc.add(traces[static_cast<std::size_t>(p)] *
                    std::polar(1.0, -2.0 * kPi * p * r / q));
        const std::complex<double> value = acc.value() / static_cast<double>(q);
        const double rounded = std::round(value.real());
        if (std::abs(value.imag()) > 1e-6 || std::abs(value.real() - rounded) > 1e-6)
            throw NumericFailure("extract_distribution_dft: count failed to round cleanly");
        if (rounded < 0)
            throw NumericFailure("extract_distribution_dft: negative count");
        if (rounded != 0) {
            const long area = r <= q / 2 ? r : r - q;
            dist.counts[area] = static_cast<long long>(rounded);
        }
    }
    return dist;
}

}  // namespace areaenum
