#include "areaenum/triangular.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace areaenum {

AreaDistribution triangular_distribution(int n_steps) {
    if (n_steps < 3)
        throw std::invalid_argument("triangular_distribution: n_steps < 3");
    if (n_steps > kTriangularMaxSteps)
        throw ResourceLimitError("triangular_distribution: n_steps beyond supported range");
    if (n_steps % 3 != 0) {
        AreaDistribution dist;
        dist.n_steps = n_steps;
        return dist;
    }
    return extract_distribution_dft(Lattice::Triangular, n_steps);
}

TriangularCrosscheck triangular_cluster_crosscheck(int n, const RationalFlux& flux) {
    if (n < 1) throw std::invalid_argument("triangular_cluster_crosscheck: n < 1");
    if (3 * n >= flux.q)
        throw std::invalid_argument("triangular_cluster_crosscheck: requires 3n < q");

    TriangularCrosscheck report;
    report.n = n;
    report.flux = flux;

    const std::vector<double> s = triangular_s_table(flux);
    report.b_compositions = cluster_b_compositions(n, s, 3);
    std::vector<double> Z(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) Z[static_cast<std::size_t>(m - 1)] = general_Z(m, s, 3);
    report.b_logseries = cluster_from_logseries(Z)[static_cast<std::size_t>(n - 1)];
    report.b_gap = std::abs(report.b_compositions - report.b_logseries) /
                   std::max(1.0, std::abs(report.b_compositions));

    const AreaDistribution dist = triangular_distribution(3 * n);
    detail::Accumulator<std::complex<double>> acc;
    for (const auto& [area, count] : dist.counts)
        acc.add(count.convert_to<double>() * std::polar(1.0, flux.angle() * area));
    report.weighted_sum = acc.value();
    report.measured_constant = flux.q * report.weighted_sum.real() / report.b_compositions;
    return report;
}

}  // namespace areaenum
