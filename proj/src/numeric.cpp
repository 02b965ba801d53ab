#include "starspec/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "starspec/errors.hpp"

namespace starspec {

namespace {

double offdiag_mass(const std::vector<double>& a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
}

} // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n)
        throw std::invalid_argument("jacobi_eigenvalues: matrix size mismatch");
    if (n == 0) return {};
    const double off0 = offdiag_mass(a, n);
    const double target = off0 * 1e-12;
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (offdiag_mass(a, n) > target && sweep < kMaxSweeps) {
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                // negligible off-diagonal entries are flushed after a few sweeps
                if (sweep > 4 && std::abs(apq) <= 1e-15 * (std::abs(app) + std::abs(aqq))) {
                    a[p * n + q] = a[q * n + p] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    const double nrp = arp - s * (arq + tau * arp);
                    const double nrq = arq + s * (arp - tau * arq);
                    a[r * n + p] = a[p * n + r] = nrp;
                    a[r * n + q] = a[q * n + r] = nrq;
                }
            }
        }
    }
    if (offdiag_mass(a, n) > target)
        throw std::runtime_error("jacobi_eigenvalues: no convergence after 100 sweeps");
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> dense_symmetric_eigenvalues(const LoopyGraph& g, std::size_t max_vertices) {
    const std::size_t V = g.vertex_count();
    if (V > max_vertices)
        throw capacity_error("numeric eigensolver capped at " + std::to_string(max_vertices) +
                             " vertices, graph has " + std::to_string(V));
    std::vector<double> a(V * V);
    for (std::size_t u = 0; u < V; ++u)
        for (std::size_t v = 0; v < V; ++v) a[u * V + v] = static_cast<double>(g.at(u, v));
    return jacobi_eigenvalues(std::move(a), V);
}

SpectrumReport integrality_check(const std::vector<double>& sorted_eigenvalues,
                                 double tolerance) {
    SpectrumReport rep;
    rep.eigenvalues = sorted_eigenvalues;
    rep.tolerance = tolerance;
    rep.integral = true;
    for (double x : sorted_eigenvalues) {
        const long long nearest = std::llround(x);
        const double dev = std::abs(x - static_cast<double>(nearest));
        if (dev >= tolerance) rep.integral = false;
        if (!rep.clusters.empty() && rep.clusters.back().nearest == nearest) {
            auto& c = rep.clusters.back();
            ++c.count;
            c.max_deviation = std::max(c.max_deviation, dev);
        } else {
            rep.clusters.push_back({nearest, 1, dev});
        }
    }
    return rep;
}

std::size_t numeric_multiplicity(const std::vector<double>& eigenvalues, long long lambda) {
    std::size_t count = 0;
    for (double x : eigenvalues)
        if (std::llround(x) == lambda) ++count;
    return count;
}

} // namespace starspec
