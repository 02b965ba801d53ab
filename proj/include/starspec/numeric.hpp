#pragma once

#include <cstdint>
#include <vector>

#include "starspec/graphs.hpp"

namespace starspec {

inline constexpr std::size_t kDefaultNumericMaxVertices = 1000;

struct IntegerCluster {
    long long nearest = 0;
    std::size_t count = 0;
    double max_deviation = 0.0;
};

struct SpectrumReport {
    std::vector<double> eigenvalues;  // sorted ascending
    std::vector<IntegerCluster> clusters;
    bool integral = false;
    double tolerance = 1e-8;
};

/// All eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic
/// Jacobi rotations, iterated until the off-diagonal Frobenius mass drops
/// below 1e-12 of its initial value. Returns them sorted ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

/// Numeric spectrum of the adjacency matrix (loops once on the diagonal).
std::vector<double> dense_symmetric_eigenvalues(
    const LoopyGraph& g, std::size_t max_vertices = kDefaultNumericMaxVertices);

/// Clusters a sorted spectrum to nearest integers; integral iff every
/// deviation is below the tolerance.
SpectrumReport integrality_check(const std::vector<double>& sorted_eigenvalues,
                                 double tolerance = 1e-8);

/// Number of eigenvalues whose nearest integer is lambda.
std::size_t numeric_multiplicity(const std::vector<double>& eigenvalues, long long lambda);

} // namespace starspec
