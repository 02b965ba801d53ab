#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "starspec/exec.hpp"
#include "starspec/graphs.hpp"

namespace starspec {

using BigInt = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
struct ExactMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> a;

    ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    BigInt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// A - lambda*I for the adjacency matrix of g (loops count once on the diagonal).
ExactMatrix adjacency_matrix(const LoopyGraph& g, long long lambda = 0);

/// Exact A*x; loops contribute their count times x(u).
std::vector<BigInt> exact_matvec(const LoopyGraph& g, std::span<const long long> x,
                                 Exec exec = Exec::parallel);

struct VerifyResult {
    bool pass = true;
    std::size_t first_failed = 0;
};

/// Checks A*x = lambda*x coordinate-wise in exact arithmetic.
/// Throws std::invalid_argument on the zero vector (vacuous claim).
VerifyResult verify_eigenvector(const LoopyGraph& g, std::span<const long long> x,
                                long long lambda, Exec exec = Exec::parallel);

struct RankCertificate {
    std::size_t rank = 0;
    std::vector<std::uint32_t> pivot_rows;
    std::vector<std::uint32_t> pivot_cols;
    std::string method = "fraction-free-elimination";
};

/// Rank over the rationals by fraction-free (Bareiss) elimination with
/// deterministic pivoting: columns left to right, first nonzero row from the
/// top. All intermediate values stay integers; division by the previous
/// pivot is exact.
RankCertificate exact_rank(ExactMatrix m, Exec exec = Exec::parallel);

/// Rank of a list of integer row vectors (uniform length, non-empty).
RankCertificate exact_rank_rows(const std::vector<std::vector<long long>>& rows,
                                Exec exec = Exec::parallel);

/// dim ker(A - lambda*I) over the rationals; the exact multiplicity of an
/// integer eigenvalue.
std::size_t exact_nullity(const LoopyGraph& g, long long lambda, Exec exec = Exec::parallel);

} // namespace starspec
