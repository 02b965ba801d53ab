#include "starspec/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace starspec {

ExactMatrix adjacency_matrix(const LoopyGraph& g, long long lambda) {
    const std::size_t V = g.vertex_count();
    ExactMatrix m(V, V);
    for (std::size_t u = 0; u < V; ++u) {
        for (std::size_t v = 0; v < V; ++v) {
            const std::uint8_t a = g.at(u, v);
            if (a) m.at(u, v) = static_cast<unsigned long>(a);
        }
        if (lambda != 0) m.at(u, u) -= static_cast<long>(lambda);
    }
    return m;
}

std::vector<BigInt> exact_matvec(const LoopyGraph& g, std::span<const long long> x, Exec exec) {
    const std::size_t V = g.vertex_count();
    if (x.size() != V)
        throw std::invalid_argument("exact_matvec: vector length does not match vertex count");
    std::vector<BigInt> y(V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t su = 0; su < static_cast<std::int64_t>(V); ++su) {
        const std::size_t u = static_cast<std::size_t>(su);
        BigInt acc = 0;
        for (std::size_t v = 0; v < V; ++v) {
            const std::uint8_t a = g.at(u, v);
            if (!a) continue;
            BigInt term(static_cast<long>(x[v]));
            term *= static_cast<unsigned long>(a);
            acc += term;
        }
        y[u] = std::move(acc);
    }
    return y;
}

VerifyResult verify_eigenvector(const LoopyGraph& g, std::span<const long long> x,
                                long long lambda, Exec exec) {
    const bool zero = std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; });
    if (zero)
        throw std::invalid_argument("verify_eigenvector: zero vector is a vacuous claim");
    const auto y = exact_matvec(g, x, exec);
    for (std::size_t u = 0; u < y.size(); ++u) {
        BigInt want(static_cast<long>(x[u]));
        want *= static_cast<long>(lambda);
        if (y[u] != want) return {false, u};
    }
    return {true, 0};
}

RankCertificate exact_rank(ExactMatrix m, Exec exec) {
    if (m.rows == 0 || m.cols == 0)
        throw std::invalid_argument("exact_rank: empty matrix");
    RankCertificate cert;
    std::vector<std::uint32_t> orig(m.rows);
    std::iota(orig.begin(), orig.end(), 0u);
    const bool par = exec == Exec::parallel;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(rank, j));
            std::swap(orig[piv], orig[rank]);
        }
        cert.pivot_rows.push_back(orig[rank]);
        cert.pivot_cols.push_back(static_cast<std::uint32_t>(col));
#pragma omp parallel for schedule(static) if (par)
        for (std::int64_t si = static_cast<std::int64_t>(rank) + 1;
             si < static_cast<std::int64_t>(m.rows); ++si) {
            const std::size_t i = static_cast<std::size_t>(si);
            BigInt t;
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                t = m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    cert.rank = rank;
    return cert;
}

RankCertificate exact_rank_rows(const std::vector<std::vector<long long>>& rows, Exec exec) {
    if (rows.empty())
        throw std::invalid_argument("exact_rank_rows: empty vector list");
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols)
            throw std::invalid_argument("exact_rank_rows: vector lengths differ");
    if (cols == 0)
        throw std::invalid_argument("exact_rank_rows: zero-length vectors");
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<long>(rows[i][j]);
    return exact_rank(std::move(m), exec);
}

std::size_t exact_nullity(const LoopyGraph& g, long long lambda, Exec exec) {
    const auto cert = exact_rank(adjacency_matrix(g, lambda), exec);
    return g.vertex_count() - cert.rank;
}

} // namespace starspec
