#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starspec/exact.hpp"
#include "starspec/graphs.hpp"
#include "starspec/numeric.hpp"

namespace starspec {

/// An ordered family of (d+1)-subsets of {1..n}: the index sets I whose
/// tuple sets A_I carry the signed vectors.
struct IndexFamily {
    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> sets;  // each sorted ascending, size d+1
};

/// The recursive independent family of size C(n-1, d): for d = 1 the sets
/// {1,i}; for d = n-1 the single set {1..n}; otherwise the (n-1, d) family
/// followed by the (n-1, d-1) family with n adjoined to every set.
IndexFamily build_independent_family(int n, int d);

/// Exhaustively checks that every non-empty subfamily owns a d-tuple lying in
/// exactly one member's tuple set. 2^|family| subfamilies are scanned, so the
/// family size is capped (capacity_error beyond it).
bool verify_independence(const IndexFamily& fam, std::size_t max_family_size = 20);

/// Integer-valued vector indexed by the vertex ranks of a built graph,
/// optionally claiming an integer eigenvalue.
struct SignedVector {
    GraphId graph;
    std::vector<long long> values;
    std::optional<long long> eigenvalue;
};

/// The clique-balanced vector phi_I on P(d,n): +-1 on the tuples over the
/// (d+1)-set I, split by the parity of the associated permutation of I
/// (even -> +1), zero elsewhere. Sums to zero over every maximal clique.
SignedVector signed_vector_phi(const std::vector<int>& index_set, const LoopyGraph& g);

/// phi_I for every I in the independent family; rank-certified to C(n-1, d).
std::vector<SignedVector> build_signed_family(int n, int d);

/// The eigenvectors of X[k] for eigenvalue n-k-1: the signed family of
/// P(k, n-1), carried onto the k-tuples over {2..n} and extended by zero on
/// tuples containing 1. Every vector is verified exactly and the family is
/// rank-certified to C(n-2, k). Requires 1 <= k <= n-2.
std::vector<SignedVector> build_schreier_eigenvectors(int k, int n,
                                                      std::size_t max_vertices = kDefaultMaxVertices,
                                                      Exec exec = Exec::parallel);

/// Pullback along a projection: lifted(u) = v(map(u)). Preserves the claimed
/// eigenvalue and, across a whole family, the exact rank.
SignedVector lift_along_projection(const SignedVector& v, const VertexMap& map,
                                   const LoopyGraph& top);

/// Flips the sign on one class of a proper 2-coloring, mapping a
/// lambda-eigenvector of a loop-free bipartite graph to a (-lambda)-eigenvector.
SignedVector negate_on_bipartition(const SignedVector& v, const Bipartition& coloring);

/// Disjoint supports A, B with zero-sum weights; generates the kernel vector
/// x_ij = alpha_i*beta_j + alpha_j*beta_i on K(2,n).
struct SupportPair {
    std::vector<int> a_set;
    std::vector<int> b_set;
    std::vector<long long> alpha;  // length n, nonzero exactly on a_set, zero-sum
    std::vector<long long> beta;
};

SupportPair make_support_pair(int n, std::vector<int> a_set, std::vector<int> b_set);

/// The C(n-1,2) support pairs of the zero eigenbasis: the three {1,2,3,4}
/// partitions at n = 4; for larger n the (n-1)-pairs followed by n-2 pairs
/// touching n in a triangular pattern.
std::vector<SupportPair> zero_basis_support_pairs(int n);

SignedVector zero_vector_from_pair(const SupportPair& sp, const LoopyGraph& k2);

/// Kernel basis of K(2,n) for n >= 4: every vector verified against A*x = 0
/// and the family rank-certified to C(n-1, 2).
std::vector<SignedVector> build_zero_eigenbasis(int n, Exec exec = Exec::parallel);

struct EigenvalueClaim {
    long long lambda = 0;
    std::uint64_t paper_bound = 0;
    std::size_t certified_rank = 0;
    std::optional<std::size_t> nullity;
    bool verified = false;
};

enum class CertifyStatus { certified, failed, partial };

std::string certify_status_name(CertifyStatus s);

struct CertificateReport {
    int n = 0;
    std::vector<EigenvalueClaim> eigenvalues;  // descending lambda
    std::optional<SpectrumReport> integrality;
    CertifyStatus status = CertifyStatus::partial;
    std::string failure;  // empty unless status == failed
    // metadata, kept out of the canonical payload
    std::string tool_version;
    double elapsed_ms = 0.0;
};

struct CertifyOptions {
    std::size_t max_vertices = kDefaultMaxVertices;
    bool with_nullity = false;
    std::size_t nullity_max_vertices = 200;
    bool with_numeric = false;
    std::size_t numeric_max_vertices = kDefaultNumericMaxVertices;
    Exec exec = Exec::parallel;
    /// Self-test hook: deliberately claims a wrong eigenvalue for the
    /// principal vector so the failure path can be exercised end to end.
    bool tamper_lambda = false;
};

/// Certifies the spectrum lower bounds on X(S_n,T_n): lambda = +-(n-l) with
/// rank >= C(n-2, l-1) for l = 1..n-1, and lambda = 0 with rank >= C(n-1, 2)
/// for n >= 4. Every vector is re-verified on the Cayley graph in exact
/// arithmetic; every family rank is recomputed after lifting.
CertificateReport certify_spectrum_lower_bounds(int n, const CertifyOptions& options = {});

} // namespace starspec
