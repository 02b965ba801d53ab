#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "starspec/combinatorics.hpp"
#include "starspec/exec.hpp"

namespace starspec {

enum class GraphFamily { cayley, partial, schreier, k2 };

std::string family_name(GraphFamily f);

/// Identifies a deterministically built graph: family, ground-set size n and
/// tuple length d (d = n for cayley, d = 2 for k2, d = k for schreier).
struct GraphId {
    GraphFamily family;
    int n;
    int d;
    bool operator==(const GraphId&) const = default;
};

/// Default cap on vertex counts for the dense builders (n = 7 Cayley graph).
inline constexpr std::size_t kDefaultMaxVertices = 5040;

/// Undirected multigraph on repetition-free tuples, stored as a dense
/// symmetric matrix of multiplicities. The diagonal holds loop counts; a loop
/// contributes 1 to the diagonal and 1 to the degree. Vertex order is tuple
/// rank order; immutable after construction.
class LoopyGraph {
public:
    LoopyGraph(GraphFamily family, int n, int d, std::size_t vertex_count);

    GraphFamily family() const { return family_; }
    int n() const { return n_; }
    int d() const { return d_; }
    GraphId id() const { return {family_, n_, d_}; }
    std::size_t vertex_count() const { return vertex_count_; }

    std::uint8_t at(std::size_t u, std::size_t v) const { return adj_[u * vertex_count_ + v]; }
    std::uint8_t loops(std::size_t u) const { return at(u, u); }
    const std::vector<std::uint8_t>& adjacency() const { return adj_; }

    /// Label of vertex u in the rank order.
    DTuple label(std::size_t u) const { return unrank_tuple(u, d_, n_); }

    /// Row sum with loops counted once each.
    std::size_t degree(std::size_t u) const;
    std::size_t edge_count() const;  // off-diagonal multiplicity sum, each pair once
    std::size_t loop_count() const;

    // Builders are the only writers.
    friend LoopyGraph build_cayley_star(int, std::size_t, Exec);
    friend LoopyGraph build_partial_permutation(int, int, std::size_t, Exec);
    friend LoopyGraph build_schreier(int, int, std::size_t, Exec);
    friend LoopyGraph build_k2(int, std::size_t, Exec);

private:
    std::uint8_t& slot(std::size_t u, std::size_t v) { return adj_[u * vertex_count_ + v]; }
    void audit_build() const;

    GraphFamily family_;
    int n_;
    int d_;
    std::size_t vertex_count_;
    std::vector<std::uint8_t> adj_;
};

/// X(S_n, T_n): vertices are all n! permutations in rank order, with an edge
/// between g and t*g for each star transposition t = (1 i). Simple,
/// (n-1)-regular, loop-free. Requires n >= 2.
LoopyGraph build_cayley_star(int n, std::size_t max_vertices = kDefaultMaxVertices,
                             Exec exec = Exec::parallel);

/// P(d,n): vertices are all repetition-free d-tuples over {1..n}; two tuples
/// are adjacent iff they differ in exactly one coordinate. d(n-d)-regular.
LoopyGraph build_partial_permutation(int d, int n,
                                     std::size_t max_vertices = kDefaultMaxVertices,
                                     Exec exec = Exec::parallel);

/// The Schreier coset graph X[k] realized on k-tuples: one edge per vertex
/// and star generator, a loop when the generator fixes the tuple. Row sums
/// all equal n-1. Requires 1 <= k <= n-1.
LoopyGraph build_schreier(int k, int n, std::size_t max_vertices = kDefaultMaxVertices,
                          Exec exec = Exec::parallel);

/// K(2,n): vertices are ordered pairs (i,j), i != j; (i,j) is adjacent to the
/// n-2 pairs with the same second coordinate and to its transpose (j,i).
LoopyGraph build_k2(int n, std::size_t max_vertices = kDefaultMaxVertices,
                    Exec exec = Exec::parallel);

enum class MapKind { isomorphism, coset_projection, covering_projection };

std::string map_kind_name(MapKind k);

/// A total map between the vertex sets of two built graphs, stored per domain
/// vertex rank.
struct VertexMap {
    MapKind kind;
    std::size_t domain_size;
    std::size_t codomain_size;
    std::vector<std::uint32_t> assignment;
};

/// The isomorphism P(n-1,n) -> X(S_n,T_n) of the tuple/permutation
/// correspondence: (a_1..a_{n-1}) maps to the permutation pi with
/// pi(a_j) = j+1 and pi(a_0) = 1, where a_0 is the value missing from the
/// tuple.
VertexMap iso_partial_to_cayley(int n);

/// Coset projection X(S_n,T_n) -> X[k]: pi maps to (pi(n), ..., pi(n-k+1)).
/// Fibers all have size (n-k)!.
VertexMap schreier_projection(int k, int n);

/// Covering projection X(S_n,T_n) -> K(2,n): pi maps to
/// (pi^{-1}(1), pi^{-1}(n)). Fibers all have size (n-2)!.
VertexMap covering_projection(int n);

struct MapCheck {
    bool ok = true;
    std::size_t failed_vertex = 0;
    std::string detail;
};

/// Local edge-multiset check: for every domain vertex v and codomain vertex q,
/// the edge multiplicity from v into the fiber of q equals base(map(v), q).
/// This is the covering condition for loop-free bases, and for quotients with
/// loops it verifies that fiber-internal edges are absorbed by loops.
MapCheck verify_cover(const VertexMap& map, const LoopyGraph& top, const LoopyGraph& base,
                      Exec exec = Exec::parallel);

/// Bijectivity plus exhaustive adjacency preservation through the map.
MapCheck verify_isomorphism(const VertexMap& map, const LoopyGraph& a, const LoopyGraph& b,
                            Exec exec = Exec::parallel);

std::vector<std::size_t> fiber_sizes(const VertexMap& map);

/// Proper 2-coloring, when one exists. Colors are +1/-1; the lowest-rank
/// vertex of each connected component gets +1. On failure `odd_walk` holds a
/// closed walk of odd length (a loop yields the walk {u, u}).
struct Bipartition {
    bool ok = false;
    std::vector<std::int8_t> color;
    std::vector<std::size_t> odd_walk;
};

Bipartition bipartition(const LoopyGraph& g);

/// The complete list of maximal cliques of P(d,n) for 1 <= d < n: one clique
/// per (position j, injective assignment of the other d-1 positions), ranging
/// position j over the n-d+1 unused values. Every clique has size n-d+1 and
/// the list has d * n!/(n-d+1)! entries.
std::vector<std::vector<std::size_t>> maximal_cliques_partial(int d, int n);

// Adjacency interchange formats (vertex ranks are 1-based on the wire).
void write_matrix_market(const LoopyGraph& g, std::ostream& os);
void write_edge_list(const LoopyGraph& g, std::ostream& os);

} // namespace starspec
