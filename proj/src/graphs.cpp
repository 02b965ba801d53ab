#include "starspec/graphs.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <ostream>
#include <stdexcept>

#include "starspec/errors.hpp"

namespace starspec {

std::string family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::cayley: return "cayley";
        case GraphFamily::partial: return "partial";
        case GraphFamily::schreier: return "schreier";
        case GraphFamily::k2: return "k2";
    }
    return "?";
}

std::string map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::isomorphism: return "isomorphism";
        case MapKind::coset_projection: return "coset_projection";
        case MapKind::covering_projection: return "covering_projection";
    }
    return "?";
}

LoopyGraph::LoopyGraph(GraphFamily family, int n, int d, std::size_t vertex_count)
    : family_(family), n_(n), d_(d), vertex_count_(vertex_count),
      adj_(vertex_count * vertex_count, 0) {}

std::size_t LoopyGraph::degree(std::size_t u) const {
    std::size_t s = 0;
    for (std::size_t v = 0; v < vertex_count_; ++v) s += at(u, v);
    return s;
}

std::size_t LoopyGraph::edge_count() const {
    std::size_t s = 0;
    for (std::size_t u = 0; u < vertex_count_; ++u)
        for (std::size_t v = u + 1; v < vertex_count_; ++v) s += at(u, v);
    return s;
}

std::size_t LoopyGraph::loop_count() const {
    std::size_t s = 0;
    for (std::size_t u = 0; u < vertex_count_; ++u) s += at(u, u);
    return s;
}

void LoopyGraph::audit_build() const {
    const std::size_t V = vertex_count_;
    const std::size_t want_degree =
        family_ == GraphFamily::partial
            ? static_cast<std::size_t>(d_) * static_cast<std::size_t>(n_ - d_)
            : static_cast<std::size_t>(n_ - 1);
    const bool simple = family_ != GraphFamily::schreier;
    for (std::size_t u = 0; u < V; ++u) {
        std::size_t row = 0;
        for (std::size_t v = 0; v < V; ++v) {
            const std::uint8_t m = at(u, v);
            row += m;
            if (at(v, u) != m)
                throw verification_error("adjacency not symmetric at (" + std::to_string(u) +
                                         "," + std::to_string(v) + ")");
            if (u != v && m > 1)
                throw verification_error("unexpected multi-edge between vertices " +
                                         std::to_string(u) + " and " + std::to_string(v));
            if (simple && u == v && m != 0)
                throw verification_error("unexpected loop at vertex " + std::to_string(u));
        }
        if (row != want_degree)
            throw verification_error(family_name(family_) + " row sum " + std::to_string(row) +
                                     " != " + std::to_string(want_degree) + " at vertex " +
                                     std::to_string(u));
    }
}

namespace {

std::size_t checked_vertex_count(int d, int n, std::size_t max_vertices, const char* what) {
    const std::uint64_t v = tuple_count(d, n);
    if (v > max_vertices)
        throw capacity_error(std::string(what) + " would have " + std::to_string(v) +
                             " vertices, above the cap of " + std::to_string(max_vertices) +
                             " (raise --max-vertices to override)");
    return static_cast<std::size_t>(v);
}

} // namespace

LoopyGraph build_cayley_star(int n, std::size_t max_vertices, Exec exec) {
    if (n < 2) throw std::invalid_argument("cayley graph requires n >= 2");
    const std::size_t V = checked_vertex_count(n, n, max_vertices, "X(S_n,T_n)");
    LoopyGraph g(GraphFamily::cayley, n, n, V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(V); ++u) {
        const DTuple t = unrank_tuple(static_cast<TupleRank>(u), n, n);
        for (int i = 2; i <= n; ++i) {
            const TupleRank v = rank_tuple(star_apply(i, t));
            g.slot(static_cast<std::size_t>(u), v) = 1;
        }
    }
    g.audit_build();
    return g;
}

LoopyGraph build_partial_permutation(int d, int n, std::size_t max_vertices, Exec exec) {
    if (d < 1 || d > n)
        throw std::invalid_argument("P(d,n) requires 1 <= d <= n");
    const std::size_t V = checked_vertex_count(d, n, max_vertices, "P(d,n)");
    LoopyGraph g(GraphFamily::partial, n, d, V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(V); ++u) {
        const DTuple t = unrank_tuple(static_cast<TupleRank>(u), d, n);
        std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
        for (int v : t.entries()) present[static_cast<std::size_t>(v)] = 1;
        std::vector<int> e = t.entries();
        for (int j = 0; j < d; ++j) {
            const int old = e[static_cast<std::size_t>(j)];
            for (int w = 1; w <= n; ++w) {
                if (present[static_cast<std::size_t>(w)]) continue;
                e[static_cast<std::size_t>(j)] = w;
                g.slot(static_cast<std::size_t>(u), rank_tuple(DTuple(e, n))) = 1;
            }
            e[static_cast<std::size_t>(j)] = old;
        }
    }
    g.audit_build();
    return g;
}

LoopyGraph build_schreier(int k, int n, std::size_t max_vertices, Exec exec) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("X[k] requires 1 <= k <= n-1");
    const std::size_t V = checked_vertex_count(k, n, max_vertices, "X[k]");
    LoopyGraph g(GraphFamily::schreier, n, k, V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(V); ++u) {
        const DTuple t = unrank_tuple(static_cast<TupleRank>(u), k, n);
        for (int i = 2; i <= n; ++i) {
            const TupleRank v = rank_tuple(star_apply(i, t));
            ++g.slot(static_cast<std::size_t>(u), v);
        }
    }
    g.audit_build();
    return g;
}

LoopyGraph build_k2(int n, std::size_t max_vertices, Exec exec) {
    if (n < 2) throw std::invalid_argument("K(2,n) requires n >= 2");
    const std::size_t V = checked_vertex_count(2, n, max_vertices, "K(2,n)");
    LoopyGraph g(GraphFamily::k2, n, 2, V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(V); ++u) {
        const DTuple t = unrank_tuple(static_cast<TupleRank>(u), 2, n);
        const int i = t.entries()[0];
        const int j = t.entries()[1];
        for (int l = 1; l <= n; ++l) {
            if (l == i || l == j) continue;
            g.slot(static_cast<std::size_t>(u), rank_tuple(DTuple({l, j}, n))) = 1;
        }
        g.slot(static_cast<std::size_t>(u), rank_tuple(DTuple({j, i}, n))) = 1;
    }
    g.audit_build();
    return g;
}

VertexMap iso_partial_to_cayley(int n) {
    if (n < 2) throw std::invalid_argument("isomorphism requires n >= 2");
    const std::size_t V = static_cast<std::size_t>(tuple_count(n - 1, n));
    VertexMap m{MapKind::isomorphism, V, V, std::vector<std::uint32_t>(V)};
    for (std::size_t u = 0; u < V; ++u) {
        const DTuple t = unrank_tuple(u, n - 1, n);
        std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
        for (int v : t.entries()) present[static_cast<std::size_t>(v)] = 1;
        int missing = 0;
        for (int v = 1; v <= n; ++v)
            if (!present[static_cast<std::size_t>(v)]) missing = v;
        std::vector<int> c;
        c.reserve(static_cast<std::size_t>(n));
        c.push_back(missing);
        c.insert(c.end(), t.entries().begin(), t.entries().end());
        m.assignment[u] = static_cast<std::uint32_t>(rank_permutation(permutation_from_tuple(c)));
    }
    return m;
}

VertexMap schreier_projection(int k, int n) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("schreier projection requires 1 <= k <= n-1");
    const std::size_t V = static_cast<std::size_t>(tuple_count(n, n));
    VertexMap m{MapKind::coset_projection, V,
                static_cast<std::size_t>(tuple_count(k, n)), std::vector<std::uint32_t>(V)};
    for (std::size_t u = 0; u < V; ++u) {
        const DTuple t = unrank_tuple(u, n, n);  // image sequence of the permutation
        std::vector<int> e(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            e[static_cast<std::size_t>(j)] = t.entries()[static_cast<std::size_t>(n - 1 - j)];
        m.assignment[u] = static_cast<std::uint32_t>(rank_tuple(DTuple(std::move(e), n)));
    }
    return m;
}

VertexMap covering_projection(int n) {
    if (n < 2) throw std::invalid_argument("covering projection requires n >= 2");
    const std::size_t V = static_cast<std::size_t>(tuple_count(n, n));
    VertexMap m{MapKind::covering_projection, V,
                static_cast<std::size_t>(tuple_count(2, n)), std::vector<std::uint32_t>(V)};
    for (std::size_t u = 0; u < V; ++u) {
        const Permutation p = unrank_permutation(u, n);
        const Permutation q = inverse(p);
        m.assignment[u] =
            static_cast<std::uint32_t>(rank_tuple(DTuple({q(1), q(n)}, n)));
    }
    return m;
}

MapCheck verify_cover(const VertexMap& map, const LoopyGraph& top, const LoopyGraph& base,
                      Exec exec) {
    if (map.domain_size != top.vertex_count() || map.codomain_size != base.vertex_count() ||
        map.assignment.size() != map.domain_size)
        throw std::invalid_argument("verify_cover: map/graph dimension mismatch");
    const std::int64_t V = static_cast<std::int64_t>(top.vertex_count());
    MapCheck result;
    std::size_t bad = static_cast<std::size_t>(V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) reduction(min : bad) if (par)
    for (std::int64_t sv = 0; sv < V; ++sv) {
        const std::size_t v = static_cast<std::size_t>(sv);
        const std::size_t bv = map.assignment[v];
        // counts[q] = multiplicity from v into the fiber of q (loops at v stay at map(v))
        std::vector<std::pair<std::size_t, std::size_t>> counts;
        for (std::size_t u = 0; u < top.vertex_count(); ++u) {
            const std::uint8_t mult = top.at(v, u);
            if (!mult) continue;
            const std::size_t q = (u == v) ? bv : map.assignment[u];
            auto it = std::find_if(counts.begin(), counts.end(),
                                   [q](const auto& p) { return p.first == q; });
            if (it == counts.end()) counts.emplace_back(q, mult);
            else it->second += mult;
        }
        bool ok = top.degree(v) == base.degree(bv);
        for (const auto& [q, c] : counts)
            if (base.at(bv, q) != c) ok = false;
        if (!ok) bad = std::min(bad, v);
    }
    if (bad < static_cast<std::size_t>(V)) {
        result.ok = false;
        result.failed_vertex = bad;
        result.detail = "neighborhood of vertex " + std::to_string(bad) +
                        " does not map bijectively onto the neighborhood of vertex " +
                        std::to_string(map.assignment[bad]);
    }
    return result;
}

MapCheck verify_isomorphism(const VertexMap& map, const LoopyGraph& a, const LoopyGraph& b,
                            Exec exec) {
    if (map.domain_size != a.vertex_count() || map.codomain_size != b.vertex_count() ||
        map.assignment.size() != map.domain_size)
        throw std::invalid_argument("verify_isomorphism: map/graph dimension mismatch");
    MapCheck result;
    if (a.vertex_count() != b.vertex_count()) {
        result.ok = false;
        result.detail = "vertex counts differ";
        return result;
    }
    std::vector<char> hit(map.codomain_size, 0);
    for (std::uint32_t w : map.assignment) {
        if (w >= map.codomain_size || hit[w]) {
            result.ok = false;
            result.detail = "assignment is not a bijection";
            return result;
        }
        hit[w] = 1;
    }
    const std::int64_t V = static_cast<std::int64_t>(a.vertex_count());
    std::size_t bad = static_cast<std::size_t>(V);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) reduction(min : bad) if (par)
    for (std::int64_t su = 0; su < V; ++su) {
        const std::size_t u = static_cast<std::size_t>(su);
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            if (a.at(u, v) != b.at(map.assignment[u], map.assignment[v])) {
                bad = std::min(bad, u);
                break;
            }
        }
    }
    if (bad < static_cast<std::size_t>(V)) {
        result.ok = false;
        result.failed_vertex = bad;
        result.detail = "adjacency not preserved at vertex " + std::to_string(bad);
    }
    return result;
}

std::vector<std::size_t> fiber_sizes(const VertexMap& map) {
    std::vector<std::size_t> f(map.codomain_size, 0);
    for (std::uint32_t w : map.assignment) ++f[w];
    return f;
}

Bipartition bipartition(const LoopyGraph& g) {
    const std::size_t V = g.vertex_count();
    Bipartition b;
    b.color.assign(V, 0);
    for (std::size_t u = 0; u < V; ++u) {
        if (g.loops(u) > 0) {
            b.ok = false;
            b.odd_walk = {u, u};
            return b;
        }
    }
    std::vector<std::size_t> parent(V, 0);
    auto walk_to_root = [&](std::size_t v) {
        std::vector<std::size_t> path{v};
        while (parent[v] != v) {
            v = parent[v];
            path.push_back(v);
        }
        return path;
    };
    for (std::size_t root = 0; root < V; ++root) {
        if (b.color[root] != 0) continue;
        b.color[root] = 1;
        parent[root] = root;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < V; ++v) {
                if (!g.at(u, v) || v == u) continue;
                if (b.color[v] == 0) {
                    b.color[v] = static_cast<std::int8_t>(-b.color[u]);
                    parent[v] = u;
                    queue.push_back(v);
                } else if (b.color[v] == b.color[u]) {
                    // odd closed walk: u -> ... -> root -> ... -> v -> u
                    const auto up = walk_to_root(u);  // [u ... root]
                    const auto vp = walk_to_root(v);  // [v ... root]
                    b.odd_walk = up;
                    b.odd_walk.insert(b.odd_walk.end(), vp.rbegin() + 1, vp.rend());
                    b.odd_walk.push_back(u);
                    b.ok = false;
                    return b;
                }
            }
        }
    }
    b.ok = true;
    return b;
}

std::vector<std::vector<std::size_t>> maximal_cliques_partial(int d, int n) {
    if (d == n)
        throw std::invalid_argument("P(n,n) is edgeless: no maximal cliques of size >= 2");
    if (d < 1 || d > n)
        throw std::invalid_argument("maximal_cliques_partial requires 1 <= d < n");
    std::vector<std::vector<std::size_t>> cliques;
    const std::uint64_t arrangements = tuple_count(d - 1, n);
    for (int j = 0; j < d; ++j) {
        for (std::uint64_t a = 0; a < arrangements; ++a) {
            std::vector<int> fixed;
            if (d > 1) fixed = unrank_tuple(a, d - 1, n).entries();
            std::vector<char> present(static_cast<std::size_t>(n) + 1, 0);
            for (int v : fixed) present[static_cast<std::size_t>(v)] = 1;
            std::vector<std::size_t> clique;
            clique.reserve(static_cast<std::size_t>(n - d + 1));
            std::vector<int> e(static_cast<std::size_t>(d));
            for (int pos = 0, src = 0; pos < d; ++pos)
                if (pos != j) e[static_cast<std::size_t>(pos)] = fixed[static_cast<std::size_t>(src++)];
            for (int w = 1; w <= n; ++w) {
                if (present[static_cast<std::size_t>(w)]) continue;
                e[static_cast<std::size_t>(j)] = w;
                clique.push_back(rank_tuple(DTuple(e, n)));
            }
            std::sort(clique.begin(), clique.end());
            cliques.push_back(std::move(clique));
        }
    }
    return cliques;
}

void write_matrix_market(const LoopyGraph& g, std::ostream& os) {
    const std::size_t V = g.vertex_count();
    std::size_t nnz = 0;
    for (std::size_t u = 0; u < V; ++u)
        for (std::size_t v = 0; v <= u; ++v)
            if (g.at(u, v)) ++nnz;
    os << "%%MatrixMarket matrix coordinate integer symmetric\n";
    os << V << " " << V << " " << nnz << "\n";
    for (std::size_t u = 0; u < V; ++u)
        for (std::size_t v = 0; v <= u; ++v)
            if (g.at(u, v))
                os << (u + 1) << " " << (v + 1) << " " << static_cast<int>(g.at(u, v)) << "\n";
}

void write_edge_list(const LoopyGraph& g, std::ostream& os) {
    const std::size_t V = g.vertex_count();
    for (std::size_t u = 0; u < V; ++u)
        for (std::size_t v = u; v < V; ++v)
            if (g.at(u, v))
                os << (u + 1) << " " << (v + 1) << " " << static_cast<int>(g.at(u, v)) << "\n";
}

} // namespace starspec
