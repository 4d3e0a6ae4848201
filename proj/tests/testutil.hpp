#ifndef FORESTS_TESTUTIL_HPP
#define FORESTS_TESTUTIL_HPP

// Test-only oracles, deliberately independent of the library's computation
// paths: cofactor-expansion determinants and bitmask subset enumeration of
// forests. Plus seeded random graph generators.

#include <random>
#include <vector>

#include "forests/graph.hpp"
#include "forests/matrix.hpp"
#include "forests/rational.hpp"
#include "forests/union_find.hpp"

namespace testutil {

using forests::Edge;
using forests::Graph;
using forests::Int;
using forests::Rat;
using forests::RatMatrix;

inline Graph house() {
    return Graph::parse("5 6\n1 2\n1 3\n2 4\n3 4\n3 5\n4 5\n");
}

// Naive cofactor expansion along the first row. Exponential; dim <= 7 only.
inline Rat cofactor_det(const RatMatrix& m) {
    const int n = m.rows();
    if (n == 0) return Rat(1);
    if (n == 1) return m(0, 0);
    Rat sum;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        Rat term = m(0, j) * cofactor_det(m.erased({0}, {j}));
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

// Acyclicity and component structure of an edge subset, via union-find.
struct SubsetShape {
    bool acyclic;
    int components;
    std::vector<int> root;  // union-find representative per vertex
};

inline SubsetShape subset_shape(const Graph& g, unsigned mask) {
    forests::UnionFind uf(g.vertex_count());
    SubsetShape s{true, 0, {}};
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(mask >> e & 1u)) continue;
        if (!uf.merge(g.edge(e).tail, g.edge(e).head)) {
            s.acyclic = false;
            return s;
        }
    }
    s.components = uf.components();
    s.root.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.root[v] = uf.find(v);
    return s;
}

// Number of r-component spanning forests, by iterating all edge subsets.
inline Int brute_force_forests(const Graph& g, int r) {
    Int count = 0;
    for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        SubsetShape s = subset_shape(g, mask);
        if (s.acyclic && s.components == r) ++count;
    }
    return count;
}

// Number of spanning forests with exactly one vertex of `roots` per component.
inline Int brute_force_rooted(const Graph& g, const std::vector<int>& roots) {
    Int count = 0;
    for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        SubsetShape s = subset_shape(g, mask);
        if (!s.acyclic || s.components != static_cast<int>(roots.size())) continue;
        std::vector<int> seen;
        bool ok = true;
        for (int v : roots) {
            for (int other : seen)
                if (other == s.root[v]) {
                    ok = false;
                    break;
                }
            if (!ok) break;
            seen.push_back(s.root[v]);
        }
        if (ok) ++count;
    }
    return count;
}

// Two-forests with x and y together and q apart.
inline Int brute_force_pair_rooted(const Graph& g, int x, int y, int q) {
    Int count = 0;
    for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        SubsetShape s = subset_shape(g, mask);
        if (s.acyclic && s.components == 2 && s.root[x] == s.root[y] && s.root[x] != s.root[q])
            ++count;
    }
    return count;
}

// Weighted counts: each forest weighs the product of lengths of edges NOT in it.
inline Rat brute_force_weighted(const Graph& g, int r) {
    Rat total;
    for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
        SubsetShape s = subset_shape(g, mask);
        if (!s.acyclic || s.components != r) continue;
        Rat w(1);
        for (int e = 0; e < g.edge_count(); ++e)
            if (!(mask >> e & 1u)) w *= g.length(e);
        total += w;
    }
    return total;
}

// Connected multigraph on up to max_n vertices: a random spanning tree plus
// random extra edges, some of them parallel.
inline Graph random_connected_graph(std::mt19937_64& rng, int max_n, int max_extra = 4) {
    auto below = [&rng](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
    int n = 2 + below(max_n - 1);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        int u = below(v);
        edges.push_back({u, v});
    }
    int extra = below(max_extra + 1);
    for (int i = 0; i < extra; ++i) {
        int u = below(n), v = below(n);
        if (u == v) continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return Graph(n, std::move(edges));
}

inline Graph with_random_lengths(const Graph& g, std::mt19937_64& rng) {
    static const Rat pool[] = {Rat(1), forests::make_rat(1, 2), Rat(2), Rat(3)};
    std::vector<Rat> lengths;
    lengths.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) lengths.push_back(pool[rng() % 4]);
    return Graph(g.vertex_count(), g.edges(), std::move(lengths));
}

inline RatMatrix random_int_matrix(std::mt19937_64& rng, int n, int span = 9) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = Rat(static_cast<long>(rng() % (2 * span + 1)) - span);
    return m;
}

}  // namespace testutil

#endif
