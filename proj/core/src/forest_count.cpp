#include "forests/forest_count.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "forests/union_find.hpp"

namespace forests {

Int count_spanning_trees(const Graph& g) {
    require_connected(g);
    return det_bareiss(laplacian(g).erased({0}, {0}));
}

Int count_rooted_forests(const Graph& g, const std::vector<int>& roots) {
    require_connected(g);
    if (roots.empty()) throw std::invalid_argument("root set must be nonempty");
    std::set<int> distinct(roots.begin(), roots.end());
    if (distinct.size() != roots.size()) throw std::invalid_argument("duplicate root vertex");
    for (int r : roots)
        if (r < 0 || r >= g.vertex_count()) throw std::invalid_argument("root vertex out of range");
    return det_bareiss(laplacian(g).erased(roots, roots));
}

Int count_pair_rooted(const Graph& g, int x, int y, int q) {
    require_connected(g);
    if (x == q || y == q) return 0;
    Int d = det_bareiss(laplacian(g).erased({x, q}, {y, q}));
    return abs(d);
}

Int count_three_forests(const Graph& g, int x, int y, int q) {
    require_connected(g);
    if (x == y || x == q || y == q) return 0;
    return det_bareiss(laplacian(g).erased({x, y, q}, {x, y, q}));
}

Int count_two_forests(const Graph& g, int q) {
    require_connected(g);
    if (g.vertex_count() == 1) return 0;  // no two-component partition exists
    Int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != q) total += count_rooted_forests(g, {v, q});
    for (const Edge& e : g.edges()) total -= count_three_forests(g, e.head, e.tail, q);
    return total;
}

namespace {

Rat length_product(const Graph& g) {
    Rat p(1);
    for (int e = 0; e < g.edge_count(); ++e) p *= g.length(e);
    return p;
}

}  // namespace

Rat weighted_tree_count(const Graph& g) {
    require_connected(g);
    return det(weighted_laplacian(g).erased({0}, {0})) * length_product(g);
}

Rat weighted_two_forest_count(const Graph& g, int q) {
    require_connected(g);
    if (g.vertex_count() == 1) return Rat(0);
    RatMatrix l = weighted_laplacian(g);
    Rat total;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != q) total += det(l.erased({v, q}, {v, q}));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.head == q || ed.tail == q) continue;
        Rat conductance = 1 / g.length(e);
        total -= conductance * det(l.erased({ed.head, ed.tail, q}, {ed.head, ed.tail, q}));
    }
    return total * length_product(g);
}

std::vector<Forest> enumerate_forests(const Graph& g, int r) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > kEnumerationEdgeLimit)
        throw std::invalid_argument("enumeration limited to graphs with at most " +
                                    std::to_string(kEnumerationEdgeLimit) + " edges");
    if (r < 1 || r > n) throw std::invalid_argument("component count out of range");

    const int k = n - r;  // every r-forest has exactly n - r edges
    std::vector<Forest> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    auto advance = [&]() {
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        return true;
    };
    if (k > m) return out;
    do {
        UnionFind uf(n);
        bool acyclic = true;
        for (int e : pick)
            if (!uf.merge(g.edge(e).tail, g.edge(e).head)) {
                acyclic = false;
                break;
            }
        if (!acyclic) continue;
        Forest f;
        f.edges = pick;
        f.component.assign(n, -1);
        int next = 0;
        std::vector<int> label_of_root(n, -1);
        for (int v = 0; v < n; ++v) {
            int root = uf.find(v);
            if (label_of_root[root] < 0) label_of_root[root] = next++;
            f.component[v] = label_of_root[root];
        }
        out.push_back(std::move(f));
    } while (k > 0 && advance());
    return out;
}

ForestCensus::ForestCensus(const Graph& g)
    : graph_(g), kappa_(count_spanning_trees(g)), kappa2_(count_two_forests(g)) {}

const Int& ForestCensus::pair_rooted(int x, int y, int q) {
    auto key = std::make_tuple(std::min(x, y), std::max(x, y), q);
    auto it = pair_cache_.find(key);
    if (it == pair_cache_.end())
        it = pair_cache_.emplace(key, count_pair_rooted(graph_, x, y, q)).first;
    return it->second;
}

const Int& ForestCensus::three_forests(int x, int y, int q) {
    auto key = std::make_tuple(std::min(x, y), std::max(x, y), q);
    auto it = triple_cache_.find(key);
    if (it == triple_cache_.end())
        it = triple_cache_.emplace(key, count_three_forests(graph_, x, y, q)).first;
    return it->second;
}

}  // namespace forests
