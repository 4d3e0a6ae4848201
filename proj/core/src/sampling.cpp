#include "forests/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "forests/forest_count.hpp"
#include "forests/union_find.hpp"

namespace forests {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("bounded draw needs n >= 1");
    uint64_t bound = UINT64_MAX - UINT64_MAX % static_cast<uint64_t>(n);
    uint64_t x;
    do {
        x = next();
    } while (x >= bound);
    return static_cast<int>(x % static_cast<uint64_t>(n));
}

std::vector<int> sample_spanning_tree(const Graph& g, Rng& rng) {
    require_connected(g);
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge index, other endpoint)
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[g.edge(e).tail].push_back({e, g.edge(e).head});
        adj[g.edge(e).head].push_back({e, g.edge(e).tail});
    }
    std::vector<bool> in_tree(n, false);
    std::vector<std::pair<int, int>> exit(n, {-1, -1});  // loop-erased walk step per vertex
    in_tree[0] = true;
    std::vector<int> tree;
    tree.reserve(n - 1);
    for (int start = 1; start < n; ++start) {
        int u = start;
        while (!in_tree[u]) {
            auto step = adj[u][rng.below(static_cast<int>(adj[u].size()))];
            exit[u] = step;
            u = step.second;
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = true;
            tree.push_back(exit[u].first);
            u = exit[u].second;
        }
    }
    return tree;
}

int cut_size(const Graph& g, const std::vector<int>& tree, int tree_edge) {
    UnionFind uf(g.vertex_count());
    for (int e : tree)
        if (e != tree_edge) uf.merge(g.edge(e).tail, g.edge(e).head);
    int cut = 0;
    for (const Edge& e : g.edges())
        if (!uf.same(e.tail, e.head)) ++cut;
    return cut;
}

SampleEstimate estimate_expected_cut(const Graph& g, long trials, uint64_t seed) {
    require_connected(g);
    if (g.vertex_count() < 2) throw std::domain_error("sampling needs at least two vertices");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    std::vector<int> cuts(trials);
    for (long i = 0; i < trials; ++i) {
        Rng rng(splitmix64(seed + static_cast<uint64_t>(i)));
        std::vector<int> tree = sample_spanning_tree(g, rng);
        int e = tree[rng.below(static_cast<int>(tree.size()))];
        cuts[i] = cut_size(g, tree, e);
    }

    auto harmonic = [&](const std::vector<int>& sample) {
        double inv_sum = 0;
        for (int c : sample) inv_sum += 1.0 / c;
        return static_cast<double>(sample.size()) / inv_sum;
    };

    const int kBootstrap = 200;
    Rng boot(splitmix64(seed ^ 0x517cc1b727220a95ULL));
    std::vector<int> resample(trials);
    double mean = 0, sq = 0;
    for (int b = 0; b < kBootstrap; ++b) {
        for (long i = 0; i < trials; ++i)
            resample[i] = cuts[boot.below(static_cast<int>(trials))];
        double est = harmonic(resample);
        mean += est;
        sq += est * est;
    }
    mean /= kBootstrap;
    double var = (sq - kBootstrap * mean * mean) / (kBootstrap - 1);

    return {harmonic(cuts), std::sqrt(std::max(var, 0.0)), trials, seed};
}

std::map<int, long long> exact_cut_distribution(const Graph& g) {
    require_connected(g);
    std::map<int, long long> histogram;
    for (const Forest& f : enumerate_forests(g, 2)) {
        int cut = 0;
        for (const Edge& e : g.edges())
            if (f.component[e.tail] != f.component[e.head]) ++cut;
        ++histogram[cut];
    }
    return histogram;
}

Rat exact_harmonic_mean_cut(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() < 2)
        throw std::domain_error("cut distribution undefined for a single vertex");
    Rat inv_sum;
    long long pairs = 0;
    for (const Forest& tree : enumerate_forests(g, 1))
        for (int e : tree.edges) {
            inv_sum += make_rat(1, cut_size(g, tree.edges, e));
            ++pairs;
        }
    return Rat(static_cast<long>(pairs)) / inv_sum;
}

}  // namespace forests
