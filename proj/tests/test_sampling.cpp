#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "forests/families.hpp"
#include "forests/forest_count.hpp"
#include "forests/invariants.hpp"
#include "forests/sampling.hpp"
#include "forests/union_find.hpp"
#include "testutil.hpp"

using namespace forests;

namespace {

bool is_spanning_tree(const Graph& g, const std::vector<int>& edges) {
    if (static_cast<int>(edges.size()) != g.vertex_count() - 1) return false;
    UnionFind uf(g.vertex_count());
    for (int e : edges) {
        const Edge& edge = g.edges()[e];
        if (!uf.merge(edge.tail, edge.head)) return false;
    }
    return uf.components() == 1;
}

}  // namespace

TEST_CASE("splitmix64 reference values") {
    // first output of the reference sequence seeded with 0
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(1) != splitmix64(0));
}

TEST_CASE("bounded draws stay in range and hit every value") {
    Rng rng(42);
    std::set<int> seen;
    for (int i = 0; i < 1000; ++i) {
        int v = rng.below(7);
        CHECK(v >= 0);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("sampled trees are spanning trees") {
    Rng rng(7);
    std::mt19937_64 gen(13001);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_connected_graph(gen, 9);
        std::vector<int> tree = sample_spanning_tree(g, rng);
        CHECK(is_spanning_tree(g, tree));
    }
}

TEST_CASE("K2 sampling always yields its unique tree") {
    Graph g = Graph::parse("2 1\n1 2\n");
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<int> tree = sample_spanning_tree(g, rng);
        REQUIRE(tree.size() == 1);
        CHECK(tree[0] == 0);
    }
}

TEST_CASE("triangle trees are uniform") {
    Graph g = build({Family::cycle, 3});
    Rng rng(99);
    const int trials = 30000;
    std::map<std::vector<int>, int> counts;
    for (int i = 0; i < trials; ++i) {
        std::vector<int> tree = sample_spanning_tree(g, rng);
        std::sort(tree.begin(), tree.end());
        ++counts[tree];
    }
    REQUIRE(counts.size() == 3);
    // each of the 3 trees should appear trials/3 times; allow 4 sigma
    double expected = trials / 3.0;
    double sigma = std::sqrt(trials * (1.0 / 3) * (2.0 / 3));
    for (const auto& [tree, count] : counts) CHECK(std::abs(count - expected) < 4 * sigma);
}

TEST_CASE("house trees are uniform (chi-square)") {
    Graph g = testutil::house();
    Rng rng(2024);
    const int trials = 110000;
    std::map<std::vector<int>, int> counts;
    for (int i = 0; i < trials; ++i) {
        std::vector<int> tree = sample_spanning_tree(g, rng);
        std::sort(tree.begin(), tree.end());
        ++counts[tree];
    }
    REQUIRE(counts.size() == 11);
    double expected = trials / 11.0;
    double chi2 = 0;
    for (const auto& [tree, count] : counts) {
        double d = count - expected;
        chi2 += d * d / expected;
    }
    // critical value for 10 degrees of freedom at significance 1e-3
    CHECK(chi2 < 29.588);
}

TEST_CASE("deleting a tree edge yields a two-forest and the step reverses") {
    std::mt19937_64 gen(13002);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_connected_graph(gen, 6);
        if (g.edge_count() > 14) continue;
        // every (tree, edge) pair maps to a two-forest with a positive cut
        Rng rng(trial + 1);
        std::vector<int> tree = sample_spanning_tree(g, rng);
        for (int i = 0; i < static_cast<int>(tree.size()); ++i) {
            int cut = cut_size(g, tree, tree[i]);
            CHECK(cut >= 1);
            std::vector<int> rest;
            for (int e : tree)
                if (e != tree[i]) rest.push_back(e);
            UnionFind uf(g.vertex_count());
            for (int e : rest) CHECK(uf.merge(g.edges()[e].tail, g.edges()[e].head));
            CHECK(uf.components() == 2);
        }
        // conversely, every two-forest plus any crossing edge is a tree
        for (const Forest& f : enumerate_forests(g, 2)) {
            for (int e = 0; e < g.edge_count(); ++e) {
                const Edge& edge = g.edges()[e];
                if (f.component[edge.tail] == f.component[edge.head]) continue;
                std::vector<int> joined = f.edges;
                joined.push_back(e);
                CHECK(is_spanning_tree(g, joined));
            }
        }
    }
}

TEST_CASE("exact cut distributions") {
    std::map<int, long long> house = exact_cut_distribution(testutil::house());
    CHECK(house == std::map<int, long long>{{2, 13}, {3, 6}});
    CHECK(exact_cut_distribution(Graph::parse("2 1\n1 2\n")) ==
          std::map<int, long long>{{1, 1}});
    CHECK(exact_cut_distribution(build({Family::cycle, 4})) ==
          std::map<int, long long>{{2, 6}});
}

TEST_CASE("exact harmonic-mean target equals the count formula") {
    std::mt19937_64 gen(13003);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = trial ? testutil::random_connected_graph(gen, 6) : testutil::house();
        if (g.edge_count() > 16) continue;
        CHECK(exact_harmonic_mean_cut(g) == expected_cut_size(g));
    }
}

TEST_CASE("estimator on a tree is exact with zero variance") {
    Graph path = Graph::parse("4 3\n1 2\n2 3\n3 4\n");
    SampleEstimate est = estimate_expected_cut(path, 2000, 5);
    CHECK(est.estimate == 1.0);
    CHECK(est.standard_error == 0.0);
}

TEST_CASE("estimator converges on the house graph") {
    SampleEstimate est = estimate_expected_cut(testutil::house(), 100000, 12345);
    double target = 44.0 / 19.0;
    CHECK(est.standard_error > 0);
    CHECK(std::abs(est.estimate - target) < 3 * est.standard_error);
    // and the error is small in absolute terms at this trial count
    CHECK(std::abs(est.estimate - target) < 0.02);
}

TEST_CASE("estimates are reproducible for a fixed seed") {
    Graph g = testutil::house();
    SampleEstimate a = estimate_expected_cut(g, 5000, 777);
    SampleEstimate b = estimate_expected_cut(g, 5000, 777);
    CHECK(a.estimate == b.estimate);
    CHECK(a.standard_error == b.standard_error);
    SampleEstimate c = estimate_expected_cut(g, 5000, 778);
    CHECK(a.estimate != c.estimate);
}
