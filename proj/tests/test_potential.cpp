#include <doctest.h>

#include <random>

#include "forests/families.hpp"
#include "forests/forest_count.hpp"
#include "forests/potential.hpp"
#include "testutil.hpp"

using namespace forests;

TEST_CASE("effective resistance on the house graph") {
    Graph g = testutil::house();
    CHECK(effective_resistance(g, 0, 1) == make_rat(8, 11));
    CHECK(effective_resistance(g, 0, 4) == make_rat(13, 11));
    for (int x = 0; x < 5; ++x) CHECK(effective_resistance(g, x, x) == 0);
}

TEST_CASE("house resistance matrix matches the known values") {
    RatMatrix r = resistance_matrix(testutil::house());
    long expected[5][5] = {{0, 8, 8, 10, 13},
                           {8, 0, 10, 8, 13},
                           {8, 10, 0, 6, 7},
                           {10, 8, 6, 0, 7},
                           {13, 13, 7, 7, 0}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(r(i, j) == make_rat(expected[i][j], 11));
}

TEST_CASE("resistance basics") {
    RatMatrix k2 = resistance_matrix(Graph::parse("2 1\n1 2\n"));
    CHECK(k2(0, 1) == 1);
    CHECK(k2(0, 0) == 0);

    // series law on the path
    Graph p3 = Graph::parse("3 2\n1 2\n2 3\n");
    CHECK(effective_resistance(p3, 0, 2) == 2);

    CHECK_THROWS_AS(resistance_matrix(Graph::parse("4 2\n1 2\n3 4\n")), std::domain_error);
}

TEST_CASE("potential kernel: inverse route equals forest-count route") {
    std::mt19937_64 rng(10101);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = trial ? testutil::random_connected_graph(rng, 6) : testutil::house();
        Int kappa = count_spanning_trees(g);
        PotentialProfile profile(g);
        for (int q = 0; q < g.vertex_count(); ++q) {
            const RatMatrix& jq = profile.kernel(q);
            CHECK(jq(q, q) == 0);
            for (int x = 0; x < g.vertex_count(); ++x) {
                CHECK(jq(x, q) == 0);
                CHECK(jq(q, x) == 0);
                CHECK(jq(x, x) == profile.resistance(x, q));  // r(x,q) = j_q(x,x)
                for (int y = 0; y < g.vertex_count(); ++y) {
                    CHECK(jq(x, y) == jq(y, x));
                    CHECK(jq(x, y) == make_rat(count_pair_rooted(g, x, y, q), kappa));
                }
            }
        }
    }
}

TEST_CASE("house kernel entry from brute-force enumeration") {
    Graph g = testutil::house();
    RatMatrix j5 = potential_kernel(g, 4);
    CHECK(j5(0, 1) == make_rat(testutil::brute_force_pair_rooted(g, 0, 1, 4), Int(11)));
}

TEST_CASE("curvature vector") {
    Graph g = testutil::house();
    std::vector<Rat> mu = curvature_vector(g);
    long expected[5] = {6, 6, 1, 1, 8};
    for (int v = 0; v < 5; ++v) CHECK(mu[v] == make_rat(expected[v], 22));

    for (int n = 2; n <= 8; ++n) {
        std::vector<Rat> uniform = curvature_vector(build({Family::complete, n}));
        for (const Rat& x : uniform) CHECK(x == make_rat(1, n));
    }

    // every edge of a tree has unit resistance, so mu_x = 1 - deg(x)/2
    std::mt19937_64 rng(10102);
    for (int trial = 0; trial < 10; ++trial) {
        Graph tree = testutil::random_connected_graph(rng, 8, 0);
        std::vector<Rat> mu_t = curvature_vector(tree);
        std::vector<int> deg(tree.vertex_count(), 0);
        for (const Edge& e : tree.edges()) {
            ++deg[e.tail];
            ++deg[e.head];
        }
        for (int v = 0; v < tree.vertex_count(); ++v)
            CHECK(mu_t[v] == 1 - make_rat(deg[v], 2));
    }
}

TEST_CASE("mu sums to one and Foster holds on random graphs") {
    std::mt19937_64 rng(10103);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 8);
        PotentialProfile profile(g);
        Rat mu_sum, foster;
        for (const Rat& x : profile.curvature()) mu_sum += x;
        for (const Edge& e : g.edges()) foster += profile.resistance(e.head, e.tail);
        CHECK(mu_sum == 1);
        CHECK(foster == g.vertex_count() - 1);

        // Cauchy-Schwarz corollary
        Rat sum_r2;
        for (const Edge& e : g.edges()) {
            Rat r = profile.resistance(e.head, e.tail);
            sum_r2 += r * r;
        }
        CHECK(sum_r2 >= make_rat(Int(g.vertex_count() - 1) * (g.vertex_count() - 1),
                                 Int(g.edge_count())));
    }
}

TEST_CASE("equality in the Cauchy-Schwarz corollary on edge-transitive graphs") {
    for (int n : {3, 5, 8}) {
        Graph g = build({Family::complete, n});
        PotentialProfile profile(g);
        Rat sum_r2;
        for (const Edge& e : g.edges()) {
            Rat r = profile.resistance(e.head, e.tail);
            sum_r2 += r * r;
        }
        CHECK(sum_r2 == make_rat(Int(n - 1) * (n - 1), Int(g.edge_count())));
    }
}

TEST_CASE("resistance is a metric") {
    std::mt19937_64 rng(10104);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 7);
        RatMatrix r = resistance_matrix(g);
        const int n = g.vertex_count();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                CHECK(r(x, y) == r(y, x));
                if (x != y) CHECK(r(x, y) > 0);
                for (int z = 0; z < n; ++z) CHECK(r(x, z) <= r(x, y) + r(y, z));
            }
    }
}

TEST_CASE("resistance identities hold for every vertex triple") {
    std::mt19937_64 rng(10105);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = trial ? testutil::random_connected_graph(rng, 6) : testutil::house();
        PotentialProfile profile(g);
        const int n = g.vertex_count();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int q = 0; q < n; ++q) {
                    VerificationReport report = verify_resistance_identities(profile, x, y, q);
                    CHECK(report.checks.size() == 5);
                    CHECK(report.all_pass());
                }
    }
}

TEST_CASE("degenerate triples reduce to 0 = 0") {
    Graph g = testutil::house();
    PotentialProfile profile(g);
    VerificationReport report = verify_resistance_identities(profile, 2, 2, 2);
    CHECK(report.all_pass());
    // part (d) with x = q sums to 0
    VerificationReport d = verify_resistance_identities(profile, 3, 0, 3);
    CHECK(d.all_pass());
}

TEST_CASE("matrix identities") {
    CHECK(verify_matrix_identities(testutil::house()).all_pass());
    CHECK(verify_matrix_identities(Graph::parse("2 1\n1 2\n")).all_pass());
    CHECK_THROWS_AS(verify_matrix_identities(Graph(1, {})), std::domain_error);

    std::mt19937_64 rng(10106);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 8);
        CHECK(verify_matrix_identities(g).all_pass());
    }
}

TEST_CASE("matrix identities on weighted graphs") {
    std::mt19937_64 rng(10107);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::with_random_lengths(testutil::random_connected_graph(rng, 6), rng);
        CHECK(verify_matrix_identities(g).all_pass());
    }
}

TEST_CASE("orientation invariance") {
    std::mt19937_64 rng(10108);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 7);
        Graph flipped = g.with_flipped_orientation();
        CHECK(resistance_matrix(g) == resistance_matrix(flipped));
        CHECK(curvature_vector(g) == curvature_vector(flipped));
        CHECK(count_spanning_trees(g) == count_spanning_trees(flipped));
        CHECK(count_two_forests(g) == count_two_forests(flipped));
    }
}

TEST_CASE("weighted resistance: series and parallel laws") {
    // two resistors of 2 and 3 in series
    Graph series = Graph::parse("3 2\n1 2 2\n2 3 3\n");
    CHECK(effective_resistance(series, 0, 2) == 5);
    // resistors 2 and 3 in parallel: 6/5
    Graph parallel = Graph::parse("2 2\n1 2 2\n1 2 3\n");
    CHECK(effective_resistance(parallel, 0, 1) == make_rat(6, 5));
}
