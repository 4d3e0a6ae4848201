#include "forests/invariants.hpp"

#include <stdexcept>

#include "forests/forest_count.hpp"

namespace forests {

namespace {

Rat gamma_at(PotentialProfile& profile, int q) {
    const Graph& g = profile.graph();
    const RatMatrix& r = profile.resistance_matrix();
    Rat sum;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        Rat d = r(ed.head, q) - r(ed.tail, q);
        sum += d * d / g.length(e);
    }
    return sum / 4;
}

Rat sum_edge_resistance(PotentialProfile& profile, int power) {
    const Graph& g = profile.graph();
    const RatMatrix& r = profile.resistance_matrix();
    Rat sum;
    for (const Edge& e : g.edges()) {
        Rat v = r(e.head, e.tail);
        sum += power == 2 ? Rat(v * v) : v;
    }
    return sum;
}

}  // namespace

Rat gamma_constant(PotentialProfile& profile) {
    Rat value = gamma_at(profile, 0);
    for (int q = 1; q < profile.graph().vertex_count(); ++q)
        if (gamma_at(profile, q) != value)
            throw std::logic_error("gamma constant depends on base vertex " + std::to_string(q + 1));
    return value;
}

Rat gamma_constant(const Graph& g) {
    PotentialProfile profile(g);
    return gamma_constant(profile);
}

std::pair<Rat, Rat> eta_tau(const Graph& g) {
    if (!g.unit_lengths())
        throw std::domain_error("eta and tau are defined for unit edge lengths only");
    PotentialProfile profile(g);
    const RatMatrix& r = profile.resistance_matrix();
    Rat eta;
    for (const Edge& e : g.edges()) {
        Rat d = 1 - r(e.head, e.tail);
        eta += d * d;
    }
    eta /= 12;
    return {eta, eta + gamma_constant(profile)};
}

VerificationReport main_identity(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() < 2) throw std::domain_error("main identity needs at least two vertices");
    if (!g.unit_lengths())
        throw std::domain_error("main identity applies to unit lengths; see the weighted identity");

    Rat ratio = make_rat(count_two_forests(g), count_spanning_trees(g));
    PotentialProfile profile(g);
    Rat gamma = gamma_constant(profile);
    Rat sum_r2 = sum_edge_resistance(profile, 2);

    VerificationReport report;
    report.add_equal("kappa2/kappa = 3 gamma + (1/4) sum_e r(e+,e-)^2", ratio, 3 * gamma + sum_r2 / 4);

    const RatMatrix& r = profile.resistance_matrix();
    for (int q = 0; q < g.vertex_count(); ++q) {
        const RatMatrix& jq = profile.kernel(q);
        Rat rhs;
        for (int v = 0; v < g.vertex_count(); ++v) rhs += r(v, q);
        for (const Edge& e : g.edges()) {
            rhs += jq(e.head, e.tail) * jq(e.head, e.tail);
            rhs -= r(e.head, q) * r(e.tail, q);
        }
        report.add_equal("expanded form at q=" + std::to_string(q + 1), ratio, rhs);
    }
    return report;
}

Rat expected_cut_size(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() < 2)
        throw std::domain_error("expected cut size undefined for a single vertex");
    return make_rat(count_spanning_trees(g) * (g.vertex_count() - 1), count_two_forests(g));
}

VerificationReport bounds_report(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() < 2) throw std::domain_error("bounds need at least two vertices");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    Int kappa = count_spanning_trees(g);
    Int kappa2 = count_two_forests(g);
    Rat ratio = make_rat(kappa2, kappa);
    PotentialProfile profile(g);
    Rat sum_r2 = sum_edge_resistance(profile, 2);
    Rat bound_a = make_rat(Int(n - 1) * (n - 1), 4 * m);
    Rat mason = make_rat(n - 1, m - n + 2);  // rank n-1 on m elements
    Rat avg_deg = make_rat(2 * m, n);
    Rat cut = make_rat(kappa * (n - 1), kappa2);
    Rat bound_b = 2 * avg_deg * (1 + make_rat(1, n - 1));

    VerificationReport report;
    report.add_geq("kappa2/kappa >= (1/4) sum_e r(e+,e-)^2", ratio, sum_r2 / 4);
    report.add_geq("(1/4) sum_e r(e+,e-)^2 >= (|V|-1)^2 / 4|E|", sum_r2 / 4, bound_a);
    report.add_geq("quadratic bound: kappa2/kappa >= (|V|-1)^2 / 4|E|", ratio, bound_a);
    report.add_geq("matroid bound: kappa2/kappa >= r/(m-r+1)", ratio, mason);
    report.checks.push_back({bound_a > mason ? "bound comparison: quadratic bound exceeds matroid bound"
                             : bound_a == mason ? "bound comparison: bounds coincide"
                                                : "bound comparison: matroid bound exceeds quadratic bound",
                             to_string(bound_a), to_string(mason), true});
    report.add_leq("mean cut bound: E|dF| <= 2 avg.deg (1 + 1/(|V|-1))", cut, bound_b);
    return report;
}

VerificationReport weighted_identity(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() < 2)
        throw std::domain_error("weighted identity needs at least two vertices");

    Rat ratio = weighted_two_forest_count(g) / weighted_tree_count(g);
    PotentialProfile profile(g);
    const RatMatrix& r = profile.resistance_matrix();

    VerificationReport report;
    for (int q = 0; q < g.vertex_count(); ++q) {
        Rat rhs;
        for (int e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            Rat d = r(ed.head, q) - r(ed.tail, q);
            Rat re = r(ed.head, ed.tail);
            rhs += (3 * d * d + re * re) / (4 * g.length(e));
        }
        report.add_equal("weighted identity at q=" + std::to_string(q + 1), ratio, rhs);
    }
    return report;
}

InvariantBundle compute_invariants(const Graph& g) {
    require_connected(g);
    InvariantBundle b;
    b.genus = genus(g);
    b.unit_lengths = g.unit_lengths();
    PotentialProfile profile(g);
    b.sum_r = sum_edge_resistance(profile, 1);
    b.sum_r2 = sum_edge_resistance(profile, 2);
    b.gamma = gamma_constant(profile);
    if (b.unit_lengths) {
        Int kappa = count_spanning_trees(g);
        b.kappa = Rat(kappa);
        b.kappa2 = Rat(count_two_forests(g));
        if (g.vertex_count() >= 2) {
            b.ratio = b.kappa2 / b.kappa;
            b.expected_cut = make_rat(kappa * (g.vertex_count() - 1), b.kappa2.get_num());
        }
        auto et = eta_tau(g);
        b.eta = et.first;
        b.tau = et.second;
    } else {
        b.kappa = weighted_tree_count(g);
        b.kappa2 = weighted_two_forest_count(g);
        if (g.vertex_count() >= 2) b.ratio = b.kappa2 / b.kappa;
    }
    return b;
}

}  // namespace forests
