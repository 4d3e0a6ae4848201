#include "forests/potential.hpp"

#include <stdexcept>

namespace forests {

namespace {

RatMatrix embed_kernel(const RatMatrix& inv, int n, int q) {
    RatMatrix j(n, n);
    auto full = [q](int i) { return i < q ? i : i + 1; };
    for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) j(full(a), full(b)) = inv(a, b);
    return j;
}

}  // namespace

PotentialProfile::PotentialProfile(const Graph& g) : graph_(g) {
    require_connected(g);
    const int n = g.vertex_count();
    const RatMatrix& j0 = kernel(0);
    resistance_ = RatMatrix(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            resistance_(x, y) = j0(x, x) + j0(y, y) - 2 * j0(x, y);
    curvature_.assign(n, Rat(1));
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        Rat half_r = resistance_(ed.head, ed.tail) / (2 * g.length(e));
        curvature_[ed.head] -= half_r;
        curvature_[ed.tail] -= half_r;
    }
}

const RatMatrix& PotentialProfile::kernel(int q) {
    auto it = kernel_cache_.find(q);
    if (it == kernel_cache_.end()) {
        if (q < 0 || q >= graph_.vertex_count())
            throw std::out_of_range("kernel base vertex out of range");
        RatMatrix inv = inverse(weighted_laplacian(graph_).erased({q}, {q}));
        it = kernel_cache_.emplace(q, embed_kernel(inv, graph_.vertex_count(), q)).first;
    }
    return it->second;
}

Rat PotentialProfile::mu_r_mu() const { return quadratic_form(curvature_, resistance_, curvature_); }

Rat effective_resistance(const Graph& g, int x, int y) {
    return PotentialProfile(g).resistance(x, y);
}

RatMatrix resistance_matrix(const Graph& g) { return PotentialProfile(g).resistance_matrix(); }

RatMatrix potential_kernel(const Graph& g, int q) { return PotentialProfile(g).kernel(q); }

std::vector<Rat> curvature_vector(const Graph& g) { return PotentialProfile(g).curvature(); }

VerificationReport verify_resistance_identities(PotentialProfile& profile, int x, int y, int q) {
    const Graph& g = profile.graph();
    const RatMatrix& r = profile.resistance_matrix();
    const RatMatrix& jx = profile.kernel(x);
    const RatMatrix& jq = profile.kernel(q);
    const RatMatrix& jy = profile.kernel(y);

    VerificationReport report;
    report.add_equal("(a) r(x,y) = j_x(y,q) + j_y(x,q)", r(x, y), jx(y, q) + jy(x, q));
    report.add_equal("(b) r(x,q) + r(y,q) = r(x,y) + 2 j_q(x,y)", r(x, q) + r(y, q),
                     r(x, y) + 2 * jq(x, y));
    report.add_equal("(c) r(x,q) - r(y,q) = 2 j_x(y,q) - r(x,y)", r(x, q) - r(y, q),
                     2 * jx(y, q) - r(x, y));
    Rat neighbor_sum;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.head != x && ed.tail != x) continue;
        int other = ed.head == x ? ed.tail : ed.head;
        neighbor_sum += jx(q, other) / g.length(e);
    }
    report.add_equal("(d) sum over neighbors of j_x(q,y)", neighbor_sum, Rat(x == q ? 0 : 1));
    Rat lhs_e = (r(x, q) - r(y, q)) * (r(x, q) - r(y, q));
    Rat rhs_e = r(x, y) * r(x, y) + 4 * r(x, y) * jq(x, y) + 4 * jq(x, y) * jq(x, y) -
                4 * r(x, q) * r(y, q);
    report.add_equal("(e) squared resistance difference expansion", lhs_e, rhs_e);
    return report;
}

VerificationReport verify_matrix_identities(const Graph& g) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n < 2) throw std::domain_error("matrix identities need at least two vertices");

    PotentialProfile profile(g);
    RatMatrix l = weighted_laplacian(g);
    const RatMatrix& r = profile.resistance_matrix();
    const std::vector<Rat>& mu = profile.curvature();
    std::vector<Rat> ones(n, Rat(1));
    Rat murmu = profile.mu_r_mu();
    Rat half = make_rat(1, 2);

    VerificationReport report;
    RatMatrix lr = l * r;

    auto add_matrix_equal = [&report](const std::string& name, const RatMatrix& a,
                                      const RatMatrix& b) {
        // Entrywise comparison; the report shows the first mismatch if any.
        if (a == b) {
            report.checks.push_back({name, "entrywise equal", "entrywise equal", true});
            return;
        }
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j) != b(i, j)) {
                    std::string at = " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    report.checks.push_back({name + at, to_string(a(i, j)), to_string(b(i, j)), false});
                    return;
                }
    };

    add_matrix_equal("(a) I + (1/2) LR = mu 1^T", RatMatrix::identity(n) + lr * half, outer(mu, ones));
    std::vector<Rat> rmu = matvec(r, mu);
    bool rmu_ok = true;
    for (int i = 0; i < n; ++i) rmu_ok = rmu_ok && rmu[i] == murmu;
    report.checks.push_back({"(b) R mu = (mu^T R mu) 1", rmu_ok ? "entrywise equal" : to_string(rmu[0]),
                             to_string(murmu), rmu_ok});
    add_matrix_equal("(c) R + (1/2) RLR = (mu^T R mu) 1 1^T", r + (r * lr) * half,
                     outer(ones, ones) * murmu);
    add_matrix_equal("R^{-1} = -(1/2)L + mu mu^T / (mu^T R mu)", inverse(r),
                     l * make_rat(-1, 2) + outer(mu, mu) * (1 / murmu));
    add_matrix_equal("L + (1/2) LRL = 0", l + (lr * l) * half, RatMatrix(n, n));
    return report;
}

}  // namespace forests
