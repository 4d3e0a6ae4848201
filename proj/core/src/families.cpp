#include "forests/families.hpp"

#include <stdexcept>

namespace forests {

Family family_from_name(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "cycle") return Family::cycle;
    if (name == "wheel") return Family::wheel;
    if (name == "torus") return Family::torus;
    if (name == "house") return Family::house;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::wheel: return "wheel";
        case Family::torus: return "torus";
        case Family::house: return "house";
    }
    throw std::logic_error("unreachable");
}

Graph build(const FamilySpec& spec) {
    const int n = spec.n;
    std::vector<Edge> edges;
    switch (spec.family) {
        case Family::complete:
            if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            return Graph(n, std::move(edges));
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
            for (int v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
            return Graph(n, std::move(edges));
        case Family::wheel:
            if (n < 3) throw std::invalid_argument("wheel graph generation needs n >= 3");
            for (int v = 0; v < n; ++v) edges.push_back({std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)});
            for (int v = 0; v < n; ++v) edges.push_back({v, n});  // hub last
            return Graph(n + 1, std::move(edges));
        case Family::torus: {
            if (n < 2) throw std::invalid_argument("torus grid needs n >= 2");
            auto id = [n](int row, int col) { return ((row % n + n) % n) * n + (col % n + n) % n; };
            for (int row = 0; row < n; ++row)
                for (int col = 0; col < n; ++col) {
                    edges.push_back({id(row, col), id(row, col + 1)});
                    edges.push_back({id(row, col), id(row + 1, col)});
                }
            return Graph(n * n, std::move(edges));
        }
        case Family::house:
            return Graph::parse("5 6\n1 2\n1 3\n2 4\n3 4\n3 5\n4 5\n");
    }
    throw std::logic_error("unreachable");
}

Int fibonacci(int k) {
    Int a = 0, b = 1;  // F_0, F_1
    for (int i = 0; i < k; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

Int lucas(int k) {
    Int a = 2, b = 1;  // L_0, L_1
    for (int i = 0; i < k; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

ClosedForm closed_form(const FamilySpec& spec) {
    const int n = spec.n;
    switch (spec.family) {
        case Family::complete: {
            if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            if (n == 1) return {1, 0};
            Int kappa;
            mpz_ui_pow_ui(kappa.get_mpz_t(), n, n - 2);
            // kappa2 = (1/2)(n-1)(n+6) n^{n-4}, evaluated over rationals since
            // the power is negative for n = 2, 3.
            Rat exact = make_rat(Int(n - 1) * (n + 6), 2);
            for (int i = 0; i < n - 4; ++i) exact *= n;
            for (int i = 0; i < 4 - n; ++i) exact /= n;
            if (exact.get_den() != 1) throw std::logic_error("non-integer complete-graph count");
            return {kappa, exact.get_num()};
        }
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
            return {Int(n), Int(n) * (n - 1) / 2};
        case Family::wheel:
            if (n < 1) throw std::invalid_argument("wheel closed form needs n >= 1");
            return {lucas(2 * n) - 2, Int(n) * fibonacci(2 * n - 1)};
        case Family::house:
            return {11, 19};
        case Family::torus:
            throw std::invalid_argument("no closed form implemented for the torus family");
    }
    throw std::logic_error("unreachable");
}

}  // namespace forests
