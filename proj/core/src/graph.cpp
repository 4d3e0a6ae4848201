#include "forests/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace forests {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<Rat> lengths)
    : n_(vertex_count), edges_(std::move(edges)), lengths_(std::move(lengths)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (const Edge& e : edges_) {
        if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.tail == e.head) throw std::invalid_argument("loop edges are not allowed");
    }
    if (!lengths_.empty()) {
        if (lengths_.size() != edges_.size())
            throw std::invalid_argument("length list does not match edge list");
        for (const Rat& l : lengths_)
            if (l <= 0) throw std::invalid_argument("edge lengths must be positive");
    }
}

Graph Graph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<Rat> lengths;
    bool any_length = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (n < 0) {
            std::istringstream hs(line);
            if (!(hs >> n >> m) || n < 1 || m < 0)
                throw std::invalid_argument("malformed header on line " + std::to_string(lineno));
            continue;
        }
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v))
            throw std::invalid_argument("malformed edge on line " + std::to_string(lineno));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("vertex index out of range on line " + std::to_string(lineno));
        if (u == v)
            throw std::invalid_argument("loop edge on line " + std::to_string(lineno));
        // Default orientation: toward the larger endpoint.
        edges.push_back({std::min(u, v) - 1, std::max(u, v) - 1});
        std::string tail;
        if (es >> tail) {
            Rat len = parse_rational(tail);
            if (len <= 0)
                throw std::invalid_argument("nonpositive length on line " + std::to_string(lineno));
            lengths.resize(edges.size() - 1, Rat(1));
            lengths.push_back(len);
            any_length = true;
        } else if (any_length) {
            lengths.push_back(Rat(1));
        }
        std::string extra;
        if (es >> extra)
            throw std::invalid_argument("trailing tokens on line " + std::to_string(lineno));
    }
    if (n < 0) throw std::invalid_argument("empty graph document");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge count does not match header");
    return Graph(n, std::move(edges), std::move(lengths));
}

Graph Graph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << " " << edges_.size() << "\n";
    for (size_t e = 0; e < edges_.size(); ++e) {
        int u = std::min(edges_[e].tail, edges_[e].head) + 1;
        int v = std::max(edges_[e].tail, edges_[e].head) + 1;
        out << u << " " << v;
        if (has_lengths()) out << " " << to_string(lengths_[e]);
        out << "\n";
    }
    return out.str();
}

bool Graph::unit_lengths() const {
    for (const Rat& l : lengths_)
        if (l != 1) return false;
    return true;
}

const Rat& Graph::length(int e) const {
    static const Rat one(1);
    if (lengths_.empty()) return one;
    return lengths_[e];
}

Graph Graph::with_flipped_orientation() const {
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const Edge& e : edges_) flipped.push_back({e.head, e.tail});
    return Graph(n_, std::move(flipped), lengths_);
}

Graph Graph::with_scaled_lengths(const Rat& c) const {
    if (c <= 0) throw std::invalid_argument("length scale must be positive");
    std::vector<Rat> scaled(edges_.size(), Rat(1));
    for (size_t e = 0; e < edges_.size(); ++e) scaled[e] = length(static_cast<int>(e)) * c;
    return Graph(n_, edges_, std::move(scaled));
}

IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix b(g.vertex_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        b(g.edge(e).head, e) = 1;
        b(g.edge(e).tail, e) = -1;
    }
    return b;
}

IntMatrix laplacian(const Graph& g) {
    IntMatrix l(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        l(e.tail, e.tail) += 1;
        l(e.head, e.head) += 1;
        l(e.tail, e.head) -= 1;
        l(e.head, e.tail) -= 1;
    }
    return l;
}

RatMatrix weighted_laplacian(const Graph& g) {
    RatMatrix l(g.vertex_count(), g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        Rat c = 1 / g.length(e);
        const Edge& ed = g.edge(e);
        l(ed.tail, ed.tail) += c;
        l(ed.head, ed.head) += c;
        l(ed.tail, ed.head) -= c;
        l(ed.head, ed.tail) -= c;
    }
    return l;
}

std::vector<int> component_labels(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        std::vector<int> stack{start};
        label[start] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    auto label = component_labels(g);
    for (int l : label)
        if (l != 0) return false;
    return true;
}

void require_connected(const Graph& g) {
    auto label = component_labels(g);
    for (size_t v = 0; v < label.size(); ++v)
        if (label[v] != 0)
            throw std::domain_error("graph is disconnected: vertex 1 and vertex " +
                                    std::to_string(v + 1) + " lie in different components");
}

}  // namespace forests
