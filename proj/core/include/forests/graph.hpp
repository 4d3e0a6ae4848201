#ifndef FORESTS_GRAPH_HPP
#define FORESTS_GRAPH_HPP

#include <string>
#include <vector>

#include "forests/matrix.hpp"
#include "forests/rational.hpp"

namespace forests {

struct Edge {
    int tail;  // e^-
    int head;  // e^+
};

// Finite connected multigraph with ordered vertices 0..n-1 and oriented
// edges. Parallel edges are allowed, loops are not. Edge index is the
// identity of an edge. Optional per-edge positive rational lengths.
class Graph {
  public:
    Graph(int vertex_count, std::vector<Edge> edges, std::vector<Rat> lengths = {});

    // Edge-list text format: first line "n m", then m lines "u v" or
    // "u v len" with 1-indexed endpoints; '#' starts a comment line.
    static Graph parse(const std::string& text);
    static Graph parse_file(const std::string& path);

    std::string serialize() const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    bool has_lengths() const { return !lengths_.empty(); }
    bool unit_lengths() const;
    const Rat& length(int e) const;

    Graph with_unit_lengths() const { return Graph(n_, edges_); }
    Graph with_flipped_orientation() const;
    Graph with_scaled_lengths(const Rat& c) const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<Rat> lengths_;  // empty means all edges have length 1
};

IntMatrix incidence_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);

// Laplacian where each edge contributes conductance 1/length(e).
RatMatrix weighted_laplacian(const Graph& g);

bool is_connected(const Graph& g);
// Component id per vertex; ids are assigned in order of first appearance.
std::vector<int> component_labels(const Graph& g);

inline int genus(const Graph& g) { return g.edge_count() - g.vertex_count() + 1; }

// Throws std::domain_error naming a vertex in each of two components.
void require_connected(const Graph& g);

}  // namespace forests

#endif
