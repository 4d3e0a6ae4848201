#ifndef FORESTS_FOREST_COUNT_HPP
#define FORESTS_FOREST_COUNT_HPP

#include <map>
#include <tuple>
#include <vector>

#include "forests/graph.hpp"
#include "forests/matrix.hpp"
#include "forests/rational.hpp"

namespace forests {

// Spanning subgraph with no cycles; component[v] labels the component of v,
// with labels assigned in order of first appearance.
struct Forest {
    std::vector<int> edges;
    std::vector<int> component;
};

// Number of spanning trees kappa(G), as the Laplacian minor determinant.
Int count_spanning_trees(const Graph& g);

// Number of spanning forests with one root of `roots` per component.
Int count_rooted_forests(const Graph& g, const std::vector<int>& roots);

// kappa_2(xy|q): two-forests with x and y together, q in the other
// component. Zero when x or y equals q; symmetric in x and y.
Int count_pair_rooted(const Graph& g, int x, int y, int q);

// kappa_3(x|y|q); zero unless x, y, q are pairwise distinct.
Int count_three_forests(const Graph& g, int x, int y, int q);

// Number of two-component spanning forests kappa_2(G), via rooted counts
// relative to the base vertex q.
Int count_two_forests(const Graph& g, int q = 0);

// Weighted counts: each forest F contributes the product of lengths of the
// edges NOT in F.
Rat weighted_tree_count(const Graph& g);
Rat weighted_two_forest_count(const Graph& g, int q = 0);

// Brute-force enumeration of all r-component spanning forests, in
// lexicographic order of edge-index sets. Guarded to |E| <= 24.
std::vector<Forest> enumerate_forests(const Graph& g, int r);

inline constexpr int kEnumerationEdgeLimit = 24;

// Exact counts for one graph with memoized rooted-forest queries.
class ForestCensus {
  public:
    explicit ForestCensus(const Graph& g);

    const Int& kappa() const { return kappa_; }
    const Int& kappa2() const { return kappa2_; }

    const Int& pair_rooted(int x, int y, int q);
    const Int& three_forests(int x, int y, int q);

  private:
    Graph graph_;
    Int kappa_;
    Int kappa2_;
    std::map<std::tuple<int, int, int>, Int> pair_cache_;
    std::map<std::tuple<int, int, int>, Int> triple_cache_;
};

}  // namespace forests

#endif
