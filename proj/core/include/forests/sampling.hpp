#ifndef FORESTS_SAMPLING_HPP
#define FORESTS_SAMPLING_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "forests/graph.hpp"
#include "forests/rational.hpp"

namespace forests {

// splitmix64, used to derive independent per-trial seeds from one user seed.
uint64_t splitmix64(uint64_t x);

// mt19937_64 with a rejection-sampled bounded draw, so streams are
// bit-identical across platforms (std::uniform_int_distribution is not).
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}
    uint64_t next() { return engine_(); }
    // Uniform draw from {0, ..., n-1}.
    int below(int n);

  private:
    std::mt19937_64 engine_;
};

// Wilson's algorithm: exact uniform spanning tree via loop-erased random
// walks, rooted at vertex 0. Returns edge indices.
std::vector<int> sample_spanning_tree(const Graph& g, Rng& rng);

struct SampleEstimate {
    double estimate;
    double standard_error;
    long trials;
    uint64_t seed;
};

// Estimates the mean cut size of a uniform two-forest. Each trial samples a
// uniform (tree, tree-edge) pair; deleting the edge gives a two-forest F
// drawn with probability proportional to |dF|, so the harmonic mean of the
// sampled cut sizes estimates E|dF|. Trial i uses its own generator seeded
// with splitmix64(seed + i); the standard error is a 200-resample bootstrap.
SampleEstimate estimate_expected_cut(const Graph& g, long trials, uint64_t seed);

// Cut size of the two-forest obtained by deleting tree_edge from tree.
int cut_size(const Graph& g, const std::vector<int>& tree, int tree_edge);

// Exact histogram of |dF| over all two-forests, by enumeration (|E| <= 24).
std::map<int, long long> exact_cut_distribution(const Graph& g);

// Exact harmonic-mean identity over the full (tree, edge) distribution:
// sum over all (T, e) of 1/|d(T-e)| equals kappa2, so the estimator's
// target is exactly kappa (|V|-1) / kappa2. Returns the exact target.
Rat exact_harmonic_mean_cut(const Graph& g);

}  // namespace forests

#endif
