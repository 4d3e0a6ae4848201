#ifndef FORESTS_POTENTIAL_HPP
#define FORESTS_POTENTIAL_HPP

#include <map>
#include <vector>

#include "forests/graph.hpp"
#include "forests/matrix.hpp"
#include "forests/report.hpp"

namespace forests {

// Resistance matrix R, curvature vector mu, and potential kernels j_q of a
// connected graph, all exact. Edge lengths act as per-edge resistances.
// Kernels are computed by one matrix inversion per base vertex and cached;
// build the profile fully before sharing it across threads.
class PotentialProfile {
  public:
    explicit PotentialProfile(const Graph& g);

    const Graph& graph() const { return graph_; }
    const RatMatrix& resistance_matrix() const { return resistance_; }
    Rat resistance(int x, int y) const { return resistance_(x, y); }
    const std::vector<Rat>& curvature() const { return curvature_; }

    // n x n symmetric kernel with the q-row and q-column zero.
    const RatMatrix& kernel(int q);

    // mu^T R mu = 2 gamma(G).
    Rat mu_r_mu() const;

  private:
    Graph graph_;
    RatMatrix resistance_;
    std::vector<Rat> curvature_;
    std::map<int, RatMatrix> kernel_cache_;
};

Rat effective_resistance(const Graph& g, int x, int y);
RatMatrix resistance_matrix(const Graph& g);
RatMatrix potential_kernel(const Graph& g, int q);

// mu_x = 1 - (1/2) sum over edges at x of r(e+,e-)/length(e); sums to 1.
std::vector<Rat> curvature_vector(const Graph& g);

// The five resistance/kernel identities for one vertex triple (x, y, q).
VerificationReport verify_resistance_identities(PotentialProfile& profile, int x, int y, int q);

// Matrix identities tying L, R, and mu together:
//   I + (1/2) LR = mu 1^T
//   R mu = (mu^T R mu) 1
//   R + (1/2) RLR = (mu^T R mu) 1 1^T
//   R^{-1} = -(1/2) L + (1 / mu^T R mu) mu mu^T
//   L + (1/2) LRL = 0
VerificationReport verify_matrix_identities(const Graph& g);

}  // namespace forests

#endif
