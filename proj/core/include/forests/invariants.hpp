#ifndef FORESTS_INVARIANTS_HPP
#define FORESTS_INVARIANTS_HPP

#include <utility>

#include "forests/graph.hpp"
#include "forests/potential.hpp"
#include "forests/report.hpp"

namespace forests {

// gamma(G) = (1/4) sum over edges of (r(e+,q) - r(e-,q))^2 / length(e).
// Evaluated for every base vertex q; the values must all agree.
Rat gamma_constant(const Graph& g);
Rat gamma_constant(PotentialProfile& profile);

// eta(G) = (1/12) sum over edges of (1 - r(e+,e-))^2 and tau = eta + gamma.
// Defined for unit lengths only.
std::pair<Rat, Rat> eta_tau(const Graph& g);

// kappa_2/kappa = 3 gamma + (1/4) sum r(e+,e-)^2, plus the expanded form
// sum_v r(v,q) + sum_e j_q(e+,e-)^2 - sum_e r(e+,q) r(e-,q) for every q.
VerificationReport main_identity(const Graph& g);

// kappa (|V|-1) / kappa_2, the mean cut size of a uniform two-forest.
Rat expected_cut_size(const Graph& g);

// Lower bounds on kappa_2/kappa ((|V|-1)^2/4|E| and the matroid bound
// r/(m-r+1)) and the upper bound on the expected cut size.
VerificationReport bounds_report(const Graph& g);

// Weighted form of the main identity, with weighted forest counts.
VerificationReport weighted_identity(const Graph& g);

struct InvariantBundle {
    Rat kappa;   // weighted counts are rational; integral when lengths are 1
    Rat kappa2;
    Rat ratio;
    Rat gamma;
    Rat eta;  // meaningful only when unit_lengths
    Rat tau;
    Rat expected_cut;
    Rat sum_r;
    Rat sum_r2;
    int genus;
    bool unit_lengths;
};

InvariantBundle compute_invariants(const Graph& g);

}  // namespace forests

#endif
