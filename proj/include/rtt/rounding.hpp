#pragma once

#include <cstdint>
#include <vector>

#include "rtt/instance.hpp"
#include "rtt/lp.hpp"

namespace rtt {

struct LowerBoundedFlowProblem {
    const Instance& dag;
    std::vector<std::int64_t> lower_bound;  // per arc
};

// Per arc of the two-tuple instance: r_e when the relaxed duration is strictly
// below alpha * t(0), else 0. Single-tuple and dummy arcs get 0.
std::vector<std::int64_t> alpha_round(const LpSolution& sol, const Instance& two_tuple, const Rational& alpha);

// Smallest integral s-t flow meeting every lower bound. A feasible circulation
// comes from the usual lower-bound reduction to max-flow, then a sink-to-source
// max-flow in the residual network cancels the excess.
FlowAssignment min_flow_lower_bounds(const LowerBoundedFlowProblem& problem);
std::vector<std::int64_t> min_flow_values(const Instance& dag, const std::vector<std::int64_t>& lower_bound);

}  // namespace rtt
