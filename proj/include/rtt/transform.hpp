#pragma once

#include <utility>
#include <vector>

#include "rtt/instance.hpp"

namespace rtt {

struct ActivityTrace {
    std::vector<ArcId> node_arc;  // vertex of the node-form instance -> its job arc (a_v, b_v)
    std::vector<ArcId> edge_arc;  // edge of the node-form instance -> dummy arc (b_u, a_v)
};

std::pair<Instance, ActivityTrace> activity_on_arc(const Instance& g);

// Returns g itself for arc forms, the activity-on-arc instance for NodeJobs.
Instance to_arc_form(const Instance& g);

struct Chain {
    ArcId first = -1;       // (u, u_i), carries the tuple pair
    ArcId second = -1;      // (u_i, v), always <0,0>
    std::int64_t step = 0;  // r_{i+1} - r_i; 0 on the last chain
    Rational time;          // t_j(r_i)
};

struct ArcExpansion {
    bool dummy = true;
    ArcId copy = -1;  // dummy arcs are copied verbatim
    StepList tuples;  // materialized job
    std::vector<Chain> chains;
};

struct ExpansionTrace {
    std::vector<ArcExpansion> arcs;  // indexed by arc id of the ArcJobs instance
};

std::pair<Instance, ExpansionTrace> two_tuple_expand(const Instance& g);

struct MappedBack {
    std::vector<Rational> resource;  // canonical r_j per arc (0 on dummies)
    std::vector<Rational> duration;  // max chain duration per arc
    FlowAssignment flow;             // flow on the ArcJobs instance
};

MappedBack map_back(const FlowAssignment& expanded, const ExpansionTrace& trace);

// Lower bounds on the expanded arcs that realize a per-arc allocation:
// every chain whose tuple range is covered by the allocation is paid in full.
std::vector<std::int64_t> chain_requirements(const ExpansionTrace& trace, const std::vector<std::int64_t>& allocation,
                                             std::size_t expanded_arcs);

// Duration of one chain given the flow on its first arc.
Rational chain_duration(const Chain& c, const Rational& x);

}  // namespace rtt
