#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rtt/instance.hpp"

namespace rtt {

struct OracleLimits {
    std::size_t max_arcs = 16;
    std::int64_t max_budget = 8;
};

class SizeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    Rational makespan;
    FlowAssignment flow;
    std::uint64_t nodes = 0;  // search nodes visited
};

// Exhaustive search over integral conserved flows with source outflow <= budget.
// Vertices are settled in topological order (smallest id first); at each vertex
// its inflow is split over the out-arcs in arc-id order, larger shares first.
// A branch is cut once some event time plus the cheapest possible remainder
// reaches the best makespan found so far.
OracleResult brute_min_makespan(const Instance& g, std::int64_t budget, const OracleLimits& limits = {});

// Smallest B <= max_budget whose optimum is <= target.
std::optional<std::int64_t> brute_min_resource(const Instance& g, const Rational& target, std::int64_t max_budget,
                                               const OracleLimits& limits = {});

}  // namespace rtt
