#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtt/instance.hpp"
#include "rtt/transform.hpp"

namespace rtt {

struct Literal {
    int var = 1;  // 1-based
    bool negated = false;
};

using Clause = std::array<Literal, 3>;

struct Formula {
    int num_vars = 0;
    std::vector<Clause> clauses;
};

// "1,-2,3;-1,2,3": clauses split by ';', signed 1-based variables by ','.
Formula parse_formula(std::string_view text);

// First assignment (in binary counting order, variable 1 as the low bit) with
// exactly one true literal per clause.
std::optional<std::vector<bool>> one_in_three_solution(const Formula& f);

struct GeneratedInstance {
    Instance instance;  // budget and target are also stored on the instance
    std::int64_t budget = 0;
    std::optional<Rational> target;
    std::string provenance;
    std::optional<bool> achievable;
};

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Arc-form 1-in-3SAT gadgets, every named arc carries {<0,1>,<1,0>}.
// Variable i: s -> V1 -> {V2 | V3} -> V4 -> V5 -> V6 -> t with tuples on
// V1V2, V1V3, V4V5. Clause: s -> C1 -> {C2, C3} -> C4 -> {C5, C6, C7} ->
// {C8, C9, C10} -> t with tuples on C1C2, C2C4, C1C3, C3C4, C5C8, C6C9, C7C10.
// V2 stands for the literal V, V3 for its negation; for a clause (l1, l2, l3)
// C5 waits on (~l1, ~l2, l3), C6 on (~l1, l2, ~l3), C7 on (l1, ~l2, ~l3).
GeneratedInstance gen_sat_general(const Formula& f);

// Flow that sends one unit through each variable (V2 side when true) and two
// units through each clause, which then serve the two slowest of C5..C7.
FlowAssignment sat_general_flow(const GeneratedInstance& gen, const Formula& f, const std::vector<bool>& assignment);

struct SplitParams {
    std::int64_t k = 1, y = 0, x = 8;
};
SplitParams split_params(const Formula& f);

// Race-DAG (node form) splitting gadgets built with build_race_instance.
// Composite node P of order k: P.in -> P.m1..P.mk -> P.out.
GeneratedInstance gen_sat_splitting(const Formula& f, SplitFamily family);

// Satisfying-assignment flow on the activity-on-arc form of gen_sat_splitting's
// instance: two units per variable, four per clause.
FlowAssignment sat_splitting_flow(const GeneratedInstance& gen, const Formula& f, const std::vector<bool>& assignment,
                                  const Instance& arc_form, const ActivityTrace& trace);

// Completion time of writes queued on one cell, each taking one unit: the
// clause-side quantity tabulated for the splitting gadgets.
Rational serialized_write_completion(std::vector<Rational> ready);

// Partition: per element i a gadget v_i.1..v_i.7; source v0, sink vbar0.
GeneratedInstance gen_partition(const std::vector<std::int64_t>& s);
FlowAssignment partition_flow(const GeneratedInstance& gen, const std::vector<std::int64_t>& s,
                              const std::vector<bool>& top);

// Numeric 3-dimensional matching through two bipartite matchers.
GeneratedInstance gen_numeric_3dm(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                  const std::vector<std::int64_t>& c);

// Parallel matrix multiply race DAG, recursive binary family, budget n^2 * 2^h.
GeneratedInstance gen_parallel_mm(int n, int h);

// Flow on an activity-on-arc instance that carries `units` along each node path.
FlowAssignment node_path_flow(const Instance& node_form, const ActivityTrace& trace,
                              const std::vector<std::pair<std::vector<VertexId>, std::int64_t>>& paths);

}  // namespace rtt
