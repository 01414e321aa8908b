#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rtt/instance.hpp"
#include "rtt/transform.hpp"

namespace rtt {

enum class RowSense { Le, Ge, Eq };

struct LpRow {
    std::string name;
    std::vector<std::pair<int, Rational>> coeffs;
    RowSense sense = RowSense::Le;
    Rational rhs;
};

// Relaxation over a two-tuple instance. Variables: f_e per arc, T_v per vertex
// except the source (pinned at 0). All variables are non-negative.
struct LinearProgram {
    std::vector<std::string> var_names;
    std::vector<LpRow> rows;
    int objective_var = -1;  // minimize T_sink; -1 when source == sink

    std::vector<int> flow_var;  // per arc
    std::vector<int> time_var;  // per vertex, -1 for the source

    // copy of the graph data needed to re-derive event times exactly
    std::vector<VertexId> tail, head;
    std::vector<Rational> idle_time;  // t(0) per arc, 0 on dummies
    std::vector<std::int64_t> step;   // r_e of a two-tuple arc, 0 otherwise
    std::size_t num_vertices = 0;
    VertexId source = 0, sink = 0;
    std::int64_t budget = 0;
};

LinearProgram build_lp(const Instance& two_tuple, std::int64_t budget);

// CPLEX-style text dump.
std::string to_lp_format(const LinearProgram& lp);

struct LpSolution {
    FlowAssignment flow;
    std::vector<Rational> event_time;
    Rational objective;   // exact T_sink after re-verification
    Rational flow_value;  // f*, exact source outflow
    double raw_objective = 0;
    long pivots = 0;
};

class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Floating-point simplex, then the primal point is snapped to rationals with
// denominator <= 1e9, event times are recomputed exactly, and every row is
// re-checked in exact arithmetic. Throws NumericalFailure naming the failing row.
LpSolution solve_lp(const LinearProgram& lp);

// t(0) * (1 - f / r) on a two-tuple arc, t(0) on a single-tuple arc, 0 on a dummy.
Rational relaxed_duration(const Job& job, const Rational& f);

struct JobSummary {
    Rational resource;  // r*_j, sum of chain flows
    Rational time;      // t*_j, largest relaxed chain duration
};

// Indexed like trace.arcs; dummies report (0, 0).
std::vector<JobSummary> per_job_summary(const LpSolution& sol, const ExpansionTrace& trace);

}  // namespace rtt
