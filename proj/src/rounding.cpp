#include "rtt/rounding.hpp"

#include <stdexcept>

#include "rtt/maxflow.hpp"

namespace rtt {

std::vector<std::int64_t> alpha_round(const LpSolution& sol, const Instance& g, const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
    if (g.form != Form::TwoTupleArcJobs) throw std::invalid_argument("alpha_round expects a two-tuple instance");
    std::vector<std::int64_t> lb(g.num_arcs(), 0);
    for (std::size_t e = 0; e < g.arcs.size(); ++e) {
        const auto& job = g.arcs[e].job;
        if (!job) continue;
        const auto& sl = std::get<StepList>(*job);
        if (sl.size() != 2) continue;
        Rational t0 = sl[0].time;
        // boundary value rounds up to t(0)
        if (relaxed_duration(job, sol.flow.flow[e]) < alpha * t0) lb[e] = sl[1].resource;
    }
    return lb;
}

std::vector<std::int64_t> min_flow_values(const Instance& g, const std::vector<std::int64_t>& lower) {
    std::size_t n = g.num_vertices(), m = g.num_arcs();
    if (lower.size() != m) throw std::invalid_argument("lower bound vector does not match arcs");
    std::int64_t big = 1;
    for (auto l : lower) {
        if (l < 0) throw std::invalid_argument("negative lower bound");
        big += l;
    }
    std::vector<std::int64_t> f(lower);
    if (big == 1) return f;

    // feasibility: circulation with t -> s closing arc
    int S = static_cast<int>(n), T = static_cast<int>(n) + 1;
    MaxFlow feas(static_cast<int>(n) + 2);
    std::vector<int> id(m);
    for (std::size_t e = 0; e < m; ++e) id[e] = feas.add_edge(g.arcs[e].tail, g.arcs[e].head, big - lower[e]);
    feas.add_edge(g.sink, g.source, big);
    std::vector<std::int64_t> excess(n, 0);
    for (std::size_t e = 0; e < m; ++e) {
        excess[g.arcs[e].head] += lower[e];
        excess[g.arcs[e].tail] -= lower[e];
    }
    std::int64_t need = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (excess[v] > 0) {
            feas.add_edge(S, static_cast<int>(v), excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            feas.add_edge(static_cast<int>(v), T, -excess[v]);
        }
    }
    if (feas.run(S, T) != need) throw std::logic_error("lower bounds cannot be met; graph is not an s-t DAG");
    for (std::size_t e = 0; e < m; ++e) f[e] = lower[e] + feas.flow_on(id[e]);

    // cancel: push as much as possible from t back to s
    MaxFlow cancel(static_cast<int>(n));
    std::vector<int> fwd(m), bwd(m);
    for (std::size_t e = 0; e < m; ++e) {
        fwd[e] = cancel.add_edge(g.arcs[e].tail, g.arcs[e].head, big);
        bwd[e] = cancel.add_edge(g.arcs[e].head, g.arcs[e].tail, f[e] - lower[e]);
    }
    cancel.run(g.sink, g.source);
    for (std::size_t e = 0; e < m; ++e) f[e] += cancel.flow_on(fwd[e]) - cancel.flow_on(bwd[e]);
    return f;
}

FlowAssignment min_flow_lower_bounds(const LowerBoundedFlowProblem& problem) {
    return integral_flow(min_flow_values(problem.dag, problem.lower_bound));
}

}  // namespace rtt
