#include "rtt/lp.hpp"

#include <cmath>
#include <sstream>

#include "rtt/simplex.hpp"

namespace rtt {

namespace {

struct ArcShape {
    Rational t0;
    std::int64_t step = 0;
};

ArcShape shape_of(const Job& job) {
    ArcShape s;
    if (!job) return s;
    const auto* sl = std::get_if<StepList>(&*job);
    if (!sl || sl->size() > 2) throw std::invalid_argument("relaxation needs one- or two-tuple step lists");
    s.t0 = (*sl)[0].time;
    if (sl->size() == 2) {
        if ((*sl)[1].time != 0) throw std::invalid_argument("two-tuple arc must drop to duration 0");
        s.step = (*sl)[1].resource;
    }
    return s;
}

}  // namespace

Rational relaxed_duration(const Job& job, const Rational& f) {
    ArcShape s = shape_of(job);
    if (s.step == 0) return s.t0;
    if (f >= s.step) return Rational(0);
    Rational frac = f / s.step;
    return s.t0 * (1 - frac);
}

LinearProgram build_lp(const Instance& g, std::int64_t budget) {
    if (g.form != Form::TwoTupleArcJobs) throw std::invalid_argument("build_lp expects a two-tuple instance");
    LinearProgram lp;
    lp.num_vertices = g.num_vertices();
    lp.source = g.source;
    lp.sink = g.sink;
    lp.budget = budget;
    std::size_t m = g.num_arcs();
    lp.flow_var.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
        lp.flow_var[e] = static_cast<int>(lp.var_names.size());
        lp.var_names.push_back("f_" + std::to_string(e));
        lp.tail.push_back(g.arcs[e].tail);
        lp.head.push_back(g.arcs[e].head);
        ArcShape s = shape_of(g.arcs[e].job);
        lp.idle_time.push_back(s.t0);
        lp.step.push_back(s.step);
    }
    lp.time_var.assign(g.num_vertices(), -1);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<VertexId>(v) == g.source) continue;
        lp.time_var[v] = static_cast<int>(lp.var_names.size());
        lp.var_names.push_back("T_" + std::to_string(v));
    }
    lp.objective_var = lp.time_var[g.sink];

    for (std::size_t e = 0; e < m; ++e) {
        if (lp.step[e] == 0) continue;
        lp.rows.push_back({"cap_" + std::to_string(e), {{lp.flow_var[e], Rational(1)}}, RowSense::Le,
                           make_rational(lp.step[e])});
    }
    for (std::size_t e = 0; e < m; ++e) {
        // T_head - T_tail + (t0/r) f >= t0
        LpRow row{"time_" + std::to_string(e), {}, RowSense::Ge, lp.idle_time[e]};
        if (lp.time_var[lp.head[e]] >= 0) row.coeffs.push_back({lp.time_var[lp.head[e]], Rational(1)});
        if (lp.time_var[lp.tail[e]] >= 0) row.coeffs.push_back({lp.time_var[lp.tail[e]], Rational(-1)});
        if (lp.step[e] > 0 && lp.idle_time[e] != 0)
            row.coeffs.push_back({lp.flow_var[e], Rational(lp.idle_time[e] / lp.step[e])});
        lp.rows.push_back(std::move(row));
    }
    auto adj = adjacency(g);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<VertexId>(v) == g.source || static_cast<VertexId>(v) == g.sink) continue;
        LpRow row{"flow_" + std::to_string(v), {}, RowSense::Eq, Rational(0)};
        for (ArcId e : adj.out[v]) row.coeffs.push_back({lp.flow_var[e], Rational(1)});
        for (ArcId e : adj.in[v]) row.coeffs.push_back({lp.flow_var[e], Rational(-1)});
        lp.rows.push_back(std::move(row));
    }
    LpRow b{"budget", {}, RowSense::Le, make_rational(budget)};
    for (ArcId e : adj.out[g.source]) b.coeffs.push_back({lp.flow_var[e], Rational(1)});
    lp.rows.push_back(std::move(b));
    return lp;
}

std::string to_lp_format(const LinearProgram& lp) {
    std::ostringstream os;
    os.precision(17);
    os << "\\ resource-time tradeoff relaxation\nMinimize\n obj: ";
    if (lp.objective_var >= 0) os << lp.var_names[lp.objective_var];
    else os << "0 " << (lp.var_names.empty() ? "x" : lp.var_names[0]);
    os << "\nSubject To\n";
    for (const auto& r : lp.rows) {
        os << ' ' << r.name << ':';
        if (r.coeffs.empty()) os << " 0 " << (lp.var_names.empty() ? "x" : lp.var_names[0]);
        for (const auto& [j, c] : r.coeffs) {
            double v = c.get_d();
            os << (v < 0 ? " - " : " + ") << std::fabs(v) << ' ' << lp.var_names[j];
        }
        os << (r.sense == RowSense::Le ? " <= " : r.sense == RowSense::Ge ? " >= " : " = ") << r.rhs.get_d() << '\n';
    }
    os << "End\n";
    return os.str();
}

LpSolution solve_lp(const LinearProgram& lp) {
    simplex::Problem p;
    p.num_vars = static_cast<int>(lp.var_names.size());
    p.cost.assign(p.num_vars, 0.0);
    if (lp.objective_var >= 0) p.cost[lp.objective_var] = 1.0;
    for (const auto& r : lp.rows) {
        simplex::Row row;
        for (const auto& [j, c] : r.coeffs) row.coeffs.push_back({j, c.get_d()});
        row.sense = r.sense == RowSense::Le ? simplex::Sense::Le
                    : r.sense == RowSense::Ge ? simplex::Sense::Ge
                                              : simplex::Sense::Eq;
        row.rhs = r.rhs.get_d();
        p.rows.push_back(std::move(row));
    }
    auto res = simplex::solve(p);
    if (res.status != simplex::Status::Optimal) {
        const char* why = res.status == simplex::Status::Infeasible ? "infeasible"
                          : res.status == simplex::Status::Unbounded ? "unbounded"
                                                                     : "iteration limit";
        throw NumericalFailure(std::string("simplex stopped: ") + why);
    }

    LpSolution sol;
    sol.raw_objective = res.objective;
    sol.pivots = res.pivots;
    std::size_t m = lp.flow_var.size();
    sol.flow.flow.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
        double x = res.x[lp.flow_var[e]];
        sol.flow.flow[e] = x <= 0 ? Rational(0) : rationalize(x);
    }
    std::vector<std::vector<std::size_t>> out(lp.num_vertices);
    std::vector<int> indeg(lp.num_vertices, 0);
    for (std::size_t e = 0; e < m; ++e) {
        out[lp.tail[e]].push_back(e);
        indeg[lp.head[e]]++;
    }
    std::vector<VertexId> order;
    {
        std::vector<int> deg = indeg;
        std::vector<VertexId> st;
        for (std::size_t v = 0; v < lp.num_vertices; ++v)
            if (deg[v] == 0) st.push_back(static_cast<VertexId>(v));
        while (!st.empty()) {
            VertexId v = st.back();
            st.pop_back();
            order.push_back(v);
            for (std::size_t e : out[v])
                if (--deg[lp.head[e]] == 0) st.push_back(lp.head[e]);
        }
    }
    // values were rationalized one by one; push each vertex's residue onto an
    // out-arc with room so conservation holds exactly
    for (const auto& r : lp.rows) {
        if (r.name != "budget" || out[lp.source].empty()) continue;
        Rational total = 0;
        std::size_t big = out[lp.source].front();
        for (std::size_t e : out[lp.source]) {
            total += sol.flow.flow[e];
            if (sol.flow.flow[e] > sol.flow.flow[big]) big = e;
        }
        if (total > r.rhs) sol.flow.flow[big] -= total - r.rhs;
    }
    std::vector<Rational> inflow(lp.num_vertices, Rational(0));
    for (VertexId v : order) {
        if (v != lp.source && v != lp.sink && !out[v].empty()) {
            Rational outflow = 0;
            for (std::size_t e : out[v]) outflow += sol.flow.flow[e];
            Rational need = inflow[v] - outflow;
            if (need != 0) {
                std::size_t pick = out[v].front();
                Rational room = -1;
                for (std::size_t e : out[v]) {
                    const Rational& f = sol.flow.flow[e];
                    Rational r = need > 0 ? (lp.step[e] > 0 ? Rational(lp.step[e] - f) : Rational(need)) : f;
                    if (r > room) {
                        room = r;
                        pick = e;
                    }
                }
                sol.flow.flow[pick] += need;
            }
        }
        for (std::size_t e : out[v]) inflow[lp.head[e]] += sol.flow.flow[e];
    }
    // exact event times: tightest schedule for the snapped flow
    sol.event_time.assign(lp.num_vertices, Rational(0));
    for (VertexId v : order) {
        for (std::size_t e : out[v]) {
            Rational d = lp.idle_time[e];
            if (lp.step[e] > 0) {
                d = lp.idle_time[e] - lp.idle_time[e] / lp.step[e] * sol.flow.flow[e];
                if (d < 0) d = 0;
            }
            Rational cand = sol.event_time[v] + d;
            if (cand > sol.event_time[lp.head[e]]) sol.event_time[lp.head[e]] = cand;
        }
    }
    std::vector<Rational> value(lp.var_names.size(), Rational(0));
    for (std::size_t e = 0; e < m; ++e) value[lp.flow_var[e]] = sol.flow.flow[e];
    for (std::size_t v = 0; v < lp.num_vertices; ++v)
        if (lp.time_var[v] >= 0) value[lp.time_var[v]] = sol.event_time[v];
    for (const auto& r : lp.rows) {
        Rational lhs = 0;
        for (const auto& [j, c] : r.coeffs) lhs += c * value[j];
        bool ok = r.sense == RowSense::Le ? lhs <= r.rhs : r.sense == RowSense::Ge ? lhs >= r.rhs : lhs == r.rhs;
        if (!ok)
            throw NumericalFailure("row " + r.name + " violated after exact check: lhs " + to_string(lhs) + ", rhs " +
                                   to_string(r.rhs));
    }
    sol.objective = sol.event_time[lp.sink];
    sol.flow_value = 0;
    for (std::size_t e = 0; e < m; ++e)
        if (lp.tail[e] == lp.source) sol.flow_value += sol.flow.flow[e];
    double gap = std::fabs(sol.objective.get_d() - res.objective);
    if (gap > 1e-6 * std::max(1.0, std::fabs(res.objective)))
        throw NumericalFailure("exact objective " + to_string(sol.objective) + " disagrees with simplex value");
    return sol;
}

std::vector<JobSummary> per_job_summary(const LpSolution& sol, const ExpansionTrace& trace) {
    std::vector<JobSummary> out(trace.arcs.size(), JobSummary{Rational(0), Rational(0)});
    for (std::size_t j = 0; j < trace.arcs.size(); ++j) {
        const auto& x = trace.arcs[j];
        if (x.dummy) continue;
        for (const auto& c : x.chains) {
            const Rational& f = sol.flow.flow[c.first];
            out[j].resource += f;
            Rational d = c.time;
            if (c.step > 0) {
                d = f >= c.step ? Rational(0) : Rational(c.time * (1 - f / c.step));
            }
            if (d > out[j].time) out[j].time = d;
        }
    }
    return out;
}

}  // namespace rtt
