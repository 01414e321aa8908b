#include "rtt/approx.hpp"

#include <algorithm>

#include "rtt/rounding.hpp"
#include "rtt/transform.hpp"

namespace rtt {

namespace {

struct Stage {
    Instance arc;        // D'
    Instance expanded;   // D''
    ExpansionTrace trace;
    LpSolution lp;
};

Stage relax(const Instance& g, std::int64_t budget) {
    if (budget < 0) throw std::invalid_argument("negative budget");
    Stage s;
    s.arc = to_arc_form(g);
    s.arc.budget = budget;
    validate_instance(s.arc);
    auto [ex, tr] = two_tuple_expand(s.arc);
    s.expanded = std::move(ex);
    s.trace = std::move(tr);
    s.lp = solve_lp(build_lp(s.expanded, budget));
    return s;
}

// canonical per-job resource of a chain requirement vector: the paid prefix
std::vector<std::int64_t> paid_prefix(const ExpansionTrace& trace, const std::vector<std::int64_t>& lb) {
    std::vector<std::int64_t> r(trace.arcs.size(), 0);
    for (std::size_t j = 0; j < trace.arcs.size(); ++j) {
        const auto& x = trace.arcs[j];
        if (x.dummy) continue;
        for (const auto& c : x.chains) {
            if (c.step == 0 || lb[c.first] < c.step) break;
            r[j] += c.step;
        }
    }
    return r;
}

// Bi-criteria outputs may exceed the budget by their resource factor, so the
// schedule is taken against the flow's own value.
Schedule unbudgeted_schedule(const Instance& arc, const FlowAssignment& flow) {
    Instance g = arc;
    g.budget = std::max<std::int64_t>(g.budget, ceil_to_int(flow_value(arc, flow)));
    return evaluate(g, flow);
}

ApproxResult finish(Stage& s, std::vector<std::int64_t> allocation, Guarantee gu) {
    ApproxResult out;
    std::vector<std::int64_t> lower(s.arc.num_arcs(), 0);
    for (std::size_t e = 0; e < lower.size(); ++e)
        if (s.arc.arcs[e].job) lower[e] = allocation[e];
    out.flow = integral_flow(min_flow_values(s.arc, lower));
    out.schedule = unbudgeted_schedule(s.arc, out.flow);
    out.resource_used = floor_to_int(flow_value(s.arc, out.flow));
    out.allocation = std::move(allocation);
    out.guarantee = std::move(gu);
    out.lp_objective = s.lp.objective;
    out.lp_flow = s.lp.flow_value;
    out.instance = std::move(s.arc);
    return out;
}

template <class Family>
void require_family(const Instance& g, const char* what) {
    auto check = [&](const Job& j) {
        if (j && !std::holds_alternative<Family>(*j))
            throw IncompatibleFamily(std::string("instance has a job that is not ") + what);
    };
    for (const auto& a : g.arcs) check(a.job);
    for (const auto& j : g.node_jobs) check(j);
}

}  // namespace

ApproxResult bicriteria_general(const Instance& g, std::int64_t budget, const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1) throw std::invalid_argument("alpha must lie in (0,1)");
    Stage s = relax(g, budget);
    auto lb = alpha_round(s.lp, s.expanded, alpha);
    auto flow = integral_flow(min_flow_values(s.expanded, lb));
    auto mb = map_back(flow, s.trace);

    ApproxResult out;
    out.allocation.assign(s.arc.num_arcs(), 0);
    for (std::size_t j = 0; j < out.allocation.size(); ++j) out.allocation[j] = floor_to_int(mb.resource[j]);
    out.flow = mb.flow;
    out.schedule = unbudgeted_schedule(s.arc, out.flow);
    out.resource_used = floor_to_int(flow_value(s.arc, out.flow));
    out.guarantee = {Rational(1 / (1 - alpha)), Rational(1 / alpha)};
    out.lp_objective = s.lp.objective;
    out.lp_flow = s.lp.flow_value;
    out.instance = std::move(s.arc);
    return out;
}

std::int64_t kway_split_choice(std::int64_t r_bar, const Rational& r_star) {
    if (r_bar > 3) return r_bar / 2;
    return r_star < 2 ? 0 : 2;
}

std::int64_t binary_halving(std::int64_t r_bar, const Rational& r_star) {
    if (r_bar <= 0 || r_bar <= r_star) return r_bar;
    if ((r_bar & (r_bar - 1)) != 0)
        throw std::logic_error("rounded binary allocation " + std::to_string(r_bar) + " is not a power of two");
    return r_bar / 2;
}

std::int64_t binary_power_rounding(const Rational& r, int max_level) {
    if (r < 1 || max_level < 1) return 0;
    std::int64_t cap = std::int64_t{1} << max_level;
    if (r >= cap) return cap;
    std::int64_t p = 1;
    while (2 * p <= r) p *= 2;  // p = 2^i <= r < 2^{i+1}
    Rational mid = make_rational(3 * p, 2);
    std::int64_t out = r < mid ? p : 2 * p;
    return std::min(out, cap);
}

ApproxResult kway_five_approx(const Instance& g, std::int64_t budget) {
    require_family<KWay>(g, "k-way");
    Stage s = relax(g, budget);
    auto lb = alpha_round(s.lp, s.expanded, Rational(1, 2));
    auto r_bar = paid_prefix(s.trace, lb);
    auto summary = per_job_summary(s.lp, s.trace);
    std::vector<std::int64_t> alloc(s.arc.num_arcs(), 0);
    for (std::size_t j = 0; j < alloc.size(); ++j)
        if (s.arc.arcs[j].job) alloc[j] = kway_split_choice(r_bar[j], summary[j].resource);
    return finish(s, std::move(alloc), {Rational(1), Rational(5)});
}

ApproxResult binary_four_approx(const Instance& g, std::int64_t budget) {
    require_family<RecursiveBinary>(g, "recursive binary");
    Stage s = relax(g, budget);
    auto lb = alpha_round(s.lp, s.expanded, Rational(1, 2));
    auto r_bar = paid_prefix(s.trace, lb);
    auto summary = per_job_summary(s.lp, s.trace);
    std::vector<std::int64_t> alloc(s.arc.num_arcs(), 0);
    for (std::size_t j = 0; j < alloc.size(); ++j)
        if (s.arc.arcs[j].job) alloc[j] = binary_halving(r_bar[j], summary[j].resource);
    return finish(s, std::move(alloc), {Rational(1), Rational(4)});
}

ApproxResult binary_improved_bicriteria(const Instance& g, std::int64_t budget) {
    require_family<RecursiveBinary>(g, "recursive binary");
    Stage s = relax(g, budget);
    auto summary = per_job_summary(s.lp, s.trace);
    std::vector<std::int64_t> alloc(s.arc.num_arcs(), 0);
    for (std::size_t j = 0; j < alloc.size(); ++j) {
        const auto& job = s.arc.arcs[j].job;
        if (!job) continue;
        int k = binary_max_level(std::get<RecursiveBinary>(*job).base);
        alloc[j] = binary_power_rounding(summary[j].resource, k);
    }
    return finish(s, std::move(alloc), {Rational(4, 3), Rational(14, 5)});
}

}  // namespace rtt
