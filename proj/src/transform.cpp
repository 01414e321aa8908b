#include "rtt/transform.hpp"

#include <stdexcept>

namespace rtt {

std::pair<Instance, ActivityTrace> activity_on_arc(const Instance& g) {
    if (g.form != Form::NodeJobs) throw std::invalid_argument("activity_on_arc expects a node_jobs instance");
    validate_instance(g);
    Instance out;
    out.form = Form::ArcJobs;
    out.budget = g.budget;
    out.target = g.target;
    ActivityTrace tr;
    std::size_t n = g.num_vertices();
    // a_v = 2v, b_v = 2v + 1
    for (std::size_t v = 0; v < n; ++v) {
        out.add_vertex(g.vertices[v] + ".a");
        out.add_vertex(g.vertices[v] + ".b");
    }
    for (std::size_t v = 0; v < n; ++v)
        tr.node_arc.push_back(out.add_arc(2 * static_cast<VertexId>(v), 2 * static_cast<VertexId>(v) + 1, g.node_jobs[v]));
    for (const auto& a : g.arcs) tr.edge_arc.push_back(out.add_arc(2 * a.tail + 1, 2 * a.head));
    // a single source/sink node form keeps a single source/sink arc form
    out.source = 2 * g.source;
    out.sink = 2 * g.sink + 1;
    validate_instance(out);
    return {std::move(out), std::move(tr)};
}

Instance to_arc_form(const Instance& g) {
    if (g.form != Form::NodeJobs) return g;
    return activity_on_arc(g).first;
}

std::pair<Instance, ExpansionTrace> two_tuple_expand(const Instance& g) {
    if (g.form == Form::NodeJobs) throw std::invalid_argument("two_tuple_expand expects an arc-form instance");
    Instance out;
    out.form = Form::TwoTupleArcJobs;
    out.budget = g.budget;
    out.target = g.target;
    out.vertices = g.vertices;
    out.source = g.source;
    out.sink = g.sink;
    ExpansionTrace tr;
    tr.arcs.resize(g.num_arcs());
    for (std::size_t e = 0; e < g.arcs.size(); ++e) {
        const auto& a = g.arcs[e];
        auto& x = tr.arcs[e];
        if (!a.job) {
            x.dummy = true;
            x.copy = out.add_arc(a.tail, a.head);
            continue;
        }
        x.dummy = false;
        x.tuples = materialize(*a.job);
        const auto& t = x.tuples.tuples();
        for (std::size_t i = 0; i < t.size(); ++i) {
            VertexId mid = out.add_vertex("e" + std::to_string(e) + "~" + std::to_string(i + 1));
            Chain c;
            c.time = t[i].time;
            if (i + 1 < t.size()) {
                c.step = t[i + 1].resource - t[i].resource;
                c.first = out.add_arc(a.tail, mid, StepList({{0, t[i].time}, {c.step, Rational(0)}}));
            } else {
                c.first = out.add_arc(a.tail, mid, StepList({{0, t[i].time}}));
            }
            c.second = out.add_arc(mid, a.head, StepList({{0, Rational(0)}}));
            x.chains.push_back(c);
        }
    }
    return {std::move(out), std::move(tr)};
}

Rational chain_duration(const Chain& c, const Rational& x) {
    if (c.step > 0 && x >= c.step) return Rational(0);
    return c.time;
}

MappedBack map_back(const FlowAssignment& expanded, const ExpansionTrace& trace) {
    MappedBack mb;
    std::size_t m = trace.arcs.size();
    mb.resource.assign(m, Rational(0));
    mb.duration.assign(m, Rational(0));
    mb.flow.flow.assign(m, Rational(0));
    auto at = [&](ArcId e) -> const Rational& {
        if (e < 0 || static_cast<std::size_t>(e) >= expanded.flow.size())
            throw std::invalid_argument("flow does not cover the expanded instance");
        return expanded.flow[e];
    };
    for (std::size_t j = 0; j < m; ++j) {
        const auto& x = trace.arcs[j];
        if (x.dummy) {
            mb.flow.flow[j] = at(x.copy);
            continue;
        }
        Rational total = 0, worst = 0, used = 0;
        for (const auto& c : x.chains) {
            const Rational& f = at(c.first);
            if (at(c.second) != f) throw std::invalid_argument("chain flow not conserved on arc " + std::to_string(j));
            total += f;
            // a chain whose idle time is already dominated by earlier chains needs no
            // resource, nor does the last chain, whose time is fixed
            if (c.step > 0 && c.time > worst) used += f;
            Rational d = chain_duration(c, f);
            if (d > worst) worst = d;
        }
        mb.flow.flow[j] = total;
        mb.resource[j] = used;
        mb.duration[j] = worst;
    }
    return mb;
}

std::vector<std::int64_t> chain_requirements(const ExpansionTrace& trace, const std::vector<std::int64_t>& allocation,
                                             std::size_t expanded_arcs) {
    std::vector<std::int64_t> lb(expanded_arcs, 0);
    for (std::size_t j = 0; j < trace.arcs.size(); ++j) {
        const auto& x = trace.arcs[j];
        if (x.dummy) continue;
        std::int64_t covered = 0;
        for (const auto& c : x.chains) {
            if (c.step == 0 || covered + c.step > allocation[j]) break;
            covered += c.step;
            lb[c.first] = c.step;
            lb[c.second] = c.step;
        }
    }
    return lb;
}

}  // namespace rtt
