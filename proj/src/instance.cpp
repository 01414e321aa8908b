#include "rtt/instance.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace rtt {

const char* form_name(Form f) {
    switch (f) {
        case Form::NodeJobs: return "node_jobs";
        case Form::ArcJobs: return "arc_jobs";
        case Form::TwoTupleArcJobs: return "two_tuple_arc_jobs";
    }
    return "?";
}

Rational job_duration(const Job& job, std::int64_t r) {
    if (!job) return Rational(0);
    return eval_duration(*job, r);
}

Rational job_duration(const Job& job, const Rational& r) {
    if (!job) return Rational(0);
    return eval_duration(*job, r);
}

VertexId Instance::add_vertex(std::string name, Job job) {
    vertices.push_back(std::move(name));
    if (form == Form::NodeJobs) node_jobs.push_back(std::move(job));
    return static_cast<VertexId>(vertices.size() - 1);
}

ArcId Instance::add_arc(VertexId tail, VertexId head, Job job) {
    arcs.push_back({tail, head, std::move(job)});
    return static_cast<ArcId>(arcs.size() - 1);
}

VertexId Instance::find_vertex(const std::string& name) const {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    return it == vertices.end() ? -1 : static_cast<VertexId>(it - vertices.begin());
}

bool operator==(const Instance& a, const Instance& b) {
    if (a.form != b.form || a.vertices != b.vertices || a.node_jobs != b.node_jobs) return false;
    if (a.source != b.source || a.sink != b.sink || a.budget != b.budget || a.target != b.target) return false;
    if (a.arcs.size() != b.arcs.size()) return false;
    for (std::size_t i = 0; i < a.arcs.size(); ++i) {
        if (a.arcs[i].tail != b.arcs[i].tail || a.arcs[i].head != b.arcs[i].head) return false;
        if (a.arcs[i].job != b.arcs[i].job) return false;
    }
    return true;
}

Adjacency adjacency(const Instance& g) {
    Adjacency adj;
    adj.out.resize(g.num_vertices());
    adj.in.resize(g.num_vertices());
    for (ArcId e = 0; e < static_cast<ArcId>(g.arcs.size()); ++e) {
        adj.out[g.arcs[e].tail].push_back(e);
        adj.in[g.arcs[e].head].push_back(e);
    }
    return adj;
}

std::optional<std::vector<VertexId>> topological_order(const Instance& g) {
    std::size_t n = g.num_vertices();
    std::vector<int> indeg(n, 0);
    auto adj = adjacency(g);
    for (const auto& a : g.arcs) indeg[a.head]++;
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(static_cast<VertexId>(v));
    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (ArcId e : adj.out[v])
            if (--indeg[g.arcs[e].head] == 0) ready.push(g.arcs[e].head);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

void validate_instance(const Instance& g) {
    std::size_t n = g.num_vertices();
    if (n == 0) throw InvalidInstance("instance has no vertices");
    auto in_range = [n](VertexId v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    if (!in_range(g.source) || !in_range(g.sink)) throw InvalidInstance("source/sink out of range");
    for (std::size_t e = 0; e < g.arcs.size(); ++e) {
        const auto& a = g.arcs[e];
        if (!in_range(a.tail) || !in_range(a.head))
            throw InvalidInstance("arc " + std::to_string(e) + " has an endpoint out of range");
        if (a.tail == a.head) throw InvalidInstance("arc " + std::to_string(e) + " is a self-loop");
        if (a.job) check_duration(*a.job);
        if (g.form == Form::NodeJobs && a.job)
            throw InvalidInstance("node_jobs instance has a job on arc " + std::to_string(e));
        if (g.form == Form::TwoTupleArcJobs && a.job) {
            const auto* s = std::get_if<StepList>(&*a.job);
            if (!s || s->size() > 2)
                throw InvalidInstance("arc " + std::to_string(e) + " is not a one- or two-tuple step list");
        }
    }
    if (g.form == Form::NodeJobs) {
        if (g.node_jobs.size() != n) throw InvalidInstance("node_jobs size does not match vertices");
        for (const auto& j : g.node_jobs)
            if (j) check_duration(*j);
    } else if (!g.node_jobs.empty()) {
        throw InvalidInstance("arc-form instance carries node jobs");
    }
    if (g.budget < 0) throw InvalidInstance("negative budget");
    if (g.target && *g.target < 0) throw InvalidInstance("negative target");
    if (!topological_order(g)) throw InvalidInstance("graph has a cycle");
    auto adj = adjacency(g);
    for (std::size_t v = 0; v < n; ++v) {
        bool no_in = adj.in[v].empty(), no_out = adj.out[v].empty();
        if (no_in && static_cast<VertexId>(v) != g.source)
            throw InvalidInstance("vertex " + g.vertices[v] + " has in-degree 0 but is not the source");
        if (no_out && static_cast<VertexId>(v) != g.sink)
            throw InvalidInstance("vertex " + g.vertices[v] + " has out-degree 0 but is not the sink");
    }
    if (!adj.in[g.source].empty()) throw InvalidInstance("source has incoming arcs");
    if (!adj.out[g.sink].empty()) throw InvalidInstance("sink has outgoing arcs");
}

void attach_terminals(Instance& g, const std::string& source_name, const std::string& sink_name) {
    auto adj = adjacency(g);
    std::vector<VertexId> sources, sinks;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (adj.in[v].empty()) sources.push_back(static_cast<VertexId>(v));
        if (adj.out[v].empty()) sinks.push_back(static_cast<VertexId>(v));
    }
    if (sources.size() == 1) {
        g.source = sources[0];
    } else {
        g.source = g.add_vertex(source_name);
        for (VertexId v : sources) g.add_arc(g.source, v);
    }
    if (sinks.size() == 1) {
        g.sink = sinks[0];
    } else {
        g.sink = g.add_vertex(sink_name);
        for (VertexId v : sinks) g.add_arc(v, g.sink);
    }
}

FlowAssignment zero_flow(const Instance& g) {
    return FlowAssignment{std::vector<Rational>(g.num_arcs(), Rational(0))};
}

FlowAssignment integral_flow(const std::vector<std::int64_t>& values) {
    FlowAssignment f;
    f.flow.reserve(values.size());
    for (auto v : values) f.flow.push_back(make_rational(v));
    return f;
}

std::string FlowReport::describe() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.detail << '\n';
    return os.str();
}

Rational flow_value(const Instance& g, const FlowAssignment& f) {
    Rational total = 0;
    for (std::size_t e = 0; e < g.arcs.size(); ++e)
        if (g.arcs[e].tail == g.source) total += f.flow[e];
    return total;
}

FlowReport validate_flow(const Instance& g, const FlowAssignment& f, bool require_integral) {
    FlowReport rep;
    using K = Violation::Kind;
    if (!topological_order(g)) rep.violations.push_back({K::Cyclic, -1, "graph has a cycle"});
    if (f.flow.size() != g.num_arcs()) {
        rep.violations.push_back({K::SizeMismatch, -1,
                                  "flow has " + std::to_string(f.flow.size()) + " entries, instance has " +
                                      std::to_string(g.num_arcs()) + " arcs"});
        return rep;
    }
    std::vector<Rational> net(g.num_vertices(), Rational(0));  // inflow - outflow
    for (std::size_t e = 0; e < g.arcs.size(); ++e) {
        const Rational& x = f.flow[e];
        if (x < 0)
            rep.violations.push_back({K::Negative, static_cast<int>(e),
                                      "arc " + std::to_string(e) + " carries negative flow " + to_string(x)});
        if (require_integral && x.get_den() != 1)
            rep.violations.push_back({K::NonIntegral, static_cast<int>(e),
                                      "arc " + std::to_string(e) + " carries non-integral flow " + to_string(x)});
        net[g.arcs[e].head] += x;
        net[g.arcs[e].tail] -= x;
    }
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (static_cast<VertexId>(v) == g.source || static_cast<VertexId>(v) == g.sink) continue;
        if (net[v] != 0)
            rep.violations.push_back({K::Conservation, static_cast<int>(v),
                                      "vertex " + g.vertices[v] + " has inflow - outflow = " + to_string(net[v])});
    }
    Rational out = flow_value(g, f);
    if (out > g.budget)
        rep.violations.push_back({K::Budget, g.source,
                                  "source outflow " + to_string(out) + " exceeds budget " + std::to_string(g.budget)});
    return rep;
}

Schedule longest_path(const Instance& g, const std::vector<Rational>& arc_duration) {
    auto order = topological_order(g);
    if (!order) throw InvalidInstance("graph has a cycle");
    auto adj = adjacency(g);
    Schedule s;
    s.event_time.assign(g.num_vertices(), Rational(0));
    for (VertexId v : *order)
        for (ArcId e : adj.out[v]) {
            Rational cand = s.event_time[v] + arc_duration[e];
            if (cand > s.event_time[g.arcs[e].head]) s.event_time[g.arcs[e].head] = cand;
        }
    s.makespan = s.event_time[g.sink];
    return s;
}

Schedule evaluate(const Instance& g, const FlowAssignment& f) {
    if (g.form == Form::NodeJobs) throw std::invalid_argument("evaluate expects an arc-form instance");
    auto rep = validate_flow(g, f);
    if (!rep.ok()) throw InfeasibleFlow(std::move(rep));
    std::vector<Rational> d(g.num_arcs());
    for (std::size_t e = 0; e < g.arcs.size(); ++e) d[e] = job_duration(g.arcs[e].job, f.flow[e]);
    return longest_path(g, d);
}

Instance build_race_instance(const CellDag& cells, SplitFamily family) {
    Instance g;
    g.form = Form::NodeJobs;
    std::vector<int> indeg(cells.names.size(), 0);
    for (auto [u, v] : cells.edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= cells.names.size() ||
            static_cast<std::size_t>(v) >= cells.names.size())
            throw InvalidInstance("cell edge out of range");
        indeg[v]++;
    }
    for (std::size_t c = 0; c < cells.names.size(); ++c) {
        std::int64_t base = std::max(indeg[c], 1);
        Job job = family == SplitFamily::KWay ? DurationFunction(KWay{base}) : DurationFunction(RecursiveBinary{base});
        g.add_vertex(cells.names[c], std::move(job));
    }
    for (auto [u, v] : cells.edges) g.add_arc(u, v);
    if (!topological_order(g)) throw InvalidInstance("cyclic read-write dependency");
    attach_terminals(g);
    validate_instance(g);
    return g;
}

}  // namespace rtt
