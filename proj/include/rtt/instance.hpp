#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtt/duration.hpp"
#include "rtt/rational.hpp"

namespace rtt {

using VertexId = int;
using ArcId = int;

enum class Form { NodeJobs, ArcJobs, TwoTupleArcJobs };

const char* form_name(Form f);

// An empty job is a dummy: zero duration at every resource level.
using Job = std::optional<DurationFunction>;

Rational job_duration(const Job& job, std::int64_t r);
Rational job_duration(const Job& job, const Rational& r);

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;
    Job job;
};

struct Instance {
    Form form = Form::ArcJobs;
    std::vector<std::string> vertices;
    // NodeJobs form only: one entry per vertex. Plumbing vertices have no job.
    std::vector<Job> node_jobs;
    std::vector<Arc> arcs;
    VertexId source = 0;
    VertexId sink = 0;
    std::int64_t budget = 0;
    std::optional<Rational> target;

    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_arcs() const { return arcs.size(); }

    VertexId add_vertex(std::string name, Job job = std::nullopt);
    ArcId add_arc(VertexId tail, VertexId head, Job job = std::nullopt);
    // -1 if absent
    VertexId find_vertex(const std::string& name) const;
};

bool operator==(const Instance& a, const Instance& b);

struct Adjacency {
    std::vector<std::vector<ArcId>> out;
    std::vector<std::vector<ArcId>> in;
};

Adjacency adjacency(const Instance& g);

// Kahn's algorithm, smallest vertex id first. Empty optional on a cycle.
std::optional<std::vector<VertexId>> topological_order(const Instance& g);

class InvalidInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Acyclic, source is the only in-degree-0 vertex, sink the only out-degree-0 vertex,
// node_jobs sized correctly, job shapes match the form. Throws InvalidInstance.
void validate_instance(const Instance& g);

// Sets source/sink to the unique in/out-degree-0 vertices; adds plumbing
// vertices joined by dummy arcs when there are several.
void attach_terminals(Instance& g, const std::string& source_name = "src", const std::string& sink_name = "snk");

struct FlowAssignment {
    std::vector<Rational> flow;  // indexed by arc id

    bool operator==(const FlowAssignment&) const = default;
};

FlowAssignment zero_flow(const Instance& g);
FlowAssignment integral_flow(const std::vector<std::int64_t>& values);

struct Violation {
    enum class Kind { Cyclic, SizeMismatch, Negative, NonIntegral, Conservation, Budget };
    Kind kind;
    int where = -1;  // vertex or arc id
    std::string detail;
};

struct FlowReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

FlowReport validate_flow(const Instance& g, const FlowAssignment& f, bool require_integral = false);

Rational flow_value(const Instance& g, const FlowAssignment& f);

struct Schedule {
    std::vector<Rational> event_time;
    Rational makespan;
};

class InfeasibleFlow : public std::runtime_error {
public:
    explicit InfeasibleFlow(FlowReport r) : std::runtime_error(r.describe()), report(std::move(r)) {}
    FlowReport report;
};

// Earliest-start schedule for an arc-form instance. Throws InfeasibleFlow.
Schedule evaluate(const Instance& g, const FlowAssignment& f);

// Longest path with explicit arc durations, no flow checks.
Schedule longest_path(const Instance& g, const std::vector<Rational>& arc_duration);

// --- race DAGs -------------------------------------------------------------

enum class SplitFamily { KWay, RecursiveBinary };

struct CellDag {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;  // (writer, written cell)
};

// NodeJobs instance with base max(in-degree, 1) per cell. Several sources or
// sinks get a job-less plumbing source/sink.
Instance build_race_instance(const CellDag& cells, SplitFamily family);

}  // namespace rtt
