#include "rtt/io.hpp"

#include <fstream>
#include <sstream>

namespace rtt {

using nlohmann::json;

namespace {

Rational rational_from(const json& j, const char* what) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
    throw ParseError(std::string(what) + ": expected an integer or a \"p/q\" string");
}

std::int64_t int_from(const json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

Form form_from(const std::string& s) {
    if (s == "node_jobs") return Form::NodeJobs;
    if (s == "arc_jobs") return Form::ArcJobs;
    if (s == "two_tuple_arc_jobs") return Form::TwoTupleArcJobs;
    throw ParseError("unknown form '" + s + "'");
}

}  // namespace

json job_to_json(const Job& job) {
    if (!job) return "dummy";
    return std::visit(
        [](const auto& f) -> json {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, StepList>) {
                json rows = json::array();
                for (const auto& t : f.tuples()) rows.push_back(json::array({t.resource, to_string(t.time)}));
                return json{{"step", rows}};
            } else if constexpr (std::is_same_v<F, KWay>) {
                return json{{"kway", f.base}};
            } else {
                return json{{"binary", f.base}};
            }
        },
        *job);
}

Job job_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "dummy") return std::nullopt;
    if (!j.is_object() || j.size() != 1) throw ParseError("job must be \"dummy\" or a one-key object");
    try {
        if (j.contains("step")) {
            const auto& rows = j.at("step");
            if (!rows.is_array() || rows.empty()) throw ParseError("step job needs a non-empty tuple list");
            std::vector<ResourceTimeTuple> tuples;
            for (const auto& row : rows) {
                if (!row.is_array() || row.size() != 2) throw ParseError("step tuple must be [resource, time]");
                tuples.push_back({int_from(row[0], "tuple resource"), rational_from(row[1], "tuple time")});
            }
            return DurationFunction(StepList(std::move(tuples)));
        }
        if (j.contains("kway")) {
            DurationFunction f = KWay{int_from(j.at("kway"), "kway base")};
            check_duration(f);
            return f;
        }
        if (j.contains("binary")) {
            DurationFunction f = RecursiveBinary{int_from(j.at("binary"), "binary base")};
            check_duration(f);
            return f;
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown job kind " + j.dump());
}

json instance_to_json(const Instance& g) {
    json j;
    j["format_version"] = kFormatVersion;
    j["form"] = form_name(g.form);
    json verts = json::array();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        if (g.form == Form::NodeJobs) verts.push_back({{"id", g.vertices[v]}, {"job", job_to_json(g.node_jobs[v])}});
        else verts.push_back(g.vertices[v]);
    }
    j["vertices"] = verts;
    j["source"] = g.num_vertices() ? g.vertices[g.source] : "";
    j["sink"] = g.num_vertices() ? g.vertices[g.sink] : "";
    json arcs = json::array();
    for (const auto& a : g.arcs)
        arcs.push_back({{"tail", g.vertices[a.tail]}, {"head", g.vertices[a.head]}, {"job", job_to_json(a.job)}});
    j["arcs"] = arcs;
    j["budget"] = g.budget;
    if (g.target) j["target"] = to_string(*g.target);
    return j;
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    for (const char* key : {"format_version", "form", "vertices", "source", "sink", "arcs"})
        if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    if (int_from(j.at("format_version"), "format_version") != kFormatVersion)
        throw ParseError("unsupported format_version");
    Instance g;
    if (!j.at("form").is_string()) throw ParseError("form must be a string");
    g.form = form_from(j.at("form").get<std::string>());
    if (!j.at("vertices").is_array()) throw ParseError("vertices must be an array");
    for (const auto& v : j.at("vertices")) {
        std::string id;
        Job job;
        if (v.is_string()) {
            id = v.get<std::string>();
        } else if (v.is_object() && v.contains("id") && v.at("id").is_string()) {
            id = v.at("id").get<std::string>();
            if (v.contains("job")) job = job_from_json(v.at("job"));
        } else {
            throw ParseError("vertex must be a string or {\"id\", \"job\"}");
        }
        if (g.find_vertex(id) >= 0) throw ParseError("duplicate vertex '" + id + "'");
        if (g.form != Form::NodeJobs && job) throw ParseError("vertex jobs need form node_jobs");
        g.add_vertex(id, job);
    }
    auto vertex = [&](const json& x, const char* what) {
        if (!x.is_string()) throw ParseError(std::string(what) + " must be a vertex id string");
        VertexId id = g.find_vertex(x.get<std::string>());
        if (id < 0) throw ParseError(std::string(what) + ": unknown vertex '" + x.get<std::string>() + "'");
        return id;
    };
    g.source = vertex(j.at("source"), "source");
    g.sink = vertex(j.at("sink"), "sink");
    if (!j.at("arcs").is_array()) throw ParseError("arcs must be an array");
    for (const auto& a : j.at("arcs")) {
        if (!a.is_object() || !a.contains("tail") || !a.contains("head")) throw ParseError("arc needs tail and head");
        Job job = a.contains("job") ? job_from_json(a.at("job")) : std::nullopt;
        g.add_arc(vertex(a.at("tail"), "arc tail"), vertex(a.at("head"), "arc head"), job);
    }
    if (j.contains("budget")) g.budget = int_from(j.at("budget"), "budget");
    if (g.budget < 0) throw ParseError("budget must be non-negative");
    if (j.contains("target") && !j.at("target").is_null()) g.target = rational_from(j.at("target"), "target");
    try {
        validate_instance(g);
    } catch (const InvalidInstance& e) {
        throw ParseError(e.what());
    }
    return g;
}

std::string serialize_instance(const Instance& g) { return instance_to_json(g).dump(2) + "\n"; }

Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return instance_from_json(j);
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

json flow_to_json(const FlowAssignment& f) {
    json j = json::object();
    for (std::size_t e = 0; e < f.flow.size(); ++e) {
        const auto& q = f.flow[e];
        if (q.get_den() == 1) j[std::to_string(e)] = floor_to_int(q);
        else j[std::to_string(e)] = to_string(q);
    }
    return j;
}

FlowAssignment flow_from_json(const json& j, std::size_t num_arcs) {
    if (!j.is_object()) throw ParseError("flow must be an object {\"arc id\": units}");
    FlowAssignment f;
    f.flow.assign(num_arcs, Rational(0));
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        long id = -1;
        try {
            id = std::stol(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || id < 0) throw ParseError("bad arc id '" + key + "'");
        if (static_cast<std::size_t>(id) >= num_arcs) throw ParseError("arc id " + key + " out of range");
        f.flow[id] = rational_from(value, "flow value");
    }
    return f;
}

json certificate_to_json(const GeneratedInstance& gen) {
    json j;
    j["budget"] = gen.budget;
    j["target"] = gen.target ? json(to_string(*gen.target)) : json(nullptr);
    j["expected_achievable"] = gen.achievable ? json(*gen.achievable) : json(nullptr);
    j["provenance"] = gen.provenance;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace rtt
