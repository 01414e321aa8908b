#include "rtt/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rtt {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Job flip() { return step({{0, 1}, {1, 0}}); }

std::string ids(int i) { return std::to_string(i); }

}  // namespace

Formula parse_formula(std::string_view text) {
    Formula f;
    text = trim(text);
    if (text.empty()) return f;
    for (auto cl : split(text, ';')) {
        auto lits = split(trim(cl), ',');
        if (lits.size() != 3) throw GeneratorError("clause '" + std::string(cl) + "' does not have exactly 3 literals");
        Clause c;
        for (std::size_t i = 0; i < 3; ++i) {
            auto t = trim(lits[i]);
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(std::string(t), &used);
                if (used != t.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw GeneratorError("bad literal '" + std::string(t) + "'");
            }
            if (v == 0) throw GeneratorError("literal 0 is not a variable");
            c[i] = {std::abs(v), v < 0};
            f.num_vars = std::max(f.num_vars, std::abs(v));
        }
        f.clauses.push_back(c);
    }
    return f;
}

std::optional<std::vector<bool>> one_in_three_solution(const Formula& f) {
    if (f.num_vars > 24) return std::nullopt;
    std::vector<bool> a(f.num_vars);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
        for (int v = 0; v < f.num_vars; ++v) a[v] = (mask >> v) & 1;
        bool ok = true;
        for (const auto& c : f.clauses) {
            int t = 0;
            for (const auto& l : c) t += a[l.var - 1] != l.negated;
            if (t != 1) {
                ok = false;
                break;
            }
        }
        if (ok) return a;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- general SAT

GeneratedInstance gen_sat_general(const Formula& f) {
    GeneratedInstance gen;
    Instance& g = gen.instance;
    g.form = Form::ArcJobs;
    int n = f.num_vars, m = static_cast<int>(f.clauses.size());
    VertexId s = g.add_vertex("s");
    std::vector<std::array<VertexId, 7>> V(n + 1);
    std::vector<std::array<VertexId, 11>> C(m + 1);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= 6; ++k) V[i][k] = g.add_vertex("V" + ids(i) + "." + ids(k));
    for (int c = 1; c <= m; ++c)
        for (int k = 1; k <= 10; ++k) C[c][k] = g.add_vertex("C" + ids(c) + "." + ids(k));
    VertexId t = g.add_vertex("t");
    g.source = s;
    g.sink = t;
    if (n == 0 && m == 0) g.add_arc(s, t);
    for (int i = 1; i <= n; ++i) {
        g.add_arc(s, V[i][1]);
        g.add_arc(V[i][1], V[i][2], flip());
        g.add_arc(V[i][1], V[i][3], flip());
        g.add_arc(V[i][2], V[i][4]);
        g.add_arc(V[i][3], V[i][4]);
        g.add_arc(V[i][4], V[i][5], flip());
        g.add_arc(V[i][5], V[i][6]);
        g.add_arc(V[i][6], t);
    }
    auto node = [&](Literal l, bool positive) { return V[l.var][(l.negated != !positive) ? 3 : 2]; };
    for (int c = 1; c <= m; ++c) {
        const auto& cl = f.clauses[c - 1];
        for (const auto& l : cl)
            if (l.var > n) throw GeneratorError("literal refers to unknown variable");
        g.add_arc(s, C[c][1]);
        g.add_arc(C[c][1], C[c][2], flip());
        g.add_arc(C[c][2], C[c][4], flip());
        g.add_arc(C[c][1], C[c][3], flip());
        g.add_arc(C[c][3], C[c][4], flip());
        for (int q = 5; q <= 7; ++q) g.add_arc(C[c][4], C[c][q]);
        // C5: (~l1, ~l2, l3), C6: (~l1, l2, ~l3), C7: (l1, ~l2, ~l3)
        for (int q = 5; q <= 7; ++q)
            for (int p = 0; p < 3; ++p) {
                bool positive = (q - 5) == (2 - p);
                g.add_arc(node(cl[p], positive), C[c][q]);
            }
        for (int q = 5; q <= 7; ++q) {
            g.add_arc(C[c][q], C[c][q + 3], flip());
            g.add_arc(C[c][q + 3], t);
        }
    }
    gen.budget = n + 2 * m;
    gen.target = Rational(n == 0 && m == 0 ? 0 : 1);
    g.budget = gen.budget;
    g.target = gen.target;
    if (auto sol = one_in_three_solution(f); f.num_vars <= 24) gen.achievable = sol.has_value();
    std::ostringstream os;
    os << "1-in-3SAT general gadgets: n=" << n << " m=" << m;
    gen.provenance = os.str();
    validate_instance(g);
    return gen;
}

FlowAssignment sat_general_flow(const GeneratedInstance& gen, const Formula& f, const std::vector<bool>& a) {
    const Instance& g = gen.instance;
    std::map<std::pair<VertexId, VertexId>, ArcId> arc_of;
    for (std::size_t e = 0; e < g.arcs.size(); ++e) arc_of.emplace(std::make_pair(g.arcs[e].tail, g.arcs[e].head), e);
    std::vector<std::int64_t> fl(g.num_arcs(), 0);
    auto v = [&](const std::string& name) {
        VertexId id = g.find_vertex(name);
        if (id < 0) throw GeneratorError("missing vertex " + name);
        return id;
    };
    auto walk = [&](const std::vector<std::string>& path, std::int64_t units) {
        for (std::size_t k = 0; k + 1 < path.size(); ++k) fl[arc_of.at({v(path[k]), v(path[k + 1])})] += units;
    };
    for (int i = 1; i <= f.num_vars; ++i) {
        std::string p = "V" + ids(i) + ".";
        walk({"s", p + "1", p + (a[i - 1] ? "2" : "3"), p + "4", p + "5", p + "6", "t"}, 1);
    }
    for (int c = 1; c <= static_cast<int>(f.clauses.size()); ++c) {
        std::string p = "C" + ids(c) + ".";
        const auto& cl = f.clauses[c - 1];
        // clause node q is early exactly when its wired literals are all true
        std::vector<int> late;
        for (int q = 5; q <= 7; ++q) {
            bool early = true;
            for (int k = 0; k < 3; ++k) {
                bool positive = (q - 5) == (2 - k);
                bool lit_true = a[cl[k].var - 1] != cl[k].negated;
                if (lit_true != positive) early = false;
            }
            if (!early) late.push_back(q);
        }
        for (int q = 5; late.size() < 2 && q <= 7; ++q)
            if (std::find(late.begin(), late.end(), q) == late.end()) late.push_back(q);
        walk({"s", p + "1", p + "2", p + "4", p + ids(late[0]), p + ids(late[0] + 3), "t"}, 1);
        walk({"s", p + "1", p + "3", p + "4", p + ids(late[1]), p + ids(late[1] + 3), "t"}, 1);
    }
    return integral_flow(fl);
}

// ---------------------------------------------------------- splitting gadgets

SplitParams split_params(const Formula& f) {
    std::int64_t need = f.num_vars + 3 * static_cast<std::int64_t>(f.clauses.size());
    if (need < 1) throw GeneratorError("splitting gadgets need n + 3m >= 1");
    SplitParams p;
    while (p.k < need) {
        p.k *= 2;
        ++p.y;
    }
    p.x = std::max<std::int64_t>(2 * p.y + 13, 8);
    return p;
}

namespace {

struct Cells {
    CellDag dag;
    std::map<std::string, int> by_name;

    int cell(const std::string& name) {
        auto [it, fresh] = by_name.emplace(name, static_cast<int>(dag.names.size()));
        if (fresh) dag.names.push_back(name);
        return it->second;
    }
    void edge(int u, int v) { dag.edges.push_back({u, v}); }
    int chain(const std::string& prefix, std::int64_t len, int from, const std::string& last_name = "") {
        int prev = from;
        for (std::int64_t k = 1; k <= len; ++k) {
            std::string name = (k == len && !last_name.empty()) ? last_name : prefix + ids(static_cast<int>(k));
            int c = cell(name);
            if (prev >= 0) edge(prev, c);
            prev = c;
        }
        return prev;
    }
    // entry -> k middle cells -> out; returns out
    int composite(const std::string& prefix, std::int64_t k, int entry) {
        int out = -1;
        std::vector<int> mids;
        for (std::int64_t i = 1; i <= k; ++i) {
            int c = cell(prefix + ".m" + ids(static_cast<int>(i)));
            edge(entry, c);
            mids.push_back(c);
        }
        out = cell(prefix + ".out");
        for (int c : mids) edge(c, out);
        return out;
    }
};

std::string lit_cell(const Literal& l, bool positive) {
    return "V" + ids(l.var) + ((l.negated != !positive) ? ".6" : ".5");
}

}  // namespace

GeneratedInstance gen_sat_splitting(const Formula& f, SplitFamily family) {
    SplitParams sp = split_params(f);
    const std::int64_t x = sp.x;
    int n = f.num_vars, m = static_cast<int>(f.clauses.size());
    Cells cs;
    std::vector<int> leaves;
    for (int i = 1; i <= n; ++i) {
        std::string p = "V" + ids(i);
        int v1 = cs.cell(p + ".1");
        int in2 = cs.cell(p + ".2.in");
        int in3 = cs.cell(p + ".3.in");
        cs.edge(v1, in2);
        cs.edge(v1, in3);
        int out2 = cs.composite(p + ".2", 2 * x, in2);
        int out3 = cs.composite(p + ".3", 2 * x, in3);
        int v5 = cs.chain(p + ".a", 4 * x, out2, p + ".5");
        int v6 = cs.chain(p + ".b", 4 * x, out3, p + ".6");
        int merge = cs.cell(p + ".4.in");
        cs.edge(out2, merge);
        cs.edge(out3, merge);
        int out4 = cs.composite(p + ".4", 8 * x, merge);
        int tail = cs.chain(p + ".c", x, out4);
        int v7 = cs.cell(p + ".7");
        cs.edge(tail, v7);
        cs.edge(v5, v7);
        cs.edge(v6, v7);
        leaves.push_back(v7);
    }
    for (int c = 1; c <= m; ++c) {
        std::string p = "C" + ids(c);
        const auto& cl = f.clauses[c - 1];
        for (const auto& l : cl)
            if (l.var > n) throw GeneratorError("literal refers to unknown variable");
        int c1 = cs.cell(p + ".1");
        int in2 = cs.cell(p + ".2.in");
        int in3 = cs.cell(p + ".3.in");
        cs.edge(c1, in2);
        cs.edge(c1, in3);
        int out2 = cs.composite(p + ".2", 8 * x, in2);
        int out3 = cs.composite(p + ".3", 8 * x, in3);
        int c4 = cs.cell(p + ".4");
        cs.edge(out2, c4);
        cs.edge(out3, c4);
        for (int q = 5; q <= 7; ++q) {
            // C5..C7 are the entry cells of the order-2x composites C8..C10
            int cq = cs.cell(p + "." + ids(q));
            cs.edge(c4, cq);
            for (int k = 0; k < 3; ++k) {
                bool positive = (q - 5) == (2 - k);
                cs.edge(cs.cell(lit_cell(cl[k], positive)), cq);
            }
            int out = cs.composite(p + "." + ids(q + 3), 2 * x, cq);
            int head = cs.chain(p + ".h" + ids(q) + ".", 7 * x + 10, -1);
            int end = cs.cell(p + "." + ids(q + 6));
            cs.edge(head, end);
            cs.edge(out, end);
            leaves.push_back(end);
        }
    }
    // sink-side binary reduction
    int level = 0;
    while (leaves.size() > 1) {
        ++level;
        std::vector<int> next;
        for (std::size_t i = 0; i < leaves.size(); i += 2) {
            int r = cs.cell("R" + ids(level) + "." + ids(static_cast<int>(i / 2)));
            cs.edge(leaves[i], r);
            if (i + 1 < leaves.size()) cs.edge(leaves[i + 1], r);
            next.push_back(r);
        }
        leaves = std::move(next);
    }

    GeneratedInstance gen;
    gen.instance = build_race_instance(cs.dag, family);
    gen.budget = 2 * n + 4 * m;
    gen.target = make_rational(7 * x + 2 * sp.y + 12);
    gen.instance.budget = gen.budget;
    gen.instance.target = gen.target;
    if (f.num_vars <= 24) gen.achievable = one_in_three_solution(f).has_value();
    std::ostringstream os;
    os << "1-in-3SAT splitting gadgets (" << (family == SplitFamily::KWay ? "kway" : "binary") << "): n=" << n
       << " m=" << m << " k=" << sp.k << " y=" << sp.y << " x=" << x;
    gen.provenance = os.str();
    return gen;
}

FlowAssignment node_path_flow(const Instance& g, const ActivityTrace& tr,
                              const std::vector<std::pair<std::vector<VertexId>, std::int64_t>>& paths) {
    std::map<std::pair<VertexId, VertexId>, std::size_t> edge_of;
    for (std::size_t e = 0; e < g.arcs.size(); ++e) edge_of.emplace(std::make_pair(g.arcs[e].tail, g.arcs[e].head), e);
    std::size_t arcs = tr.node_arc.size() + tr.edge_arc.size();
    std::vector<std::int64_t> fl(arcs, 0);
    for (const auto& [path, units] : paths) {
        for (std::size_t k = 0; k < path.size(); ++k) {
            fl[tr.node_arc[path[k]]] += units;
            if (k + 1 < path.size()) {
                auto it = edge_of.find({path[k], path[k + 1]});
                if (it == edge_of.end())
                    throw GeneratorError("no edge " + g.vertices[path[k]] + " -> " + g.vertices[path[k + 1]]);
                fl[tr.edge_arc[it->second]] += units;
            }
        }
    }
    return integral_flow(fl);
}

FlowAssignment sat_splitting_flow(const GeneratedInstance& gen, const Formula& f, const std::vector<bool>& a,
                                  const Instance& arc_form, const ActivityTrace& tr) {
    (void)arc_form;
    const Instance& g = gen.instance;
    SplitParams sp = split_params(f);
    auto adj = adjacency(g);
    auto v = [&](const std::string& name) {
        VertexId id = g.find_vertex(name);
        if (id < 0) throw GeneratorError("missing cell " + name);
        return id;
    };
    // follow the unique out-edge until the sink
    auto to_sink = [&](std::vector<VertexId>& path) {
        while (!adj.out[path.back()].empty()) path.push_back(g.arcs[adj.out[path.back()].front()].head);
    };
    std::vector<std::pair<std::vector<VertexId>, std::int64_t>> paths;
    for (int i = 1; i <= f.num_vars; ++i) {
        std::string p = "V" + ids(i);
        std::string side = a[i - 1] ? ".2" : ".3";
        std::vector<VertexId> path{g.source, v(p + ".1"), v(p + side + ".in"), v(p + side + ".m1"), v(p + side + ".out"),
                                   v(p + ".4.in"), v(p + ".4.m1"), v(p + ".4.out")};
        for (std::int64_t k = 1; k <= sp.x; ++k) path.push_back(v(p + ".c" + ids(static_cast<int>(k))));
        path.push_back(v(p + ".7"));
        to_sink(path);
        paths.push_back({path, 2});
    }
    for (int c = 1; c <= static_cast<int>(f.clauses.size()); ++c) {
        std::string p = "C" + ids(c);
        const auto& cl = f.clauses[c - 1];
        std::vector<int> late;
        for (int q = 5; q <= 7; ++q) {
            bool early = true;
            for (int k = 0; k < 3; ++k) {
                bool positive = (q - 5) == (2 - k);
                if ((a[cl[k].var - 1] != cl[k].negated) != positive) early = false;
            }
            if (!early) late.push_back(q);
        }
        for (int q = 5; late.size() < 2 && q <= 7; ++q)
            if (std::find(late.begin(), late.end(), q) == late.end()) late.push_back(q);
        for (int side = 0; side < 2; ++side) {
            std::string s = side == 0 ? ".2" : ".3";
            int q = late[side];
            std::vector<VertexId> path{g.source, v(p + ".1"), v(p + s + ".in"), v(p + s + ".m1"), v(p + s + ".out"),
                                       v(p + ".4"), v(p + "." + ids(q)), v(p + "." + ids(q + 3) + ".m1"),
                                       v(p + "." + ids(q + 3) + ".out"), v(p + "." + ids(q + 6))};
            to_sink(path);
            paths.push_back({path, 2});
        }
    }
    return node_path_flow(g, tr, paths);
}

Rational serialized_write_completion(std::vector<Rational> ready) {
    std::sort(ready.begin(), ready.end());
    Rational done = 0;
    bool first = true;
    for (const auto& r : ready) {
        Rational start = (first || r > done) ? r : done;
        done = start + 1;
        first = false;
    }
    return done;
}

// ----------------------------------------------------------------- partition

GeneratedInstance gen_partition(const std::vector<std::int64_t>& s) {
    if (s.empty()) throw GeneratorError("partition needs at least one element");
    std::int64_t B = 0;
    for (auto x : s) {
        if (x <= 0) throw GeneratorError("partition elements must be positive");
        B += x;
    }
    Rational half = make_rational(B, 2);
    Rational M = half + 1;
    GeneratedInstance gen;
    Instance& g = gen.instance;
    g.form = Form::ArcJobs;
    int n = static_cast<int>(s.size());
    VertexId v0 = g.add_vertex("v0");
    std::vector<std::array<VertexId, 8>> v(n + 1);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= 7; ++k) v[i][k] = g.add_vertex("v" + ids(i) + "." + ids(k));
    VertexId sink = g.add_vertex("vbar0");
    g.source = v0;
    g.sink = sink;
    auto pay = [](const Rational& idle, std::int64_t need) {
        return Job(StepList({{0, idle}, {need, Rational(0)}}));
    };
    for (int i = 1; i <= n; ++i) {
        std::int64_t si = s[i - 1];
        g.add_arc(v0, v[i][1], pay(M, si));
        g.add_arc(v[i][1], v[i][2]);
        g.add_arc(v[i][1], v[i][3]);
        g.add_arc(v[i][2], v[i][4], pay(make_rational(si), si));
        g.add_arc(v[i][3], v[i][6], pay(make_rational(si), si));
        g.add_arc(v[i][4], v[i][5]);
        g.add_arc(v[i][6], v[i][5]);
        g.add_arc(v[i][5], v[i][7], pay(M, si));
        g.add_arc(v[i][7], sink);
        if (i < n) {
            g.add_arc(v[i][4], v[i + 1][2]);
            g.add_arc(v[i][6], v[i + 1][3]);
        } else {
            g.add_arc(v[i][4], sink);
            g.add_arc(v[i][6], sink);
        }
    }
    gen.budget = B;
    gen.target = half;
    g.budget = B;
    g.target = half;
    // subset-sum reachability
    std::vector<char> reach(B + 1, 0);
    reach[0] = 1;
    for (auto x : s)
        for (std::int64_t t = B; t >= x; --t) reach[t] |= reach[t - x];
    gen.achievable = B % 2 == 0 && reach[B / 2];
    gen.provenance = "partition: |S|=" + ids(n) + " sum=" + std::to_string(B);
    validate_instance(g);
    return gen;
}

FlowAssignment partition_flow(const GeneratedInstance& gen, const std::vector<std::int64_t>& s,
                              const std::vector<bool>& top) {
    const Instance& g = gen.instance;
    std::map<std::pair<VertexId, VertexId>, ArcId> arc_of;
    for (std::size_t e = 0; e < g.arcs.size(); ++e) arc_of.emplace(std::make_pair(g.arcs[e].tail, g.arcs[e].head), e);
    std::vector<std::int64_t> fl(g.num_arcs(), 0);
    for (std::size_t i = 1; i <= s.size(); ++i) {
        std::string p = "v" + ids(static_cast<int>(i)) + ".";
        std::vector<std::string> path{"v0", p + "1", p + (top[i - 1] ? "2" : "3"), p + (top[i - 1] ? "4" : "6"),
                                      p + "5", p + "7", "vbar0"};
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            fl[arc_of.at({g.find_vertex(path[k]), g.find_vertex(path[k + 1])})] += s[i - 1];
    }
    return integral_flow(fl);
}

// ------------------------------------------------------------- numeric 3DM

GeneratedInstance gen_numeric_3dm(const std::vector<std::int64_t>& A, const std::vector<std::int64_t>& Bs,
                                  const std::vector<std::int64_t>& Cs) {
    std::size_t n = A.size();
    if (n == 0 || Bs.size() != n || Cs.size() != n) throw GeneratorError("A, B and C must have the same positive length");
    std::int64_t total = 0, ma = 0, mb = 0, mc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i] <= 0 || Bs[i] <= 0 || Cs[i] <= 0) throw GeneratorError("3DM numbers must be positive");
        total += A[i] + Bs[i] + Cs[i];
        ma = std::max(ma, A[i]);
        mb = std::max(mb, Bs[i]);
        mc = std::max(mc, Cs[i]);
    }
    if (total % static_cast<std::int64_t>(n) != 0) throw GeneratorError("sum of A, B, C is not divisible by n");
    std::int64_t T = total / static_cast<std::int64_t>(n);
    std::int64_t M = ma + mb + mc + 1;
    std::int64_t nn = static_cast<std::int64_t>(n);
    // sentinel for "never finishes": above every finite duration in the instance combined
    std::int64_t inf = 1 + total + 2 * nn * nn * M;

    GeneratedInstance gen;
    Instance& g = gen.instance;
    g.form = Form::ArcJobs;
    auto pay = [](std::int64_t idle, std::int64_t need, std::int64_t after) {
        if (need == 0) return Job(StepList({{0, make_rational(after)}}));
        return Job(step({{0, idle}, {need, after}}));
    };
    VertexId s = g.add_vertex("s");
    std::vector<VertexId> a(n), b(n), bp(n), c(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = g.add_vertex("a" + ids(static_cast<int>(i + 1)));
    auto matcher = [&](const std::string& tag, const std::vector<VertexId>& xs, std::vector<VertexId>& zs,
                       const std::string& zname) {
        std::vector<std::vector<VertexId>> y(n, std::vector<VertexId>(n));
        std::vector<VertexId> yi(n), zp(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                y[i][j] = g.add_vertex(tag + ".y" + ids(static_cast<int>(i + 1)) + "." + ids(static_cast<int>(j + 1)));
        for (std::size_t i = 0; i < n; ++i) yi[i] = g.add_vertex(tag + ".y" + ids(static_cast<int>(i + 1)));
        for (std::size_t j = 0; j < n; ++j) zp[j] = g.add_vertex(tag + ".zp" + ids(static_cast<int>(j + 1)));
        for (std::size_t j = 0; j < n; ++j) zs[j] = g.add_vertex(zname + ids(static_cast<int>(j + 1)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                g.add_arc(xs[i], y[i][j], pay(inf, 1, 0));
                g.add_arc(y[i][j], yi[i]);
                g.add_arc(y[i][j], zp[j], pay(M, 1, 0));
            }
            g.add_arc(yi[i], zs[i], pay(inf, 1, 0));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (n > 1) g.add_arc(zp[j], zs[j], pay(inf, nn - 1, 0));
            else g.add_arc(zp[j], zs[j]);
        }
    };
    for (std::size_t i = 0; i < n; ++i) g.add_arc(s, a[i], pay(inf, nn, A[i]));
    matcher("m1", a, b, "b");
    for (std::size_t j = 0; j < n; ++j) {
        bp[j] = g.add_vertex("bp" + ids(static_cast<int>(j + 1)));
        g.add_arc(b[j], bp[j], pay(inf, nn, Bs[j]));
    }
    matcher("m2", bp, c, "c");
    VertexId t = g.add_vertex("t");
    for (std::size_t k = 0; k < n; ++k) g.add_arc(c[k], t, pay(inf, nn, Cs[k]));
    g.source = s;
    g.sink = t;
    gen.budget = nn * nn;
    gen.target = make_rational(2 * M + T);
    g.budget = gen.budget;
    g.target = gen.target;
    if (n <= 8) {
        std::vector<std::size_t> p(n), q(n);
        std::iota(p.begin(), p.end(), 0);
        bool found = false;
        do {
            std::iota(q.begin(), q.end(), 0);
            do {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) ok = A[i] + Bs[p[i]] + Cs[q[i]] == T;
                found = ok;
            } while (!found && std::next_permutation(q.begin(), q.end()));
        } while (!found && std::next_permutation(p.begin(), p.end()));
        gen.achievable = found;
    }
    gen.provenance = "numeric 3DM: n=" + ids(static_cast<int>(n)) + " T=" + std::to_string(T) + " M=" + std::to_string(M);
    validate_instance(g);
    return gen;
}

// ------------------------------------------------------------- parallel MM

GeneratedInstance gen_parallel_mm(int n, int h) {
    if (n < 1) throw GeneratorError("matrix dimension must be >= 1");
    if (h < 0 || h > 30 || (1 << h) > n) throw GeneratorError("reducer height needs 1 <= 2^h <= n");
    Cells cs;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) cs.cell("X" + ids(i) + "." + ids(k));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int z = cs.cell("Z" + ids(i) + "." + ids(j));
            for (int k = 1; k <= n; ++k) cs.edge(cs.cell("X" + ids(i) + "." + ids(k)), z);
        }
    GeneratedInstance gen;
    gen.instance = build_race_instance(cs.dag, SplitFamily::RecursiveBinary);
    gen.budget = static_cast<std::int64_t>(n) * n * (std::int64_t{1} << h);
    gen.instance.budget = gen.budget;
    gen.provenance = "parallel matrix multiply: n=" + ids(n) + " h=" + ids(h);
    return gen;
}

}  // namespace rtt
