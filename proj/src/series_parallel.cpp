#include "rtt/series_parallel.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace rtt {

int SpTree::leaf(Job job, ArcId arc) {
    nodes.push_back({SpNode::Kind::Leaf, -1, -1, std::move(job), arc});
    root = static_cast<int>(nodes.size()) - 1;
    return root;
}

int SpTree::series(int left, int right) {
    nodes.push_back({SpNode::Kind::Series, left, right, std::nullopt, -1});
    root = static_cast<int>(nodes.size()) - 1;
    return root;
}

int SpTree::parallel(int left, int right) {
    nodes.push_back({SpNode::Kind::Parallel, left, right, std::nullopt, -1});
    root = static_cast<int>(nodes.size()) - 1;
    return root;
}

std::size_t SpTree::num_leaves() const {
    std::size_t c = 0;
    for (const auto& n : nodes) c += n.kind == SpNode::Kind::Leaf;
    return c;
}

namespace {

std::vector<int> post_order(const SpTree& t) {
    std::vector<int> order;
    if (t.root < 0) return order;
    std::vector<std::pair<int, bool>> st{{t.root, false}};
    while (!st.empty()) {
        auto [v, done] = st.back();
        st.pop_back();
        if (done || t.nodes[v].kind == SpNode::Kind::Leaf) {
            order.push_back(v);
            continue;
        }
        st.push_back({v, true});
        st.push_back({t.nodes[v].right, false});
        st.push_back({t.nodes[v].left, false});
    }
    return order;
}

DpTable fill(const SpTree& t, std::int64_t budget) {
    if (budget < 0) throw std::invalid_argument("negative budget");
    if (t.root < 0) throw std::invalid_argument("empty series-parallel tree");
    std::size_t w = static_cast<std::size_t>(budget) + 1;
    DpTable tab;
    tab.value.resize(t.nodes.size());
    tab.split.resize(t.nodes.size());
    for (int v : post_order(t)) {
        const auto& n = t.nodes[v];
        auto& row = tab.value[v];
        row.resize(w);
        if (n.kind == SpNode::Kind::Leaf) {
            for (std::size_t l = 0; l < w; ++l) row[l] = job_duration(n.job, static_cast<std::int64_t>(l));
        } else if (n.kind == SpNode::Kind::Series) {
            const auto& a = tab.value[n.left];
            const auto& b = tab.value[n.right];
            for (std::size_t l = 0; l < w; ++l) row[l] = a[l] + b[l];
        } else {
            const auto& a = tab.value[n.left];
            const auto& b = tab.value[n.right];
            auto& sp = tab.split[v];
            sp.assign(w, 0);
            for (std::size_t l = 0; l < w; ++l) {
                int best_i = 0;
                const Rational* best = nullptr;
                for (std::size_t i = 0; i <= l; ++i) {
                    const Rational& x = a[i];
                    const Rational& y = b[l - i];
                    const Rational& m = cmp(x, y) >= 0 ? x : y;
                    if (!best || cmp(m, *best) < 0) {
                        best = &m;
                        best_i = static_cast<int>(i);
                    }
                }
                row[l] = *best;
                sp[l] = best_i;
            }
        }
    }
    return tab;
}

}  // namespace

SpSolution sp_min_makespan(const SpTree& t, std::int64_t budget) {
    SpSolution sol;
    sol.table = fill(t, budget);
    sol.makespan = sol.table.value[t.root][budget];
    sol.allocation.assign(t.nodes.size(), 0);
    std::vector<std::pair<int, std::int64_t>> st{{t.root, budget}};
    while (!st.empty()) {
        auto [v, l] = st.back();
        st.pop_back();
        sol.allocation[v] = l;
        const auto& n = t.nodes[v];
        if (n.kind == SpNode::Kind::Series) {
            st.push_back({n.right, l});
            st.push_back({n.left, l});
        } else if (n.kind == SpNode::Kind::Parallel) {
            std::int64_t i = sol.table.split[v][l];
            st.push_back({n.right, l - i});
            st.push_back({n.left, i});
        }
    }
    return sol;
}

std::optional<std::int64_t> sp_min_resource(const SpTree& t, const Rational& target, std::int64_t max_budget) {
    DpTable tab = fill(t, max_budget);
    const auto& row = tab.value[t.root];
    for (std::int64_t l = 0; l <= max_budget; ++l)
        if (row[l] <= target) return l;
    return std::nullopt;
}

SpRecognition sp_recognize(const Instance& g) {
    SpRecognition out;
    if (g.form == Form::NodeJobs) {
        out.reason = "not series-parallel: expected an arc-form instance";
        return out;
    }
    if (g.arcs.empty()) {
        out.reason = "not series-parallel: no arcs";
        return out;
    }
    struct E {
        VertexId u, v;
        int node;
        bool alive;
    };
    SpTree tree;
    std::vector<E> edges;
    for (std::size_t e = 0; e < g.arcs.size(); ++e)
        edges.push_back({g.arcs[e].tail, g.arcs[e].head, tree.leaf(g.arcs[e].job, static_cast<ArcId>(e)), true});
    std::size_t alive = edges.size();
    bool changed = true;
    while (changed && alive > 1) {
        changed = false;
        // parallel merges, lowest edge ids first
        std::map<std::pair<VertexId, VertexId>, std::size_t> first;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!edges[i].alive) continue;
            auto key = std::make_pair(edges[i].u, edges[i].v);
            auto it = first.find(key);
            if (it == first.end()) {
                first[key] = i;
                continue;
            }
            E& keep = edges[it->second];
            keep.node = tree.parallel(keep.node, edges[i].node);
            edges[i].alive = false;
            --alive;
            changed = true;
        }
        // series merges at inner vertices with one way in and one way out
        std::vector<std::vector<std::size_t>> in(g.num_vertices()), outs(g.num_vertices());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!edges[i].alive) continue;
            outs[edges[i].u].push_back(i);
            in[edges[i].v].push_back(i);
        }
        for (std::size_t w = 0; w < g.num_vertices(); ++w) {
            if (static_cast<VertexId>(w) == g.source || static_cast<VertexId>(w) == g.sink) continue;
            if (in[w].size() != 1 || outs[w].size() != 1) continue;
            E& a = edges[in[w][0]];
            E& b = edges[outs[w][0]];
            if (!a.alive || !b.alive || a.v != static_cast<VertexId>(w) || b.u != static_cast<VertexId>(w)) continue;
            a.node = tree.series(a.node, b.node);
            a.v = b.v;
            b.alive = false;
            --alive;
            changed = true;
            break;  // adjacency is stale after a merge
        }
    }
    if (alive != 1) {
        out.reason = "not series-parallel: reduction stuck with " + std::to_string(alive) + " arcs";
        return out;
    }
    for (const auto& e : edges) {
        if (!e.alive) continue;
        if (e.u != g.source || e.v != g.sink) {
            out.reason = "not series-parallel: reduced arc does not join source and sink";
            return out;
        }
        tree.root = e.node;
    }
    out.tree = std::move(tree);
    return out;
}

Instance sp_to_instance(const SpTree& t, std::vector<ArcId>* leaf_arc) {
    Instance g;
    g.form = Form::ArcJobs;
    g.source = g.add_vertex("s");
    g.sink = g.add_vertex("t");
    if (leaf_arc) leaf_arc->assign(t.nodes.size(), -1);
    std::function<void(int, VertexId, VertexId)> build = [&](int v, VertexId a, VertexId b) {
        const auto& n = t.nodes[v];
        if (n.kind == SpNode::Kind::Leaf) {
            ArcId e = g.add_arc(a, b, n.job);
            if (leaf_arc) (*leaf_arc)[v] = e;
        } else if (n.kind == SpNode::Kind::Series) {
            VertexId mid = g.add_vertex("n" + std::to_string(v));
            build(n.left, a, mid);
            build(n.right, mid, b);
        } else {
            build(n.left, a, b);
            build(n.right, a, b);
        }
    };
    build(t.root, g.source, g.sink);
    return g;
}

}  // namespace rtt
