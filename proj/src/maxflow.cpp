#include "rtt/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace rtt {

MaxFlow::MaxFlow(int n) : n_(n), g_(n), level_(n), it_(n) {}

int MaxFlow::add_edge(int u, int v, std::int64_t cap) {
    g_[u].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({v, cap, cap});
    g_[v].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({u, 0, 0});
    return static_cast<int>(edges_.size()) - 2;
}

std::int64_t MaxFlow::flow_on(int edge) const { return edges_[edge].orig - edges_[edge].cap; }

bool MaxFlow::bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id : g_[v]) {
            const Edge& e = edges_[id];
            if (e.cap > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                q.push(e.to);
            }
        }
    }
    return level_[t] >= 0;
}

std::int64_t MaxFlow::dfs(int v, int t, std::int64_t pushed) {
    if (v == t) return pushed;
    for (int& i = it_[v]; i < static_cast<int>(g_[v].size()); ++i) {
        int id = g_[v][i];
        Edge& e = edges_[id];
        if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
        std::int64_t got = dfs(e.to, t, std::min(pushed, e.cap));
        if (got > 0) {
            e.cap -= got;
            edges_[id ^ 1].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t MaxFlow::run(int s, int t) {
    if (s == t) return 0;
    std::int64_t total = 0;
    while (bfs(s, t)) {
        std::fill(it_.begin(), it_.end(), 0);
        while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
    }
    return total;
}

}  // namespace rtt
