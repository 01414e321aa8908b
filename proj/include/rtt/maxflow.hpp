#pragma once

#include <cstdint>
#include <vector>

namespace rtt {

// Dinic's algorithm on int64 capacities. Arcs are scanned in insertion order,
// so results depend only on the order of add_edge calls.
class MaxFlow {
public:
    explicit MaxFlow(int n);

    int add_edge(int u, int v, std::int64_t cap);
    std::int64_t run(int s, int t);
    std::int64_t flow_on(int edge) const;

private:
    struct Edge {
        int to;
        std::int64_t cap;
        std::int64_t orig;
    };
    bool bfs(int s, int t);
    std::int64_t dfs(int v, int t, std::int64_t pushed);

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> g_;
    std::vector<int> level_, it_;
};

}  // namespace rtt
