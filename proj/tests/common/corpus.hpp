#pragma once

// Seeded random instances shared by the unit tests and the acceptance run.

#include <functional>
#include <random>

#include "rtt/instance.hpp"
#include "rtt/series_parallel.hpp"

namespace rtt::corpus {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// 1..max_tuples breakpoints, resource gaps 1..3, times non-increasing from 1..8.
inline Job random_step_job(Rng& rng, int max_tuples = 3) {
    int n = static_cast<int>(uniform(rng, 1, max_tuples));
    std::vector<ResourceTimeTuple> t;
    std::int64_t r = 0, time = uniform(rng, 1, 8);
    for (int i = 0; i < n; ++i) {
        t.push_back({r, make_rational(time)});
        r += uniform(rng, 1, 3);
        time = uniform(rng, 0, time);
    }
    return DurationFunction(StepList(std::move(t)));
}

inline Job random_kway_job(Rng& rng, std::int64_t max_base = 16) {
    return DurationFunction(KWay{uniform(rng, 1, max_base)});
}

inline Job random_binary_job(Rng& rng, std::int64_t max_base = 16) {
    return DurationFunction(RecursiveBinary{uniform(rng, 1, max_base)});
}

// Single source 0, single sink n-1, every vertex on an s-t path, exactly
// `arcs` arcs (parallel arcs allowed). Each arc gets make_job().
inline Instance random_dag(Rng& rng, int arcs, const std::function<Job(Rng&)>& make_job) {
    int n = static_cast<int>(uniform(rng, 2, std::max(2, std::min(5, arcs / 2 + 1))));
    Instance g;
    g.form = Form::ArcJobs;
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    g.source = 0;
    g.sink = n - 1;
    std::vector<std::pair<int, int>> ends;
    std::vector<int> outdeg(n, 0);
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(uniform(rng, 0, v - 1));
        ends.push_back({u, v});
        ++outdeg[u];
    }
    for (int v = 1; v + 1 < n; ++v)
        if (outdeg[v] == 0) {
            int w = static_cast<int>(uniform(rng, v + 1, n - 1));
            ends.push_back({v, w});
            ++outdeg[v];
        }
    while (static_cast<int>(ends.size()) < arcs) {
        int u = static_cast<int>(uniform(rng, 0, n - 2));
        int v = static_cast<int>(uniform(rng, u + 1, n - 1));
        ends.push_back({u, v});
    }
    for (auto [u, v] : ends) g.add_arc(u, v, make_job(rng));
    return g;
}

// General corpus entry: step jobs with up to 3 tuples, one arc in ten a dummy.
inline Instance random_step_instance(Rng& rng, int max_arcs = 8) {
    int arcs = static_cast<int>(uniform(rng, 1, max_arcs));
    return random_dag(rng, arcs, [](Rng& r) -> Job {
        if (uniform(r, 0, 9) == 0) return std::nullopt;
        return random_step_job(r);
    });
}

// Random binary SP tree with `leaves` leaves carrying step jobs (some dummies).
inline int random_sp_subtree(Rng& rng, SpTree& t, int leaves, int parallel_percent) {
    if (leaves == 1) {
        Job j = uniform(rng, 0, 9) == 0 ? Job{} : random_step_job(rng);
        return t.leaf(j);
    }
    int left = static_cast<int>(uniform(rng, 1, leaves - 1));
    int a = random_sp_subtree(rng, t, left, parallel_percent);
    int b = random_sp_subtree(rng, t, leaves - left, parallel_percent);
    return uniform(rng, 1, 100) <= parallel_percent ? t.parallel(a, b) : t.series(a, b);
}

inline SpTree random_sp_tree(Rng& rng, int leaves, int parallel_percent = 50) {
    SpTree t;
    t.root = random_sp_subtree(rng, t, leaves, parallel_percent);
    return t;
}

}  // namespace rtt::corpus
