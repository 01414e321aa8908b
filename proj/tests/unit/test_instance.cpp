#include <gtest/gtest.h>

#include "../common/corpus.hpp"
#include "rtt/instance.hpp"
#include "rtt/transform.hpp"

using namespace rtt;

namespace {

Instance single_arc(Job job) {
    Instance g;
    g.add_vertex("s");
    g.add_vertex("t");
    g.source = 0;
    g.sink = 1;
    g.add_arc(0, 1, std::move(job));
    g.budget = 4;
    return g;
}

Instance chain2(Job job) {
    Instance g;
    for (auto n : {"s", "a", "t"}) g.add_vertex(n);
    g.source = 0;
    g.sink = 2;
    g.add_arc(0, 1, job);
    g.add_arc(1, 2, job);
    g.budget = 1;
    return g;
}

// every s-t path's duration sum, maximized
Rational longest_by_paths(const Instance& g, const FlowAssignment& f, VertexId v, Rational acc) {
    if (v == g.sink) return acc;
    Rational best = -1;
    for (std::size_t e = 0; e < g.num_arcs(); ++e)
        if (g.arcs[e].tail == v) {
            Rational c = longest_by_paths(g, f, g.arcs[e].head, acc + job_duration(g.arcs[e].job, f.flow[e]));
            if (c > best) best = c;
        }
    return best;
}

}  // namespace

TEST(Evaluate, SingleArc) {
    Instance g = single_arc(step({{0, 5}, {2, 1}}));
    EXPECT_EQ(evaluate(g, zero_flow(g)).makespan, 5);
    EXPECT_EQ(evaluate(g, integral_flow({2})).makespan, 1);
}

TEST(Evaluate, PathReuse) {
    Instance g = chain2(step({{0, 3}, {1, 0}}));
    Schedule s = evaluate(g, integral_flow({1, 1}));
    EXPECT_EQ(s.makespan, 0);
    EXPECT_EQ(s.event_time[0], 0);
}

TEST(Evaluate, RejectsInfeasibleFlow) {
    Instance g = chain2(step({{0, 3}, {1, 0}}));
    EXPECT_THROW(evaluate(g, integral_flow({1, 0})), InfeasibleFlow);
    EXPECT_THROW(evaluate(g, integral_flow({2, 2})), InfeasibleFlow);
}

TEST(ValidateFlow, Reports) {
    Instance g = chain2(step({{0, 3}, {1, 0}}));
    EXPECT_TRUE(validate_flow(g, integral_flow({1, 1})).ok());
    auto r = validate_flow(g, integral_flow({2, 1}));
    ASSERT_FALSE(r.ok());
    bool conservation = false, budget = false;
    for (const auto& v : r.violations) {
        if (v.kind == Violation::Kind::Conservation) {
            conservation = true;
            EXPECT_EQ(v.where, 1);
        }
        budget |= v.kind == Violation::Kind::Budget;
    }
    EXPECT_TRUE(conservation);
    EXPECT_TRUE(budget);
    FlowAssignment neg{{Rational(-1), Rational(-1)}};
    EXPECT_FALSE(validate_flow(g, neg).ok());
    FlowAssignment half{{Rational(1, 2), Rational(1, 2)}};
    EXPECT_TRUE(validate_flow(g, half).ok());
    EXPECT_FALSE(validate_flow(g, half, true).ok());
    EXPECT_FALSE(validate_flow(g, integral_flow({1})).ok());
}

TEST(ValidateInstance, RejectsBadShapes) {
    Instance g;
    for (auto n : {"s", "a", "t"}) g.add_vertex(n);
    g.source = 0;
    g.sink = 2;
    g.add_arc(0, 2);
    EXPECT_THROW(validate_instance(g), InvalidInstance);  // a is isolated
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    EXPECT_NO_THROW(validate_instance(g));
    g.add_arc(2, 0);
    EXPECT_THROW(validate_instance(g), InvalidInstance);  // cycle
}

TEST(RaceInstance, BasesFollowInDegree) {
    CellDag c{{"s", "a", "t"}, {{0, 1}, {1, 2}}};
    Instance g = build_race_instance(c, SplitFamily::KWay);
    ASSERT_EQ(g.form, Form::NodeJobs);
    for (const auto& j : g.node_jobs) EXPECT_EQ(std::get<KWay>(*j).base, 1);

    CellDag fan;
    for (int i = 0; i < 8; ++i) fan.names.push_back("w" + std::to_string(i));
    fan.names.push_back("x");
    for (int i = 0; i < 8; ++i) fan.edges.push_back({i, 8});
    Instance h = build_race_instance(fan, SplitFamily::RecursiveBinary);
    EXPECT_EQ(std::get<RecursiveBinary>(*h.node_jobs[h.find_vertex("x")]).base, 8);
    EXPECT_GE(h.find_vertex("src"), 0);  // eight writers need a plumbing source
    EXPECT_NO_THROW(validate_instance(h));
}

TEST(RaceInstance, RejectsCycle) {
    CellDag c{{"a", "b"}, {{0, 1}, {1, 0}}};
    try {
        build_race_instance(c, SplitFamily::KWay);
        FAIL() << "cycle accepted";
    } catch (const InvalidInstance& e) {
        EXPECT_NE(std::string(e.what()).find("cyclic read-write dependency"), std::string::npos);
    }
}

TEST(Evaluate, MatchesPathEnumeration) {
    corpus::Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        g.budget = 50;
        // random path flows
        std::vector<std::int64_t> f(g.num_arcs(), 0);
        auto adj = adjacency(g);
        int paths = static_cast<int>(corpus::uniform(rng, 0, 3));
        for (int p = 0; p < paths; ++p) {
            VertexId v = g.source;
            std::int64_t units = corpus::uniform(rng, 1, 3);
            while (v != g.sink) {
                const auto& outs = adj.out[v];
                ArcId e = outs[corpus::uniform(rng, 0, outs.size() - 1)];
                f[e] += units;
                v = g.arcs[e].head;
            }
        }
        FlowAssignment fl = integral_flow(f);
        EXPECT_EQ(evaluate(g, fl).makespan, longest_by_paths(g, fl, g.source, 0));
    }
}

TEST(Evaluate, MonotoneInPathFlow) {
    corpus::Rng rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        g.budget = 50;
        auto adj = adjacency(g);
        std::vector<std::int64_t> f(g.num_arcs(), 0);
        Rational prev = evaluate(g, integral_flow(f)).makespan;
        for (int p = 0; p < 4; ++p) {
            VertexId v = g.source;
            while (v != g.sink) {
                const auto& outs = adj.out[v];
                ArcId e = outs[corpus::uniform(rng, 0, outs.size() - 1)];
                f[e] += 1;
                v = g.arcs[e].head;
            }
            Rational cur = evaluate(g, integral_flow(f)).makespan;
            ASSERT_LE(cur, prev);
            prev = cur;
        }
    }
}

TEST(AttachTerminals, AddsPlumbing) {
    Instance g;
    for (auto n : {"a", "b", "c"}) g.add_vertex(n);
    g.add_arc(0, 2);
    g.add_arc(1, 2);
    attach_terminals(g);
    EXPECT_EQ(g.vertices[g.source], "src");
    EXPECT_EQ(g.vertices[g.sink], "c");
    EXPECT_NO_THROW(validate_instance(g));
}
