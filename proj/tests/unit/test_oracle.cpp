#include <gtest/gtest.h>

#include "../common/corpus.hpp"
#include "rtt/oracle.hpp"

using namespace rtt;

namespace {

Instance one_job(Job j) {
    Instance g;
    g.add_vertex("s");
    g.add_vertex("t");
    g.source = 0;
    g.sink = 1;
    g.add_arc(0, 1, std::move(j));
    return g;
}

}  // namespace

TEST(Oracle, SingleArc) {
    Instance g = one_job(step({{0, 4}, {2, 0}}));
    EXPECT_EQ(brute_min_makespan(g, 2).makespan, 0);
    EXPECT_EQ(brute_min_makespan(g, 1).makespan, 4);
    EXPECT_EQ(brute_min_makespan(g, 2).flow.flow[0], 2);
}

TEST(Oracle, ChainReuse) {
    Instance g;
    for (auto n : {"s", "a", "t"}) g.add_vertex(n);
    g.source = 0;
    g.sink = 2;
    g.add_arc(0, 1, step({{0, 3}, {1, 0}}));
    g.add_arc(1, 2, step({{0, 3}, {1, 0}}));
    EXPECT_EQ(brute_min_makespan(g, 1).makespan, 0);
}

TEST(Oracle, MinResource) {
    Instance g = one_job(step({{0, 4}, {2, 0}}));
    EXPECT_EQ(brute_min_resource(g, 0, 5), 2);
    EXPECT_EQ(brute_min_resource(g, 4, 5), 0);
    EXPECT_EQ(brute_min_resource(g, 1, 5), 2);
    EXPECT_FALSE(brute_min_resource(one_job(step({{0, 4}, {2, 1}})), 0, 5).has_value());
}

TEST(Oracle, SizeGuard) {
    Instance g = one_job(step({{0, 4}}));
    EXPECT_THROW(brute_min_makespan(g, 9), SizeGuardExceeded);
    EXPECT_NO_THROW(brute_min_makespan(g, 9, OracleLimits{16, 9}));
    corpus::Rng rng(1);
    Instance big = corpus::random_dag(rng, 17, [](corpus::Rng&) { return Job{}; });
    EXPECT_THROW(brute_min_makespan(big, 1), SizeGuardExceeded);
}

TEST(Oracle, WitnessAchievesOptimum) {
    corpus::Rng rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        std::int64_t b = corpus::uniform(rng, 0, 4);
        auto r = brute_min_makespan(g, b);
        g.budget = b;
        ASSERT_TRUE(validate_flow(g, r.flow, true).ok());
        EXPECT_EQ(evaluate(g, r.flow).makespan, r.makespan);
    }
}

TEST(Oracle, MonotoneInBudget) {
    corpus::Rng rng(62);
    for (int trial = 0; trial < 80; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        Rational prev = brute_min_makespan(g, 0).makespan;
        for (std::int64_t b = 1; b <= 5; ++b) {
            Rational cur = brute_min_makespan(g, b).makespan;
            EXPECT_LE(cur, prev);
            prev = cur;
        }
    }
}

TEST(Oracle, RationalTimes) {
    Instance g = one_job(StepList({{0, Rational(7, 3)}, {1, Rational(1, 2)}}));
    EXPECT_EQ(brute_min_makespan(g, 1).makespan, Rational(1, 2));
    EXPECT_EQ(brute_min_makespan(g, 0).makespan, Rational(7, 3));
}

TEST(Oracle, Deterministic) {
    corpus::Rng rng(63);
    Instance g = corpus::random_step_instance(rng);
    EXPECT_EQ(brute_min_makespan(g, 4).flow, brute_min_makespan(g, 4).flow);
}
