#include <gtest/gtest.h>

#include "../common/corpus.hpp"
#include "rtt/generators.hpp"
#include "rtt/lp.hpp"
#include "rtt/oracle.hpp"
#include "rtt/simplex.hpp"
#include "rtt/transform.hpp"

using namespace rtt;

namespace {

Instance one_job(Job j) {
    Instance g;
    g.add_vertex("u");
    g.add_vertex("v");
    g.source = 0;
    g.sink = 1;
    g.add_arc(0, 1, std::move(j));
    return g;
}

Rational lp_value(const Instance& g, std::int64_t b) {
    auto ex = two_tuple_expand(g).first;
    return solve_lp(build_lp(ex, b)).objective;
}

}  // namespace

TEST(Simplex, SmallProblems) {
    // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
    simplex::Problem p;
    p.num_vars = 2;
    p.cost = {-1, -1};
    p.rows.push_back({{{0, 1}, {1, 2}}, simplex::Sense::Le, 4});
    p.rows.push_back({{{0, 3}, {1, 1}}, simplex::Sense::Le, 6});
    auto r = simplex::solve(p);
    ASSERT_EQ(r.status, simplex::Status::Optimal);
    EXPECT_NEAR(r.objective, -2.8, 1e-9);
    EXPECT_NEAR(r.x[0], 1.6, 1e-9);

    // x >= 2, x <= 1
    simplex::Problem q;
    q.num_vars = 1;
    q.cost = {1};
    q.rows.push_back({{{0, 1}}, simplex::Sense::Ge, 2});
    q.rows.push_back({{{0, 1}}, simplex::Sense::Le, 1});
    EXPECT_EQ(simplex::solve(q).status, simplex::Status::Infeasible);

    simplex::Problem u;
    u.num_vars = 1;
    u.cost = {-1};
    u.rows.push_back({{{0, 1}}, simplex::Sense::Ge, 0});
    EXPECT_EQ(simplex::solve(u).status, simplex::Status::Unbounded);

    simplex::Problem e;
    e.num_vars = 2;
    e.cost = {1, 2};
    e.rows.push_back({{{0, 1}, {1, 1}}, simplex::Sense::Eq, 3});
    auto re = simplex::solve(e);
    ASSERT_EQ(re.status, simplex::Status::Optimal);
    EXPECT_NEAR(re.objective, 3, 1e-9);
}

TEST(Lp, TwoTupleArc) {
    Instance g = one_job(step({{0, 4}, {2, 0}}));
    EXPECT_EQ(lp_value(g, 1), 2);
    EXPECT_EQ(lp_value(g, 2), 0);
    EXPECT_EQ(lp_value(g, 0), 4);
    EXPECT_EQ(lp_value(one_job(step({{0, 4}})), 3), 4);
}

TEST(Lp, ZeroJobInstance) {
    Instance g;
    g.add_vertex("s");
    g.add_vertex("t");
    g.source = 0;
    g.sink = 1;
    g.add_arc(0, 1);
    EXPECT_EQ(lp_value(g, 5), 0);
}

TEST(Lp, ZeroBudgetIsCriticalPath) {
    corpus::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        EXPECT_EQ(lp_value(g, 0), evaluate(g, zero_flow(g)).makespan);
    }
}

TEST(Lp, RowsAndDump) {
    auto ex = two_tuple_expand(one_job(step({{0, 4}, {2, 0}}))).first;
    LinearProgram lp = build_lp(ex, 1);
    bool cap = false, budget = false;
    for (const auto& r : lp.rows) {
        cap |= r.name.rfind("cap_", 0) == 0;
        budget |= r.name == "budget";
    }
    EXPECT_TRUE(cap);
    EXPECT_TRUE(budget);
    std::string text = to_lp_format(lp);
    EXPECT_NE(text.find("Minimize"), std::string::npos);
    EXPECT_NE(text.find("Subject To"), std::string::npos);
    EXPECT_NE(text.find("End"), std::string::npos);
}

TEST(Lp, SolutionIsExactlyFeasible) {
    corpus::Rng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        std::int64_t b = corpus::uniform(rng, 0, 4);
        auto ex = two_tuple_expand(g).first;
        LpSolution s = solve_lp(build_lp(ex, b));
        ex.budget = b;
        EXPECT_TRUE(validate_flow(ex, s.flow).ok());
        EXPECT_LE(s.flow_value, b);
        for (std::size_t e = 0; e < ex.num_arcs(); ++e) {
            const auto& a = ex.arcs[e];
            EXPECT_GE(s.event_time[a.head], s.event_time[a.tail] + relaxed_duration(a.job, s.flow.flow[e]));
        }
        EXPECT_EQ(s.event_time[ex.source], 0);
    }
}

TEST(Lp, BelowIntegralOptimumAndMonotone) {
    corpus::Rng rng(8);
    for (int trial = 0; trial < 80; ++trial) {
        Instance g = corpus::random_step_instance(rng);
        Rational prev = lp_value(g, 0);
        for (std::int64_t b = 0; b <= 4; ++b) {
            Rational v = lp_value(g, b);
            EXPECT_LE(v, prev);
            EXPECT_LE(v, brute_min_makespan(g, b).makespan);
            prev = v;
        }
    }
}

TEST(Lp, PerJobSummary) {
    auto [ex, tr] = two_tuple_expand(one_job(step({{0, 5}, {2, 1}, {3, 0}})));
    LpSolution s;
    s.flow = zero_flow(ex);
    auto sum0 = per_job_summary(s, tr);
    EXPECT_EQ(sum0[0].resource, 0);
    EXPECT_EQ(sum0[0].time, 5);
    const auto& ch = tr.arcs[0].chains;
    s.flow.flow[ch[0].first] = 1;
    auto sum1 = per_job_summary(s, tr);
    EXPECT_EQ(sum1[0].resource, 1);
    EXPECT_EQ(sum1[0].time, Rational(5, 2));
    s.flow.flow[ch[0].first] = 2;
    s.flow.flow[ch[1].first] = 1;
    auto sum2 = per_job_summary(s, tr);
    EXPECT_EQ(sum2[0].resource, 3);
    EXPECT_EQ(sum2[0].time, 0);
}

TEST(Lp, SatGadgetRelaxationAtMostOne) {
    auto gen = gen_sat_general(parse_formula("1,-2,3;-1,2,3"));
    EXPECT_LE(lp_value(gen.instance, 7), 1);
}

TEST(Lp, Deterministic) {
    auto gen = gen_sat_general(parse_formula("1,-2,3;-1,2,3"));
    auto ex = two_tuple_expand(gen.instance).first;
    LpSolution a = solve_lp(build_lp(ex, 7)), b = solve_lp(build_lp(ex, 7));
    EXPECT_EQ(a.flow, b.flow);
    EXPECT_EQ(a.objective, b.objective);
    EXPECT_EQ(a.pivots, b.pivots);
}
