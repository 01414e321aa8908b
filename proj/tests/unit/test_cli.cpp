#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "../common/corpus.hpp"
#include "rtt/cli.hpp"
#include "rtt/generators.hpp"
#include "rtt/io.hpp"
#include "rtt/transform.hpp"

using namespace rtt;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("rtt_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const Instance& g) const {
        write_file(path(name), serialize_instance(g));
        return path(name);
    }
    fs::path dir_;
};

Instance one_job() {
    Instance g;
    g.add_vertex("s");
    g.add_vertex("t");
    g.source = 0;
    g.sink = 1;
    g.add_arc(0, 1, step({{0, 4}, {2, 0}}));
    g.budget = 2;
    return g;
}

}  // namespace

TEST(Io, RoundTrip) {
    rtt::corpus::Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        Instance g = rtt::corpus::random_step_instance(rng);
        g.budget = trial % 5;
        if (trial % 3 == 0) g.target = make_rational(trial, 7);
        EXPECT_EQ(parse_instance(serialize_instance(g)), g);
    }
    for (const auto& gen : {gen_sat_general(parse_formula("1,-2,3;-1,2,3")), gen_partition({1, 2, 3}),
                            gen_numeric_3dm({1, 2}, {2, 1}, {3, 3}), gen_parallel_mm(3, 1),
                            gen_sat_splitting(parse_formula("1,2,3"), SplitFamily::KWay)}) {
        EXPECT_EQ(parse_instance(serialize_instance(gen.instance)), gen.instance);
        Instance ex = two_tuple_expand(to_arc_form(gen.instance)).first;
        EXPECT_EQ(parse_instance(serialize_instance(ex)), ex);
    }
}

TEST(Io, RejectsMalformed) {
    EXPECT_THROW(parse_instance("{"), ParseError);
    EXPECT_THROW(parse_instance("{}"), ParseError);
    std::string good = serialize_instance(one_job());
    auto bad = good;
    bad.replace(bad.find("\"4\""), 3, "\"x\"");
    EXPECT_THROW(parse_instance(bad), ParseError);
    bad = good;
    bad.replace(bad.find("\"t\"", bad.find("sink")), 3, "\"q\"");
    EXPECT_THROW(parse_instance(bad), ParseError);
    EXPECT_THROW(job_from_json(nlohmann::json{{"kway", 0}}), ParseError);
    EXPECT_THROW(job_from_json(nlohmann::json{{"step", {{0, "3"}, {1, "4"}}}}), ParseError);
    EXPECT_FALSE(job_from_json("dummy").has_value());
}

TEST(Io, FlowFile) {
    FlowAssignment f = integral_flow({0, 3, 1});
    EXPECT_EQ(flow_from_json(flow_to_json(f), 3), f);
    EXPECT_THROW(flow_from_json(nlohmann::json{{"7", 1}}, 3), ParseError);
    EXPECT_THROW(flow_from_json(nlohmann::json{{"a", 1}}, 3), ParseError);
}

TEST_F(CliTest, SolveExact) {
    auto file = write("one.json", one_job());
    auto r = cli({"solve", file, "--algo", "exact", "--budget", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("makespan 0\n"), std::string::npos);
    auto r1 = cli({"solve", file, "--algo", "exact", "--budget", "1"});
    EXPECT_NE(r1.out.find("makespan 4\n"), std::string::npos);
}

TEST_F(CliTest, SolveSpRejectsNonSp) {
    auto gen = gen_sat_general(parse_formula("1,-2,3;-1,2,3"));
    auto file = write("sat.json", gen.instance);
    auto r = cli({"solve", file, "--algo", "sp"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("not series-parallel"), std::string::npos);
}

TEST_F(CliTest, SolveSpOnChain) {
    Instance g;
    for (auto n : {"s", "a", "t"}) g.add_vertex(n);
    g.source = 0;
    g.sink = 2;
    g.add_arc(0, 1, step({{0, 5}, {2, 1}}));
    g.add_arc(1, 2, step({{0, 5}, {2, 1}}));
    g.budget = 2;
    auto file = write("ch.json", g);
    auto r = cli({"solve", file, "--algo", "sp", "--emit-flow", path("f.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("makespan 2\n"), std::string::npos);
    auto e = cli({"eval", file, "--flow", path("f.json")});
    EXPECT_EQ(e.code, 0);
    EXPECT_NE(e.out.find("makespan 2\n"), std::string::npos);
    EXPECT_EQ(cli({"eval", file, "--flow", path("f.json"), "--budget", "1"}).code, 5);
}

TEST_F(CliTest, SolveBicriteriaOnSatGadget) {
    EXPECT_EQ(cli({"gen", "sat", "--formula", "1,-2,3;-1,2,3", "--out", path("sat.json")}).code, 0);
    auto r = cli({"solve", path("sat.json"), "--algo", "bicriteria", "--alpha", "0.5", "--budget", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto pos = r.out.find("makespan ");
    ASSERT_NE(pos, std::string::npos);
    Rational m = parse_rational(r.out.substr(pos + 9, r.out.find('\n', pos) - pos - 9));
    EXPECT_LE(m, 2);
}

TEST_F(CliTest, GenSidecars) {
    EXPECT_EQ(cli({"gen", "sat", "--formula", "1,-2,3;-1,2,3", "--out", path("sat.json")}).code, 0);
    auto cert = nlohmann::json::parse(read_file(path("sat.json.cert.json")));
    EXPECT_EQ(cert["budget"], 7);
    EXPECT_EQ(cert["target"], "1");
    EXPECT_EQ(cert["expected_achievable"], true);

    EXPECT_EQ(cli({"gen", "partition", "--set", "1,2,3", "--out", path("p.json")}).code, 0);
    auto pc = nlohmann::json::parse(read_file(path("p.json.cert.json")));
    EXPECT_EQ(pc["budget"], 6);
    EXPECT_EQ(pc["target"], "3");

    EXPECT_EQ(cli({"gen", "mm", "--n", "4", "--h", "1", "--out", path("mm.json")}).code, 0);
    Instance mm = load_instance(path("mm.json"));
    int base4 = 0;
    for (const auto& j : mm.node_jobs)
        if (j && std::get<RecursiveBinary>(*j).base == 4) ++base4;
    EXPECT_EQ(base4, 16);

    EXPECT_EQ(cli({"gen", "3dm", "--a", "1,2", "--b", "2,1", "--c", "3,3", "--out", path("d.json")}).code, 0);
    EXPECT_EQ(cli({"gen", "sat-split", "--formula", "1,2,3", "--family", "binary", "--out", path("ss.json")}).code, 0);
    auto stdout_gen = cli({"gen", "partition", "--set", "1,1"});
    EXPECT_EQ(stdout_gen.code, 0);
    EXPECT_EQ(parse_instance(stdout_gen.out), gen_partition({1, 1}).instance);
}

TEST_F(CliTest, GenBadFlags) {
    EXPECT_EQ(cli({"gen", "sat", "--formula", "1,2"}).code, 2);
    EXPECT_EQ(cli({"gen", "partition", "--set", "1,-2"}).code, 2);
    EXPECT_EQ(cli({"gen", "3dm", "--a", "1,2", "--b", "1,2", "--c", "1,2"}).code, 2);
    EXPECT_EQ(cli({"gen", "mm", "--n", "2", "--h", "3"}).code, 2);
    EXPECT_EQ(cli({"gen", "nope"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
}

TEST_F(CliTest, EvalFlows) {
    auto gen = gen_sat_general(parse_formula("1,-2,3;-1,2,3"));
    auto file = write("sat.json", gen.instance);
    write_file(path("zero.json"), "{}");
    auto z = cli({"eval", file, "--flow", path("zero.json")});
    EXPECT_EQ(z.code, 0);
    EXPECT_NE(z.out.find("makespan 3\n"), std::string::npos);  // longest unit-job path

    FlowAssignment good = sat_general_flow(gen, parse_formula("1,-2,3;-1,2,3"), {true, true, false});
    write_file(path("good.json"), flow_to_json(good).dump());
    auto g = cli({"eval", file, "--flow", path("good.json")});
    EXPECT_EQ(g.code, 0);
    EXPECT_NE(g.out.find("makespan 1\n"), std::string::npos);

    write_file(path("bad.json"), "{\"0\": 1}");
    auto b = cli({"eval", file, "--flow", path("bad.json")});
    EXPECT_EQ(b.code, 5);
    EXPECT_NE(b.err.find("vertex V1.1 has inflow - outflow = 1"), std::string::npos);

    write_file(path("junk.json"), "[1,");
    EXPECT_EQ(cli({"eval", file, "--flow", path("junk.json")}).code, 2);
}

TEST_F(CliTest, ErrorCodes) {
    write_file(path("broken.json"), "{\"format_version\": 1}");
    EXPECT_EQ(cli({"solve", path("broken.json")}).code, 2);
    EXPECT_EQ(cli({"solve", path("missing.json")}).code, 2);

    auto file = write("one.json", one_job());
    EXPECT_EQ(cli({"solve", file, "--algo", "kway5"}).code, 3);
    EXPECT_EQ(cli({"solve", file, "--algo", "bicriteria", "--alpha", "1"}).code, 2);
    EXPECT_EQ(cli({"solve", file, "--algo", "nonsense"}).code, 2);

    EXPECT_EQ(cli({"gen", "sat", "--formula", "1,-2,3;-1,2,3", "--out", path("sat.json")}).code, 0);
    EXPECT_EQ(cli({"solve", path("sat.json"), "--algo", "exact"}).code, 4);
    ::setenv("RTT_SIZE_GUARD", "200,10", 1);
    auto r = cli({"solve", path("sat.json"), "--algo", "exact"});
    ::unsetenv("RTT_SIZE_GUARD");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("makespan 1\n"), std::string::npos);
}

TEST_F(CliTest, DumpLp) {
    auto file = write("one.json", one_job());
    EXPECT_EQ(cli({"solve", file, "--algo", "bicriteria", "--dump-lp", path("x.lp")}).code, 0);
    EXPECT_NE(read_file(path("x.lp")).find("Subject To"), std::string::npos);
}
