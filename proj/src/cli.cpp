#include "rtt/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "rtt/approx.hpp"
#include "rtt/io.hpp"
#include "rtt/lp.hpp"
#include "rtt/oracle.hpp"
#include "rtt/rounding.hpp"
#include "rtt/series_parallel.hpp"
#include "rtt/transform.hpp"

namespace rtt {

namespace {

class Incompatible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

OracleLimits limits_from_env() {
    OracleLimits lim;
    const char* env = std::getenv("RTT_SIZE_GUARD");
    if (!env || !*env) return lim;
    std::string s(env);
    auto comma = s.find(',');
    try {
        lim.max_arcs = std::stoul(s.substr(0, comma));
        if (comma != std::string::npos) lim.max_budget = std::stoll(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw ParseError("RTT_SIZE_GUARD must look like \"arcs\" or \"arcs,budget\"");
    }
    return lim;
}

std::vector<std::int64_t> int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError(std::string(what) + ": empty list");
    return out;
}

struct SolveOpts {
    std::string file, algo = "exact", alpha = "1/2", emit_flow, dump_lp;
    std::int64_t budget = -1;
};

void print_guarantee(std::ostream& out, const Guarantee& g) {
    out << "guarantee resource " << to_string(g.resource_factor) << " makespan " << to_string(g.makespan_factor)
        << "\n";
}

int cmd_solve(const SolveOpts& o, std::ostream& out) {
    Instance g = load_instance(o.file);
    std::int64_t budget = o.budget >= 0 ? o.budget : g.budget;
    Instance arc = to_arc_form(g);
    if (!o.dump_lp.empty()) write_file(o.dump_lp, to_lp_format(build_lp(two_tuple_expand(arc).first, budget)));

    out << "algorithm " << o.algo << "\n";
    out << "instance " << form_name(g.form) << " vertices " << arc.num_vertices() << " arcs " << arc.num_arcs()
        << "\n";
    out << "budget " << budget << "\n";

    FlowAssignment flow;
    if (o.algo == "exact") {
        auto res = brute_min_makespan(arc, budget, limits_from_env());
        flow = res.flow;
        out << "makespan " << to_string(res.makespan) << "\n";
        out << "resource " << to_string(flow_value(arc, flow)) << "\n";
        out << "guarantee exact\n";
    } else if (o.algo == "sp") {
        auto rec = sp_recognize(arc);
        if (!rec.tree) throw Incompatible(rec.reason.empty() ? "not series-parallel" : rec.reason);
        const SpTree& tree = *rec.tree;
        auto sol = sp_min_makespan(tree, budget);
        std::vector<std::int64_t> lower(arc.num_arcs(), 0);
        for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
            const auto& n = tree.nodes[v];
            if (n.kind == SpNode::Kind::Leaf && n.arc >= 0 && n.job) lower[n.arc] = sol.allocation[v];
        }
        flow = integral_flow(min_flow_values(arc, lower));
        out << "makespan " << to_string(sol.makespan) << "\n";
        out << "resource " << to_string(flow_value(arc, flow)) << "\n";
        out << "guarantee exact\n";
    } else {
        ApproxResult r;
        if (o.algo == "bicriteria") {
            Rational alpha;
            try {
                alpha = parse_rational(o.alpha);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("--alpha: ") + e.what());
            }
            if (alpha <= 0 || alpha >= 1) throw ParseError("--alpha must lie strictly between 0 and 1");
            r = bicriteria_general(arc, budget, alpha);
        } else if (o.algo == "kway5") {
            r = kway_five_approx(arc, budget);
        } else if (o.algo == "binary4") {
            r = binary_four_approx(arc, budget);
        } else if (o.algo == "binary-improved") {
            r = binary_improved_bicriteria(arc, budget);
        } else {
            throw ParseError("unknown algorithm '" + o.algo + "'");
        }
        flow = r.flow;
        out << "makespan " << to_string(r.schedule.makespan) << "\n";
        out << "resource " << r.resource_used << "\n";
        print_guarantee(out, r.guarantee);
        out << "lp_objective " << to_string(r.lp_objective) << "\n";
        out << "lp_flow " << to_string(r.lp_flow) << "\n";
    }
    if (!o.emit_flow.empty()) write_file(o.emit_flow, flow_to_json(flow).dump(2) + "\n");
    return kExitOk;
}

struct GenOpts {
    std::string kind, formula, family = "kway", set, a, b, c, out;
    int n = 0, h = 0;
};

int cmd_gen(const GenOpts& o, std::ostream& out, std::ostream& err) {
    GeneratedInstance gen;
    if (o.kind == "sat") {
        gen = gen_sat_general(parse_formula(o.formula));
    } else if (o.kind == "sat-split") {
        SplitFamily fam;
        if (o.family == "kway") fam = SplitFamily::KWay;
        else if (o.family == "binary") fam = SplitFamily::RecursiveBinary;
        else throw ParseError("--family must be kway or binary");
        gen = gen_sat_splitting(parse_formula(o.formula), fam);
    } else if (o.kind == "partition") {
        gen = gen_partition(int_list(o.set, "--set"));
    } else if (o.kind == "3dm") {
        gen = gen_numeric_3dm(int_list(o.a, "--a"), int_list(o.b, "--b"), int_list(o.c, "--c"));
    } else if (o.kind == "mm") {
        gen = gen_parallel_mm(o.n, o.h);
    } else {
        throw ParseError("unknown generator kind '" + o.kind + "'");
    }
    std::string cert = certificate_to_json(gen).dump(2) + "\n";
    if (o.out.empty()) {
        out << serialize_instance(gen.instance);
        err << cert;
    } else {
        write_file(o.out, serialize_instance(gen.instance));
        write_file(o.out + ".cert.json", cert);
        out << "wrote " << o.out << " budget " << gen.budget << " target "
            << (gen.target ? to_string(*gen.target) : "none") << " expected "
            << (gen.achievable ? (*gen.achievable ? "achievable" : "unachievable") : "unknown") << "\n";
    }
    return kExitOk;
}

int cmd_eval(const std::string& file, const std::string& flow_path, std::int64_t budget, std::ostream& out,
             std::ostream& err) {
    Instance arc = to_arc_form(load_instance(file));
    if (budget >= 0) arc.budget = budget;
    nlohmann::json fj;
    try {
        fj = nlohmann::json::parse(read_file(flow_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed flow file: ") + e.what());
    }
    FlowAssignment f = flow_from_json(fj, arc.num_arcs());
    auto report = validate_flow(arc, f);
    if (!report.ok()) {
        err << "infeasible flow\n" << report.describe() << "\n";
        return kExitInfeasible;
    }
    Schedule s = evaluate(arc, f);
    for (std::size_t v = 0; v < arc.num_vertices(); ++v)
        out << "event " << arc.vertices[v] << " " << to_string(s.event_time[v]) << "\n";
    out << "resource " << to_string(flow_value(arc, f)) << "\n";
    out << "makespan " << to_string(s.makespan) << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resource-time tradeoff solver with path reuse"};
    app.require_subcommand(1);

    SolveOpts so;
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", so.file, "instance JSON")->required();
    solve->add_option("--algo", so.algo, "exact | sp | bicriteria | kway5 | binary4 | binary-improved")
        ->check(CLI::IsMember({"exact", "sp", "bicriteria", "kway5", "binary4", "binary-improved"}));
    solve->add_option("--budget", so.budget, "resource budget (default: the file's)");
    solve->add_option("--alpha", so.alpha, "rounding threshold for bicriteria, e.g. 1/2 or 0.25");
    solve->add_option("--emit-flow", so.emit_flow, "write the witness flow here");
    solve->add_option("--dump-lp", so.dump_lp, "write the relaxation in LP format here");

    GenOpts go;
    auto* gen = app.add_subcommand("gen", "generate a reduction instance");
    gen->set_help_flag("--help", "print this help and exit");
    gen->add_option("kind", go.kind, "sat | sat-split | partition | 3dm | mm")
        ->required()
        ->check(CLI::IsMember({"sat", "sat-split", "partition", "3dm", "mm"}));
    gen->add_option("--formula", go.formula, "clauses like \"1,-2,3;-1,2,3\"");
    gen->add_option("--family", go.family, "kway | binary (sat-split)");
    gen->add_option("--set", go.set, "comma-separated positive integers (partition)");
    gen->add_option("--a", go.a, "3dm set A");
    gen->add_option("--b", go.b, "3dm set B");
    gen->add_option("--c", go.c, "3dm set C");
    gen->add_option("--n", go.n, "matrix dimension (mm)");
    gen->add_option("--h", go.h, "reducer height (mm)");
    gen->add_option("--out", go.out, "instance path; a .cert.json sidecar is written next to it");

    std::string eval_file, eval_flow;
    std::int64_t eval_budget = -1;
    auto* ev = app.add_subcommand("eval", "evaluate a flow on an instance");
    ev->add_option("file", eval_file, "instance JSON")->required();
    ev->add_option("--flow", eval_flow, "flow JSON {\"arc id\": units}")->required();
    ev->add_option("--budget", eval_budget, "override the file's budget")->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*solve) return cmd_solve(so, out);
        if (*gen) return cmd_gen(go, out, err);
        if (*ev) return cmd_eval(eval_file, eval_flow, eval_budget, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GeneratorError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidInstance& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Incompatible& e) {
        err << "error: " << e.what() << "\n";
        return kExitIncompatible;
    } catch (const IncompatibleFamily& e) {
        err << "error: " << e.what() << "\n";
        return kExitIncompatible;
    } catch (const SizeGuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const InfeasibleFlow& e) {
        err << "error: infeasible flow\n" << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}

}  // namespace rtt
