#include "rtt/oracle.hpp"

#include <string>
#include <unordered_set>

namespace rtt {

namespace {

// Durations are scaled to a common denominator so the search runs on int64
// when that fits; Num = Rational is the fallback.
template <class Num>
class Search {
public:
    Search(const Instance& g, std::int64_t budget, const std::vector<std::vector<Num>>& dur)
        : g_(g), budget_(budget), dur_(dur) {
        order_ = *topological_order(g);
        out_ = adjacency(g).out;
        std::size_t m = g.num_arcs();
        // cheapest completion from each vertex: every arc at full budget
        tail_.assign(g.num_vertices(), Num(0));
        for (auto it = order_.rbegin(); it != order_.rend(); ++it)
            for (ArcId e : out_[*it]) {
                Num c = dur_[e][budget] + tail_[g.arcs[e].head];
                if (c > tail_[*it]) tail_[*it] = c;
            }
        flow_.assign(m, 0);
        inflow_.assign(g.num_vertices(), 0);
        time_.assign(g.num_vertices(), Num(0));
    }

    Num run(std::vector<std::int64_t>& witness, std::uint64_t& nodes) {
        // zero flow is always feasible and seeds the bound
        best_ = zero_flow_makespan();
        best_flow_ = flow_;
        if (best_ > tail_[g_.source]) visit(0);
        witness = best_flow_;
        nodes = nodes_;
        return best_;
    }

private:
    Num zero_flow_makespan() const {
        std::vector<Num> t(g_.num_vertices(), Num(0));
        for (VertexId v : order_)
            for (ArcId e : out_[v]) {
                Num c = t[v] + dur_[e][0];
                if (c > t[g_.arcs[e].head]) t[g_.arcs[e].head] = c;
            }
        return t[g_.sink];
    }

    void visit(std::size_t k) {
        ++nodes_;
        if (k == order_.size()) {
            if (time_[g_.sink] < best_) {
                best_ = time_[g_.sink];
                best_flow_ = flow_;
                // nothing can beat the full-budget critical path
                if (best_ <= tail_[g_.source]) done_ = true;
            }
            return;
        }
        VertexId v = order_[k];
        if (time_[v] + tail_[v] >= best_) return;
        // A state is the settled prefix length plus times and inflows of the
        // unsettled vertices. Once explored, nothing below it can beat the
        // best found by then, and best_ only decreases.
        std::string key;
        bool memo = false;
        if constexpr (std::is_same_v<Num, std::int64_t>) {
            // branching vertices only; elsewhere the next state is forced
            memo = out_[v].size() > 1;
            if (memo) {
                key.reserve((order_.size() - k) * 16 + 8);
                auto put = [&key](std::int64_t x) { key.append(reinterpret_cast<const char*>(&x), sizeof x); };
                put(static_cast<std::int64_t>(k));
                for (std::size_t i = k; i < order_.size(); ++i) {
                    put(time_[order_[i]]);
                    put(inflow_[order_[i]]);
                }
                if (seen_.count(key)) return;
            }
        }
        if (out_[v].empty()) {
            visit(k + 1);
            return;
        }
        if (v == g_.source) {
            for (std::int64_t total = budget_; total >= 0 && !done_; --total) split(k, v, 0, total);
        } else {
            split(k, v, 0, inflow_[v]);
        }
        if (memo && !done_ && seen_.size() < kMaxStates) seen_.insert(std::move(key));
    }

    void split(std::size_t k, VertexId v, std::size_t idx, std::int64_t remaining) {
        const auto& outs = out_[v];
        ArcId e = outs[idx];
        VertexId h = g_.arcs[e].head;
        bool last = idx + 1 == outs.size();
        std::int64_t lo = last ? remaining : 0;
        for (std::int64_t f = remaining; f >= lo && !done_; --f) {
            Num cand = time_[v] + dur_[e][f];
            if (cand + tail_[h] >= best_) continue;
            Num saved = time_[h];
            if (cand > time_[h]) time_[h] = cand;
            flow_[e] = f;
            inflow_[h] += f;
            if (last) visit(k + 1);
            else split(k, v, idx + 1, remaining - f);
            inflow_[h] -= f;
            flow_[e] = 0;
            time_[h] = saved;
        }
    }

    const Instance& g_;
    std::int64_t budget_;
    const std::vector<std::vector<Num>>& dur_;
    std::vector<VertexId> order_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<Num> tail_;
    std::vector<std::int64_t> flow_, inflow_;
    std::vector<Num> time_;
    Num best_;
    std::vector<std::int64_t> best_flow_;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
    static constexpr std::size_t kMaxStates = 4000000;
    std::unordered_set<std::string> seen_;
};

void guard(const Instance& g, std::int64_t budget, const OracleLimits& limits) {
    if (g.form == Form::NodeJobs) throw std::invalid_argument("oracle expects an arc-form instance");
    if (budget < 0) throw std::invalid_argument("negative budget");
    if (g.num_arcs() > limits.max_arcs || budget > limits.max_budget)
        throw SizeGuardExceeded("oracle size guard: " + std::to_string(g.num_arcs()) + " arcs, budget " +
                                std::to_string(budget) + " (limits " + std::to_string(limits.max_arcs) + " arcs, budget " +
                                std::to_string(limits.max_budget) + ")");
    validate_instance(g);
}

}  // namespace

OracleResult brute_min_makespan(const Instance& g, std::int64_t budget, const OracleLimits& limits) {
    guard(g, budget, limits);
    std::size_t m = g.num_arcs();
    std::vector<std::vector<Rational>> dur(m, std::vector<Rational>(budget + 1));
    mpz_class den = 1, top = 0;
    for (std::size_t e = 0; e < m; ++e)
        for (std::int64_t f = 0; f <= budget; ++f) {
            dur[e][f] = job_duration(g.arcs[e].job, f);
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dur[e][f].get_den_mpz_t());
            top += dur[e][f];
        }
    OracleResult r;
    std::vector<std::int64_t> witness;
    // any path sum stays below the total of all durations
    mpz_class bound = top * den + 1;
    if (mpz_fits_slong_p(bound.get_mpz_t())) {
        std::vector<std::vector<std::int64_t>> scaled(m, std::vector<std::int64_t>(budget + 1));
        for (std::size_t e = 0; e < m; ++e)
            for (std::int64_t f = 0; f <= budget; ++f) {
                mpz_class q = dur[e][f].get_num() * (den / dur[e][f].get_den());
                scaled[e][f] = q.get_si();
            }
        std::int64_t best = Search<std::int64_t>(g, budget, scaled).run(witness, r.nodes);
        r.makespan = Rational(mpz_class(best), den);
        r.makespan.canonicalize();
    } else {
        r.makespan = Search<Rational>(g, budget, dur).run(witness, r.nodes);
    }
    for (auto f : witness) r.flow.flow.push_back(make_rational(f));
    return r;
}

std::optional<std::int64_t> brute_min_resource(const Instance& g, const Rational& target, std::int64_t max_budget,
                                               const OracleLimits& limits) {
    guard(g, max_budget, limits);
    for (std::int64_t b = 0; b <= max_budget; ++b)
        if (brute_min_makespan(g, b, limits).makespan <= target) return b;
    return std::nullopt;
}

}  // namespace rtt
