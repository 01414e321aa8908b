#include "rtt/duration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rtt {

StepList::StepList(std::vector<ResourceTimeTuple> tuples) : tuples_(std::move(tuples)) {
    if (tuples_.empty()) throw std::invalid_argument("step list needs at least one tuple");
    if (tuples_.front().resource != 0)
        throw std::invalid_argument("first tuple must have resource 0");
    for (std::size_t i = 0; i < tuples_.size(); ++i) {
        if (tuples_[i].time < 0) throw std::invalid_argument("negative duration in step list");
        if (i == 0) continue;
        if (tuples_[i].resource <= tuples_[i - 1].resource)
            throw std::invalid_argument("step list resources must strictly increase");
        if (tuples_[i].time > tuples_[i - 1].time)
            throw std::invalid_argument("step list times must not increase");
    }
}

StepList step(std::initializer_list<std::pair<std::int64_t, std::int64_t>> tuples) {
    std::vector<ResourceTimeTuple> out;
    for (auto [r, t] : tuples) out.push_back({r, make_rational(t)});
    return StepList(std::move(out));
}

void check_duration(const DurationFunction& f) {
    if (auto* k = std::get_if<KWay>(&f); k && k->base < 1)
        throw std::invalid_argument("kway base must be >= 1, got " + std::to_string(k->base));
    if (auto* b = std::get_if<RecursiveBinary>(&f); b && b->base < 1)
        throw std::invalid_argument("binary base must be >= 1, got " + std::to_string(b->base));
}

std::int64_t kway_max_split(std::int64_t base) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(base)));
    while (s * s > base) --s;
    while ((s + 1) * (s + 1) <= base) ++s;
    return s;
}

int binary_max_level(std::int64_t base) {
    // log2(log2(e)) = 0.528766...; log2(base) - c is never an integer for integral base.
    const double c = std::log2(std::log2(std::exp(1.0)));
    return static_cast<int>(std::floor(std::log2(static_cast<double>(base)) - c));
}

std::int64_t reducer_time(std::int64_t n, int h) {
    if (n < 1) throw std::invalid_argument("reducer_time needs n >= 1");
    if (h < 0 || h > 62) throw std::invalid_argument("reducer height out of range");
    std::int64_t p = std::int64_t{1} << h;
    return (n + p - 1) / p + h + 1;
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

StepList kway_breakpoints(std::int64_t d) {
    std::vector<ResourceTimeTuple> out{{0, make_rational(d)}};
    Rational best = make_rational(d);
    for (std::int64_t k = 2; k <= kway_max_split(d); ++k) {
        Rational t = make_rational(ceil_div(d, k) + k);
        if (t < best) best = t;
        out.push_back({k, best});
    }
    return StepList(std::move(out));
}

// Breakpoint times take the running minimum: for base 3 the formula gives
// t_1 = 4 > t(0), and a job can always leave a unit idle.
StepList binary_breakpoints(std::int64_t d) {
    std::vector<ResourceTimeTuple> out{{0, make_rational(d)}};
    Rational best = make_rational(d);
    int k = binary_max_level(d);
    for (int j = 1; j <= k; ++j) {
        std::int64_t p = std::int64_t{1} << j;
        Rational t = make_rational(ceil_div(d, p) + j + 1);
        if (t < best) best = t;
        out.push_back({p, best});
    }
    return StepList(std::move(out));
}

Rational step_eval(const StepList& s, std::int64_t r) {
    const auto& t = s.tuples();
    std::size_t lo = 0, hi = t.size();
    // largest index with resource <= r
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        if (t[mid].resource <= r) lo = mid;
        else hi = mid;
    }
    return t[lo].time;
}

}  // namespace

StepList materialize(const DurationFunction& f) {
    check_duration(f);
    if (auto* s = std::get_if<StepList>(&f)) return *s;
    if (auto* k = std::get_if<KWay>(&f)) return kway_breakpoints(k->base);
    return binary_breakpoints(std::get<RecursiveBinary>(f).base);
}

Rational eval_duration(const DurationFunction& f, std::int64_t r) {
    if (r < 0) throw std::invalid_argument("negative resource");
    if (auto* s = std::get_if<StepList>(&f)) return step_eval(*s, r);
    if (auto* k = std::get_if<KWay>(&f)) {
        std::int64_t d = k->base;
        std::int64_t cap = kway_max_split(d);
        std::int64_t best = d;
        // non-increasing already for 2 <= k <= sqrt d, the loop keeps it obvious
        for (std::int64_t i = 2; i <= std::min(r, cap); ++i) best = std::min(best, ceil_div(d, i) + i);
        return make_rational(best);
    }
    std::int64_t d = std::get<RecursiveBinary>(f).base;
    int k = binary_max_level(d);
    std::int64_t best = d;
    for (int j = 1; j <= k && (std::int64_t{1} << j) <= r; ++j)
        best = std::min(best, ceil_div(d, std::int64_t{1} << j) + j + 1);
    return make_rational(best);
}

Rational eval_duration(const DurationFunction& f, const Rational& r) {
    if (r < 0) throw std::invalid_argument("negative resource");
    return eval_duration(f, floor_to_int(r));
}

Rational zero_resource_time(const DurationFunction& f) { return eval_duration(f, std::int64_t{0}); }

}  // namespace rtt
