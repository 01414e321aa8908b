#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rtt/rational.hpp"

namespace rtt {

struct ResourceTimeTuple {
    std::int64_t resource = 0;
    Rational time;

    bool operator==(const ResourceTimeTuple&) const = default;
};

// Non-increasing step function given by its breakpoints. The constructor
// enforces: first resource is 0, resources strictly increase, times never increase.
class StepList {
public:
    StepList() = default;
    explicit StepList(std::vector<ResourceTimeTuple> tuples);

    const std::vector<ResourceTimeTuple>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size(); }
    const ResourceTimeTuple& operator[](std::size_t i) const { return tuples_[i]; }

    bool operator==(const StepList&) const = default;

private:
    std::vector<ResourceTimeTuple> tuples_;
};

// ceil(d/k) + k for 2 <= k <= floor(sqrt d), t(0) = t(1) = d.
struct KWay {
    std::int64_t base = 1;
    bool operator==(const KWay&) const = default;
};

// ceil(d/2^j) + j + 1 at r = 2^j, 1 <= j <= k, k = floor(log2 d - log2 log2 e).
struct RecursiveBinary {
    std::int64_t base = 1;
    bool operator==(const RecursiveBinary&) const = default;
};

using DurationFunction = std::variant<StepList, KWay, RecursiveBinary>;

StepList step(std::initializer_list<std::pair<std::int64_t, std::int64_t>> tuples);

// Throws std::invalid_argument if a KWay/RecursiveBinary base is < 1.
void check_duration(const DurationFunction& f);

Rational eval_duration(const DurationFunction& f, std::int64_t r);
// Fractional flows act like their floor on a step function.
Rational eval_duration(const DurationFunction& f, const Rational& r);

Rational zero_resource_time(const DurationFunction& f);

// Exact breakpoint list of any variant.
StepList materialize(const DurationFunction& f);

std::int64_t kway_max_split(std::int64_t base);     // floor(sqrt base)
int binary_max_level(std::int64_t base);             // k, may be negative for tiny bases
std::int64_t reducer_time(std::int64_t n, int h);

}  // namespace rtt
