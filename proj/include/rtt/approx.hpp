#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtt/instance.hpp"
#include "rtt/lp.hpp"

namespace rtt {

struct Guarantee {
    Rational resource_factor;  // vs the LP source outflow f*
    Rational makespan_factor;  // vs the LP objective (hence vs OPT)
};

struct ApproxResult {
    Instance instance;                   // the arc-form instance the flow lives on
    std::vector<std::int64_t> allocation;  // per arc; 0 on dummies
    FlowAssignment flow;
    Schedule schedule;
    std::int64_t resource_used = 0;
    Guarantee guarantee;
    Rational lp_objective;  // T*
    Rational lp_flow;       // f*
};

ApproxResult bicriteria_general(const Instance& g, std::int64_t budget, const Rational& alpha);
ApproxResult kway_five_approx(const Instance& g, std::int64_t budget);
ApproxResult binary_four_approx(const Instance& g, std::int64_t budget);
ApproxResult binary_improved_bicriteria(const Instance& g, std::int64_t budget);

// Per-job rules, exposed for testing.
std::int64_t kway_split_choice(std::int64_t r_bar, const Rational& r_star);
std::int64_t binary_halving(std::int64_t r_bar, const Rational& r_star);
std::int64_t binary_power_rounding(const Rational& r, int max_level);

class IncompatibleFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace rtt
