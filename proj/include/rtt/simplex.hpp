#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rtt::simplex {

enum class Sense { Le, Ge, Eq };

struct Row {
    std::vector<std::pair<int, double>> coeffs;
    Sense sense = Sense::Le;
    double rhs = 0;
};

struct Problem {
    int num_vars = 0;
    std::vector<Row> rows;
    std::vector<double> cost;  // minimize cost . x, x >= 0
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
    Status status = Status::Optimal;
    std::vector<double> x;
    double objective = 0;
    long pivots = 0;
};

// Dense two-phase tableau simplex. Pricing is Dantzig's rule with lowest index
// on ties; after a run of degenerate pivots it switches to Bland's rule until
// the objective moves again, so the pivot sequence is a pure function of the input.
Result solve(const Problem& p, double eps = 1e-9);

}  // namespace rtt::simplex
