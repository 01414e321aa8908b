#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtt/instance.hpp"

namespace rtt {

struct SpNode {
    enum class Kind { Leaf, Series, Parallel };
    Kind kind = Kind::Leaf;
    int left = -1, right = -1;
    Job job;         // leaves only; empty job = dummy arc
    ArcId arc = -1;  // originating arc, when known
};

struct SpTree {
    std::vector<SpNode> nodes;
    int root = -1;

    int leaf(Job job, ArcId arc = -1);
    int series(int left, int right);
    int parallel(int left, int right);
    std::size_t num_leaves() const;
};

struct DpTable {
    std::vector<std::vector<Rational>> value;  // [node][lambda]
    std::vector<std::vector<int>> split;       // parallel nodes: units given to the left child
};

struct SpSolution {
    Rational makespan;
    DpTable table;
    std::vector<std::int64_t> allocation;  // per node; meaningful on leaves
};

// Series children both see the full lambda: units that finish one part walk on
// into the next, the path-reuse rule. Parallel children split lambda.
SpSolution sp_min_makespan(const SpTree& tree, std::int64_t budget);

// Smallest lambda <= max_budget with T(root, lambda) <= target.
std::optional<std::int64_t> sp_min_resource(const SpTree& tree, const Rational& target, std::int64_t max_budget);

struct SpRecognition {
    std::optional<SpTree> tree;
    std::string reason;  // set on rejection
};

// Two-terminal series/parallel reduction on an arc-form instance.
SpRecognition sp_recognize(const Instance& g);

// Arc-form instance of a tree. leaf_arc[node] is the arc of each leaf, -1 elsewhere.
Instance sp_to_instance(const SpTree& tree, std::vector<ArcId>* leaf_arc = nullptr);

}  // namespace rtt
