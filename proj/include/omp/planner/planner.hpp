#pragma once

#include <cstddef>
#include <vector>

#include "omp/pddl/model.hpp"

namespace omp::planner {

struct SolveLimits {
    std::size_t max_nodes = 1000000;  // stored search nodes
    double time_limit_s = 0.0;        // 0 disables the wall-clock check
};

enum class SolveStatus { Found, Unsolvable, ResourceLimit };

struct SolveStats {
    std::size_t expanded = 0;
    std::size_t generated = 0;
    std::size_t duplicates = 0;
    double wall_ms = 0.0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unsolvable;
    std::vector<pddl::PlanStep> plan;  // empty unless status == Found
    SolveStats stats;
};

// Every binding of every schema over the problem's objects, sorted by
// action name and then argument tuple.
std::vector<pddl::GroundAction> grounded_actions(const pddl::PlanningSpec& spec);

// Breadth-first search with duplicate detection on the base-atom state.
// Returns a shortest plan by action count; deterministic: successors are
// generated in grounded_actions order and expanded FIFO.
SolveResult solve(const pddl::PlanningSpec& spec, const SolveLimits& limits = {});

}  // namespace omp::planner
