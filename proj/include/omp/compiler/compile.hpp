#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omp/iface/interface.hpp"
#include "omp/just/justify.hpp"
#include "omp/pddl/model.hpp"

namespace omp::compiler {

struct CompileOptions {
    bool block_inconsistent = false;  // conjoin (not (inconsistent)) to preconditions
    bool variable_rules = false;      // one variable-headed rule per query predicate
    bool simplify = false;            // collapse trivial connectives, drop subsumed disjuncts
    bool una = false;                 // assert all named individuals pairwise distinct
    int jobs = 1;                     // worker threads for the per-assignment solves
    just::JustifyLimits limits;
};

struct CompileReport {
    std::size_t fluent_count = 0;
    std::size_t bottom_justifications = 0;
    std::size_t assignments = 0;
    std::size_t justification_sets = 0;
    std::size_t rules_emitted = 0;
    std::uint64_t entailment_checks = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t hst_nodes = 0;
    double wall_ms = 0.0;
    std::vector<std::string> diagnostics;
};

struct CompileResult {
    pddl::PlanningSpec spec;
    CompileReport report;
};

// Translates the ontology-mediated spec into a classical spec whose
// derivation rules derive each query atom exactly on the states where the
// mapped state entails the instantiated query, with the reserved predicate
// `inconsistent` marking states whose mapped image contradicts the ontology.
CompileResult compile(const iface::OMPlanningSpec& spec,
                      const CompileOptions& opts = {});

}  // namespace omp::compiler
