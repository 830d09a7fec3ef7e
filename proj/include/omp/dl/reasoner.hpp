#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omp/dl/model.hpp"

namespace omp::dl {

struct ReasonerLimits {
    std::uint64_t node_budget = 1000000;  // tableau work units per call
};

// Sound, complete and terminating tableau decision procedure for the
// supported fragment. Deterministic: identical inputs explore identical
// search trees. Exceeding the node budget raises Error("ResourceLimit").
bool is_consistent(const Ontology& onto, const ReasonerLimits& limits = {});

// Entailment by reduction to inconsistency:
//   O |= a:C      iff  O + {a: Not(C)} is inconsistent
//   O |= r(a, b)  iff  O + {a: All(r, Not(OneOf(b)))} is inconsistent
//   O |= bottom   iff  O is inconsistent
bool entails(const Ontology& onto, const Entailment& target, const ReasonerLimits& limits = {});

// All named individuals a of the ontology with O |= a:C, sorted.
std::vector<std::string> instances(const Ontology& onto, const ClassExprPtr& c,
                                   const ReasonerLimits& limits = {});

}  // namespace omp::dl
