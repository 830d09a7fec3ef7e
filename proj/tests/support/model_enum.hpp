#pragma once

#include <cstdint>

#include "omp/dl/model.hpp"

namespace testsupport {

// Complete bounded-model search, written independently of the tableau code.
// Decides whether the ontology has a model whose domain holds at most
// `max_universe` elements, by exhaustive search with three-valued pruning
// over class memberships, role edges and individual identifications.
bool has_model(const omp::dl::Ontology& onto, int max_universe,
               std::uint64_t step_budget = 20000000);

// Entailment through the same reduction the reasoner documents:
// the target is entailed iff the ontology extended with its negation has no
// model. Only complete when counter-models of at most `max_universe`
// elements exist; test cases are sized accordingly.
bool enum_entails(const omp::dl::Ontology& onto, const omp::dl::Entailment& target,
                  int max_universe, std::uint64_t step_budget = 20000000);

}  // namespace testsupport
