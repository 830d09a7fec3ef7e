#pragma once

#include <vector>

#include "omp/dl/model.hpp"
#include "omp/dl/reasoner.hpp"
#include "omp/just/justify.hpp"

namespace testsupport {

// Reference results computed by scanning all 2^n fluent subsets. The fluent
// vector must already be in engine order (sorted, deduplicated).

std::vector<omp::just::FluentSet> brute_minimal_entailing(
    const omp::dl::Ontology& onto, const std::vector<omp::dl::Axiom>& fluents,
    const omp::dl::Entailment& target);

std::vector<omp::just::FluentSet> brute_just_bottom(
    const omp::dl::Ontology& onto, const std::vector<omp::dl::Axiom>& fluents);

std::vector<omp::just::FluentSet> brute_just_alpha(
    const omp::dl::Ontology& onto, const std::vector<omp::dl::Axiom>& fluents,
    const std::vector<omp::dl::Axiom>& conjuncts);

}  // namespace testsupport
