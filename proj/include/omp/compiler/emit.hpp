#pragma once

#include <string>

#include "omp/pddl/model.hpp"

namespace omp::compiler {

// Deterministic pretty-printers; the requirements line is recomputed from
// the constructs actually used. parse(emit(x)) reproduces x structurally.
std::string emit_domain(const pddl::Domain& d);
std::string emit_problem(const pddl::Problem& p);

}  // namespace omp::compiler
