#pragma once

#include <string>
#include <vector>

#include "omp/pddl/model.hpp"

namespace omp::pddl {

// Keywords are matched case-insensitively; identifiers keep their case.
// Throws Error("SyntaxError", ...) or Error("UnsupportedFeature", ...),
// both with line numbers.
Domain parse_domain(const std::string& text);
Problem parse_problem(const std::string& text);

// One "(name arg1 arg2)" step per s-expression; ';' starts a comment.
std::vector<PlanStep> parse_plan(const std::string& text);

}  // namespace omp::pddl
