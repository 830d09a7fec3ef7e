#pragma once

#include <string>

#include "omp/dl/model.hpp"

namespace omp::dl {

// Parses the line-oriented ontology format: one axiom per line, '#' starts a
// comment, blank lines are ignored. Errors cite the offending line number.
Ontology parse_ontology(const std::string& text);

// Parses a single class expression (used by the query interface parser).
ClassExprPtr parse_class_expr(const std::string& text);

}  // namespace omp::dl
