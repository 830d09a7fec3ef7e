#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omp/dl/model.hpp"
#include "omp/dl/reasoner.hpp"
#include "omp/pddl/model.hpp"

namespace omp::iface {

// Partial injective mapping from ground planner atoms to assertions.
// Unary predicates map to class names, binary ones to property names.
struct FluentInterface {
    struct PredicateMap {
        int arity = 1;
        std::string target;
    };

    std::map<std::string, std::string> object_map;  // planner object -> individual
    std::map<std::string, PredicateMap> predicate_map;

    bool maps_predicate(const std::string& pred, int arity) const;
    // nullopt when the atom lies outside the mapping's domain
    std::optional<dl::Axiom> map_atom(const pddl::Atom& a) const;
    // the inverse mapping, defined exactly on the image
    std::optional<pddl::Atom> unmap(const dl::Axiom& ax) const;
};

// Lines: "OBJECT <name> -> <individual>", "PREDICATE <name>(_[,_]) -> <target>";
// '#' starts a comment.
FluentInterface parse_fluent_interface(const std::string& text);

// One query predicate: typed variables plus assertion templates that are
// instantiated per legal assignment.
struct QuerySpec {
    struct Template {
        enum class Kind { Class, Property };
        Kind kind = Kind::Class;
        dl::ClassExprPtr expr;  // Class
        std::string var;     // Class: term the expression is asserted about
        std::string subject, role, object;  // Property
    };

    std::string predicate;
    std::vector<std::string> variables;
    std::map<std::string, dl::ClassExprPtr> types;
    std::vector<Template> templates;
};

struct QueryInterface {
    std::vector<QuerySpec> queries;

    const QuerySpec* find(const std::string& predicate) const;
};

// Blocks of "PREDICATE: p / VARIABLES: ?x ... / TYPE_SPECIFICATION: /
// QUERY:" with one typed line per variable and one template per query line.
QueryInterface parse_query_interface(const std::string& text);

using Assignment = std::map<std::string, std::string>;

// All assignments of individuals to the query's variables where each value
// is an instance of the variable's type; deterministic order.
std::vector<Assignment> legal_assignments(const QuerySpec& q,
                                          const dl::Ontology& onto,
                                          const dl::ReasonerLimits& limits = {});

// The assertion set tested for entailment under one assignment.
std::vector<dl::Axiom> instantiate_query(const QuerySpec& q,
                                         const Assignment& th);

// Copy of the ontology with every individual named by it or by the object
// map declared pairwise distinct (the unique-name reading).
dl::Ontology ontology_with_una(const dl::Ontology& onto,
                               const FluentInterface& fluents);

struct OMPlanningSpec {
    pddl::PlanningSpec planning;
    dl::Ontology ontology;
    FluentInterface fluents;
    QueryInterface queries;
};

// Cross-component checks; throws Error("InvalidSpec", ...) on hard
// violations and returns non-fatal diagnostics.
std::vector<std::string> validate_om_spec(const OMPlanningSpec& spec);

}  // namespace omp::iface
