#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace omp::pddl {

// Terms are plain strings; a leading '?' marks a variable.
bool is_variable(const std::string& term);

struct Atom {
    std::string pred;
    std::vector<std::string> args;

    std::string str() const;  // "(pred a b)"
    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

enum class FormulaKind { Atom, Equal, Not, And, Or, Exists, Forall };

struct Formula {
    FormulaKind kind = FormulaKind::And;
    Atom atom;                        // Atom
    std::string lhs, rhs;             // Equal
    std::vector<std::string> params;  // Exists, Forall
    std::vector<Formula> children;    // Not/Exists/Forall hold one child

    static Formula make_atom(Atom a);
    static Formula equal(std::string l, std::string r);
    static Formula negation(Formula f);
    static Formula conjunction(std::vector<Formula> fs);
    static Formula disjunction(std::vector<Formula> fs);
    static Formula exists(std::vector<std::string> vars, Formula f);
    static Formula forall(std::vector<std::string> vars, Formula f);

    std::string str() const;
};

std::set<std::string> free_variables(const Formula& f);

struct ActionSchema {
    std::string name;
    std::vector<std::string> params;
    Formula precond = Formula::conjunction({});
    std::vector<Atom> add, del;
};

// Head arguments may mix variables and constants.
struct DerivationRule {
    Atom head;
    Formula body;
};

struct PredicateDecl {
    std::string name;
    int arity = 0;
};

struct Domain {
    std::string name;
    std::vector<PredicateDecl> predicates;
    std::vector<std::string> constants;
    std::vector<ActionSchema> actions;
    std::vector<DerivationRule> rules;

    const PredicateDecl* find_predicate(const std::string& pred) const;
    const ActionSchema* find_action(const std::string& action) const;
    std::set<std::string> derived_predicates() const;
};

using State = std::set<Atom>;

struct Problem {
    std::string name;
    std::string domain_name;
    std::vector<std::string> objects;
    State init;
    Formula goal = Formula::conjunction({});
};

struct PlanningSpec {
    Domain domain;
    Problem problem;

    // constants followed by objects, first occurrence wins
    std::vector<std::string> universe() const;
};

using Bindings = std::map<std::string, std::string>;

Atom substitute(const Atom& a, const Bindings& b);
Formula substitute(const Formula& f, const Bindings& b);

// Closed-world evaluation; every free variable of f must be bound in b.
bool eval_formula(const Formula& f, const State& state,
                  const std::vector<std::string>& universe, Bindings& b);

// Least fixpoint of the derivation rules over the base state.
State derivation_closure(const Domain& domain,
                         const std::vector<std::string>& universe,
                         const State& base);

struct GroundAction {
    std::string name;
    std::vector<std::string> args;
    Formula precond;
    std::vector<Atom> add, del;

    std::string str() const;  // "(name a b)"
};

GroundAction ground_action(const ActionSchema& schema,
                           const std::vector<std::string>& args);

// `state` must already be closed under the derivation rules.
bool is_applicable(const GroundAction& action, const State& state,
                   const std::vector<std::string>& universe);

// (base \ del) then add; operates on base fluents only
State apply_action(const State& base, const GroundAction& action);

struct PlanStep {
    std::string name;
    std::vector<std::string> args;

    std::string str() const;
    bool operator==(const PlanStep&) const = default;
};

// Structural well-formedness; throws Error("InvalidSpec", ...) on violation.
void validate_spec(const PlanningSpec& spec);

// nullopt when the plan reaches the goal, otherwise a failure description
std::optional<std::string> validate_plan(const PlanningSpec& spec,
                                         const std::vector<PlanStep>& plan);

}  // namespace omp::pddl
