#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace omp::dl {

// Class expressions form an immutable tree. "Exactly" and multi-member
// "OneOf" are expanded by the factory functions, so downstream code only
// ever sees the kinds listed here, with OneOf carrying a single individual.
enum class ExprKind {
    Named,
    Top,
    Bottom,
    Not,
    And,
    Or,
    Some,
    All,
    AtLeast,
    AtMost,
    OneOf,
};

class ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

class ClassExpr {
public:
    ExprKind kind;
    std::string name;                  // Named: class name; quantifiers: role name; OneOf: individual
    std::uint32_t number = 0;          // cardinality bound for AtLeast/AtMost
    std::vector<ClassExprPtr> children;

    static ClassExprPtr named(const std::string& name);
    static ClassExprPtr top();
    static ClassExprPtr bottom();
    static ClassExprPtr negation(ClassExprPtr c);
    static ClassExprPtr conjunction(std::vector<ClassExprPtr> cs);
    static ClassExprPtr disjunction(std::vector<ClassExprPtr> cs);
    static ClassExprPtr some(const std::string& role, ClassExprPtr c);
    static ClassExprPtr all(const std::string& role, ClassExprPtr c);
    static ClassExprPtr at_least(std::uint32_t n, const std::string& role, ClassExprPtr c);
    static ClassExprPtr at_most(std::uint32_t n, const std::string& role, ClassExprPtr c);
    static ClassExprPtr exactly(std::uint32_t n, const std::string& role, ClassExprPtr c);
    static ClassExprPtr one_of(const std::vector<std::string>& individuals);

    std::string str() const;
};

bool expr_equal(const ClassExprPtr& a, const ClassExprPtr& b);

enum class AxiomKind {
    SubClassOf,
    EquivalentClasses,
    DisjointClasses,
    ClassAssertion,
    PropertyAssertion,
    DifferentIndividuals,
};

struct Axiom {
    AxiomKind kind;
    std::vector<ClassExprPtr> exprs;      // SubClassOf et al: [lhs, rhs]; ClassAssertion: [expr]
    std::vector<std::string> individuals; // ClassAssertion: [a]; PropertyAssertion: [a, b]; DifferentIndividuals: members
    std::string role;                     // PropertyAssertion only

    static Axiom sub_class_of(ClassExprPtr sub, ClassExprPtr sup);
    static Axiom equivalent_classes(ClassExprPtr a, ClassExprPtr b);
    static Axiom disjoint_classes(ClassExprPtr a, ClassExprPtr b);
    static Axiom class_assertion(const std::string& individual, ClassExprPtr c);
    static Axiom property_assertion(const std::string& subject, const std::string& role,
                                    const std::string& object);
    static Axiom different_individuals(std::vector<std::string> members);

    std::string str() const;
};

bool operator==(const Axiom& a, const Axiom& b);
bool operator<(const Axiom& a, const Axiom& b);

// Expands syntactic sugar: EquivalentClasses becomes two SubClassOf axioms,
// DisjointClasses(C, D) becomes SubClassOf(And(C, D), Nothing), and n-ary
// DifferentIndividuals becomes its pairwise binary axioms.
std::vector<Axiom> normalize(const Axiom& axiom);

class Ontology {
public:
    Ontology() = default;
    explicit Ontology(const std::vector<Axiom>& axioms);

    void add(const Axiom& axiom);
    void add_all(const std::vector<Axiom>& axioms);

    const std::vector<Axiom>& axioms() const { return axioms_; }
    const std::set<std::string>& individuals() const { return individuals_; }
    bool contains(const Axiom& axiom) const;
    std::size_t size() const { return axioms_.size(); }
    std::string str() const;

private:
    std::vector<Axiom> axioms_;          // normalized, deduplicated, insertion order
    std::set<std::string> keys_;
    std::set<std::string> individuals_;  // every individual syntactically present
};

// Entailment targets: an ABox assertion or outright inconsistency of the ontology.
struct Entailment {
    bool inconsistency = false;
    Axiom target{};

    static Entailment bottom();
    static Entailment assertion(Axiom a);

    std::string str() const;
};

bool operator==(const Entailment& a, const Entailment& b);
bool operator<(const Entailment& a, const Entailment& b);

}  // namespace omp::dl
