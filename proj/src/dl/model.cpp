#include "omp/dl/model.hpp"

#include <algorithm>
#include <sstream>

#include "omp/error.hpp"

namespace omp::dl {

namespace {

ClassExprPtr make(ExprKind kind, std::string name, std::uint32_t number,
                  std::vector<ClassExprPtr> children) {
    auto e = std::make_shared<ClassExpr>();
    e->kind = kind;
    e->name = std::move(name);
    e->number = number;
    e->children = std::move(children);
    return e;
}

void collect_individuals(const ClassExprPtr& e, std::set<std::string>& out) {
    if (e->kind == ExprKind::OneOf)
        out.insert(e->name);
    for (const auto& c : e->children)
        collect_individuals(c, out);
}

}  // namespace

ClassExprPtr ClassExpr::named(const std::string& name) {
    return make(ExprKind::Named, name, 0, {});
}

ClassExprPtr ClassExpr::top() { return make(ExprKind::Top, "", 0, {}); }

ClassExprPtr ClassExpr::bottom() { return make(ExprKind::Bottom, "", 0, {}); }

ClassExprPtr ClassExpr::negation(ClassExprPtr c) {
    return make(ExprKind::Not, "", 0, {std::move(c)});
}

ClassExprPtr ClassExpr::conjunction(std::vector<ClassExprPtr> cs) {
    if (cs.empty())
        return top();
    if (cs.size() == 1)
        return cs.front();
    return make(ExprKind::And, "", 0, std::move(cs));
}

ClassExprPtr ClassExpr::disjunction(std::vector<ClassExprPtr> cs) {
    if (cs.empty())
        return bottom();
    if (cs.size() == 1)
        return cs.front();
    return make(ExprKind::Or, "", 0, std::move(cs));
}

ClassExprPtr ClassExpr::some(const std::string& role, ClassExprPtr c) {
    return make(ExprKind::Some, role, 0, {std::move(c)});
}

ClassExprPtr ClassExpr::all(const std::string& role, ClassExprPtr c) {
    return make(ExprKind::All, role, 0, {std::move(c)});
}

ClassExprPtr ClassExpr::at_least(std::uint32_t n, const std::string& role, ClassExprPtr c) {
    return make(ExprKind::AtLeast, role, n, {std::move(c)});
}

ClassExprPtr ClassExpr::at_most(std::uint32_t n, const std::string& role, ClassExprPtr c) {
    return make(ExprKind::AtMost, role, n, {std::move(c)});
}

ClassExprPtr ClassExpr::exactly(std::uint32_t n, const std::string& role, ClassExprPtr c) {
    // =n r.C is sugar for (<=n r.C) and (>=n r.C)
    return conjunction({at_most(n, role, c), at_least(n, role, c)});
}

ClassExprPtr ClassExpr::one_of(const std::vector<std::string>& individuals) {
    if (individuals.empty())
        return bottom();
    if (individuals.size() == 1)
        return make(ExprKind::OneOf, individuals.front(), 0, {});
    std::vector<ClassExprPtr> singles;
    for (const auto& a : individuals)
        singles.push_back(make(ExprKind::OneOf, a, 0, {}));
    return disjunction(std::move(singles));
}

std::string ClassExpr::str() const {
    std::ostringstream os;
    switch (kind) {
    case ExprKind::Named:
        os << name;
        break;
    case ExprKind::Top:
        os << "Thing";
        break;
    case ExprKind::Bottom:
        os << "Nothing";
        break;
    case ExprKind::Not:
        os << "Not(" << children[0]->str() << ")";
        break;
    case ExprKind::And:
    case ExprKind::Or:
        os << (kind == ExprKind::And ? "And(" : "Or(");
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i)
                os << ", ";
            os << children[i]->str();
        }
        os << ")";
        break;
    case ExprKind::Some:
        os << "Some(" << name << ", " << children[0]->str() << ")";
        break;
    case ExprKind::All:
        os << "All(" << name << ", " << children[0]->str() << ")";
        break;
    case ExprKind::AtLeast:
        os << "AtLeast(" << number << ", " << name << ", " << children[0]->str() << ")";
        break;
    case ExprKind::AtMost:
        os << "AtMost(" << number << ", " << name << ", " << children[0]->str() << ")";
        break;
    case ExprKind::OneOf:
        os << "OneOf(" << name << ")";
        break;
    }
    return os.str();
}

bool expr_equal(const ClassExprPtr& a, const ClassExprPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->str() == b->str();
}

Axiom Axiom::sub_class_of(ClassExprPtr sub, ClassExprPtr sup) {
    Axiom a;
    a.kind = AxiomKind::SubClassOf;
    a.exprs = {std::move(sub), std::move(sup)};
    return a;
}

Axiom Axiom::equivalent_classes(ClassExprPtr lhs, ClassExprPtr rhs) {
    Axiom a;
    a.kind = AxiomKind::EquivalentClasses;
    a.exprs = {std::move(lhs), std::move(rhs)};
    return a;
}

Axiom Axiom::disjoint_classes(ClassExprPtr lhs, ClassExprPtr rhs) {
    Axiom a;
    a.kind = AxiomKind::DisjointClasses;
    a.exprs = {std::move(lhs), std::move(rhs)};
    return a;
}

Axiom Axiom::class_assertion(const std::string& individual, ClassExprPtr c) {
    Axiom a;
    a.kind = AxiomKind::ClassAssertion;
    a.individuals = {individual};
    a.exprs = {std::move(c)};
    return a;
}

Axiom Axiom::property_assertion(const std::string& subject, const std::string& role,
                                const std::string& object) {
    Axiom a;
    a.kind = AxiomKind::PropertyAssertion;
    a.individuals = {subject, object};
    a.role = role;
    return a;
}

Axiom Axiom::different_individuals(std::vector<std::string> members) {
    Axiom a;
    a.kind = AxiomKind::DifferentIndividuals;
    a.individuals = std::move(members);
    return a;
}

std::string Axiom::str() const {
    std::ostringstream os;
    switch (kind) {
    case AxiomKind::SubClassOf:
        os << "SubClassOf(" << exprs[0]->str() << ", " << exprs[1]->str() << ")";
        break;
    case AxiomKind::EquivalentClasses:
        os << "EquivalentClasses(" << exprs[0]->str() << ", " << exprs[1]->str() << ")";
        break;
    case AxiomKind::DisjointClasses:
        os << "DisjointClasses(" << exprs[0]->str() << ", " << exprs[1]->str() << ")";
        break;
    case AxiomKind::ClassAssertion:
        os << "ClassAssertion(" << individuals[0] << ", " << exprs[0]->str() << ")";
        break;
    case AxiomKind::PropertyAssertion:
        os << "PropertyAssertion(" << individuals[0] << ", " << role << ", " << individuals[1]
           << ")";
        break;
    case AxiomKind::DifferentIndividuals:
        os << "DifferentIndividuals(";
        for (std::size_t i = 0; i < individuals.size(); ++i) {
            if (i)
                os << ", ";
            os << individuals[i];
        }
        os << ")";
        break;
    }
    return os.str();
}

bool operator==(const Axiom& a, const Axiom& b) { return a.str() == b.str(); }

bool operator<(const Axiom& a, const Axiom& b) { return a.str() < b.str(); }

std::vector<Axiom> normalize(const Axiom& axiom) {
    switch (axiom.kind) {
    case AxiomKind::EquivalentClasses:
        return {Axiom::sub_class_of(axiom.exprs[0], axiom.exprs[1]),
                Axiom::sub_class_of(axiom.exprs[1], axiom.exprs[0])};
    case AxiomKind::DisjointClasses:
        return {Axiom::sub_class_of(ClassExpr::conjunction({axiom.exprs[0], axiom.exprs[1]}),
                                    ClassExpr::bottom())};
    case AxiomKind::DifferentIndividuals: {
        if (axiom.individuals.size() < 2)
            throw Error("SyntaxError", "DifferentIndividuals needs at least two individuals");
        std::vector<Axiom> out;
        for (std::size_t i = 0; i < axiom.individuals.size(); ++i)
            for (std::size_t j = i + 1; j < axiom.individuals.size(); ++j)
                out.push_back(Axiom::different_individuals(
                    {axiom.individuals[i], axiom.individuals[j]}));
        return out;
    }
    default:
        return {axiom};
    }
}

Ontology::Ontology(const std::vector<Axiom>& axioms) { add_all(axioms); }

void Ontology::add(const Axiom& axiom) {
    for (const Axiom& n : normalize(axiom)) {
        auto key = n.str();
        if (!keys_.insert(key).second)
            continue;
        axioms_.push_back(n);
        for (const auto& ind : n.individuals)
            individuals_.insert(ind);
        for (const auto& e : n.exprs)
            collect_individuals(e, individuals_);
    }
}

void Ontology::add_all(const std::vector<Axiom>& axioms) {
    for (const auto& a : axioms)
        add(a);
}

bool Ontology::contains(const Axiom& axiom) const { return keys_.count(axiom.str()) > 0; }

std::string Ontology::str() const {
    std::ostringstream os;
    for (const auto& a : axioms_)
        os << a.str() << "\n";
    return os.str();
}

Entailment Entailment::bottom() {
    Entailment e;
    e.inconsistency = true;
    return e;
}

Entailment Entailment::assertion(Axiom a) {
    if (a.kind != AxiomKind::ClassAssertion && a.kind != AxiomKind::PropertyAssertion)
        throw Error("InternalError", "entailment target must be an ABox assertion");
    Entailment e;
    e.target = std::move(a);
    return e;
}

std::string Entailment::str() const {
    return inconsistency ? "Inconsistency" : target.str();
}

bool operator==(const Entailment& a, const Entailment& b) { return a.str() == b.str(); }

bool operator<(const Entailment& a, const Entailment& b) { return a.str() < b.str(); }

}  // namespace omp::dl
