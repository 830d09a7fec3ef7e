#include "omp/compiler/emit.hpp"

#include <sstream>

namespace omp::compiler {

namespace {

using pddl::Formula;
using pddl::FormulaKind;

struct Features {
    bool equality = false;
    bool negative = false;
    bool disjunctive = false;
    bool existential = false;
    bool universal = false;
};

void scan(const Formula& f, Features& feat, bool in_precond) {
    switch (f.kind) {
        case FormulaKind::Equal:
            feat.equality = true;
            break;
        case FormulaKind::Not:
            feat.negative = true;
            break;
        case FormulaKind::Or:
            if (in_precond)
                feat.disjunctive = true;
            break;
        case FormulaKind::Exists:
            feat.existential = true;
            break;
        case FormulaKind::Forall:
            feat.universal = true;
            break;
        default:
            break;
    }
    for (const auto& c : f.children)
        scan(c, feat, in_precond);
}

std::string requirements_line(const pddl::Domain& d) {
    Features feat;
    for (const auto& a : d.actions)
        scan(a.precond, feat, true);
    for (const auto& r : d.rules)
        scan(r.body, feat, false);
    std::string out = "  (:requirements :strips";
    if (feat.equality)
        out += " :equality";
    if (feat.negative)
        out += " :negative-preconditions";
    if (feat.disjunctive)
        out += " :disjunctive-preconditions";
    if (feat.existential)
        out += " :existential-preconditions";
    if (feat.universal)
        out += " :universal-preconditions";
    if (!d.rules.empty())
        out += " :derived-predicates";
    return out + ")\n";
}

// disjunctive rule bodies get one disjunct per line; everything else stays
// on a single line
std::string body_lines(const Formula& body, const std::string& lead) {
    if (body.kind != FormulaKind::Or || body.children.size() < 2)
        return lead + body.str();
    std::string out = lead + "(or " + body.children[0].str();
    std::string cont(lead.size() + 4, ' ');
    for (std::size_t i = 1; i < body.children.size(); ++i)
        out += "\n" + cont + body.children[i].str();
    return out + ")";
}

std::string effect_str(const pddl::ActionSchema& a) {
    std::vector<std::string> lits;
    for (const auto& atom : a.add)
        lits.push_back(atom.str());
    for (const auto& atom : a.del)
        lits.push_back("(not " + atom.str() + ")");
    if (lits.size() == 1)
        return lits[0];
    std::string out = "(and";
    for (const auto& l : lits)
        out += " " + l;
    return out + ")";
}

}  // namespace

std::string emit_domain(const pddl::Domain& d) {
    std::ostringstream os;
    os << "(define (domain " << d.name << ")\n";
    os << requirements_line(d);
    if (!d.constants.empty()) {
        os << "  (:constants";
        for (const auto& c : d.constants)
            os << " " << c;
        os << ")\n";
    }
    os << "  (:predicates";
    for (const auto& p : d.predicates) {
        os << "\n    (" << p.name;
        for (int i = 0; i < p.arity; ++i)
            os << " ?x" << i + 1;
        os << ")";
    }
    os << ")\n";
    for (const auto& a : d.actions) {
        os << "  (:action " << a.name << "\n";
        os << "    :parameters (";
        for (std::size_t i = 0; i < a.params.size(); ++i)
            os << (i ? " " : "") << a.params[i];
        os << ")\n";
        os << "    :precondition " << a.precond.str() << "\n";
        os << "    :effect " << effect_str(a) << ")\n";
    }
    for (const auto& r : d.rules) {
        os << "  (:derived " << r.head.str() << "\n";
        os << body_lines(r.body, "    ") << ")\n";
    }
    os << ")\n";
    return os.str();
}

std::string emit_problem(const pddl::Problem& p) {
    std::ostringstream os;
    os << "(define (problem " << p.name << ")\n";
    os << "  (:domain " << p.domain_name << ")\n";
    os << "  (:objects";
    for (const auto& o : p.objects)
        os << " " << o;
    os << ")\n";
    os << "  (:init";
    for (const auto& a : p.init)
        os << "\n    " << a.str();
    os << ")\n";
    os << "  (:goal " << p.goal.str() << ")\n";
    os << ")\n";
    return os.str();
}

}  // namespace omp::compiler
