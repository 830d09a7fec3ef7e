#include "omp/pddl/model.hpp"

#include <algorithm>
#include <sstream>

#include "omp/error.hpp"

namespace omp::pddl {

bool is_variable(const std::string& term) {
    return !term.empty() && term[0] == '?';
}

std::string Atom::str() const {
    std::string out = "(" + pred;
    for (const auto& a : args)
        out += " " + a;
    return out + ")";
}

Formula Formula::make_atom(Atom a) {
    Formula f;
    f.kind = FormulaKind::Atom;
    f.atom = std::move(a);
    return f;
}

Formula Formula::equal(std::string l, std::string r) {
    Formula f;
    f.kind = FormulaKind::Equal;
    f.lhs = std::move(l);
    f.rhs = std::move(r);
    return f;
}

Formula Formula::negation(Formula inner) {
    Formula f;
    f.kind = FormulaKind::Not;
    f.children.push_back(std::move(inner));
    return f;
}

Formula Formula::conjunction(std::vector<Formula> fs) {
    Formula f;
    f.kind = FormulaKind::And;
    f.children = std::move(fs);
    return f;
}

Formula Formula::disjunction(std::vector<Formula> fs) {
    Formula f;
    f.kind = FormulaKind::Or;
    f.children = std::move(fs);
    return f;
}

Formula Formula::exists(std::vector<std::string> vars, Formula inner) {
    Formula f;
    f.kind = FormulaKind::Exists;
    f.params = std::move(vars);
    f.children.push_back(std::move(inner));
    return f;
}

Formula Formula::forall(std::vector<std::string> vars, Formula inner) {
    Formula f;
    f.kind = FormulaKind::Forall;
    f.params = std::move(vars);
    f.children.push_back(std::move(inner));
    return f;
}

std::string Formula::str() const {
    auto join = [](const std::vector<Formula>& fs) {
        std::string out;
        for (const auto& f : fs)
            out += " " + f.str();
        return out;
    };
    switch (kind) {
        case FormulaKind::Atom:
            return atom.str();
        case FormulaKind::Equal:
            return "(= " + lhs + " " + rhs + ")";
        case FormulaKind::Not:
            return "(not " + children[0].str() + ")";
        case FormulaKind::And:
            return "(and" + join(children) + ")";
        case FormulaKind::Or:
            return "(or" + join(children) + ")";
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            std::string vars;
            for (std::size_t i = 0; i < params.size(); ++i)
                vars += (i ? " " : "") + params[i];
            std::string head = kind == FormulaKind::Exists ? "exists" : "forall";
            return "(" + head + " (" + vars + ") " + children[0].str() + ")";
        }
    }
    return "";
}

namespace {

void collect_free(const Formula& f, std::set<std::string> bound,
                  std::set<std::string>& out) {
    switch (f.kind) {
        case FormulaKind::Atom:
            for (const auto& a : f.atom.args)
                if (is_variable(a) && !bound.count(a))
                    out.insert(a);
            break;
        case FormulaKind::Equal:
            for (const auto& t : {f.lhs, f.rhs})
                if (is_variable(t) && !bound.count(t))
                    out.insert(t);
            break;
        case FormulaKind::Exists:
        case FormulaKind::Forall:
            for (const auto& v : f.params)
                bound.insert(v);
            [[fallthrough]];
        default:
            for (const auto& c : f.children)
                collect_free(c, bound, out);
    }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    collect_free(f, {}, out);
    return out;
}

const PredicateDecl* Domain::find_predicate(const std::string& pred) const {
    for (const auto& p : predicates)
        if (p.name == pred)
            return &p;
    return nullptr;
}

const ActionSchema* Domain::find_action(const std::string& action) const {
    for (const auto& a : actions)
        if (a.name == action)
            return &a;
    return nullptr;
}

std::set<std::string> Domain::derived_predicates() const {
    std::set<std::string> out;
    for (const auto& r : rules)
        out.insert(r.head.pred);
    return out;
}

std::vector<std::string> PlanningSpec::universe() const {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto* list : {&domain.constants, &problem.objects})
        for (const auto& name : *list)
            if (seen.insert(name).second)
                out.push_back(name);
    return out;
}

Atom substitute(const Atom& a, const Bindings& b) {
    Atom out = a;
    for (auto& arg : out.args) {
        auto it = b.find(arg);
        if (it != b.end())
            arg = it->second;
    }
    return out;
}

Formula substitute(const Formula& f, const Bindings& b) {
    Formula out = f;
    switch (f.kind) {
        case FormulaKind::Atom:
            out.atom = substitute(f.atom, b);
            break;
        case FormulaKind::Equal: {
            auto l = b.find(f.lhs);
            auto r = b.find(f.rhs);
            if (l != b.end())
                out.lhs = l->second;
            if (r != b.end())
                out.rhs = r->second;
            break;
        }
        case FormulaKind::Exists:
        case FormulaKind::Forall: {
            Bindings inner = b;  // quantifier shadows outer bindings
            for (const auto& v : f.params)
                inner.erase(v);
            out.children[0] = substitute(f.children[0], inner);
            break;
        }
        default:
            for (std::size_t i = 0; i < f.children.size(); ++i)
                out.children[i] = substitute(f.children[i], b);
    }
    return out;
}

namespace {

std::string resolve(const std::string& term, const Bindings& b) {
    if (!is_variable(term))
        return term;
    auto it = b.find(term);
    if (it == b.end())
        throw Error("InternalError", "unbound variable " + term);
    return it->second;
}

bool eval_quantified(const Formula& f, std::size_t idx, const State& state,
                     const std::vector<std::string>& universe, Bindings& b) {
    if (idx == f.params.size())
        return eval_formula(f.children[0], state, universe, b);
    const std::string& var = f.params[idx];
    auto saved = b.find(var) == b.end() ? std::optional<std::string>{}
                                        : std::optional<std::string>{b[var]};
    bool want_any = f.kind == FormulaKind::Exists;
    bool result = !want_any;
    for (const auto& obj : universe) {
        b[var] = obj;
        bool v = eval_quantified(f, idx + 1, state, universe, b);
        if (v == want_any) {
            result = want_any;
            break;
        }
    }
    if (saved)
        b[var] = *saved;
    else
        b.erase(var);
    return result;
}

}  // namespace

bool eval_formula(const Formula& f, const State& state,
                  const std::vector<std::string>& universe, Bindings& b) {
    switch (f.kind) {
        case FormulaKind::Atom: {
            Atom g = f.atom;
            for (auto& arg : g.args)
                arg = resolve(arg, b);
            return state.count(g) > 0;
        }
        case FormulaKind::Equal:
            return resolve(f.lhs, b) == resolve(f.rhs, b);
        case FormulaKind::Not:
            return !eval_formula(f.children[0], state, universe, b);
        case FormulaKind::And:
            for (const auto& c : f.children)
                if (!eval_formula(c, state, universe, b))
                    return false;
            return true;
        case FormulaKind::Or:
            for (const auto& c : f.children)
                if (eval_formula(c, state, universe, b))
                    return true;
            return false;
        case FormulaKind::Exists:
        case FormulaKind::Forall:
            return eval_quantified(f, 0, state, universe, b);
    }
    return false;
}

namespace {

std::vector<std::string> head_variables(const Atom& head) {
    std::vector<std::string> vars;
    for (const auto& a : head.args)
        if (is_variable(a) && std::find(vars.begin(), vars.end(), a) == vars.end())
            vars.push_back(a);
    return vars;
}

}  // namespace

State derivation_closure(const Domain& domain,
                         const std::vector<std::string>& universe,
                         const State& base) {
    State s = base;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : domain.rules) {
            auto vars = head_variables(rule.head);
            if (!vars.empty() && universe.empty())
                continue;  // no groundings
            std::vector<std::size_t> pick(vars.size(), 0);
            while (true) {
                Bindings b;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    b[vars[i]] = universe[pick[i]];
                Atom head = substitute(rule.head, b);
                if (!s.count(head) && eval_formula(rule.body, s, universe, b)) {
                    s.insert(head);
                    changed = true;
                }
                std::size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < universe.size())
                        break;
                    pick[i] = 0;
                }
                if (i == pick.size())
                    break;
            }
        }
    }
    return s;
}

std::string GroundAction::str() const {
    std::string out = "(" + name;
    for (const auto& a : args)
        out += " " + a;
    return out + ")";
}

std::string PlanStep::str() const {
    std::string out = "(" + name;
    for (const auto& a : args)
        out += " " + a;
    return out + ")";
}

GroundAction ground_action(const ActionSchema& schema,
                           const std::vector<std::string>& args) {
    if (args.size() != schema.params.size())
        throw Error("InvalidSpec", "action " + schema.name + " expects " +
                                       std::to_string(schema.params.size()) +
                                       " arguments, got " +
                                       std::to_string(args.size()));
    Bindings b;
    for (std::size_t i = 0; i < args.size(); ++i)
        b[schema.params[i]] = args[i];
    GroundAction ga;
    ga.name = schema.name;
    ga.args = args;
    ga.precond = substitute(schema.precond, b);
    for (const auto& a : schema.add)
        ga.add.push_back(substitute(a, b));
    for (const auto& a : schema.del)
        ga.del.push_back(substitute(a, b));
    return ga;
}

bool is_applicable(const GroundAction& action, const State& state,
                   const std::vector<std::string>& universe) {
    Bindings b;
    return eval_formula(action.precond, state, universe, b);
}

State apply_action(const State& base, const GroundAction& action) {
    State out = base;
    for (const auto& a : action.del)
        out.erase(a);
    for (const auto& a : action.add)
        out.insert(a);
    return out;
}

namespace {

void check_atom(const Domain& domain, const std::set<std::string>& universe,
                const Atom& a, const std::set<std::string>& scope,
                const std::string& where) {
    const PredicateDecl* decl = domain.find_predicate(a.pred);
    if (!decl)
        throw Error("InvalidSpec",
                    where + ": undeclared predicate '" + a.pred + "'");
    if (static_cast<int>(a.args.size()) != decl->arity)
        throw Error("InvalidSpec", where + ": predicate '" + a.pred +
                                       "' expects " +
                                       std::to_string(decl->arity) +
                                       " arguments, got " +
                                       std::to_string(a.args.size()));
    for (const auto& arg : a.args) {
        if (is_variable(arg)) {
            if (!scope.count(arg))
                throw Error("InvalidSpec",
                            where + ": unbound variable " + arg);
        } else if (!universe.count(arg)) {
            throw Error("InvalidSpec", where + ": unknown object '" + arg + "'");
        }
    }
}

void check_term(const std::set<std::string>& universe, const std::string& t,
                const std::set<std::string>& scope, const std::string& where) {
    if (is_variable(t)) {
        if (!scope.count(t))
            throw Error("InvalidSpec", where + ": unbound variable " + t);
    } else if (!universe.count(t)) {
        throw Error("InvalidSpec", where + ": unknown object '" + t + "'");
    }
}

// checks scoping/arity and rejects derived predicates under an odd number
// of negations when `positive_derived` is set
void check_formula(const Domain& domain, const std::set<std::string>& universe,
                   const std::set<std::string>& derived, const Formula& f,
                   std::set<std::string> scope, const std::string& where,
                   bool positive_derived, bool negated = false) {
    switch (f.kind) {
        case FormulaKind::Atom:
            check_atom(domain, universe, f.atom, scope, where);
            if (positive_derived && negated && derived.count(f.atom.pred))
                throw Error("InvalidSpec", where + ": derived predicate '" +
                                               f.atom.pred +
                                               "' occurs negated");
            break;
        case FormulaKind::Equal:
            check_term(universe, f.lhs, scope, where);
            check_term(universe, f.rhs, scope, where);
            break;
        case FormulaKind::Not:
            check_formula(domain, universe, derived, f.children[0], scope,
                          where, positive_derived, !negated);
            break;
        case FormulaKind::Exists:
        case FormulaKind::Forall:
            for (const auto& v : f.params)
                scope.insert(v);
            [[fallthrough]];
        default:
            for (const auto& c : f.children)
                check_formula(domain, universe, derived, c, scope, where,
                              positive_derived, negated);
    }
}

}  // namespace

void validate_spec(const PlanningSpec& spec) {
    const Domain& d = spec.domain;
    const Problem& p = spec.problem;
    if (p.domain_name != d.name)
        throw Error("InvalidSpec", "problem targets domain '" + p.domain_name +
                                       "' but the domain is named '" + d.name +
                                       "'");
    std::set<std::string> preds;
    for (const auto& decl : d.predicates)
        if (!preds.insert(decl.name).second)
            throw Error("InvalidSpec",
                        "duplicate predicate declaration '" + decl.name + "'");
    std::set<std::string> names;
    for (const auto& a : d.actions)
        if (!names.insert(a.name).second)
            throw Error("InvalidSpec", "duplicate action name '" + a.name + "'");

    auto univ_list = spec.universe();
    std::set<std::string> universe(univ_list.begin(), univ_list.end());
    std::set<std::string> derived = d.derived_predicates();

    for (const auto& a : d.actions) {
        std::string where = "action " + a.name;
        std::set<std::string> scope;
        for (const auto& v : a.params) {
            if (!is_variable(v))
                throw Error("InvalidSpec",
                            where + ": parameter '" + v + "' is not a variable");
            if (!scope.insert(v).second)
                throw Error("InvalidSpec",
                            where + ": duplicate parameter " + v);
        }
        check_formula(d, universe, derived, a.precond, scope, where, false);
        for (const auto* effs : {&a.add, &a.del})
            for (const auto& e : *effs) {
                check_atom(d, universe, e, scope, where);
                if (derived.count(e.pred))
                    throw Error("InvalidSpec",
                                where + ": derived predicate '" + e.pred +
                                    "' cannot appear in effects");
            }
    }

    for (const auto& r : d.rules) {
        std::string where = "rule for " + r.head.pred;
        check_atom(d, universe, r.head, free_variables(r.body), where);
        std::set<std::string> scope;
        for (const auto& arg : r.head.args)
            if (is_variable(arg))
                scope.insert(arg);
        check_formula(d, universe, derived, r.body, scope, where, true);
    }

    for (const auto& a : p.init) {
        check_atom(d, universe, a, {}, "init");
        for (const auto& arg : a.args)
            if (is_variable(arg))
                throw Error("InvalidSpec", "init: atom " + a.str() +
                                               " is not ground");
        if (derived.count(a.pred))
            throw Error("InvalidSpec", "init: derived predicate '" + a.pred +
                                           "' cannot appear in init");
    }

    check_formula(d, universe, derived, p.goal, {}, "goal", false);
}

std::optional<std::string> validate_plan(const PlanningSpec& spec,
                                         const std::vector<PlanStep>& plan) {
    auto universe = spec.universe();
    std::set<std::string> known(universe.begin(), universe.end());
    State base = spec.problem.init;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        std::string where = "step " + std::to_string(i + 1);
        const ActionSchema* schema = spec.domain.find_action(plan[i].name);
        if (!schema)
            return where + ": unknown action '" + plan[i].name + "'";
        if (plan[i].args.size() != schema->params.size())
            return where + ": action " + plan[i].name + " expects " +
                   std::to_string(schema->params.size()) + " arguments";
        for (const auto& arg : plan[i].args)
            if (!known.count(arg))
                return where + ": unknown object '" + arg + "'";
        GroundAction ga = ground_action(*schema, plan[i].args);
        State closed = derivation_closure(spec.domain, universe, base);
        if (!is_applicable(ga, closed, universe))
            return where + ": action " + ga.str() + " is not applicable";
        base = apply_action(base, ga);
    }
    State closed = derivation_closure(spec.domain, universe, base);
    Bindings b;
    if (!eval_formula(spec.problem.goal, closed, universe, b))
        return "plan does not achieve the goal";
    return std::nullopt;
}

}  // namespace omp::pddl
