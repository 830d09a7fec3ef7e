#include "omp/iface/interface.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "omp/dl/parser.hpp"
#include "omp/error.hpp"

namespace omp::iface {

namespace {

[[noreturn]] void syntax(int line, const std::string& what) {
    throw Error("SyntaxError", "line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    return s;
}

// splits "prefix(a, b)" at the last top-level application; returns prefix
// and the comma-separated argument names
bool split_application(const std::string& text, std::string& prefix,
                       std::vector<std::string>& args) {
    if (text.empty() || text.back() != ')')
        return false;
    // find the '(' matching the final ')'
    int depth = 0;
    std::size_t open = std::string::npos;
    for (std::size_t i = text.size(); i-- > 0;) {
        if (text[i] == ')')
            ++depth;
        else if (text[i] == '(') {
            --depth;
            if (depth == 0) {
                open = i;
                break;
            }
        }
    }
    if (open == std::string::npos)
        return false;
    prefix = trim(text.substr(0, open));
    args.clear();
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::string cur;
    int d = 0;
    for (char c : inner) {
        if (c == '(')
            ++d;
        if (c == ')')
            --d;
        if (c == ',' && d == 0) {
            args.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty())
        args.push_back(trim(cur));
    if (prefix.empty())
        return false;
    for (const auto& a : args)
        if (a.empty())
            return false;
    return true;
}

bool plain_name(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '-' || c == '.'))
            return false;
    return true;
}

}  // namespace

bool FluentInterface::maps_predicate(const std::string& pred, int arity) const {
    auto it = predicate_map.find(pred);
    return it != predicate_map.end() && it->second.arity == arity;
}

std::optional<dl::Axiom> FluentInterface::map_atom(const pddl::Atom& a) const {
    auto it = predicate_map.find(a.pred);
    if (it == predicate_map.end() ||
        it->second.arity != static_cast<int>(a.args.size()))
        return std::nullopt;
    std::vector<std::string> inds;
    for (const auto& arg : a.args) {
        auto oit = object_map.find(arg);
        if (oit == object_map.end())
            return std::nullopt;
        inds.push_back(oit->second);
    }
    if (it->second.arity == 1)
        return dl::Axiom::class_assertion(inds[0],
                                          dl::ClassExpr::named(it->second.target));
    return dl::Axiom::property_assertion(inds[0], it->second.target, inds[1]);
}

std::optional<pddl::Atom> FluentInterface::unmap(const dl::Axiom& ax) const {
    auto find_object = [&](const std::string& ind) -> std::optional<std::string> {
        for (const auto& [obj, mapped] : object_map)
            if (mapped == ind)
                return obj;
        return std::nullopt;
    };
    if (ax.kind == dl::AxiomKind::ClassAssertion) {
        if (ax.exprs[0]->kind != dl::ExprKind::Named)
            return std::nullopt;
        for (const auto& [pred, pm] : predicate_map) {
            if (pm.arity != 1 || pm.target != ax.exprs[0]->name)
                continue;
            auto obj = find_object(ax.individuals[0]);
            if (!obj)
                return std::nullopt;
            return pddl::Atom{pred, {*obj}};
        }
        return std::nullopt;
    }
    if (ax.kind == dl::AxiomKind::PropertyAssertion) {
        for (const auto& [pred, pm] : predicate_map) {
            if (pm.arity != 2 || pm.target != ax.role)
                continue;
            auto s = find_object(ax.individuals[0]);
            auto o = find_object(ax.individuals[1]);
            if (!s || !o)
                return std::nullopt;
            return pddl::Atom{pred, {*s, *o}};
        }
        return std::nullopt;
    }
    return std::nullopt;
}

FluentInterface parse_fluent_interface(const std::string& text) {
    FluentInterface fi;
    std::map<std::string, std::string> class_targets, role_targets, ind_targets;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos)
            syntax(lineno, "expected '<keyword> <source> -> <target>'");
        std::string left = trim(line.substr(0, arrow));
        std::string target = trim(line.substr(arrow + 2));
        if (!plain_name(target))
            syntax(lineno, "expected a single target name");
        auto space = left.find_first_of(" \t");
        if (space == std::string::npos)
            syntax(lineno, "expected a keyword followed by a name");
        std::string keyword = upper(left.substr(0, space));
        std::string source = strip_spaces(left.substr(space + 1));
        if (keyword == "OBJECT") {
            if (!plain_name(source))
                syntax(lineno, "expected an object name");
            if (fi.object_map.count(source))
                throw Error("InvalidSpec", "line " + std::to_string(lineno) +
                                               ": object '" + source +
                                               "' is mapped twice");
            auto [it, fresh] = ind_targets.emplace(target, source);
            if (!fresh)
                throw Error("InvalidSpec",
                            "line " + std::to_string(lineno) + ": objects '" +
                                it->second + "' and '" + source +
                                "' map to the same individual");
            fi.object_map[source] = target;
        } else if (keyword == "PREDICATE") {
            std::string name;
            std::vector<std::string> slots;
            if (!split_application(source, name, slots) || !plain_name(name))
                syntax(lineno, "expected '<predicate>(_[,_])'");
            for (const auto& s : slots)
                if (s != "_")
                    syntax(lineno, "predicate argument slots must be '_'");
            if (slots.empty() || slots.size() > 2)
                throw Error("InvalidSpec",
                            "line " + std::to_string(lineno) + ": predicate '" +
                                name + "' must be unary or binary");
            if (fi.predicate_map.count(name))
                throw Error("InvalidSpec", "line " + std::to_string(lineno) +
                                               ": predicate '" + name +
                                               "' is mapped twice");
            auto& targets = slots.size() == 1 ? class_targets : role_targets;
            auto [it, fresh] = targets.emplace(target, name);
            if (!fresh)
                throw Error("InvalidSpec",
                            "line " + std::to_string(lineno) +
                                ": predicates '" + it->second + "' and '" +
                                name + "' map to the same name");
            fi.predicate_map[name] = {static_cast<int>(slots.size()), target};
        } else {
            syntax(lineno, "unknown keyword '" + keyword + "'");
        }
    }
    return fi;
}

const QuerySpec* QueryInterface::find(const std::string& predicate) const {
    for (const auto& q : queries)
        if (q.predicate == predicate)
            return &q;
    return nullptr;
}

namespace {

QuerySpec::Template parse_template(int lineno, const std::string& line) {
    QuerySpec::Template t;
    std::string head;
    std::vector<std::string> args;
    if (!split_application(line, head, args))
        syntax(lineno, "expected an assertion template");
    if (head == "ClassAssertion") {
        if (args.size() != 2)
            syntax(lineno, "ClassAssertion takes a term and a class expression");
        t.kind = QuerySpec::Template::Kind::Class;
        t.var = args[0];
        t.expr = dl::parse_class_expr(args[1]);
        return t;
    }
    if (head == "PropertyAssertion") {
        if (args.size() != 3 || !plain_name(args[1]))
            syntax(lineno, "PropertyAssertion takes a subject, a role, and an object");
        t.kind = QuerySpec::Template::Kind::Property;
        t.subject = args[0];
        t.role = args[1];
        t.object = args[2];
        return t;
    }
    if (args.size() == 2) {  // compact property form: role(?x, ?y)
        if (!plain_name(head))
            syntax(lineno, "role names must be plain names");
        t.kind = QuerySpec::Template::Kind::Property;
        t.subject = args[0];
        t.role = head;
        t.object = args[1];
        return t;
    }
    if (args.size() == 1) {  // compact class form: Expr(?x)
        t.kind = QuerySpec::Template::Kind::Class;
        t.var = args[0];
        t.expr = plain_name(head) ? dl::ClassExpr::named(head)
                                  : dl::parse_class_expr(head);
        return t;
    }
    syntax(lineno, "expected one or two template arguments");
}

}  // namespace

QueryInterface parse_query_interface(const std::string& text) {
    QueryInterface qi;
    QuerySpec* cur = nullptr;
    enum class Section { None, Types, Query } section = Section::None;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    auto finish = [&](QuerySpec* q) {
        if (!q)
            return;
        for (const auto& v : q->variables)
            if (!q->types.count(v))
                throw Error("MissingTypeSpecification",
                            "query predicate '" + q->predicate +
                                "': variable " + v + " has no type");
        if (q->templates.empty())
            throw Error("SyntaxError", "query predicate '" + q->predicate +
                                           "' has no QUERY lines");
    };

    auto known_var = [&](const std::string& v) {
        return cur && std::find(cur->variables.begin(), cur->variables.end(),
                                v) != cur->variables.end();
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        auto colon = line.find(':');
        std::string header =
            colon == std::string::npos ? "" : upper(trim(line.substr(0, colon)));
        bool is_header = header == "PREDICATE" || header == "VARIABLES" ||
                         header == "TYPE_SPECIFICATION" || header == "QUERY";
        if (is_header) {
            std::string rest = trim(line.substr(colon + 1));
            if (header == "PREDICATE") {
                finish(cur);
                if (!plain_name(rest))
                    syntax(lineno, "PREDICATE needs a predicate name");
                qi.queries.emplace_back();
                cur = &qi.queries.back();
                cur->predicate = rest;
                section = Section::None;
            } else if (!cur) {
                syntax(lineno, header + " before any PREDICATE block");
            } else if (header == "VARIABLES") {
                std::istringstream vs(rest);
                std::string v;
                while (vs >> v) {
                    if (!v.empty() && v.back() == ',')
                        v.pop_back();
                    if (!pddl::is_variable(v))
                        syntax(lineno, "expected variables like ?x, got '" + v + "'");
                    if (known_var(v))
                        syntax(lineno, "duplicate variable " + v);
                    cur->variables.push_back(v);
                }
                section = Section::None;
            } else if (header == "TYPE_SPECIFICATION") {
                if (!rest.empty())
                    syntax(lineno, "type lines belong below TYPE_SPECIFICATION:");
                section = Section::Types;
            } else {
                if (!rest.empty())
                    syntax(lineno, "query lines belong below QUERY:");
                section = Section::Query;
            }
            continue;
        }
        if (!cur || section == Section::None)
            syntax(lineno, "unexpected line outside any section");
        if (section == Section::Types) {
            std::string head;
            std::vector<std::string> args;
            if (!split_application(line, head, args) || args.size() != 1)
                syntax(lineno, "expected '<ClassExpression>(?var)'");
            const std::string& v = args[0];
            if (!pddl::is_variable(v) || !known_var(v))
                throw Error("UndeclaredQueryVariable",
                            "line " + std::to_string(lineno) + ": " + v +
                                " is not a declared variable");
            if (cur->types.count(v))
                syntax(lineno, "duplicate type for " + v);
            cur->types[v] = plain_name(head) ? dl::ClassExpr::named(head)
                                             : dl::parse_class_expr(head);
        } else {
            QuerySpec::Template t = parse_template(lineno, line);
            for (const auto* term : {&t.var, &t.subject, &t.object})
                if (pddl::is_variable(*term) && !known_var(*term))
                    throw Error("UndeclaredQueryVariable",
                                "line " + std::to_string(lineno) + ": " +
                                    *term + " is not a declared variable");
            cur->templates.push_back(std::move(t));
        }
    }
    finish(cur);
    return qi;
}

namespace {

std::string resolve(const std::string& term, const Assignment& th) {
    if (!pddl::is_variable(term))
        return term;
    auto it = th.find(term);
    if (it == th.end())
        throw Error("InternalError", "unbound query variable " + term);
    return it->second;
}

dl::ClassExprPtr subst_expr(const dl::ClassExprPtr& e, const Assignment& th) {
    if (e->kind == dl::ExprKind::OneOf && pddl::is_variable(e->name))
        return dl::ClassExpr::one_of({resolve(e->name, th)});
    if (e->children.empty())
        return e;
    std::vector<dl::ClassExprPtr> kids;
    bool changed = false;
    for (const auto& c : e->children) {
        kids.push_back(subst_expr(c, th));
        changed = changed || kids.back() != c;
    }
    if (!changed)
        return e;
    switch (e->kind) {
        case dl::ExprKind::Not:
            return dl::ClassExpr::negation(kids[0]);
        case dl::ExprKind::And:
            return dl::ClassExpr::conjunction(std::move(kids));
        case dl::ExprKind::Or:
            return dl::ClassExpr::disjunction(std::move(kids));
        case dl::ExprKind::Some:
            return dl::ClassExpr::some(e->name, kids[0]);
        case dl::ExprKind::All:
            return dl::ClassExpr::all(e->name, kids[0]);
        case dl::ExprKind::AtLeast:
            return dl::ClassExpr::at_least(e->number, e->name, kids[0]);
        case dl::ExprKind::AtMost:
            return dl::ClassExpr::at_most(e->number, e->name, kids[0]);
        default:
            return e;
    }
}

}  // namespace

std::vector<Assignment> legal_assignments(const QuerySpec& q,
                                          const dl::Ontology& onto,
                                          const dl::ReasonerLimits& limits) {
    std::vector<std::vector<std::string>> candidates;
    for (const auto& v : q.variables)
        candidates.push_back(dl::instances(onto, q.types.at(v), limits));
    std::vector<Assignment> out;
    std::vector<std::size_t> pick(q.variables.size(), 0);
    for (const auto& c : candidates)
        if (c.empty())
            return out;
    while (true) {
        Assignment th;
        for (std::size_t i = 0; i < q.variables.size(); ++i)
            th[q.variables[i]] = candidates[i][pick[i]];
        out.push_back(std::move(th));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < candidates[i].size())
                break;
            pick[i] = 0;
        }
        if (i == pick.size())
            break;
    }
    return out;
}

std::vector<dl::Axiom> instantiate_query(const QuerySpec& q,
                                         const Assignment& th) {
    std::vector<dl::Axiom> out;
    for (const auto& t : q.templates) {
        if (t.kind == QuerySpec::Template::Kind::Class)
            out.push_back(dl::Axiom::class_assertion(resolve(t.var, th),
                                                     subst_expr(t.expr, th)));
        else
            out.push_back(dl::Axiom::property_assertion(
                resolve(t.subject, th), t.role, resolve(t.object, th)));
    }
    return out;
}

dl::Ontology ontology_with_una(const dl::Ontology& onto,
                               const FluentInterface& fluents) {
    dl::Ontology out = onto;
    std::set<std::string> inds = onto.individuals();
    for (const auto& kv : fluents.object_map)
        inds.insert(kv.second);
    if (inds.size() >= 2)
        out.add(dl::Axiom::different_individuals({inds.begin(), inds.end()}));
    return out;
}

std::vector<std::string> validate_om_spec(const OMPlanningSpec& spec) {
    const pddl::Domain& d = spec.planning.domain;
    pddl::validate_spec(spec.planning);

    std::set<std::string> query_preds;
    for (const auto& q : spec.queries.queries) {
        if (!query_preds.insert(q.predicate).second)
            throw Error("InvalidSpec", "query predicate '" + q.predicate +
                                           "' is declared twice");
        const pddl::PredicateDecl* decl = d.find_predicate(q.predicate);
        if (!decl)
            throw Error("InvalidSpec", "query predicate '" + q.predicate +
                                           "' is not declared in the domain");
        if (decl->arity != static_cast<int>(q.variables.size()))
            throw Error("InvalidSpec",
                        "query predicate '" + q.predicate + "' has " +
                            std::to_string(q.variables.size()) +
                            " variables but arity " +
                            std::to_string(decl->arity));
        if (spec.fluents.predicate_map.count(q.predicate))
            throw Error("InvalidSpec", "query predicate '" + q.predicate +
                                           "' cannot also be a mapped fluent");
    }

    std::set<std::string> derived = d.derived_predicates();
    for (const auto& a : d.actions)
        for (const auto* effs : {&a.add, &a.del})
            for (const auto& e : *effs)
                if (query_preds.count(e.pred))
                    throw Error("InvalidSpec",
                                "action " + a.name + ": query predicate '" +
                                    e.pred + "' cannot appear in effects");
    for (const auto& r : d.rules)
        if (query_preds.count(r.head.pred))
            throw Error("InvalidSpec", "query predicate '" + r.head.pred +
                                           "' cannot be a rule head");
    for (const auto& a : spec.planning.problem.init)
        if (query_preds.count(a.pred))
            throw Error("InvalidSpec", "init: query predicate '" + a.pred +
                                           "' cannot appear in init");

    for (const auto& [pred, pm] : spec.fluents.predicate_map) {
        const pddl::PredicateDecl* decl = d.find_predicate(pred);
        if (!decl)
            throw Error("InvalidSpec", "mapped predicate '" + pred +
                                           "' is not declared in the domain");
        if (decl->arity != pm.arity)
            throw Error("InvalidSpec",
                        "mapped predicate '" + pred + "' has arity " +
                            std::to_string(decl->arity) + " but is mapped as " +
                            (pm.arity == 1 ? "unary" : "binary"));
    }
    auto universe = spec.planning.universe();
    std::set<std::string> objects(universe.begin(), universe.end());
    for (const auto& kv : spec.fluents.object_map)
        if (!objects.count(kv.first))
            throw Error("InvalidSpec", "mapped object '" + kv.first +
                                           "' is not an object of the problem");

    std::vector<std::string> diagnostics;
    for (const auto& r : d.rules) {
        if (!spec.fluents.predicate_map.count(r.head.pred))
            continue;
        std::set<std::string> seen;
        std::function<void(const pddl::Formula&)> scan =
            [&](const pddl::Formula& f) {
                if (f.kind == pddl::FormulaKind::Atom)
                    seen.insert(f.atom.pred);
                for (const auto& c : f.children)
                    scan(c);
            };
        scan(r.body);
        for (const auto& q : seen)
            if (query_preds.count(q))
                diagnostics.push_back(
                    "mapped derived predicate '" + r.head.pred +
                    "' depends on query predicate '" + q +
                    "'; its mapped value ignores that dependency");
    }
    return diagnostics;
}

}  // namespace omp::iface
