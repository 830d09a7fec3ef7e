#include "omp/pddl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "omp/error.hpp"

namespace omp::pddl {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

[[noreturn]] void syntax(int line, const std::string& what) {
    throw Error("SyntaxError", "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void unsupported(int line, const std::string& what) {
    throw Error("UnsupportedFeature",
                "line " + std::to_string(line) + ": " + what);
}

struct Sexp {
    bool leaf = false;
    std::string text;  // leaf token, original case
    std::vector<Sexp> kids;
    int line = 1;

    // lowercased head token when this is a list starting with a leaf
    std::string tag() const {
        if (leaf || kids.empty() || !kids[0].leaf)
            return "";
        return lower(kids[0].text);
    }
};

struct Reader {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1;

    void skip() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == ';') {
                while (pos < src.size() && src[pos] != '\n')
                    ++pos;
            } else {
                break;
            }
        }
    }

    Sexp read() {
        skip();
        if (pos >= src.size())
            syntax(line, "unexpected end of input");
        if (src[pos] == ')')
            syntax(line, "unexpected ')'");
        Sexp s;
        s.line = line;
        if (src[pos] == '(') {
            ++pos;
            while (true) {
                skip();
                if (pos >= src.size())
                    syntax(s.line, "unclosed '('");
                if (src[pos] == ')') {
                    ++pos;
                    return s;
                }
                s.kids.push_back(read());
            }
        }
        s.leaf = true;
        while (pos < src.size() && src[pos] != '(' && src[pos] != ')' &&
               src[pos] != ';' &&
               !std::isspace(static_cast<unsigned char>(src[pos])))
            s.text += src[pos++];
        return s;
    }

    std::vector<Sexp> read_all() {
        std::vector<Sexp> out;
        while (true) {
            skip();
            if (pos >= src.size())
                return out;
            out.push_back(read());
        }
    }
};

const Sexp& expect_leaf(const Sexp& s, const std::string& what) {
    if (!s.leaf)
        syntax(s.line, "expected " + what);
    return s;
}

// variable lists for :parameters, exists, forall
std::vector<std::string> parse_var_list(const Sexp& s) {
    if (s.leaf)
        syntax(s.line, "expected a variable list");
    std::vector<std::string> vars;
    for (const auto& kid : s.kids) {
        expect_leaf(kid, "a variable");
        if (kid.text == "-")
            unsupported(kid.line, "typing is not supported");
        if (!is_variable(kid.text))
            syntax(kid.line, "expected a variable, got '" + kid.text + "'");
        vars.push_back(kid.text);
    }
    return vars;
}

std::vector<std::string> parse_name_list(const Sexp& s) {
    std::vector<std::string> names;
    for (const auto& kid : s.kids) {
        expect_leaf(kid, "a name");
        if (kid.text == "-")
            unsupported(kid.line, "typing is not supported");
        names.push_back(kid.text);
    }
    return names;
}

Atom parse_atom(const Sexp& s) {
    if (s.leaf || s.kids.empty() || !s.kids[0].leaf)
        syntax(s.line, "expected an atom");
    Atom a;
    a.pred = s.kids[0].text;
    for (std::size_t i = 1; i < s.kids.size(); ++i) {
        if (!s.kids[i].leaf)
            syntax(s.kids[i].line, "atom arguments must be names");
        a.args.push_back(s.kids[i].text);
    }
    return a;
}

const std::set<std::string> kNumericOps = {"increase", "decrease", "assign",
                                           "scale-up", "scale-down"};

Formula parse_formula(const Sexp& s) {
    if (s.leaf)
        syntax(s.line, "expected a formula, got '" + s.text + "'");
    if (s.kids.empty())
        syntax(s.line, "empty formula");
    if (!s.kids[0].leaf)
        syntax(s.line, "expected a connective or predicate name");
    std::string head = lower(s.kids[0].text);
    if (head == "and" || head == "or") {
        std::vector<Formula> kids;
        for (std::size_t i = 1; i < s.kids.size(); ++i)
            kids.push_back(parse_formula(s.kids[i]));
        return head == "and" ? Formula::conjunction(std::move(kids))
                             : Formula::disjunction(std::move(kids));
    }
    if (head == "not") {
        if (s.kids.size() != 2)
            syntax(s.line, "not takes exactly one formula");
        return Formula::negation(parse_formula(s.kids[1]));
    }
    if (head == "exists" || head == "forall") {
        if (s.kids.size() != 3)
            syntax(s.line, head + " takes a variable list and a formula");
        auto vars = parse_var_list(s.kids[1]);
        auto body = parse_formula(s.kids[2]);
        return head == "exists" ? Formula::exists(std::move(vars), std::move(body))
                                : Formula::forall(std::move(vars), std::move(body));
    }
    if (head == "=") {
        if (s.kids.size() != 3 || !s.kids[1].leaf || !s.kids[2].leaf)
            syntax(s.line, "= takes exactly two terms");
        return Formula::equal(s.kids[1].text, s.kids[2].text);
    }
    if (head == "imply")
        unsupported(s.line, "imply is not supported");
    if (head == "when")
        unsupported(s.line, "conditional effects are not supported");
    if (kNumericOps.count(head))
        unsupported(s.line, "numeric fluents are not supported");
    return Formula::make_atom(parse_atom(s));
}

void parse_effect(const Sexp& s, std::vector<Atom>& add,
                  std::vector<Atom>& del) {
    if (s.leaf || s.kids.empty() || !s.kids[0].leaf)
        syntax(s.line, "expected an effect literal");
    std::string head = lower(s.kids[0].text);
    if (head == "and") {
        for (std::size_t i = 1; i < s.kids.size(); ++i)
            parse_effect(s.kids[i], add, del);
        return;
    }
    if (head == "when")
        unsupported(s.line, "conditional effects are not supported");
    if (head == "forall")
        unsupported(s.line, "quantified effects are not supported");
    if (kNumericOps.count(head))
        unsupported(s.line, "numeric fluents are not supported");
    if (head == "or" || head == "exists" || head == "imply" || head == "=")
        syntax(s.line, "effects must be conjunctions of literals");
    if (head == "not") {
        if (s.kids.size() != 2)
            syntax(s.line, "not takes exactly one atom");
        del.push_back(parse_atom(s.kids[1]));
        return;
    }
    add.push_back(parse_atom(s));
}

const std::set<std::string> kSupportedRequirements = {
    ":strips",
    ":equality",
    ":negative-preconditions",
    ":disjunctive-preconditions",
    ":existential-preconditions",
    ":universal-preconditions",
    ":quantified-preconditions",
    ":derived-predicates",
};

void parse_requirements(const Sexp& s) {
    for (std::size_t i = 1; i < s.kids.size(); ++i) {
        const auto& kid = expect_leaf(s.kids[i], "a requirement flag");
        std::string req = lower(kid.text);
        if (!kSupportedRequirements.count(req))
            unsupported(kid.line, "requirement " + req + " is not supported");
    }
}

ActionSchema parse_action(const Sexp& s) {
    if (s.kids.size() < 2 || !s.kids[1].leaf)
        syntax(s.line, ":action needs a name");
    ActionSchema a;
    a.name = s.kids[1].text;
    bool saw_params = false, saw_effect = false;
    std::size_t i = 2;
    while (i < s.kids.size()) {
        const auto& key = expect_leaf(s.kids[i], "an action keyword");
        std::string k = lower(key.text);
        if (i + 1 >= s.kids.size())
            syntax(key.line, k + " needs a value");
        const Sexp& val = s.kids[i + 1];
        if (k == ":parameters") {
            a.params = parse_var_list(val);
            saw_params = true;
        } else if (k == ":precondition") {
            a.precond = parse_formula(val);
        } else if (k == ":effect") {
            parse_effect(val, a.add, a.del);
            saw_effect = true;
        } else {
            syntax(key.line, "unknown action keyword '" + key.text + "'");
        }
        i += 2;
    }
    if (!saw_params)
        syntax(s.line, "action " + a.name + " is missing :parameters");
    if (!saw_effect)
        syntax(s.line, "action " + a.name + " is missing :effect");
    return a;
}

DerivationRule parse_derived(const Sexp& s) {
    if (s.kids.size() != 3)
        syntax(s.line, ":derived takes a head atom and a body formula");
    DerivationRule r;
    r.head = parse_atom(s.kids[1]);
    r.body = parse_formula(s.kids[2]);
    return r;
}

// shared "(define (kind name) sections...)" shell
const Sexp& open_define(const Sexp& root, const std::string& kind,
                        std::string& name) {
    if (root.leaf || root.kids.size() < 2 || lower(root.kids[0].text) != "define")
        syntax(root.line, "expected (define ...)");
    const Sexp& id = root.kids[1];
    if (id.leaf || id.kids.size() != 2 || id.tag() != kind ||
        !id.kids[1].leaf)
        syntax(id.line, "expected (" + kind + " <name>)");
    name = id.kids[1].text;
    return root;
}

Sexp read_single(const std::string& text) {
    Reader reader{text};
    auto all = reader.read_all();
    if (all.size() != 1)
        syntax(all.empty() ? 1 : all[1].line,
               "expected a single top-level s-expression");
    return all[0];
}

}  // namespace

Domain parse_domain(const std::string& text) {
    Sexp root = read_single(text);
    Domain d;
    open_define(root, "domain", d.name);
    for (std::size_t i = 2; i < root.kids.size(); ++i) {
        const Sexp& sec = root.kids[i];
        std::string tag = sec.tag();
        if (tag == ":requirements") {
            parse_requirements(sec);
        } else if (tag == ":predicates") {
            for (std::size_t k = 1; k < sec.kids.size(); ++k) {
                Atom a = parse_atom(sec.kids[k]);
                for (const auto& arg : a.args) {
                    if (arg == "-")
                        unsupported(sec.kids[k].line, "typing is not supported");
                    if (!is_variable(arg))
                        syntax(sec.kids[k].line,
                               "predicate arguments must be variables");
                }
                d.predicates.push_back({a.pred, static_cast<int>(a.args.size())});
            }
        } else if (tag == ":constants") {
            auto names = parse_name_list(sec);
            d.constants.insert(d.constants.end(), names.begin() + 1, names.end());
        } else if (tag == ":action") {
            d.actions.push_back(parse_action(sec));
        } else if (tag == ":derived") {
            d.rules.push_back(parse_derived(sec));
        } else if (tag == ":types") {
            unsupported(sec.line, "typing is not supported");
        } else if (tag == ":functions") {
            unsupported(sec.line, "numeric fluents are not supported");
        } else if (tag.rfind(":", 0) == 0) {
            unsupported(sec.line, "section " + tag + " is not supported");
        } else {
            syntax(sec.line, "expected a domain section");
        }
    }
    return d;
}

Problem parse_problem(const std::string& text) {
    Sexp root = read_single(text);
    Problem p;
    open_define(root, "problem", p.name);
    bool saw_goal = false;
    for (std::size_t i = 2; i < root.kids.size(); ++i) {
        const Sexp& sec = root.kids[i];
        std::string tag = sec.tag();
        if (tag == ":domain") {
            if (sec.kids.size() != 2 || !sec.kids[1].leaf)
                syntax(sec.line, ":domain takes a single name");
            p.domain_name = sec.kids[1].text;
        } else if (tag == ":objects") {
            auto names = parse_name_list(sec);
            p.objects.assign(names.begin() + 1, names.end());
        } else if (tag == ":init") {
            for (std::size_t k = 1; k < sec.kids.size(); ++k) {
                const Sexp& entry = sec.kids[k];
                std::string head = entry.tag();
                if (head == "not")
                    syntax(entry.line, "init literals must be positive");
                if (head == "=" || kNumericOps.count(head))
                    unsupported(entry.line,
                                "numeric init entries are not supported");
                p.init.insert(parse_atom(entry));
            }
        } else if (tag == ":goal") {
            if (sec.kids.size() != 2)
                syntax(sec.line, ":goal takes a single formula");
            p.goal = parse_formula(sec.kids[1]);
            saw_goal = true;
        } else if (tag == ":metric") {
            unsupported(sec.line, "metrics are not supported");
        } else if (tag.rfind(":", 0) == 0) {
            unsupported(sec.line, "section " + tag + " is not supported");
        } else {
            syntax(sec.line, "expected a problem section");
        }
    }
    if (p.domain_name.empty())
        syntax(root.line, "problem is missing the :domain section");
    if (!saw_goal)
        syntax(root.line, "problem is missing the :goal section");
    return p;
}

std::vector<PlanStep> parse_plan(const std::string& text) {
    Reader reader{text};
    std::vector<PlanStep> plan;
    for (const Sexp& s : reader.read_all()) {
        if (s.leaf || s.kids.empty() || !s.kids[0].leaf)
            syntax(s.line, "expected a plan step (name args...)");
        PlanStep step;
        step.name = s.kids[0].text;
        for (std::size_t i = 1; i < s.kids.size(); ++i) {
            if (!s.kids[i].leaf)
                syntax(s.kids[i].line, "plan arguments must be names");
            step.args.push_back(s.kids[i].text);
        }
        plan.push_back(std::move(step));
    }
    return plan;
}

}  // namespace omp::pddl
