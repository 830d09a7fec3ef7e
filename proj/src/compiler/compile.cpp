#include "omp/compiler/compile.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "omp/error.hpp"

namespace omp::compiler {

namespace {

using iface::Assignment;
using iface::OMPlanningSpec;
using pddl::Atom;
using pddl::Formula;

constexpr const char* kInconsistent = "inconsistent";

// the fluent candidates: every mapped predicate applied to every tuple of
// mapped objects
std::vector<Atom> fluent_atoms(const iface::FluentInterface& fi) {
    std::vector<std::string> objects;
    for (const auto& kv : fi.object_map)
        objects.push_back(kv.first);
    std::vector<Atom> out;
    for (const auto& kv : fi.predicate_map) {
        const auto& pred = kv.first;
        int arity = kv.second.arity;
        std::vector<std::size_t> pick(arity, 0);
        if (objects.empty())
            continue;
        while (true) {
            Atom a{pred, {}};
            for (int i = 0; i < arity; ++i)
                a.args.push_back(objects[pick[i]]);
            out.push_back(std::move(a));
            int i = 0;
            for (; i < arity; ++i) {
                if (++pick[i] < objects.size())
                    break;
                pick[i] = 0;
            }
            if (i == arity)
                break;
        }
    }
    return out;
}

Formula justification_disjunct(const just::FluentSet& j,
                               const std::vector<Atom>& atoms) {
    std::vector<Formula> conj;
    for (std::size_t i : j)
        conj.push_back(Formula::make_atom(atoms[i]));
    return Formula::conjunction(std::move(conj));
}

// subsumption between pure conjunctions of atoms
bool subsumes(const Formula& a, const Formula& b) {
    auto atoms_of = [](const Formula& f, std::set<Atom>& out) {
        if (f.kind == pddl::FormulaKind::Atom) {
            out.insert(f.atom);
            return true;
        }
        if (f.kind != pddl::FormulaKind::And)
            return false;
        for (const auto& c : f.children) {
            if (c.kind != pddl::FormulaKind::Atom)
                return false;
            out.insert(c.atom);
        }
        return true;
    };
    std::set<Atom> sa, sb;
    if (!atoms_of(a, sa) || !atoms_of(b, sb))
        return false;
    return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

Formula simplify_formula(Formula f) {
    for (auto& c : f.children)
        c = simplify_formula(std::move(c));
    if (f.kind == pddl::FormulaKind::Or) {
        std::size_t n = f.children.size();
        std::vector<bool> drop(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n && !drop[i]; ++k) {
                if (k == i)
                    continue;
                const Formula& a = f.children[k];
                const Formula& b = f.children[i];
                if (subsumes(a, b) && !subsumes(b, a))
                    drop[i] = true;  // strictly weaker disjunct
                else if (k < i && a.str() == b.str())
                    drop[i] = true;  // duplicate, keep the first
            }
        }
        std::vector<Formula> kept;
        for (std::size_t i = 0; i < n; ++i)
            if (!drop[i])
                kept.push_back(std::move(f.children[i]));
        f.children = std::move(kept);
    }
    if ((f.kind == pddl::FormulaKind::And || f.kind == pddl::FormulaKind::Or) &&
        f.children.size() == 1)
        return f.children[0];
    return f;
}

}  // namespace

CompileResult compile(const OMPlanningSpec& spec, const CompileOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    CompileResult result;
    result.report.diagnostics = iface::validate_om_spec(spec);

    if (spec.planning.domain.find_predicate(kInconsistent))
        throw Error("InvalidSpec",
                    "the predicate name 'inconsistent' is reserved");

    dl::Ontology onto = opts.una
                            ? iface::ontology_with_una(spec.ontology, spec.fluents)
                            : spec.ontology;

    // fluent atoms in engine order, aligned with engine.fluents()
    std::vector<Atom> candidate_atoms = fluent_atoms(spec.fluents);
    std::vector<dl::Axiom> candidate_axioms;
    for (const auto& a : candidate_atoms) {
        auto ax = spec.fluents.map_atom(a);
        if (!ax)
            throw Error("InternalError",
                        "candidate fluent " + a.str() + " failed to map");
        candidate_axioms.push_back(std::move(*ax));
    }
    just::JustificationEngine engine(onto, candidate_axioms, opts.limits);
    std::vector<Atom> atoms;
    for (const auto& ax : engine.fluents()) {
        auto atom = spec.fluents.unmap(ax);
        if (!atom)
            throw Error("InternalError",
                        "fluent " + ax.str() + " failed to unmap");
        atoms.push_back(std::move(*atom));
    }
    result.report.fluent_count = atoms.size();

    result.spec = spec.planning;
    pddl::Domain& domain = result.spec.domain;
    domain.predicates.push_back({kInconsistent, 0});

    // rule deriving the inconsistency marker
    auto bottom = engine.just_bottom();
    result.report.bottom_justifications = bottom.size();
    {
        std::vector<Formula> disjuncts;
        for (const auto& j : bottom)
            disjuncts.push_back(justification_disjunct(j, atoms));
        pddl::DerivationRule rule;
        rule.head = Atom{kInconsistent, {}};
        rule.body = Formula::disjunction(std::move(disjuncts));
        domain.rules.push_back(std::move(rule));
    }

    // per-assignment justification solves, optionally in parallel; an
    // assignment only yields a rule when every individual in it has a
    // planner-side name under the object map
    std::map<std::string, std::string> to_object;
    for (const auto& kv : spec.fluents.object_map)
        to_object[kv.second] = kv.first;

    struct Task {
        const iface::QuerySpec* query;
        Assignment th;
        std::vector<std::string> args;  // planner-side names for th
        std::vector<just::FluentSet> sets;
    };
    std::vector<Task> tasks;
    for (const auto& q : spec.queries.queries)
        for (auto& th : iface::legal_assignments(q, onto, opts.limits.reasoner)) {
            std::vector<std::string> args;
            bool nameable = true;
            for (const auto& v : q.variables) {
                auto it = to_object.find(th.at(v));
                if (it == to_object.end()) {
                    nameable = false;
                    break;
                }
                args.push_back(it->second);
            }
            if (nameable)
                tasks.push_back({&q, std::move(th), std::move(args), {}});
        }
    result.report.assignments = tasks.size();

    auto solve = [&](Task& task) {
        auto conjuncts = iface::instantiate_query(*task.query, task.th);
        task.sets = engine.just_alpha(conjuncts);
    };
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        for (auto& t : tasks)
            solve(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                try {
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= tasks.size())
                            return;
                        solve(tasks[i]);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : workers)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // assemble the query rules in deterministic order
    Formula inconsistent_atom = Formula::make_atom(Atom{kInconsistent, {}});
    if (opts.variable_rules) {
        for (const auto& q : spec.queries.queries) {
            std::vector<Formula> per_theta;
            for (const auto& task : tasks) {
                if (task.query != &q)
                    continue;
                result.report.justification_sets += task.sets.size();
                std::vector<Formula> inner{inconsistent_atom};
                for (const auto& j : task.sets)
                    inner.push_back(justification_disjunct(j, atoms));
                std::vector<Formula> eqs;
                for (std::size_t i = 0; i < q.variables.size(); ++i)
                    eqs.push_back(Formula::equal(q.variables[i], task.args[i]));
                eqs.push_back(Formula::disjunction(std::move(inner)));
                per_theta.push_back(Formula::conjunction(std::move(eqs)));
            }
            pddl::DerivationRule rule;
            rule.head = Atom{q.predicate, q.variables};
            rule.body = Formula::disjunction(std::move(per_theta));
            domain.rules.push_back(std::move(rule));
        }
    } else {
        for (const auto& q : spec.queries.queries) {
            for (const auto& task : tasks) {
                if (task.query != &q)
                    continue;
                result.report.justification_sets += task.sets.size();
                std::vector<Formula> disjuncts{inconsistent_atom};
                for (const auto& j : task.sets)
                    disjuncts.push_back(justification_disjunct(j, atoms));
                pddl::DerivationRule rule;
                rule.head = Atom{q.predicate, task.args};
                rule.body = Formula::disjunction(std::move(disjuncts));
                domain.rules.push_back(std::move(rule));
            }
        }
    }

    if (opts.simplify)
        for (auto& r : domain.rules)
            r.body = simplify_formula(std::move(r.body));

    if (opts.block_inconsistent) {
        Formula guard = Formula::negation(inconsistent_atom);
        for (auto& a : domain.actions) {
            if (a.precond.kind == pddl::FormulaKind::And)
                a.precond.children.push_back(guard);
            else
                a.precond = Formula::conjunction({std::move(a.precond), guard});
        }
    }

    result.report.rules_emitted = domain.rules.size();
    auto stats = engine.stats();
    result.report.entailment_checks = stats.entailment_checks;
    result.report.cache_hits = stats.cache_hits;
    result.report.hst_nodes = stats.hst_nodes;
    result.report.wall_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();

    pddl::validate_spec(result.spec);
    return result;
}

}  // namespace omp::compiler
