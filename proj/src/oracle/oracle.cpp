#include "omp/oracle/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "omp/error.hpp"
#include "omp/planner/planner.hpp"

namespace omp::oracle {

using pddl::Atom;
using pddl::State;

namespace {

std::set<std::string> query_predicates(const iface::OMPlanningSpec& om) {
    std::set<std::string> out;
    for (const auto& q : om.queries.queries)
        out.insert(q.predicate);
    return out;
}

State strip_query_atoms(const State& s, const std::set<std::string>& qpreds) {
    State out;
    for (const auto& a : s)
        if (!qpreds.count(a.pred))
            out.insert(a);
    return out;
}

// one saturation candidate: a query atom plus the assignment licensing it
struct QueryTask {
    const iface::QuerySpec* query;
    iface::Assignment th;
    Atom atom;
};

// legal assignments whose individuals all have planner-side names
std::vector<QueryTask> guarded_tasks(const iface::OMPlanningSpec& om,
                                     const dl::ReasonerLimits& limits) {
    std::map<std::string, std::string> inverse;
    for (const auto& kv : om.fluents.object_map)
        inverse[kv.second] = kv.first;
    std::vector<QueryTask> out;
    for (const auto& q : om.queries.queries) {
        for (auto& th : iface::legal_assignments(q, om.ontology, limits)) {
            Atom atom{q.predicate, {}};
            bool nameable = true;
            for (const auto& v : q.variables) {
                auto it = inverse.find(th.at(v));
                if (it == inverse.end()) {
                    nameable = false;
                    break;
                }
                atom.args.push_back(it->second);
            }
            if (nameable)
                out.push_back({&q, std::move(th), std::move(atom)});
        }
    }
    return out;
}

dl::Ontology image_ontology(const State& base, const iface::OMPlanningSpec& om,
                            const std::set<std::string>& qpreds) {
    auto universe = om.planning.universe();
    State closed = pddl::derivation_closure(om.planning.domain, universe,
                                            strip_query_atoms(base, qpreds));
    dl::Ontology onto = om.ontology;
    for (const auto& a : closed)
        if (auto ax = om.fluents.map_atom(a))
            onto.add(*ax);
    return onto;
}

OntologyEnhancedState extend_with(const State& base,
                                  const iface::OMPlanningSpec& om,
                                  const std::vector<QueryTask>& tasks,
                                  const dl::ReasonerLimits& limits) {
    auto qpreds = query_predicates(om);
    dl::Ontology onto = image_ontology(base, om, qpreds);
    bool consistent = dl::is_consistent(onto, limits);
    OntologyEnhancedState out;
    out.planner_view = strip_query_atoms(base, qpreds);
    for (const auto& t : tasks) {
        bool add = !consistent;  // ex falso: everything follows
        if (!add) {
            add = true;
            for (const auto& ax : iface::instantiate_query(*t.query, t.th)) {
                if (!dl::entails(onto, dl::Entailment::assertion(ax), limits)) {
                    add = false;
                    break;
                }
            }
        }
        if (add)
            out.planner_view.insert(t.atom);
    }
    out.owl_view = onto.axioms();
    return out;
}

std::vector<pddl::PlanStep> unwind(
    const std::vector<std::pair<long, std::size_t>>& links, long at,
    const std::vector<pddl::GroundAction>& actions) {
    std::vector<pddl::PlanStep> plan;
    while (at >= 0 && links[at].first >= 0) {
        const pddl::GroundAction& ga = actions[links[at].second];
        plan.push_back({ga.name, ga.args});
        at = links[at].first;
    }
    std::reverse(plan.begin(), plan.end());
    return plan;
}

}  // namespace

std::string CompatibilityVerdict::str() const {
    if (compatible)
        return "compatible";
    return "violated " + condition + ": " + witness;
}

std::vector<dl::Axiom> owl_image(const pddl::State& base,
                                 const iface::OMPlanningSpec& om) {
    return image_ontology(base, om, query_predicates(om)).axioms();
}

OntologyEnhancedState extend(const pddl::State& base,
                             const iface::OMPlanningSpec& om,
                             const dl::ReasonerLimits& limits) {
    return extend_with(base, om, guarded_tasks(om, limits), limits);
}

CompatibilityVerdict check_compatibility(const OntologyEnhancedState& q,
                                         const iface::OMPlanningSpec& om,
                                         const dl::ReasonerLimits& limits) {
    auto universe = om.planning.universe();
    std::set<std::string> known(universe.begin(), universe.end());

    // C1: the planner view speaks the planning vocabulary
    for (const auto& a : q.planner_view) {
        const pddl::PredicateDecl* decl =
            om.planning.domain.find_predicate(a.pred);
        if (!decl || decl->arity != static_cast<int>(a.args.size()))
            return {false, "C1", "atom " + a.str() + " is not declared"};
        for (const auto& arg : a.args)
            if (!known.count(arg))
                return {false, "C1",
                        "atom " + a.str() + " uses unknown object '" + arg + "'"};
    }

    std::set<std::string> owl_keys;
    for (const auto& ax : q.owl_view)
        owl_keys.insert(ax.str());

    // C2: the static ontology is always part of the OWL view
    for (const auto& ax : om.ontology.axioms())
        if (!owl_keys.count(ax.str()))
            return {false, "C2", "static axiom " + ax.str() + " is missing"};

    // C3/C4: the OWL view is exactly the static part plus the image of the
    // closed planner view
    State closed = pddl::derivation_closure(om.planning.domain, universe,
                                            q.planner_view);
    std::set<std::string> allowed;
    for (const auto& ax : om.ontology.axioms())
        allowed.insert(ax.str());
    for (const auto& a : closed) {
        if (auto ax = om.fluents.map_atom(a)) {
            if (!owl_keys.count(ax->str()))
                return {false, "C3",
                        "mapped axiom " + ax->str() + " is missing"};
            allowed.insert(ax->str());
        }
    }
    for (const auto& ax : q.owl_view)
        if (!allowed.count(ax.str()))
            return {false, "C4", "axiom " + ax.str() + " is not required"};

    // C5: query atoms are exactly the entailed instantiations
    dl::Ontology onto{q.owl_view};
    bool consistent = dl::is_consistent(onto, limits);
    State expected;
    for (const auto& t : guarded_tasks(om, limits)) {
        bool add = !consistent;
        if (!add) {
            add = true;
            for (const auto& ax : iface::instantiate_query(*t.query, t.th)) {
                if (!dl::entails(onto, dl::Entailment::assertion(ax), limits)) {
                    add = false;
                    break;
                }
            }
        }
        if (add)
            expected.insert(t.atom);
    }
    auto qpreds = query_predicates(om);
    State actual;
    for (const auto& a : q.planner_view)
        if (qpreds.count(a.pred))
            actual.insert(a);
    for (const auto& a : expected)
        if (!actual.count(a))
            return {false, "C5", "query atom " + a.str() + " is missing"};
    for (const auto& a : actual)
        if (!expected.count(a))
            return {false, "C5", "query atom " + a.str() + " is not entailed"};

    return {};
}

bool om_applicable(const OntologyEnhancedState& q,
                   const pddl::GroundAction& action,
                   const iface::OMPlanningSpec& om) {
    auto universe = om.planning.universe();
    State closed = pddl::derivation_closure(om.planning.domain, universe,
                                            q.planner_view);
    return pddl::is_applicable(action, closed, universe);
}

OntologyEnhancedState om_apply(const OntologyEnhancedState& q,
                               const pddl::GroundAction& action,
                               const iface::OMPlanningSpec& om,
                               const dl::ReasonerLimits& limits) {
    if (!om_applicable(q, action, om))
        throw Error("NotApplicable",
                    "action " + action.str() + " is not applicable");
    return extend(pddl::apply_action(q.planner_view, action), om, limits);
}

std::optional<std::string> om_validate_plan(
    const iface::OMPlanningSpec& om, const std::vector<pddl::PlanStep>& plan,
    const dl::ReasonerLimits& limits) {
    auto universe = om.planning.universe();
    std::set<std::string> known(universe.begin(), universe.end());
    auto tasks = guarded_tasks(om, limits);

    OntologyEnhancedState q =
        extend_with(om.planning.problem.init, om, tasks, limits);
    for (std::size_t i = 0; i < plan.size(); ++i) {
        std::string where = "step " + std::to_string(i + 1);
        const pddl::ActionSchema* schema =
            om.planning.domain.find_action(plan[i].name);
        if (!schema)
            return where + ": unknown action '" + plan[i].name + "'";
        if (plan[i].args.size() != schema->params.size())
            return where + ": arity mismatch for '" + plan[i].name + "'";
        for (const auto& arg : plan[i].args)
            if (!known.count(arg))
                return where + ": unknown object '" + arg + "'";
        pddl::GroundAction ga = pddl::ground_action(*schema, plan[i].args);
        if (!om_applicable(q, ga, om))
            return where + ": action " + ga.str() + " is not applicable";
        q = extend_with(pddl::apply_action(q.planner_view, ga), om, tasks,
                        limits);
    }
    State closed = pddl::derivation_closure(om.planning.domain, universe,
                                            q.planner_view);
    pddl::Bindings b;
    if (!pddl::eval_formula(om.planning.problem.goal, closed, universe, b))
        return "plan does not achieve the goal";
    return std::nullopt;
}

std::optional<std::vector<pddl::PlanStep>> bfs_shortest_plan(
    const iface::OMPlanningSpec& om, std::size_t max_nodes,
    const dl::ReasonerLimits& limits) {
    auto universe = om.planning.universe();
    auto qpreds = query_predicates(om);
    auto tasks = guarded_tasks(om, limits);
    auto actions = planner::grounded_actions(om.planning);

    auto goal_holds = [&](const OntologyEnhancedState& q) {
        State closed = pddl::derivation_closure(om.planning.domain, universe,
                                                q.planner_view);
        pddl::Bindings b;
        return pddl::eval_formula(om.planning.problem.goal, closed, universe,
                                  b);
    };

    std::vector<OntologyEnhancedState> arena;
    std::vector<std::pair<long, std::size_t>> links;  // parent, action
    std::set<State> seen;
    std::deque<std::size_t> frontier;

    OntologyEnhancedState init =
        extend_with(om.planning.problem.init, om, tasks, limits);
    if (goal_holds(init))
        return std::vector<pddl::PlanStep>{};
    seen.insert(strip_query_atoms(om.planning.problem.init, qpreds));
    arena.push_back(std::move(init));
    links.push_back({-1, 0});
    frontier.push_back(0);

    while (!frontier.empty()) {
        std::size_t at = frontier.front();
        frontier.pop_front();
        State closed = pddl::derivation_closure(om.planning.domain, universe,
                                                arena[at].planner_view);
        for (std::size_t ai = 0; ai < actions.size(); ++ai) {
            if (!pddl::is_applicable(actions[ai], closed, universe))
                continue;
            State succ_base =
                pddl::apply_action(arena[at].planner_view, actions[ai]);
            State key = strip_query_atoms(succ_base, qpreds);
            if (!seen.insert(std::move(key)).second)
                continue;
            if (arena.size() >= max_nodes)
                throw Error("ResourceLimit",
                            "direct search node budget exceeded");
            std::size_t id = arena.size();
            arena.push_back(extend_with(succ_base, om, tasks, limits));
            links.push_back({static_cast<long>(at), ai});
            if (goal_holds(arena[id]))
                return unwind(links, static_cast<long>(id), actions);
            frontier.push_back(id);
        }
    }
    return std::nullopt;
}

}  // namespace omp::oracle
