#include "omp/planner/planner.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>

#include "omp/error.hpp"

namespace omp::planner {

using pddl::GroundAction;
using pddl::State;

std::vector<GroundAction> grounded_actions(const pddl::PlanningSpec& spec) {
    auto universe = spec.universe();
    std::sort(universe.begin(), universe.end());
    std::vector<GroundAction> out;
    for (const auto& schema : spec.domain.actions) {
        if (schema.params.empty()) {
            out.push_back(pddl::ground_action(schema, {}));
            continue;
        }
        if (universe.empty())
            continue;
        std::vector<std::size_t> idx(schema.params.size(), 0);
        for (;;) {
            std::vector<std::string> args;
            args.reserve(idx.size());
            for (std::size_t i : idx)
                args.push_back(universe[i]);
            out.push_back(pddl::ground_action(schema, args));
            std::size_t k = idx.size();
            while (k > 0 && ++idx[k - 1] == universe.size())
                idx[--k] = 0;
            if (k == 0)
                break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const GroundAction& a, const GroundAction& b) {
                  if (a.name != b.name)
                      return a.name < b.name;
                  return a.args < b.args;
              });
    return out;
}

namespace {

struct Node {
    State base;
    long parent = -1;
    std::size_t action = 0;  // index into the grounded action list
};

std::vector<pddl::PlanStep> unwind(const std::vector<Node>& arena, long at,
                                   const std::vector<GroundAction>& actions) {
    std::vector<pddl::PlanStep> plan;
    while (at >= 0 && arena[at].parent >= 0) {
        const GroundAction& ga = actions[arena[at].action];
        plan.push_back({ga.name, ga.args});
        at = arena[at].parent;
    }
    std::reverse(plan.begin(), plan.end());
    return plan;
}

}  // namespace

SolveResult solve(const pddl::PlanningSpec& spec, const SolveLimits& limits) {
    auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - started)
            .count();
    };

    pddl::validate_spec(spec);
    auto universe = spec.universe();
    auto actions = grounded_actions(spec);

    SolveResult result;
    auto finish = [&](SolveStatus status) {
        result.status = status;
        result.stats.wall_ms = elapsed_ms();
        return result;
    };

    auto goal_holds = [&](const State& closed) {
        pddl::Bindings b;
        return pddl::eval_formula(spec.problem.goal, closed, universe, b);
    };

    std::vector<Node> arena;
    std::map<State, std::size_t> seen;
    std::deque<std::size_t> frontier;

    State init_closed =
        pddl::derivation_closure(spec.domain, universe, spec.problem.init);
    if (goal_holds(init_closed)) {
        result.plan.clear();
        return finish(SolveStatus::Found);
    }
    arena.push_back({spec.problem.init, -1, 0});
    seen.emplace(spec.problem.init, 0);
    frontier.push_back(0);
    result.stats.generated = 1;

    while (!frontier.empty()) {
        if (limits.time_limit_s > 0.0 &&
            elapsed_ms() > limits.time_limit_s * 1000.0)
            return finish(SolveStatus::ResourceLimit);
        std::size_t at = frontier.front();
        frontier.pop_front();
        ++result.stats.expanded;

        State closed =
            pddl::derivation_closure(spec.domain, universe, arena[at].base);
        for (std::size_t ai = 0; ai < actions.size(); ++ai) {
            if (!pddl::is_applicable(actions[ai], closed, universe))
                continue;
            State succ = pddl::apply_action(arena[at].base, actions[ai]);
            if (seen.count(succ)) {
                ++result.stats.duplicates;
                continue;
            }
            if (arena.size() >= limits.max_nodes)
                return finish(SolveStatus::ResourceLimit);
            std::size_t id = arena.size();
            arena.push_back({succ, static_cast<long>(at), ai});
            seen.emplace(std::move(succ), id);
            ++result.stats.generated;
            State succ_closed =
                pddl::derivation_closure(spec.domain, universe, arena[id].base);
            if (goal_holds(succ_closed)) {
                result.plan = unwind(arena, static_cast<long>(id), actions);
                return finish(SolveStatus::Found);
            }
            frontier.push_back(id);
        }
    }
    return finish(SolveStatus::Unsolvable);
}

}  // namespace omp::planner
