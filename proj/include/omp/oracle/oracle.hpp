#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omp/dl/model.hpp"
#include "omp/dl/reasoner.hpp"
#include "omp/iface/interface.hpp"
#include "omp/pddl/model.hpp"

namespace omp::oracle {

// The two perspectives on one world state: the planner's closed-world atom
// set and the open-world axiom set it induces through the interface.
struct OntologyEnhancedState {
    pddl::State planner_view;         // base atoms plus saturated query atoms
    std::vector<dl::Axiom> owl_view;  // static axioms plus mapped fluents
};

// The axiom image of a planner state: the static ontology plus the mapped
// derivation closure of the non-query atoms.
std::vector<dl::Axiom> owl_image(const pddl::State& base,
                                 const iface::OMPlanningSpec& om);

// Canonical completion of a planner state: strip query atoms, close under
// the domain's own rules, map through the fluent interface, then saturate
// query atoms by entailment (everything, once the image is inconsistent).
OntologyEnhancedState extend(const pddl::State& base,
                             const iface::OMPlanningSpec& om,
                             const dl::ReasonerLimits& limits = {});

struct CompatibilityVerdict {
    bool compatible = true;
    std::string condition;  // "C1".."C5" when violated
    std::string witness;

    std::string str() const;
};

CompatibilityVerdict check_compatibility(const OntologyEnhancedState& q,
                                         const iface::OMPlanningSpec& om,
                                         const dl::ReasonerLimits& limits = {});

bool om_applicable(const OntologyEnhancedState& q,
                   const pddl::GroundAction& action,
                   const iface::OMPlanningSpec& om);

// Classical effect application on the planner view followed by re-extension.
// Throws Error("NotApplicable") when the precondition fails.
OntologyEnhancedState om_apply(const OntologyEnhancedState& q,
                               const pddl::GroundAction& action,
                               const iface::OMPlanningSpec& om,
                               const dl::ReasonerLimits& limits = {});

// Replays the plan under direct semantics from ext(init); nullopt when the
// goal is reached, otherwise the first failure.
std::optional<std::string> om_validate_plan(
    const iface::OMPlanningSpec& om, const std::vector<pddl::PlanStep>& plan,
    const dl::ReasonerLimits& limits = {});

// Exhaustive breadth-first search directly over ontology-enhanced states.
// Intended as a reference for tiny instances only; nullopt = no plan.
// Exceeding max_nodes raises Error("ResourceLimit").
std::optional<std::vector<pddl::PlanStep>> bfs_shortest_plan(
    const iface::OMPlanningSpec& om, std::size_t max_nodes = 100000,
    const dl::ReasonerLimits& limits = {});

}  // namespace omp::oracle
