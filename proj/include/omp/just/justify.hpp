#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "omp/dl/model.hpp"
#include "omp/dl/reasoner.hpp"

namespace omp::just {

struct JustifyLimits {
    dl::ReasonerLimits reasoner;
    std::uint64_t hst_node_budget = 100000;  // hitting-set tree nodes per call
};

struct JustifyStats {
    std::uint64_t entailment_checks = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t hst_nodes = 0;
};

// Indices into JustificationEngine::fluents(), always sorted.
using FluentSet = std::set<std::size_t>;

// Computes, for entailments of the static ontology extended with fluent
// assertions, the minimal fluent subsets responsible: the ontology is
// treated as fixed background, minimization runs over the fluents only.
// Thread-safe; entailment results are cached across calls.
class JustificationEngine {
public:
    // fluents are deduplicated and sorted by their canonical string
    JustificationEngine(dl::Ontology onto, std::vector<dl::Axiom> fluents,
                        JustifyLimits limits = {});

    const dl::Ontology& ontology() const { return onto_; }
    const std::vector<dl::Axiom>& fluents() const { return fluents_; }

    // index of a fluent equal to ax, or npos
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t fluent_index(const dl::Axiom& ax) const;

    bool entails(const FluentSet& fluents, const dl::Entailment& target) const;

    // minimal fluent subsets whose union with the ontology is inconsistent;
    // throws Error("StaticOntologyInconsistent") when the ontology alone is
    bool ontology_consistent() const;
    std::vector<FluentSet> just_bottom() const;

    // minimal fluent subsets entailing every conjunct, with the subsets
    // that are inconsistent with the ontology removed
    std::vector<FluentSet> just_alpha(const std::vector<dl::Axiom>& conjuncts) const;

    JustifyStats stats() const;

private:
    using Mask = std::uint64_t;

    Mask full_mask() const;
    bool entails_mask(Mask mask, const dl::Entailment& target) const;
    Mask shrink(Mask mask, const dl::Entailment& target) const;
    std::vector<Mask> all_justifications(const dl::Entailment& target) const;
    FluentSet to_set(Mask mask) const;

    dl::Ontology onto_;
    std::vector<dl::Axiom> fluents_;
    JustifyLimits limits_;

    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::string, Mask>, bool> cache_;
    mutable JustifyStats stats_;
};

// canonical presentation: by size, then lexicographically
void sort_justifications(std::vector<FluentSet>& sets);

}  // namespace omp::just
