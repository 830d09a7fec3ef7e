#include "omp/just/justify.hpp"

#include <algorithm>
#include <deque>

#include "omp/error.hpp"

namespace omp::just {

JustificationEngine::JustificationEngine(dl::Ontology onto,
                                         std::vector<dl::Axiom> fluents,
                                         JustifyLimits limits)
    : onto_(std::move(onto)), limits_(limits) {
    std::set<std::string> seen;
    for (auto& f : fluents)
        if (seen.insert(f.str()).second)
            fluents_.push_back(std::move(f));
    std::sort(fluents_.begin(), fluents_.end(),
              [](const dl::Axiom& a, const dl::Axiom& b) {
                  return a.str() < b.str();
              });
    if (fluents_.size() > 64)
        throw Error("ResourceLimit",
                    "fluent sets larger than 64 are not supported (got " +
                        std::to_string(fluents_.size()) + ")");
}

std::size_t JustificationEngine::fluent_index(const dl::Axiom& ax) const {
    for (std::size_t i = 0; i < fluents_.size(); ++i)
        if (fluents_[i] == ax)
            return i;
    return npos;
}

JustificationEngine::Mask JustificationEngine::full_mask() const {
    return fluents_.size() == 64 ? ~Mask{0} : (Mask{1} << fluents_.size()) - 1;
}

FluentSet JustificationEngine::to_set(Mask mask) const {
    FluentSet out;
    for (std::size_t i = 0; i < fluents_.size(); ++i)
        if (mask & (Mask{1} << i))
            out.insert(i);
    return out;
}

bool JustificationEngine::entails_mask(Mask mask,
                                       const dl::Entailment& target) const {
    std::pair<std::string, Mask> key{target.str(), mask};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            ++stats_.cache_hits;
            return it->second;
        }
    }
    dl::Ontology extended = onto_;
    for (std::size_t i = 0; i < fluents_.size(); ++i)
        if (mask & (Mask{1} << i))
            extended.add(fluents_[i]);
    bool result = dl::entails(extended, target, limits_.reasoner);
    std::lock_guard<std::mutex> lock(mutex_);
    ++stats_.entailment_checks;
    cache_[key] = result;
    return result;
}

bool JustificationEngine::entails(const FluentSet& fluents,
                                  const dl::Entailment& target) const {
    Mask mask = 0;
    for (std::size_t i : fluents) {
        if (i >= fluents_.size())
            throw Error("InternalError", "fluent index out of range");
        mask |= Mask{1} << i;
    }
    return entails_mask(mask, target);
}

// deterministic minimization: drop fluents from the highest index down,
// keeping each removal that preserves the entailment
JustificationEngine::Mask JustificationEngine::shrink(
    Mask mask, const dl::Entailment& target) const {
    for (std::size_t i = fluents_.size(); i-- > 0;) {
        Mask bit = Mask{1} << i;
        if (!(mask & bit))
            continue;
        if (entails_mask(mask & ~bit, target))
            mask &= ~bit;
    }
    return mask;
}

// Reiter-style hitting-set tree: each tree edge removes one fluent of the
// node's justification; every minimal justification shows up at some node.
std::vector<JustificationEngine::Mask> JustificationEngine::all_justifications(
    const dl::Entailment& target) const {
    std::vector<Mask> found;
    if (!entails_mask(full_mask(), target))
        return found;
    Mask first = shrink(full_mask(), target);
    found.push_back(first);

    std::deque<Mask> queue;      // pending removal sets H
    std::set<Mask> visited;      // explored removal sets
    std::uint64_t processed = 0;
    for (std::size_t i = 0; i < fluents_.size(); ++i)
        if (first & (Mask{1} << i))
            queue.push_back(Mask{1} << i);

    while (!queue.empty()) {
        Mask removed = queue.front();
        queue.pop_front();
        if (!visited.insert(removed).second)
            continue;
        if (++processed > limits_.hst_node_budget)
            throw Error("ResourceLimit", "hitting-set tree budget exceeded");
        {
            std::lock_guard<std::mutex> lock(mutex_);
            ++stats_.hst_nodes;
        }
        Mask label = 0;
        bool labeled = false;
        for (Mask j : found) {  // reuse a justification disjoint from H
            if ((j & removed) == 0) {
                label = j;
                labeled = true;
                break;
            }
        }
        if (!labeled) {
            Mask candidate = full_mask() & ~removed;
            if (!entails_mask(candidate, target))
                continue;  // leaf: nothing entails below this removal set
            label = shrink(candidate, target);
            found.push_back(label);
        }
        for (std::size_t i = 0; i < fluents_.size(); ++i)
            if (label & (Mask{1} << i))
                queue.push_back(removed | (Mask{1} << i));
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

bool JustificationEngine::ontology_consistent() const {
    return !entails_mask(0, dl::Entailment::bottom());
}

std::vector<FluentSet> JustificationEngine::just_bottom() const {
    if (!ontology_consistent())
        throw Error("StaticOntologyInconsistent",
                    "the static ontology is inconsistent on its own");
    std::vector<FluentSet> out;
    for (Mask m : all_justifications(dl::Entailment::bottom()))
        out.push_back(to_set(m));
    sort_justifications(out);
    return out;
}

std::vector<FluentSet> JustificationEngine::just_alpha(
    const std::vector<dl::Axiom>& conjuncts) const {
    if (conjuncts.empty())
        throw Error("InternalError", "just_alpha needs at least one conjunct");
    if (!ontology_consistent())
        throw Error("StaticOntologyInconsistent",
                    "the static ontology is inconsistent on its own");

    // minimal sets per conjunct, then minimal unions across conjuncts
    std::vector<Mask> unions{0};
    for (const auto& ax : conjuncts) {
        auto per = all_justifications(dl::Entailment::assertion(ax));
        if (per.empty())
            return {};
        std::vector<Mask> next;
        for (Mask u : unions)
            for (Mask j : per)
                next.push_back(u | j);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        unions = std::move(next);
    }
    std::vector<Mask> minimal;
    for (Mask m : unions) {
        bool dominated = false;
        for (Mask other : unions)
            if (other != m && (other & m) == other) {
                dominated = true;
                break;
            }
        if (!dominated)
            minimal.push_back(m);
    }
    std::vector<FluentSet> out;
    for (Mask m : minimal)
        if (!entails_mask(m, dl::Entailment::bottom()))
            out.push_back(to_set(m));
    sort_justifications(out);
    return out;
}

JustifyStats JustificationEngine::stats() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return stats_;
}

void sort_justifications(std::vector<FluentSet>& sets) {
    std::sort(sets.begin(), sets.end(),
              [](const FluentSet& a, const FluentSet& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
}

}  // namespace omp::just
