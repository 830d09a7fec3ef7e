#include "support/justify_oracle.hpp"

#include <cstdint>

#include "omp/error.hpp"

namespace testsupport {

using omp::dl::Axiom;
using omp::dl::Entailment;
using omp::dl::Ontology;
using omp::just::FluentSet;

namespace {

Ontology with_subset(const Ontology& onto, const std::vector<Axiom>& fluents,
                     std::uint64_t mask) {
    Ontology out = onto;
    for (std::size_t i = 0; i < fluents.size(); ++i)
        if (mask & (std::uint64_t{1} << i))
            out.add(fluents[i]);
    return out;
}

FluentSet to_set(std::uint64_t mask, std::size_t n) {
    FluentSet out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i))
            out.insert(i);
    return out;
}

std::vector<FluentSet> minimal_sets(const std::vector<std::uint64_t>& masks,
                                    std::size_t n) {
    std::vector<FluentSet> out;
    for (std::uint64_t m : masks) {
        bool dominated = false;
        for (std::uint64_t other : masks)
            if (other != m && (other & m) == other) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(to_set(m, n));
    }
    omp::just::sort_justifications(out);
    return out;
}

std::vector<std::uint64_t> entailing_masks(
    const Ontology& onto, const std::vector<Axiom>& fluents,
    const std::vector<Entailment>& targets) {
    if (fluents.size() > 20)
        throw omp::Error("InternalError", "oracle limited to 20 fluents");
    std::vector<std::uint64_t> out;
    std::uint64_t limit = std::uint64_t{1} << fluents.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Ontology ext = with_subset(onto, fluents, mask);
        bool all = true;
        for (const auto& t : targets)
            if (!omp::dl::entails(ext, t)) {
                all = false;
                break;
            }
        if (all)
            out.push_back(mask);
    }
    return out;
}

}  // namespace

std::vector<FluentSet> brute_minimal_entailing(const Ontology& onto,
                                               const std::vector<Axiom>& fluents,
                                               const Entailment& target) {
    return minimal_sets(entailing_masks(onto, fluents, {target}),
                        fluents.size());
}

std::vector<FluentSet> brute_just_bottom(const Ontology& onto,
                                         const std::vector<Axiom>& fluents) {
    return brute_minimal_entailing(onto, fluents, Entailment::bottom());
}

std::vector<FluentSet> brute_just_alpha(const Ontology& onto,
                                        const std::vector<Axiom>& fluents,
                                        const std::vector<Axiom>& conjuncts) {
    std::vector<Entailment> targets;
    for (const auto& ax : conjuncts)
        targets.push_back(Entailment::assertion(ax));
    auto minimal = minimal_sets(entailing_masks(onto, fluents, targets),
                                fluents.size());
    std::vector<FluentSet> out;
    for (const auto& s : minimal) {
        std::uint64_t mask = 0;
        for (std::size_t i : s)
            mask |= std::uint64_t{1} << i;
        Ontology ext = with_subset(onto, fluents, mask);
        if (omp::dl::is_consistent(ext))
            out.push_back(s);
    }
    return out;
}

}  // namespace testsupport
