#include "omp/dl/reasoner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "omp/error.hpp"

namespace omp::dl {

namespace {

// Concepts live in negation normal form. Complex negation only survives as
// NegNamed / NegNominal literals; everything else is pushed inward when
// expressions are interned.
enum class CKind : std::uint8_t {
    Top,
    Bottom,
    Named,
    NegNamed,
    And,
    Or,
    Some,
    All,
    AtLeast,
    AtMost,
    Nominal,
    NegNominal,
};

struct Concept {
    CKind kind;
    int sym = -1;   // class / individual symbol
    int role = -1;
    std::uint32_t n = 0;
    std::vector<int> kids;
};

class ConceptTable {
public:
    int class_sym(const std::string& name) { return sym(class_ids_, name); }
    int role_sym(const std::string& name) { return sym(role_ids_, name); }
    int ind_sym(const std::string& name) {
        auto it = ind_ids_.find(name);
        if (it != ind_ids_.end())
            return it->second;
        int id = static_cast<int>(ind_names_.size());
        ind_ids_[name] = id;
        ind_names_.push_back(name);
        return id;
    }

    const Concept& at(int id) const { return concepts_[id]; }
    std::size_t ind_count() const { return ind_names_.size(); }

    int intern(const ClassExprPtr& e, bool negate) {
        switch (e->kind) {
        case ExprKind::Named:
            return leaf(negate ? CKind::NegNamed : CKind::Named, class_sym(e->name));
        case ExprKind::Top:
            return leaf(negate ? CKind::Bottom : CKind::Top, -1);
        case ExprKind::Bottom:
            return leaf(negate ? CKind::Top : CKind::Bottom, -1);
        case ExprKind::Not:
            return intern(e->children[0], !negate);
        case ExprKind::And:
        case ExprKind::Or: {
            bool conj = (e->kind == ExprKind::And) != negate;
            std::vector<int> kids;
            for (const auto& k : e->children)
                kids.push_back(intern(k, negate));
            return junction(conj, std::move(kids));
        }
        case ExprKind::Some:
        case ExprKind::All: {
            bool some = (e->kind == ExprKind::Some) != negate;
            int filler = intern(e->children[0], negate);
            return restriction(some ? CKind::Some : CKind::All, role_sym(e->name), 0, filler);
        }
        case ExprKind::AtLeast: {
            int filler = intern(e->children[0], false);
            if (!negate) {
                if (e->number == 0)
                    return leaf(CKind::Top, -1);
                return restriction(CKind::AtLeast, role_sym(e->name), e->number, filler);
            }
            if (e->number == 0)
                return leaf(CKind::Bottom, -1);
            return restriction(CKind::AtMost, role_sym(e->name), e->number - 1, filler);
        }
        case ExprKind::AtMost: {
            int filler = intern(e->children[0], false);
            if (!negate)
                return restriction(CKind::AtMost, role_sym(e->name), e->number, filler);
            return restriction(CKind::AtLeast, role_sym(e->name), e->number + 1, filler);
        }
        case ExprKind::OneOf:
            return leaf(negate ? CKind::NegNominal : CKind::Nominal, ind_sym(e->name));
        }
        throw Error("InternalError", "unhandled expression kind");
    }

    // NNF complement of an interned concept, memoized.
    int negate(int id) {
        auto it = neg_.find(id);
        if (it != neg_.end())
            return it->second;
        const Concept c = concepts_[id];
        int result;
        switch (c.kind) {
        case CKind::Top:
            result = leaf(CKind::Bottom, -1);
            break;
        case CKind::Bottom:
            result = leaf(CKind::Top, -1);
            break;
        case CKind::Named:
            result = leaf(CKind::NegNamed, c.sym);
            break;
        case CKind::NegNamed:
            result = leaf(CKind::Named, c.sym);
            break;
        case CKind::Nominal:
            result = leaf(CKind::NegNominal, c.sym);
            break;
        case CKind::NegNominal:
            result = leaf(CKind::Nominal, c.sym);
            break;
        case CKind::And:
        case CKind::Or: {
            std::vector<int> kids;
            for (int k : c.kids)
                kids.push_back(negate(k));
            result = junction(c.kind == CKind::Or, std::move(kids));
            break;
        }
        case CKind::Some:
            result = restriction(CKind::All, c.role, 0, negate(c.kids[0]));
            break;
        case CKind::All:
            result = restriction(CKind::Some, c.role, 0, negate(c.kids[0]));
            break;
        case CKind::AtLeast:
            result = c.n == 0 ? leaf(CKind::Bottom, -1)
                              : restriction(CKind::AtMost, c.role, c.n - 1, c.kids[0]);
            break;
        case CKind::AtMost:
            result = restriction(CKind::AtLeast, c.role, c.n + 1, c.kids[0]);
            break;
        default:
            throw Error("InternalError", "unhandled concept kind");
        }
        neg_[id] = result;
        neg_[result] = id;
        return result;
    }

private:
    std::vector<Concept> concepts_;
    std::map<std::string, int> keys_;
    std::map<int, int> neg_;
    std::map<std::string, int> class_ids_, role_ids_, ind_ids_;
    std::vector<std::string> ind_names_;

    static int sym(std::map<std::string, int>& table, const std::string& name) {
        auto it = table.find(name);
        if (it != table.end())
            return it->second;
        int id = static_cast<int>(table.size());
        table[name] = id;
        return id;
    }

    int store(Concept c) {
        std::ostringstream key;
        key << static_cast<int>(c.kind) << '|' << c.sym << '|' << c.role << '|' << c.n << '|';
        for (int k : c.kids)
            key << k << ',';
        auto it = keys_.find(key.str());
        if (it != keys_.end())
            return it->second;
        int id = static_cast<int>(concepts_.size());
        keys_[key.str()] = id;
        concepts_.push_back(std::move(c));
        return id;
    }

    int leaf(CKind kind, int symbol) {
        Concept c;
        c.kind = kind;
        c.sym = symbol;
        return store(std::move(c));
    }

    int junction(bool conj, std::vector<int> kids) {
        std::sort(kids.begin(), kids.end());
        kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
        if (kids.empty())
            return leaf(conj ? CKind::Top : CKind::Bottom, -1);
        if (kids.size() == 1)
            return kids.front();
        Concept c;
        c.kind = conj ? CKind::And : CKind::Or;
        c.kids = std::move(kids);
        return store(std::move(c));
    }

    int restriction(CKind kind, int role, std::uint32_t n, int filler) {
        Concept c;
        c.kind = kind;
        c.role = role;
        c.n = n;
        c.kids = {filler};
        return store(std::move(c));
    }
};

struct TabNode {
    std::set<int> label;
    std::map<int, std::set<int>> succ;  // role -> successor node ids
    int parent = -1;                    // tree parent; -1 for root nodes
    bool root = false;
    bool removed = false;
};

struct Graph {
    std::vector<TabNode> nodes;
    std::set<std::pair<int, int>> distinct;  // normalized (low, high); (x, x) is a clash
    bool clash = false;
};

class Tableau {
public:
    Tableau(const Ontology& onto, std::uint64_t budget) : budget_(budget) {
        // Assign individual symbols first so that root node i represents
        // individual symbol i, regardless of where nominals occur.
        for (const std::string& name : onto.individuals())
            table_.ind_sym(name);

        // GCIs guarded by a named class are absorbed: their residue fires
        // only on nodes that carry the guard. The rest are internalized, so
        // every node carries nnf(not C or D).
        for (const Axiom& ax : onto.axioms()) {
            switch (ax.kind) {
            case AxiomKind::SubClassOf:
                if (absorb_gci(ax.exprs[0], ax.exprs[1]))
                    break;
                tbox_.push_back(table_.intern(
                    ClassExpr::disjunction(
                        {ClassExpr::negation(ax.exprs[0]), ax.exprs[1]}),
                    false));
                break;
            case AxiomKind::ClassAssertion:
            case AxiomKind::PropertyAssertion:
            case AxiomKind::DifferentIndividuals:
                break;
            default:
                throw Error("InternalError", "unnormalized axiom reached the reasoner");
            }
        }
        std::sort(tbox_.begin(), tbox_.end());
        tbox_.erase(std::unique(tbox_.begin(), tbox_.end()), tbox_.end());

        // One root node per named individual, labeled with its nominal.
        for (const std::string& name : onto.individuals()) {
            TabNode node;
            node.root = true;
            node.label.insert(table_.intern(ClassExpr::one_of({name}), false));
            for (int c : tbox_)
                node.label.insert(c);
            init_.nodes.push_back(std::move(node));
        }
        if (init_.nodes.empty()) {
            // Interpretation domains are non-empty; check the TBox on one
            // anonymous element.
            TabNode node;
            node.root = true;
            for (int c : tbox_)
                node.label.insert(c);
            init_.nodes.push_back(std::move(node));
        }

        for (const Axiom& ax : onto.axioms()) {
            switch (ax.kind) {
            case AxiomKind::ClassAssertion:
                add_concept(init_, table_.ind_sym(ax.individuals[0]),
                            table_.intern(ax.exprs[0], false));
                break;
            case AxiomKind::PropertyAssertion: {
                int from = table_.ind_sym(ax.individuals[0]);
                int to = table_.ind_sym(ax.individuals[1]);
                init_.nodes[from].succ[table_.role_sym(ax.role)].insert(to);
                break;
            }
            case AxiomKind::DifferentIndividuals: {
                int a = table_.ind_sym(ax.individuals[0]);
                int b = table_.ind_sym(ax.individuals[1]);
                init_.distinct.insert({std::min(a, b), std::max(a, b)});
                if (a == b)
                    init_.clash = true;
                break;
            }
            default:
                break;
            }
        }
    }

    bool satisfiable() { return expand(init_); }

private:
    ConceptTable table_;
    std::vector<int> tbox_;
    std::map<int, std::vector<int>> absorb_;  // guard class -> residues
    Graph init_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;

    // SubClassOf(A, D) and SubClassOf(And(A, C1..Ck), D) with a named A
    // become A -> D and A -> (not C1 or .. or not Ck or D) respectively.
    bool absorb_gci(const ClassExprPtr& lhs, const ClassExprPtr& rhs) {
        std::string guard;
        std::vector<ClassExprPtr> rest;
        if (lhs->kind == ExprKind::Named) {
            guard = lhs->name;
        } else if (lhs->kind == ExprKind::And) {
            for (const auto& k : lhs->children) {
                if (guard.empty() && k->kind == ExprKind::Named)
                    guard = k->name;
                else
                    rest.push_back(k);
            }
            if (guard.empty())
                return false;
        } else {
            return false;
        }
        ClassExprPtr residue = rhs;
        if (!rest.empty()) {
            std::vector<ClassExprPtr> parts;
            for (const auto& k : rest)
                parts.push_back(ClassExpr::negation(k));
            parts.push_back(rhs);
            residue = ClassExpr::disjunction(parts);
        }
        absorb_[table_.class_sym(guard)].push_back(table_.intern(residue, false));
        return true;
    }

    void spend(std::uint64_t amount = 1) {
        used_ += amount;
        if (used_ > budget_)
            throw Error("ResourceLimit", "tableau node budget exceeded");
    }

    bool alive(const Graph& g, int x) const { return !g.nodes[x].removed; }

    static bool has(const TabNode& node, int cid) { return node.label.count(cid) > 0; }

    bool add_concept(Graph& g, int x, int c) {
        if (!g.nodes[x].label.insert(c).second)
            return false;
        const Concept& con = table_.at(c);
        if (con.kind == CKind::Named) {
            auto it = absorb_.find(con.sym);
            if (it != absorb_.end())
                for (int residue : it->second)
                    add_concept(g, x, residue);
        }
        return true;
    }

    bool has_clash(Graph& g) {
        if (g.clash)
            return true;
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind == CKind::Bottom)
                    return true;
                int n = table_.negate(c);
                if (n > c && g.nodes[x].label.count(n))
                    return true;
                if (n < c && g.nodes[x].label.count(n))
                    return true;
            }
        }
        return false;
    }

    static bool marked_distinct(const Graph& g, int a, int b) {
        return g.distinct.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    // Merges node `gone` into node `keep`, SHOIQ-style: labels and
    // distinctness constraints are unioned, incoming edges are redirected,
    // outgoing edges to root nodes are preserved, and the blockable subtree
    // below `gone` is pruned.
    void merge(Graph& g, int keep, int gone) {
        if (keep == gone)
            return;
        spend();
        TabNode& k = g.nodes[keep];
        TabNode& d = g.nodes[gone];
        for (int c : d.label)
            k.label.insert(c);

        std::set<std::pair<int, int>> distinct;
        for (auto [a, b] : g.distinct) {
            if (a == gone)
                a = keep;
            if (b == gone)
                b = keep;
            if (a == b)
                g.clash = true;
            distinct.insert({std::min(a, b), std::max(a, b)});
        }
        g.distinct = std::move(distinct);

        for (std::size_t u = 0; u < g.nodes.size(); ++u) {
            if (!alive(g, static_cast<int>(u)) || static_cast<int>(u) == gone)
                continue;
            for (auto& [role, targets] : g.nodes[u].succ) {
                if (targets.erase(gone))
                    targets.insert(keep);
            }
        }

        std::vector<int> to_prune;
        for (auto& [role, targets] : d.succ) {
            for (int y : targets) {
                if (y == keep || y == gone) {
                    g.nodes[keep].succ[role].insert(keep);
                    continue;
                }
                if (g.nodes[y].root)
                    g.nodes[keep].succ[role].insert(y);
                else
                    to_prune.push_back(y);
            }
        }
        d.succ.clear();
        d.removed = true;
        d.label.clear();
        for (int y : to_prune)
            prune(g, y);
    }

    void prune(Graph& g, int x) {
        if (g.nodes[x].removed)
            return;
        for (std::size_t u = 0; u < g.nodes.size(); ++u) {
            if (!alive(g, static_cast<int>(u)) || static_cast<int>(u) == x)
                continue;
            for (auto& [role, targets] : g.nodes[u].succ)
                targets.erase(x);
        }
        std::vector<int> kids;
        for (auto& [role, targets] : g.nodes[x].succ)
            for (int y : targets)
                if (!g.nodes[y].root && g.nodes[y].parent == x)
                    kids.push_back(y);
        g.nodes[x].succ.clear();
        g.nodes[x].removed = true;
        g.nodes[x].label.clear();
        std::set<std::pair<int, int>> distinct;
        for (auto [a, b] : g.distinct)
            if (a != x && b != x)
                distinct.insert({a, b});
        g.distinct = std::move(distinct);
        for (int y : kids)
            prune(g, y);
    }

    int create_child(Graph& g, int parent, int c0) {
        spend();
        TabNode node;
        node.parent = parent;
        for (int c : tbox_)
            node.label.insert(c);
        g.nodes.push_back(std::move(node));
        int y = static_cast<int>(g.nodes.size() - 1);
        add_concept(g, y, c0);
        return y;
    }

    // r-successors of x in ascending order.
    std::vector<int> successors(const Graph& g, int x, int role) const {
        std::vector<int> out;
        auto it = g.nodes[x].succ.find(role);
        if (it == g.nodes[x].succ.end())
            return out;
        for (int y : it->second)
            if (alive(g, y))
                out.push_back(y);
        return out;
    }

    bool directly_blocked(const Graph& g, int x) const {
        if (g.nodes[x].root)
            return false;
        for (int y = g.nodes[x].parent; y >= 0; y = g.nodes[y].parent) {
            if (!g.nodes[y].root && g.nodes[y].label == g.nodes[x].label)
                return true;
        }
        return false;
    }

    bool generation_blocked(const Graph& g, int x) const {
        for (int y = x; y >= 0; y = g.nodes[y].parent)
            if (directly_blocked(g, y))
                return true;
        return false;
    }

    // True if x has n C-successors over role r that are pairwise marked
    // distinct (exact search; n stays tiny at the scales we handle).
    bool has_distinct_witnesses(const Graph& g, int x, int role, int filler,
                                std::uint32_t n) const {
        std::vector<int> cands;
        for (int y : successors(g, x, role))
            if (has(g.nodes[y], filler))
                cands.push_back(y);
        if (cands.size() < n)
            return false;
        std::vector<int> chosen;
        return pick_distinct(g, cands, 0, n, chosen);
    }

    bool pick_distinct(const Graph& g, const std::vector<int>& cands, std::size_t from,
                       std::uint32_t need, std::vector<int>& chosen) const {
        if (need == 0)
            return true;
        for (std::size_t i = from; i + need <= cands.size() + 0u; ++i) {
            bool ok = true;
            for (int z : chosen)
                if (!marked_distinct(g, z, cands[i])) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(cands[i]);
            if (pick_distinct(g, cands, i + 1, need - 1, chosen))
                return true;
            chosen.pop_back();
        }
        return false;
    }

    // One pass of the deterministic rules; true if anything changed.
    bool apply_deterministic(Graph& g) {
        // and-rule
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind != CKind::And)
                    continue;
                bool missing = false;
                for (int k : con.kids)
                    if (!has(g.nodes[x], k)) {
                        missing = true;
                        break;
                    }
                if (!missing)
                    continue;
                bool changed = false;
                for (int k : con.kids)
                    changed |= add_concept(g, static_cast<int>(x), k);
                if (changed)
                    return true;
            }
        }
        // forall-rule
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind != CKind::All)
                    continue;
                for (int y : successors(g, static_cast<int>(x), con.role))
                    if (add_concept(g, y, con.kids[0]))
                        return true;
            }
        }
        // nominal rule: two live nodes sharing a nominal are identified
        {
            std::map<int, int> owner;
            for (std::size_t x = 0; x < g.nodes.size(); ++x) {
                if (!alive(g, static_cast<int>(x)))
                    continue;
                for (int c : g.nodes[x].label) {
                    const Concept& con = table_.at(c);
                    if (con.kind != CKind::Nominal)
                        continue;
                    auto it = owner.find(con.sym);
                    if (it == owner.end()) {
                        owner[con.sym] = static_cast<int>(x);
                        continue;
                    }
                    int a = it->second;
                    int b = static_cast<int>(x);
                    if (marked_distinct(g, a, b)) {
                        g.clash = true;
                        return true;
                    }
                    // keep the root if the pair is mixed, else the older node
                    int keep = a, gone = b;
                    if (!g.nodes[a].root && g.nodes[b].root)
                        std::swap(keep, gone);
                    merge(g, keep, gone);
                    return true;
                }
            }
        }
        return false;
    }

    struct Branch {
        // alternatives are applied to copies of the graph, in order
        std::vector<std::pair<int, int>> add;          // (node, concept) alternatives
        std::vector<std::pair<int, int>> merge_pairs;  // (keep, gone) alternatives
    };

    std::optional<Branch> find_branch(Graph& g) {
        // or-rule
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind != CKind::Or)
                    continue;
                bool satisfied = false;
                for (int k : con.kids)
                    if (has(g.nodes[x], k)) {
                        satisfied = true;
                        break;
                    }
                if (satisfied)
                    continue;
                Branch b;
                for (int k : con.kids)
                    b.add.push_back({static_cast<int>(x), k});
                return b;
            }
        }
        // choose-rule for qualified at-most restrictions
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind != CKind::AtMost)
                    continue;
                for (int y : successors(g, static_cast<int>(x), con.role)) {
                    int filler = con.kids[0];
                    int neg = table_.negate(filler);
                    if (has(g.nodes[y], filler) || has(g.nodes[y], neg))
                        continue;
                    Branch b;
                    b.add.push_back({y, filler});
                    b.add.push_back({y, neg});
                    return b;
                }
            }
        }
        // at-most rule: merge two non-distinct C-successors, or clash
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind != CKind::AtMost)
                    continue;
                std::vector<int> hits;
                for (int y : successors(g, static_cast<int>(x), con.role))
                    if (has(g.nodes[y], con.kids[0]))
                        hits.push_back(y);
                if (hits.size() <= con.n)
                    continue;
                Branch b;
                for (std::size_t i = 0; i < hits.size(); ++i)
                    for (std::size_t j = i + 1; j < hits.size(); ++j) {
                        if (marked_distinct(g, hits[i], hits[j]))
                            continue;
                        int keep = hits[i], gone = hits[j];
                        if (!g.nodes[keep].root && g.nodes[gone].root)
                            std::swap(keep, gone);
                        b.merge_pairs.push_back({keep, gone});
                    }
                if (b.merge_pairs.empty())
                    g.clash = true;  // more than n pairwise-distinct witnesses
                return b;
            }
        }
        return std::nullopt;
    }

    // One application of a generating rule; true if anything was created.
    bool apply_generating(Graph& g) {
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            if (!alive(g, static_cast<int>(x)) || generation_blocked(g, static_cast<int>(x)))
                continue;
            for (int c : g.nodes[x].label) {
                const Concept& con = table_.at(c);
                if (con.kind == CKind::Some) {
                    bool witnessed = false;
                    for (int y : successors(g, static_cast<int>(x), con.role))
                        if (has(g.nodes[y], con.kids[0])) {
                            witnessed = true;
                            break;
                        }
                    if (witnessed)
                        continue;
                    int y = create_child(g, static_cast<int>(x), con.kids[0]);
                    g.nodes[x].succ[con.role].insert(y);
                    return true;
                }
                if (con.kind == CKind::AtLeast) {
                    if (con.n == 0 ||
                        has_distinct_witnesses(g, static_cast<int>(x), con.role, con.kids[0],
                                               con.n))
                        continue;
                    std::vector<int> fresh;
                    for (std::uint32_t i = 0; i < con.n; ++i) {
                        int y = create_child(g, static_cast<int>(x), con.kids[0]);
                        g.nodes[x].succ[con.role].insert(y);
                        fresh.push_back(y);
                    }
                    for (std::size_t i = 0; i < fresh.size(); ++i)
                        for (std::size_t j = i + 1; j < fresh.size(); ++j)
                            g.distinct.insert({fresh[i], fresh[j]});
                    return true;
                }
            }
        }
        return false;
    }

    bool expand(Graph g) {
        while (true) {
            if (has_clash(g))
                return false;
            if (apply_deterministic(g))
                continue;
            if (auto branch = find_branch(g)) {
                if (g.clash)
                    return false;
                for (auto [node, cid] : branch->add) {
                    spend();
                    Graph copy = g;
                    add_concept(copy, node, cid);
                    if (expand(std::move(copy)))
                        return true;
                }
                for (auto [keep, gone] : branch->merge_pairs) {
                    spend();
                    Graph copy = g;
                    merge(copy, keep, gone);
                    if (expand(std::move(copy)))
                        return true;
                }
                return false;
            }
            if (apply_generating(g))
                continue;
            return true;  // complete and clash-free
        }
    }
};

}  // namespace

bool is_consistent(const Ontology& onto, const ReasonerLimits& limits) {
    Tableau tableau(onto, limits.node_budget);
    return tableau.satisfiable();
}

bool entails(const Ontology& onto, const Entailment& target, const ReasonerLimits& limits) {
    if (target.inconsistency)
        return !is_consistent(onto, limits);
    Ontology extended = onto;
    const Axiom& ax = target.target;
    if (ax.kind == AxiomKind::ClassAssertion) {
        extended.add(Axiom::class_assertion(ax.individuals[0], ClassExpr::negation(ax.exprs[0])));
    } else if (ax.kind == AxiomKind::PropertyAssertion) {
        extended.add(Axiom::class_assertion(
            ax.individuals[0],
            ClassExpr::all(ax.role,
                           ClassExpr::negation(ClassExpr::one_of({ax.individuals[1]})))));
    } else {
        throw Error("InternalError", "entailment target must be an ABox assertion");
    }
    return !is_consistent(extended, limits);
}

std::vector<std::string> instances(const Ontology& onto, const ClassExprPtr& c,
                                   const ReasonerLimits& limits) {
    std::vector<std::string> out;
    for (const std::string& ind : onto.individuals()) {
        if (entails(onto, Entailment::assertion(Axiom::class_assertion(ind, c)), limits))
            out.push_back(ind);
    }
    return out;
}

}  // namespace omp::dl
