#pragma once

#include <vector>

namespace testsupport {

// Hand-constructed reasoner checks. Every case is decided independently by
// the bounded-model enumerator at `bound`; entailment cases additionally
// name a target assertion `ind : expr`. Bounds are chosen so that the
// refuting direction stays exhaustive (a countermodel, when one exists,
// fits in `bound` elements).
struct ReasonerCase {
    const char* name;
    const char* ontology;
    const char* ind;   // nullptr: consistency case
    const char* expr;  // entailment target, parsed as a class expression
    bool expected;     // is_consistent(...) or entails(...)
    int bound;
};

inline const std::vector<ReasonerCase>& reasoner_cases() {
    static const std::vector<ReasonerCase> cases = {
        // --- consistency: propositional core ---
        {"single assertion", "ClassAssertion(a, A)\n", nullptr, nullptr, true, 1},
        {"subsumption satisfiable", "ClassAssertion(a, A)\nSubClassOf(A, B)\n",
         nullptr, nullptr, true, 1},
        {"direct contradiction", "ClassAssertion(a, And(A, Not(A)))\n", nullptr,
         nullptr, false, 2},
        {"disjointness clash",
         "DisjointClasses(A, B)\nClassAssertion(a, A)\nClassAssertion(a, B)\n",
         nullptr, nullptr, false, 2},
        {"bottom subsumer", "SubClassOf(A, Nothing)\nClassAssertion(a, A)\n",
         nullptr, nullptr, false, 2},
        {"covering axiom violated",
         "SubClassOf(Thing, A)\nClassAssertion(a, Not(A))\n", nullptr, nullptr,
         false, 2},
        {"chain contradiction",
         "SubClassOf(A, B)\nSubClassOf(B, C)\nClassAssertion(a, And(A, Not(C)))\n",
         nullptr, nullptr, false, 2},
        // --- consistency: disjunction branching ---
        {"disjunction with disjoint limbs",
         "ClassAssertion(a, Or(A, B))\nDisjointClasses(A, B)\n", nullptr,
         nullptr, true, 1},
        {"first disjunct dead",
         "ClassAssertion(a, Or(And(A, Not(A)), B))\n", nullptr, nullptr, true,
         1},
        {"both disjuncts dead",
         "ClassAssertion(a, Or(A, B))\nSubClassOf(A, Nothing)\nSubClassOf(B, "
         "Nothing)\n",
         nullptr, nullptr, false, 2},
        {"covering disjunction blocked",
         "SubClassOf(Thing, Or(A, B))\nClassAssertion(a, And(Not(A), "
         "Not(B)))\n",
         nullptr, nullptr, false, 2},
        // --- consistency: existential / universal interplay ---
        {"looping existential",
         "ClassAssertion(a, Some(r, A))\nSubClassOf(A, Some(r, A))\n", nullptr,
         nullptr, true, 2},
        {"existential into disjoint pair",
         "ClassAssertion(a, Some(r, And(A, B)))\nDisjointClasses(A, B)\n",
         nullptr, nullptr, false, 2},
        {"some meets all",
         "ClassAssertion(a, Some(r, A))\nClassAssertion(a, All(r, B))\n"
         "DisjointClasses(A, B)\n",
         nullptr, nullptr, false, 2},
        {"some meets negated all",
         "ClassAssertion(a, Some(r, A))\nClassAssertion(a, All(r, Not(A)))\n",
         nullptr, nullptr, false, 2},
        {"vacuous universal", "ClassAssertion(a, All(r, A))\n", nullptr,
         nullptr, true, 1},
        {"value restriction clash",
         "PropertyAssertion(a, r, b)\nClassAssertion(a, All(r, A))\n"
         "ClassAssertion(b, Not(A))\n",
         nullptr, nullptr, false, 2},
        {"nested universals",
         "PropertyAssertion(a, r, b)\nPropertyAssertion(b, r, c)\n"
         "ClassAssertion(a, All(r, All(r, A)))\nClassAssertion(c, Not(A))\n",
         nullptr, nullptr, false, 3},
        {"global successor demand",
         "SubClassOf(Thing, Some(r, Thing))\nClassAssertion(a, A)\n", nullptr,
         nullptr, true, 1},
        {"universal loop with nominal",
         "ClassAssertion(a, All(r, OneOf(a)))\nPropertyAssertion(a, r, b)\n",
         nullptr, nullptr, true, 2},
        // --- consistency: counting and merging ---
        {"zero successors violated",
         "ClassAssertion(a, AtMost(0, r, Thing))\nPropertyAssertion(a, r, b)\n",
         nullptr, nullptr, false, 2},
        {"merge resolves excess",
         "ClassAssertion(a, AtMost(1, r, Thing))\nPropertyAssertion(a, r, b)\n"
         "PropertyAssertion(a, r, c)\n",
         nullptr, nullptr, true, 2},
        {"distinctness blocks the merge",
         "ClassAssertion(a, AtMost(1, r, Thing))\nPropertyAssertion(a, r, b)\n"
         "PropertyAssertion(a, r, c)\nDifferentIndividuals(b, c)\n",
         nullptr, nullptr, false, 3},
        {"labels block the merge",
         "ClassAssertion(a, AtMost(1, r, Thing))\nPropertyAssertion(a, r, b)\n"
         "PropertyAssertion(a, r, c)\nClassAssertion(b, A)\n"
         "ClassAssertion(c, Not(A))\n",
         nullptr, nullptr, false, 3},
        {"at-least versus at-most",
         "ClassAssertion(a, AtLeast(2, r, Thing))\n"
         "ClassAssertion(a, AtMost(1, r, Thing))\n",
         nullptr, nullptr, false, 3},
        {"at-least satisfiable", "ClassAssertion(a, AtLeast(2, r, Thing))\n",
         nullptr, nullptr, true, 3},
        {"qualified at-least versus at-most",
         "ClassAssertion(a, AtLeast(2, r, A))\n"
         "ClassAssertion(a, AtMost(1, r, Thing))\n",
         nullptr, nullptr, false, 3},
        {"qualified overflow",
         "ClassAssertion(a, And(AtLeast(2, r, A), AtMost(2, r, Thing)))\n"
         "ClassAssertion(a, Some(r, Not(A)))\n",
         nullptr, nullptr, false, 4},
        {"exactly satisfiable", "ClassAssertion(a, Exactly(2, r, A))\n",
         nullptr, nullptr, true, 3},
        {"two-hand static part",
         "DifferentIndividuals(blockA, blockB, blockC)\n"
         "SubClassOf(PR2, And(Robot, AtMost(2, holds, Block)))\n"
         "SubClassOf(And(PR2, Exactly(2, holds, Block)), FullHands)\n"
         "ClassAssertion(stackBot, PR2)\n",
         nullptr, nullptr, true, 4},
        {"three held blocks overflow",
         "DifferentIndividuals(blockA, blockB, blockC)\n"
         "SubClassOf(PR2, AtMost(2, holds, Block))\n"
         "ClassAssertion(stackBot, PR2)\nClassAssertion(blockA, Block)\n"
         "ClassAssertion(blockB, Block)\nClassAssertion(blockC, Block)\n"
         "PropertyAssertion(stackBot, holds, blockA)\n"
         "PropertyAssertion(stackBot, holds, blockB)\n"
         "PropertyAssertion(stackBot, holds, blockC)\n",
         nullptr, nullptr, false, 4},
        // --- consistency: nominals and inequality ---
        {"nominal merge allowed", "ClassAssertion(a, OneOf(b))\n", nullptr,
         nullptr, true, 2},
        {"nominal merge forbidden",
         "DifferentIndividuals(a, b)\nClassAssertion(a, OneOf(b))\n", nullptr,
         nullptr, false, 2},
        {"funnel through one nominal",
         "SubClassOf(A, OneOf(n))\nClassAssertion(a, A)\nClassAssertion(b, "
         "A)\nDifferentIndividuals(a, b)\n",
         nullptr, nullptr, false, 3},
        {"edge into labeled nominal",
         "ClassAssertion(a, Some(r, OneOf(b)))\nClassAssertion(b, A)\n"
         "ClassAssertion(a, All(r, Not(A)))\n",
         nullptr, nullptr, false, 2},
        {"nominal disjunction dead ends",
         "ClassAssertion(a, Or(OneOf(b), OneOf(c)))\nDifferentIndividuals(a, "
         "b)\nDifferentIndividuals(a, c)\n",
         nullptr, nullptr, false, 3},
        {"nominal disjunction escape",
         "ClassAssertion(a, Or(OneOf(b), OneOf(c)))\nDifferentIndividuals(a, "
         "b)\n",
         nullptr, nullptr, true, 2},
        {"self inequality", "ClassAssertion(a, Not(OneOf(a)))\n", nullptr,
         nullptr, false, 1},
        // --- entailment: structural ---
        {"modus ponens", "SubClassOf(A, B)\nClassAssertion(a, A)\n", "a", "B",
         true, 2},
        {"unrelated class", "SubClassOf(A, B)\nClassAssertion(a, A)\n", "a",
         "C", false, 2},
        {"two-step chain",
         "SubClassOf(A, B)\nSubClassOf(B, C)\nClassAssertion(a, A)\n", "a",
         "C", true, 2},
        {"case split closes",
         "ClassAssertion(a, Or(A, B))\nSubClassOf(A, C)\nSubClassOf(B, C)\n",
         "a", "C", true, 2},
        {"disjunction does not pick sides", "ClassAssertion(a, Or(A, B))\n",
         "a", "A", false, 1},
        {"existential witness",
         "PropertyAssertion(a, r, b)\nClassAssertion(b, A)\n", "a",
         "Some(r, A)", true, 2},
        {"unlabeled successor", "PropertyAssertion(a, r, b)\n", "a",
         "Some(r, A)", false, 2},
        {"universal propagation",
         "ClassAssertion(a, All(r, A))\nPropertyAssertion(a, r, b)\n", "b",
         "A", true, 2},
        {"global axiom applies",
         "SubClassOf(Thing, A)\nClassAssertion(b, B)\n", "b", "A", true, 2},
        {"existential trigger",
         "SubClassOf(Some(r, A), B)\nPropertyAssertion(a, r, b)\n"
         "ClassAssertion(b, A)\n",
         "a", "B", true, 2},
        {"vacuous universal trigger",
         "SubClassOf(All(r, A), B)\nClassAssertion(a, AtMost(0, r, Thing))\n",
         "a", "B", true, 2},
        {"ex falso quodlibet",
         "DisjointClasses(A, B)\nClassAssertion(a, A)\nClassAssertion(a, B)\n",
         "a", "C", true, 2},
        // --- entailment: counting and merging ---
        {"full hands derivation",
         "SubClassOf(PR2, AtMost(2, holds, Block))\n"
         "SubClassOf(And(PR2, Exactly(2, holds, Block)), FullHands)\n"
         "ClassAssertion(p, PR2)\nClassAssertion(x, Block)\n"
         "ClassAssertion(y, Block)\nDifferentIndividuals(x, y)\n"
         "PropertyAssertion(p, holds, x)\nPropertyAssertion(p, holds, y)\n",
         "p", "FullHands", true, 3},
        {"full hands needs distinctness",
         "SubClassOf(PR2, AtMost(2, holds, Block))\n"
         "SubClassOf(And(PR2, Exactly(2, holds, Block)), FullHands)\n"
         "ClassAssertion(p, PR2)\nClassAssertion(x, Block)\n"
         "ClassAssertion(y, Block)\n"
         "PropertyAssertion(p, holds, x)\nPropertyAssertion(p, holds, y)\n",
         "p", "FullHands", false, 3},
        {"forced identification",
         "ClassAssertion(a, AtMost(1, r, Thing))\nPropertyAssertion(a, r, "
         "b)\nPropertyAssertion(a, r, c)\n",
         "b", "OneOf(c)", true, 3},
        {"declared distinct",
         "DifferentIndividuals(a, b)\n", "a", "Not(OneOf(b))", true, 2},
        {"at-least implies some", "ClassAssertion(a, AtLeast(2, r, A))\n", "a",
         "Some(r, A)", true, 3},
        {"two distinct successors count",
         "PropertyAssertion(a, r, b)\nPropertyAssertion(a, r, c)\n"
         "DifferentIndividuals(b, c)\n",
         "a", "AtLeast(2, r, Thing)", true, 3},
        {"mergeable successors do not count",
         "PropertyAssertion(a, r, b)\nPropertyAssertion(a, r, c)\n", "a",
         "AtLeast(2, r, Thing)", false, 3},
        {"exactly caps above",
         "ClassAssertion(a, Exactly(2, r, A))\n", "a", "AtMost(2, r, A)",
         true, 4},
        {"nominal equality transfers labels",
         "ClassAssertion(a, OneOf(b))\nClassAssertion(b, A)\n", "a", "A",
         true, 2},
        {"nested existential rewrites",
         "ClassAssertion(a, Some(r, Some(r, A)))\nSubClassOf(A, B)\n", "a",
         "Some(r, Some(r, B))", true, 3},
    };
    return cases;
}

}  // namespace testsupport
