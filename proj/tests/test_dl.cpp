#include <random>

#include "doctest.h"
#include "omp/dl/model.hpp"
#include "omp/dl/parser.hpp"
#include "omp/dl/reasoner.hpp"
#include "omp/error.hpp"
#include "support/fixtures.hpp"
#include "support/model_enum.hpp"
#include "support/reasoner_cases.hpp"

using namespace omp;
using dl::Axiom;
using dl::ClassExpr;
using dl::Entailment;
using dl::Ontology;

namespace {

Ontology static_part(int blocks) {
    return dl::parse_ontology(testsupport::blocksworld_static_onto(blocks));
}

Axiom holds(const std::string& who, const std::string& what) {
    return Axiom::property_assertion(who, "holds", what);
}

Entailment full_hands(const std::string& who) {
    return Entailment::assertion(Axiom::class_assertion(who, ClassExpr::named("FullHands")));
}

}  // namespace

TEST_CASE("parse four-line static fragment expands sugar") {
    Ontology onto = dl::parse_ontology(testsupport::static_fragment_4line());
    // three pairwise inequalities + two subclass axioms + one typing assertion
    CHECK(onto.size() == 6);
    CHECK(onto.individuals() ==
          std::set<std::string>{"blockA", "blockB", "blockC", "stackBot"});
    CHECK(onto.contains(Axiom::different_individuals({"blockA", "blockB"})));
    CHECK(onto.contains(Axiom::different_individuals({"blockA", "blockC"})));
    CHECK(onto.contains(Axiom::different_individuals({"blockB", "blockC"})));
}

TEST_CASE("parse empty and comment-only input") {
    CHECK(dl::parse_ontology("").size() == 0);
    Ontology onto = dl::parse_ontology("# nothing here\n\n   \n# still nothing\n");
    CHECK(onto.size() == 0);
    CHECK(onto.individuals().empty());
}

TEST_CASE("parse single assertion") {
    Ontology onto = dl::parse_ontology("ClassAssertion(stackBot, PR2)\n");
    CHECK(onto.size() == 1);
    CHECK(onto.individuals() == std::set<std::string>{"stackBot"});
}

TEST_CASE("parse errors cite line numbers and name unsupported constructors") {
    try {
        dl::parse_ontology("ClassAssertion(a, A)\nSubClassOf(A B)\n");
        FAIL("expected syntax error");
    } catch (const Error& e) {
        CHECK(e.code() == "SyntaxError");
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    try {
        dl::parse_ontology("TransitiveObjectProperty(holds)\n");
        FAIL("expected unsupported-constructor error");
    } catch (const Error& e) {
        CHECK(e.code() == "UnsupportedConstructor");
        CHECK(std::string(e.what()).find("TransitiveObjectProperty") != std::string::npos);
    }
    try {
        dl::parse_ontology("SubClassOf(A, InverseOf(r))\n");
        FAIL("expected unsupported-constructor error");
    } catch (const Error& e) {
        CHECK(e.code() == "UnsupportedConstructor");
        CHECK(std::string(e.what()).find("InverseOf") != std::string::npos);
    }
    CHECK_THROWS_AS(dl::parse_ontology("DifferentIndividuals(a)\n"), Error);
}

TEST_CASE("sugar expansion") {
    Ontology eq = dl::parse_ontology("EquivalentClasses(A, B)\n");
    CHECK(eq.size() == 2);
    CHECK(eq.contains(Axiom::sub_class_of(ClassExpr::named("A"), ClassExpr::named("B"))));
    CHECK(eq.contains(Axiom::sub_class_of(ClassExpr::named("B"), ClassExpr::named("A"))));

    Ontology dis = dl::parse_ontology("DisjointClasses(A, B)\n");
    CHECK(dis.size() == 1);
    CHECK(dis.axioms()[0].str() == "SubClassOf(And(A, B), Nothing)");

    CHECK(dl::parse_class_expr("Exactly(2, holds, Block)")->str() ==
          "And(AtMost(2, holds, Block), AtLeast(2, holds, Block))");
    CHECK(dl::parse_class_expr("OneOf(a, b)")->str() == "Or(OneOf(a), OneOf(b))");
}

TEST_CASE("consistency of the stacking fixture") {
    Ontology onto = static_part(3);
    CHECK(onto.size() == 9);
    CHECK(dl::is_consistent(onto));

    Ontology two = onto;
    two.add(holds("stackBot", "blockA"));
    two.add(holds("stackBot", "blockB"));
    CHECK(dl::is_consistent(two));

    Ontology three = two;
    three.add(holds("stackBot", "blockC"));
    CHECK_FALSE(dl::is_consistent(three));
}

TEST_CASE("consistency basics") {
    CHECK(dl::is_consistent(Ontology{}));
    Ontology bad = dl::parse_ontology("SubClassOf(Thing, Nothing)\nClassAssertion(a, Thing)\n");
    CHECK_FALSE(dl::is_consistent(bad));
    // the empty-ABox case still rejects an unsatisfiable TBox
    CHECK_FALSE(dl::is_consistent(dl::parse_ontology("SubClassOf(Thing, Nothing)\n")));
}

TEST_CASE("entailment over the stacking fixture") {
    Ontology onto = static_part(3);
    Ontology two = onto;
    two.add(holds("stackBot", "blockA"));
    two.add(holds("stackBot", "blockB"));
    CHECK(dl::entails(two, full_hands("stackBot")));
    CHECK_FALSE(dl::entails(onto, full_hands("stackBot")));
    // cross-checked with the bounded model search
    CHECK_FALSE(testsupport::enum_entails(onto, full_hands("stackBot"), 5));
    CHECK(testsupport::enum_entails(two, full_hands("stackBot"), 4));

    CHECK(dl::entails(onto, Entailment::assertion(
                                Axiom::class_assertion("stackBot", ClassExpr::top()))));
    Ontology prop = dl::parse_ontology("PropertyAssertion(a, r, b)\n");
    CHECK(dl::entails(prop, Entailment::assertion(Axiom::property_assertion("a", "r", "b"))));
    CHECK_FALSE(dl::entails(prop, Entailment::assertion(Axiom::property_assertion("b", "r", "a"))));
}

TEST_CASE("instances") {
    Ontology onto = static_part(3);
    CHECK(dl::instances(onto, ClassExpr::named("Robot")) ==
          std::vector<std::string>{"stackBot"});
    CHECK(dl::instances(onto, ClassExpr::named("Block")) ==
          std::vector<std::string>{"blockA", "blockB", "blockC"});
    CHECK(dl::instances(onto, ClassExpr::top()) ==
          std::vector<std::string>{"blockA", "blockB", "blockC", "stackBot"});
    CHECK(dl::instances(onto, ClassExpr::named("FullHands")).empty());

    // an inconsistent ontology entails every membership
    Ontology bad = onto;
    bad.add(holds("stackBot", "blockA"));
    bad.add(holds("stackBot", "blockB"));
    bad.add(holds("stackBot", "blockC"));
    CHECK(dl::instances(bad, ClassExpr::named("FullHands")).size() == 4);
}

TEST_CASE("reasoner is deterministic across calls") {
    Ontology onto = static_part(3);
    onto.add(holds("stackBot", "blockA"));
    for (int i = 0; i < 3; ++i) {
        CHECK(dl::is_consistent(onto));
        CHECK_FALSE(dl::entails(onto, full_hands("stackBot")));
    }
}

TEST_CASE("node budget raises ResourceLimit") {
    Ontology onto = static_part(3);
    onto.add(holds("stackBot", "blockA"));
    onto.add(holds("stackBot", "blockB"));
    onto.add(holds("stackBot", "blockC"));
    dl::ReasonerLimits limits;
    limits.node_budget = 3;
    try {
        dl::is_consistent(onto, limits);
        FAIL("expected resource-limit error");
    } catch (const Error& e) {
        CHECK(e.code() == "ResourceLimit");
    }
}

TEST_CASE("tableau agrees with bounded model search on random ontologies") {
    std::mt19937 rng(20250815);
    const std::vector<std::string> inds = {"a", "b", "c"};
    const std::vector<std::string> classes = {"A", "B", "C"};
    const std::vector<std::string> roles = {"r", "s"};
    auto pick = [&](const std::vector<std::string>& pool) {
        return pool[rng() % pool.size()];
    };
    auto atom = [&]() {
        dl::ClassExprPtr c = ClassExpr::named(pick(classes));
        return rng() % 4 == 0 ? ClassExpr::negation(c) : c;
    };
    auto expr = [&]() -> dl::ClassExprPtr {
        switch (rng() % 8) {
        case 0:
            return ClassExpr::conjunction({atom(), atom()});
        case 1:
            return ClassExpr::disjunction({atom(), atom()});
        case 2:
            return ClassExpr::some(pick(roles), atom());
        case 3:
            return ClassExpr::all(pick(roles), atom());
        case 4:
            return ClassExpr::at_most(rng() % 2, pick(roles), atom());
        case 5:
            return ClassExpr::at_least(1 + rng() % 2, pick(roles), atom());
        case 6:
            return ClassExpr::one_of({pick(inds)});
        default:
            return atom();
        }
    };

    int checked = 0;
    for (int round = 0; round < 80; ++round) {
        Ontology onto;
        int n_axioms = 2 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n_axioms; ++i) {
            switch (rng() % 5) {
            case 0:
                onto.add(Axiom::sub_class_of(atom(), expr()));
                break;
            case 1:
                onto.add(Axiom::class_assertion(pick(inds), expr()));
                break;
            case 2:
                onto.add(Axiom::property_assertion(pick(inds), pick(roles), pick(inds)));
                break;
            case 3:
                onto.add(Axiom::different_individuals({"a", pick({"b", "c"})}));
                break;
            default:
                onto.add(Axiom::disjoint_classes(ClassExpr::named(pick(classes)),
                                                 ClassExpr::named(pick(classes))));
                break;
            }
        }
        bool tableau = dl::is_consistent(onto);
        int bound = static_cast<int>(onto.individuals().size()) + 3;
        bool enumerated = testsupport::has_model(onto, bound);
        INFO("ontology:\n" << onto.str());
        CHECK(tableau == enumerated);
        ++checked;
    }
    CHECK(checked == 80);
}

TEST_CASE("curated verdicts match the bounded-model enumerator") {
    for (const auto& c : testsupport::reasoner_cases()) {
        INFO(c.name);
        Ontology onto = dl::parse_ontology(c.ontology);
        if (c.ind == nullptr) {
            CHECK(dl::is_consistent(onto) == c.expected);
            CHECK(testsupport::has_model(onto, c.bound) == c.expected);
        } else {
            Entailment target = Entailment::assertion(
                Axiom::class_assertion(c.ind, dl::parse_class_expr(c.expr)));
            CHECK(dl::entails(onto, target) == c.expected);
            CHECK(testsupport::enum_entails(onto, target, c.bound) == c.expected);
        }
    }
}
