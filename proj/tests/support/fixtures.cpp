#include "support/fixtures.hpp"

#include <sstream>

namespace testsupport {

std::vector<std::string> block_names(int n) {
    static const char* names[] = {"blockA", "blockB", "blockC", "blockD", "blockE", "blockF"};
    std::vector<std::string> out;
    for (int i = 0; i < n && i < 6; ++i)
        out.push_back(names[i]);
    return out;
}

std::string blocksworld_domain() {
    return R"((define (domain blocksworld)
  (:requirements :strips :negative-preconditions)
  (:predicates (on ?x ?y) (onTable ?x) (clear ?x) (robot ?r)
               (holds ?r ?x) (fullHands ?r))
  (:action pickup
    :parameters (?r ?b)
    :precondition (and (robot ?r) (onTable ?b) (clear ?b) (not (fullHands ?r)))
    :effect (and (holds ?r ?b) (not (onTable ?b)) (not (clear ?b))))
  (:action putdown
    :parameters (?r ?b)
    :precondition (and (robot ?r) (holds ?r ?b))
    :effect (and (onTable ?b) (clear ?b) (not (holds ?r ?b))))
  (:action stack
    :parameters (?r ?b ?target)
    :precondition (and (robot ?r) (holds ?r ?b) (clear ?target))
    :effect (and (on ?b ?target) (clear ?b) (not (holds ?r ?b)) (not (clear ?target))))
  (:action unstack
    :parameters (?r ?b ?from)
    :precondition (and (robot ?r) (on ?b ?from) (clear ?b) (not (fullHands ?r)))
    :effect (and (holds ?r ?b) (clear ?from) (not (on ?b ?from)) (not (clear ?b))))
)
)";
}

std::string blocksworld_problem(int n_blocks) {
    auto blocks = block_names(n_blocks);
    std::ostringstream os;
    os << "(define (problem stack-" << n_blocks << ")\n";
    os << "  (:domain blocksworld)\n";
    os << "  (:objects stackBot";
    for (const auto& b : blocks)
        os << " " << b;
    os << ")\n  (:init (robot stackBot)";
    for (const auto& b : blocks)
        os << " (onTable " << b << ") (clear " << b << ")";
    os << ")\n";
    os << "  (:goal (on blockA blockB))\n)\n";
    return os.str();
}

std::string blocksworld_static_onto(int n_blocks) {
    auto blocks = block_names(n_blocks);
    std::ostringstream os;
    os << "# static knowledge for the two-hand stacking robot\n";
    if (blocks.size() >= 2) {
        os << "DifferentIndividuals(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i)
                os << ", ";
            os << blocks[i];
        }
        os << ")\n";
    }
    os << "ClassAssertion(stackBot, PR2)\n";
    for (const auto& b : blocks)
        os << "ClassAssertion(" << b << ", Block)\n";
    os << "SubClassOf(PR2, And(Robot, AtMost(2, holds, Block)))\n";
    os << "SubClassOf(And(PR2, Exactly(2, holds, Block)), FullHands)\n";
    return os.str();
}

std::string blocksworld_fluent_interface(int n_blocks) {
    auto blocks = block_names(n_blocks);
    std::ostringstream os;
    os << "OBJECT    stackBot -> stackBot\n";
    for (const auto& b : blocks)
        os << "OBJECT    " << b << " -> " << b << "\n";
    os << "PREDICATE holds(_,_) -> holds\n";
    return os.str();
}

std::string blocksworld_query_interface() {
    return R"(PREDICATE: fullHands
VARIABLES: ?r
TYPE_SPECIFICATION:
    Robot(?r)
QUERY:
    FullHands(?r)
)";
}

std::string static_fragment_4line() {
    return R"(DifferentIndividuals(blockA, blockB, blockC)
SubClassOf(PR2, And(Robot, AtMost(2, holds, Block)))
SubClassOf(And(PR2, Exactly(2, holds, Block)), FullHands)
ClassAssertion(stackBot, PR2)
)";
}

std::string pipes_domain() {
    return R"((define (domain pipes)
  (:requirements :strips :negative-preconditions)
  (:predicates (at ?r ?w) (linked ?a ?b) (valveAt ?v ?w) (segAt ?s ?w)
               (open ?v) (closed ?v) (documented ?s) (tankUnsafe ?t))
  (:action move
    :parameters (?r ?from ?to)
    :precondition (and (at ?r ?from) (linked ?from ?to))
    :effect (and (at ?r ?to) (not (at ?r ?from))))
  (:action closeValve
    :parameters (?r ?v ?w)
    :precondition (and (at ?r ?w) (valveAt ?v ?w) (open ?v))
    :effect (and (closed ?v) (not (open ?v))))
  (:action openValve
    :parameters (?r ?v ?w)
    :precondition (and (at ?r ?w) (valveAt ?v ?w) (closed ?v))
    :effect (and (open ?v) (not (closed ?v))))
  (:action document
    :parameters (?r ?s ?w)
    :precondition (and (at ?r ?w) (segAt ?s ?w))
    :effect (documented ?s))
)
)";
}

std::string pipes_problem(int n_waypoints) {
    // Chain w1 - ... - wn; the valve sits at w(n-1), the damaged segment at wn.
    std::ostringstream os;
    os << "(define (problem inspect-" << n_waypoints << ")\n  (:domain pipes)\n";
    os << "  (:objects rov tank1 v1 seg1";
    for (int i = 1; i <= n_waypoints; ++i)
        os << " w" << i;
    os << ")\n  (:init (at rov w1) (open v1)";
    os << " (valveAt v1 w" << (n_waypoints > 1 ? n_waypoints - 1 : 1) << ")";
    os << " (segAt seg1 w" << n_waypoints << ")";
    for (int i = 1; i < n_waypoints; ++i)
        os << " (linked w" << i << " w" << i + 1 << ") (linked w" << i + 1 << " w" << i << ")";
    os << ")\n";
    os << "  (:goal (and (documented seg1) (not (tankUnsafe tank1))))\n)\n";
    return os.str();
}

std::string pipes_static_onto() {
    return R"(# pipe network: tank1 feeds valve v1 which feeds the damaged segment seg1
ClassAssertion(tank1, Tank)
ClassAssertion(seg1, Damaged)
PropertyAssertion(tank1, feed, v1)
PropertyAssertion(v1, feed, seg1)
DisjointClasses(Open, Closed)
SubClassOf(And(Tank, Some(feed, And(Open, Some(feed, Damaged)))), Unsafe)
)";
}

std::string pipes_fluent_interface() {
    return R"(OBJECT    v1 -> v1
OBJECT    tank1 -> tank1
PREDICATE open(_) -> Open
PREDICATE closed(_) -> Closed
)";
}

std::string pipes_query_interface() {
    return R"(PREDICATE: tankUnsafe
VARIABLES: ?t
TYPE_SPECIFICATION:
    Tank(?t)
QUERY:
    Unsafe(?t)
)";
}

std::string gate_domain() {
    return R"((define (domain gate)
  (:requirements :strips :negative-preconditions)
  (:predicates (p ?x) (q ?x))
  (:action addQ
    :parameters (?x)
    :precondition (p ?x)
    :effect (q ?x))
  (:action dropP
    :parameters (?x)
    :precondition (q ?x)
    :effect (not (p ?x)))
)
)";
}

std::string gate_problem() {
    return R"((define (problem gate-1)
  (:domain gate)
  (:objects a)
  (:init (p a))
  (:goal (and (q a) (not (p a))))
)
)";
}

std::string gate_static_onto() { return "DisjointClasses(P, Q)\n"; }

std::string gate_fluent_interface() {
    return R"(OBJECT    a -> a
PREDICATE p(_) -> P
PREDICATE q(_) -> Q
)";
}

std::string gate_query_interface() { return ""; }

}  // namespace testsupport
