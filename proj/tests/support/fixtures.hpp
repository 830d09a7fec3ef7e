#pragma once

#include <string>
#include <vector>

namespace testsupport {

// Text builders for the stacking-robot fixture family (a two-hand robot,
// n blocks) and the pipe-inspection family (a chain of n waypoints with a
// valve feeding a damaged segment). Returned strings are inputs for the
// regular parsers, exactly as a user would write them.

std::vector<std::string> block_names(int n);

std::string blocksworld_domain();
std::string blocksworld_problem(int n_blocks);         // all blocks on the table, goal stacks blockA on blockB
std::string blocksworld_static_onto(int n_blocks);     // full static part
std::string blocksworld_fluent_interface(int n_blocks);
std::string blocksworld_query_interface();

// The four-line static fragment used by the parser tests.
std::string static_fragment_4line();

std::string pipes_domain();
std::string pipes_problem(int n_waypoints);
std::string pipes_static_onto();
std::string pipes_fluent_interface();
std::string pipes_query_interface();

// A two-step problem whose only solution passes through a state that is
// inconsistent with the static ontology.
std::string gate_domain();
std::string gate_problem();
std::string gate_static_onto();
std::string gate_fluent_interface();
std::string gate_query_interface();  // empty interface

}  // namespace testsupport
