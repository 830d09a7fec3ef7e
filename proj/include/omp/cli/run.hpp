#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omp::cli {

// Full command-line front end; returns the process exit code.
//   0 success / plan found / valid / consistent
//   1 negative verdict (unsolvable, invalid plan, inconsistent ontology)
//   2 unusable input (missing file, parse error, invalid spec)
//   3 resource limit exceeded
//   4 internal invariant violation
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace omp::cli
