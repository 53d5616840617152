#pragma once

#include <iosfwd>
#include <string_view>

#include "uenergy/graph.hpp"

namespace uenergy::cli {

enum exit_code : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse = 2,
  exit_convergence = 3,
  exit_golden_mismatch = 4,
  exit_refuted = 5,
};

// C:<n>, P:<n>, L:<n>:<l>, CP:<n>:<l>:<a0,a1,...> or g6:<graph6>. Throws
// parse_error whose offset points at the offending token.
Graph parse_graph_spec(std::string_view spec);

// Runs one command line (argv[0] is the program name). Never throws; errors
// are reported on err and mapped to the exit codes above.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace uenergy::cli
