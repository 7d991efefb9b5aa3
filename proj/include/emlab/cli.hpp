#pragma once

// Command-line front end. Subcommands: verify, tighten, identities,
// catalog, fixture. Exit codes: 0 success / no violations, 1 violations or
// equality-locus failure, 2 usage or configuration error.

#include <iosfwd>
#include <string>
#include <vector>

namespace emlab::cli {

// argv-style entry point (argv[0] is the program name). Output streams are
// injectable for tests; diagnostics go to err.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

int run(int argc, char** argv);

}  // namespace emlab::cli
