#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace liftvf {

// Command-line front end. Subcommands: fields, verify, image, tangency,
// leading-terms, membership, classify, suite. Returns 0 on success or
// all-pass, 1 on verification failure, 2 on usage errors. LIFTVF_THREADS
// optionally caps parallelism; output order is independent of it.
int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);

}  // namespace liftvf
