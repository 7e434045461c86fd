#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumrules::cli {

// Parses and executes one command line (without the program name).
// Exit codes: 0 all checks hold (or data emitted), 1 at least one verify
// violation, 2 usage or input error. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumrules::cli
