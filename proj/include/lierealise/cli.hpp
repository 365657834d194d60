#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lierealise {

// Runs one command line (without the program name). Returns the process exit
// code: 0 on success, 1 when a requested check fails, 2 on invalid input with
// {"error": {"code", "message"}} written to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lierealise
