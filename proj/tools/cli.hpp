#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schur::cli {

enum ExitCode { ok = 0, failure = 1, schema_error = 2, precondition_error = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur::cli
