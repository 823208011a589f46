#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meshcide::cli {

/// Runs one `meshcide VERB ARGS [FLAGS]` invocation (without the program
/// name). Returns 0 on success and 2 on a parse or validation error, with
/// the message on `err`. Query answers go to `out` and never affect the
/// status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meshcide::cli
