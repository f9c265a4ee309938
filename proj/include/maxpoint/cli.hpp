#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxpoint::cli {

// Exit status: 0 when every requested check held, 1 when a verification
// failed, 2 for bad input or usage. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maxpoint::cli
