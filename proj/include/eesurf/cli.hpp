#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eesurf {

// Exit codes: 0 success, 1 parse error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eesurf
