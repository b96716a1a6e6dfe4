#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rht {

/// Command-line front end. Exit status: 0 on success, 1 when a
/// precondition or faithfulness bound refuses the computation, 2 on input
/// errors (bad flags, unparseable files, non-closed class expressions).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rht
