#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetdim::cli {

// Exit codes shared by every subcommand:
//   0 success            1 verification failed     2 parse/usage error
//   3 unsupported class  4 internal verification   5 cap exceeded
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace posetdim::cli
