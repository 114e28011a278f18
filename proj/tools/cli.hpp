#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilweight::cli
{

/// Runs one command line (without the program name). Returns the exit
/// code: 0 when every verdict holds, 1 when some verdict fails, 2 on usage
/// or resource errors.
int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace nilweight::cli
