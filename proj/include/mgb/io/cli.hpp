#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgb {

/// Runs one command line. Returns 0 on success, 1 on a domain error and 2
/// on a usage or input-format error. `in` is read when the file is "-".
int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mgb
