#ifndef QF_CLI_HPP
#define QF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qf::cli {

/// Runs the qf command line. Exit codes: 0 all executed checks pass,
/// 1 a check failed (the failing item is named on `err`), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qf::cli

#endif
