#ifndef QC2_CLI_HPP
#define QC2_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qc2 {

/// Runs the command-line front end. Exit code 0 on success, 2 on usage
/// errors, 1 on computation errors (which render as machine-readable
/// {"error": {"kind": ..., "detail": ...}} on the error stream).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qc2

#endif
