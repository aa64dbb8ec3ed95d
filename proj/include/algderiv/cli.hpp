#ifndef ALGDERIV_CLI_HPP
#define ALGDERIV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace algderiv {

/* Runs one command line. Exit codes: 0 success, 1 domain failures
 * (non-rational spectrum, cap exhaustion, suite failures, ...),
 * 2 usage errors. Every failure prints a single machine-parsable
 * line "error: <code>: <detail>" on `err`. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace algderiv

#endif
