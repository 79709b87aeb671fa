#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bindisc {

/// Dispatches a command line (without the program name) to the library.
/// Results go to `out`, diagnostics to `err`. Returns 0 on success, 1 when
/// a verify suite finds a counterexample, 2 on usage or argument errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bindisc
