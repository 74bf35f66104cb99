#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gril {

/// Driver behind the gril binary; args exclude the program name. Reports go
/// to out, diagnostics to err.
///
/// Exit code: 0 when every requested verdict passed or matched a recorded
/// counterexample, 1 when a verdict is FAIL or a check records an unexpected
/// failure, 2 for unusable input (bad flags, unreadable or invalid spec
/// files, unknown names).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gril
