#pragma once

namespace a4 {

/// Command-line front end.  Exit codes: 0 success, 1 usage/domain
/// error, 2 internal verification failure.
int run_cli(int argc, const char* const* argv);

}  // namespace a4
