#pragma once

namespace etalift {

// Entry point for the command line driver.  Returns the process exit code:
// 0 on success, 1 when a requested check finds a violation, 2 on usage
// errors.
int run_cli(int argc, char** argv);

}  // namespace etalift
