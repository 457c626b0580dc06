#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracdelay {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitDomain = 2,          // usage, config or domain error
    kExitNonConvergence = 3,  // iteration or accuracy budget exhausted
    kExitFailed = 4,          // certification or identity check failed
};

// Runs one command. args excludes the program name. Tables, reports and CSV
// go to out unless redirected with -o; diagnostics and summaries go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Trajectory CSV, header "ell,z", shortest round-trip decimals.
std::string trajectory_csv(const std::vector<double>& grid, const std::vector<double>& values);

}  // namespace fracdelay
