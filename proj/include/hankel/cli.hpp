#ifndef HANKEL_CLI_HPP
#define HANKEL_CLI_HPP

#include <cstdint>
#include <string>

namespace hankel {

/// Everything the command line can set; defaults are chosen so that
/// `h2 verify` and `h3 verify` run with zero flags.
struct RunConfig {
    std::string subcommand;
    std::uint64_t seed = 42;
    int search_samples = 100000;
    int identity_samples = 500;
    int count = 100;      // sample stream length
    int grid = 0;         // 0 = per-theorem default (199 p1 points / 101x101 cuboid)
    int depth = 12;
    bool json_output = false;
    std::string out_path;  // empty = stdout
    int threads = 1;       // accepted as a hint; execution is deterministic
};

/// Full command-line entry point.  Returns the process exit code:
/// 0 success / certified, 1 certification failure, 2 input error.
int cli_run(int argc, const char* const* argv);

}  // namespace hankel

#endif
