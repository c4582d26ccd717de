#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qproj
{
    /// Exit codes shared by every subcommand.
    namespace exit_code
    {
        inline constexpr int qp = 0;
        inline constexpr int usage = 1;
        inline constexpr int invalid_input = 2;
        inline constexpr int bound_exceeded = 3;
        inline constexpr int internal = 4;
        inline constexpr int not_qp = 10;
    }

    /// Runs the command line `args` (without the program name).
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
