#pragma once

#include <qproj/certify.hh>
#include <qproj/oracle.hh>
#include <qproj/structure.hh>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qproj
{
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(int line, const std::string & message) :
                std::runtime_error("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const -> int { return _line; }

        private:
            int _line;
    };

    /// Reads a structure file:
    ///
    ///     kind <poset|lattice|permutation|graph|graph-loops|digraph|digraph-loops|hypergraph|geometry>
    ///     n <count>
    ///     le i j | perm p0 .. | edge i j | arc i j | hedge i .. | line i ..
    ///
    /// '#' starts a comment; indices are 0-based. The kind's axioms are not checked here.
    auto parse_structure(std::string_view text) -> Structure;

    /// Canonical text: header, then body lines sorted by their element tuples.
    auto format_structure(const Structure & s) -> std::string;

    /// Reads `map a0 a1 ...`; values must lie in [0, image_size).
    auto parse_mapping(std::string_view text, int image_size) -> Mapping;
    auto format_mapping(const Mapping & m) -> std::string;

    auto read_file(const std::filesystem::path & path) -> std::string;

    /// Target, f and j as three blank-line separated blocks, each a valid file on its own.
    auto format_witness(const WitnessTriple & w) -> std::string;
    auto format_oracle_report(const OracleReport & report) -> std::string;
}
