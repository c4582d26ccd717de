#pragma once

#include <qproj/certify.hh>
#include <qproj/decide.hh>
#include <qproj/structure.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace qproj
{
    struct OracleOptions
    {
        /// Largest target tried; 0 means the source size.
        int max_target_size = 0;
        /// Worker threads across targets. Results do not depend on it.
        int jobs = 1;
        /// One target per isomorphism class (true) or every labeled target (false).
        bool dedup_targets = true;
    };

    struct OracleReport
    {
        bool qp = true;
        /// Present iff not qp: the first failing (target, j, f) by target size, canonical
        /// form, then j and f values.
        std::optional<WitnessTriple> witness;
        std::uint64_t targets_examined = 0;
        std::uint64_t pairs_examined = 0;

        auto operator==(const OracleReport &) const -> bool = default;
    };

    /// Decides quasi-projectivity straight from the definition: every target of the
    /// same kind up to the size bound, every onto homomorphism j, every homomorphism
    /// f, and a search for an endomorphism phi with j(phi(x)) = f(x).
    ///
    /// Throws BoundExceeded when targets of that size cannot be enumerated.
    auto oracle(const Structure & s, const OracleOptions & options = {}) -> OracleReport;

    /// Memoised enumerate_class(); safe to call from several threads.
    auto target_catalog(Kind kind, int n) -> const std::vector<Structure> &;

    struct Mismatch
    {
        Structure structure;
        Verdict decided;
        OracleReport checked;
    };

    struct VerifyReport
    {
        int classes = 0;
        std::vector<Mismatch> mismatches;
    };

    /// Compares decide() with oracle() on every isomorphism class of sizes 1..n_max.
    auto verify_class(Kind kind, int n_max, GeometryMode mode = GeometryMode::Strict, int jobs = 1) -> VerifyReport;
}
