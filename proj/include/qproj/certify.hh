#pragma once

#include <qproj/decide.hh>
#include <qproj/structure.hh>

#include <optional>
#include <stdexcept>
#include <string>

namespace qproj
{
    /// A target with a homomorphism f and an onto homomorphism j from the source
    /// such that no endomorphism phi of the source satisfies j(phi(x)) = f(x).
    struct WitnessTriple
    {
        Structure target;
        Mapping f;
        Mapping j;

        auto operator==(const WitnessTriple &) const -> bool = default;
    };

    /// A construction produced something that fails its own verification.
    class CertificateError : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };

    /// Replays a triple against `source`: returns what is wrong with it, or nothing if it certifies.
    auto check_witness(const Structure & source, const WitnessTriple & witness) -> std::optional<std::string>;

    /// Poset or lattice that is neither a chain nor (for posets) an antichain.
    auto witness_poset(const Structure & s) -> WitnessTriple;
    auto witness_graph(const Structure & s) -> WitnessTriple;
    auto witness_digraph(const Structure & s) -> WitnessTriple;
    auto witness_hypergraph(const Structure & s) -> WitnessTriple;
    auto witness_geometry(const Structure & s, GeometryMode mode = GeometryMode::Strict) -> WitnessTriple;

    /// Dispatches on the kind. Throws std::invalid_argument if the decider calls `s` quasi-projective.
    auto witness(const Structure & s, GeometryMode mode = GeometryMode::Strict) -> WitnessTriple;

    /// An endomorphism phi of `source` with j(phi(x)) = f(x), built from the
    /// quasi-projectivity case the decider reports. Throws std::invalid_argument on
    /// bad inputs or a non-quasi-projective source, CertificateError if the result
    /// does not verify.
    auto construct_lift(const Structure & source, const Structure & target, const Mapping & f, const Mapping & j,
            GeometryMode mode = GeometryMode::Strict) -> Mapping;
}
