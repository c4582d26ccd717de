#pragma once

#include <qproj/structure.hh>

#include <string>
#include <vector>

namespace qproj
{
    /// How to read "every point is on a regular line" for geometries.
    enum class GeometryMode
    {
        /// each point lies on some regular line
        Literal,
        /// a single regular line holds every point
        Strict
    };

    auto mode_name(GeometryMode mode) -> std::string_view;

    enum class Reason
    {
        Chain,
        Antichain,
        AnyPermutation,
        Complete,
        Empty,
        EEmptyAllLoops,
        EEmptyNoLoops,
        NoEdges,
        DownwardComplete,
        NoLines,
        AllPairsSingular,
        RegularCovered,
        NotCharacterized
    };

    /// Which shape of failure a negative verdict found; certificates dispatch on it.
    enum class Failure
    {
        None,
        /// poset split into components with a comparable pair: offending = u, v, w with u < v, w elsewhere
        Disconnected,
        /// u < v, u < w, v || w: offending = u, v, w
        Vee,
        /// v < u, w < u, v || w: offending = u, v, w
        Wedge,
        /// a non-edge and an edge: offending = a, b, c, d with (a,b) absent and (c,d) present
        MissingEdge,
        /// a vertex without a loop while some pair is related: offending = v
        MissingLoop,
        /// hypergraph: offending = the smallest missing subset
        MissingSubset,
        /// geometry: a regular line that does not hold every point: offending = its points
        PartialRegularLine,
        /// geometry without regular lines: offending = a, b, c, d with {a,b} on no line and {c,d} a line
        MissingSingular
    };

    struct Verdict
    {
        bool qp = false;
        Reason reason = Reason::NotCharacterized;
        /// DownwardComplete: the largest edge size.
        int parameter = 0;
        Failure failure = Failure::None;
        std::vector<int> offending;

        /// "Chain", "DownwardComplete(2)", ...
        auto tag() const -> std::string;
    };

    auto decide_poset(const Structure & s) -> Verdict;
    auto decide_lattice(const Structure & s) -> Verdict;
    auto decide_permutation(const Structure & s) -> Verdict;
    /// GraphSimple or GraphLoops.
    auto decide_graph(const Structure & s) -> Verdict;
    /// DigraphSimple or DigraphLoops.
    auto decide_digraph(const Structure & s) -> Verdict;
    auto decide_hypergraph(const Structure & s) -> Verdict;
    auto decide_geometry(const Structure & s, GeometryMode mode = GeometryMode::Strict) -> Verdict;

    /// Dispatches on the kind. Throws std::invalid_argument on invalid structures.
    auto decide(const Structure & s, GeometryMode mode = GeometryMode::Strict) -> Verdict;
}
