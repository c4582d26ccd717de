#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qproj
{
    /// Largest carrier we can represent: element sets are packed into one 64-bit word.
    inline constexpr int max_elements = 64;

    enum class Kind
    {
        Poset,
        Lattice,
        Permutation,
        GraphSimple,
        GraphLoops,
        DigraphSimple,
        DigraphLoops,
        Hypergraph,
        Geometry
    };

    inline constexpr Kind all_kinds[] = {Kind::Poset, Kind::Lattice, Kind::Permutation, Kind::GraphSimple,
        Kind::GraphLoops, Kind::DigraphSimple, Kind::DigraphLoops, Kind::Hypergraph, Kind::Geometry};

    auto kind_name(Kind kind) -> std::string_view;
    auto parse_kind_name(std::string_view name) -> std::optional<Kind>;

    /// True for kinds whose payload is one or two binary relations.
    auto is_binary_kind(Kind kind) -> bool;
    /// True for kinds whose payload is a family of element sets.
    auto is_set_family_kind(Kind kind) -> bool;
    auto is_order_kind(Kind kind) -> bool;
    auto is_graph_kind(Kind kind) -> bool;
    auto allows_loops(Kind kind) -> bool;
    auto is_symmetric_kind(Kind kind) -> bool;

    /// A subset of [0, 64) packed into a word.
    class ElementSet
    {
        public:
            constexpr ElementSet() = default;
            constexpr explicit ElementSet(std::uint64_t bits) : _bits(bits) { }

            static auto of(std::span<const int> elements) -> ElementSet;
            static constexpr auto singleton(int x) -> ElementSet { return ElementSet{std::uint64_t{1} << x}; }
            static constexpr auto range(int n) -> ElementSet
            {
                return ElementSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
            }

            constexpr auto bits() const -> std::uint64_t { return _bits; }
            constexpr auto contains(int x) const -> bool { return (_bits >> x) & 1; }
            constexpr auto size() const -> int { return std::popcount(_bits); }
            constexpr auto empty() const -> bool { return _bits == 0; }
            constexpr auto first() const -> int { return std::countr_zero(_bits); }
            constexpr auto last() const -> int { return 63 - std::countl_zero(_bits); }
            constexpr auto subset_of(ElementSet other) const -> bool { return (_bits & ~other._bits) == 0; }

            constexpr auto insert(int x) -> void { _bits |= std::uint64_t{1} << x; }
            constexpr auto erase(int x) -> void { _bits &= ~(std::uint64_t{1} << x); }

            constexpr auto operator|(ElementSet o) const -> ElementSet { return ElementSet{_bits | o._bits}; }
            constexpr auto operator&(ElementSet o) const -> ElementSet { return ElementSet{_bits & o._bits}; }
            constexpr auto operator==(const ElementSet &) const -> bool = default;

            auto elements() const -> std::vector<int>;

        private:
            std::uint64_t _bits = 0;
    };

    /// Orders sets by their ascending element sequences, so {0} < {0,1} < {0,2} < {1}.
    auto lexicographic_less(ElementSet a, ElementSet b) -> bool;

    /// Square boolean matrix over [0,n), one word per row.
    class BitMatrix
    {
        public:
            BitMatrix() = default;
            explicit BitMatrix(int n) : _rows(n) { }

            auto size() const -> int { return int(_rows.size()); }
            auto test(int a, int b) const -> bool { return (_rows[a] >> b) & 1; }
            auto set(int a, int b, bool value = true) -> void
            {
                if (value)
                    _rows[a] |= std::uint64_t{1} << b;
                else
                    _rows[a] &= ~(std::uint64_t{1} << b);
            }
            auto row(int a) const -> ElementSet { return ElementSet{_rows[a]}; }
            auto column(int b) const -> ElementSet;
            auto transposed() const -> BitMatrix;
            auto count() const -> int;

            auto operator==(const BitMatrix &) const -> bool = default;

        private:
            std::vector<std::uint64_t> _rows;
    };

    /// A finite structure of one of the supported kinds, elements [0,n).
    ///
    /// Construction only checks shape (sizes, index ranges); the kind's axioms are
    /// checked by validate(), so invalid structures can be built and reported on.
    class Structure
    {
        public:
            static auto binary(Kind kind, BitMatrix relation) -> Structure;
            /// Builds a binary-relation structure from a pair list. Symmetric kinds get both orientations.
            static auto from_pairs(Kind kind, int n, std::span<const std::pair<int, int>> pairs) -> Structure;
            /// Poset or lattice from its strict pairs; reflexive pairs are added.
            static auto order(Kind kind, int n, std::span<const std::pair<int, int>> less_pairs) -> Structure;
            /// Permutation with the first order as index order and the second order listing `order2` ascending.
            static auto permutation(std::span<const int> order2) -> Structure;
            static auto permutation_from_orders(BitMatrix order1, BitMatrix order2) -> Structure;
            static auto set_family(Kind kind, int n, std::vector<ElementSet> sets) -> Structure;
            static auto set_family(Kind kind, int n, const std::vector<std::vector<int>> & sets) -> Structure;

            auto kind() const -> Kind { return _kind; }
            auto size() const -> int { return _n; }

            /// Binary kinds: relation 0; permutations also have relation 1.
            auto relation_count() const -> int { return int(_relations.size()); }
            auto relation(int r = 0) const -> const BitMatrix & { return _relations[r]; }
            auto related(int a, int b, int r = 0) const -> bool { return _relations[r].test(a, b); }

            /// Hypergraph edges or geometry lines, deduplicated and lexicographically ordered.
            auto sets() const -> const std::vector<ElementSet> & { return _sets; }
            auto has_set(ElementSet e) const -> bool;

            auto operator==(const Structure &) const -> bool = default;

        private:
            Kind _kind = Kind::Poset;
            int _n = 0;
            std::vector<BitMatrix> _relations;
            std::vector<ElementSet> _sets;
    };

    /// Reindexes the elements: element x of `s` becomes `new_index[x]`.
    auto relabel(const Structure & s, std::span<const int> new_index) -> Structure;

    /// Order reversal for posets and lattices.
    auto dual(const Structure & s) -> Structure;

    /// For a permutation whose first order is index order: the elements in ascending second order.
    auto permutation_sequence(const Structure & s) -> std::vector<int>;

    /// A total function [0,n) -> [0,m).
    class Mapping
    {
        public:
            Mapping() = default;
            Mapping(int image_size, std::vector<int> values);

            static auto identity(int n) -> Mapping;
            static auto constant(int n, int image_size, int value) -> Mapping;

            auto domain_size() const -> int { return int(_values.size()); }
            auto image_size() const -> int { return _image_size; }
            auto operator[](int x) const -> int { return _values[x]; }
            auto values() const -> const std::vector<int> & { return _values; }

            auto is_surjective() const -> bool;
            auto is_injective() const -> bool;
            /// Elements mapped to `value`.
            auto preimage(int value) const -> ElementSet;
            /// x -> after(this(x)).
            auto then(const Mapping & after) const -> Mapping;
            auto image_of(ElementSet set) const -> ElementSet;

            auto operator<=>(const Mapping &) const = default;

        private:
            int _image_size = 0;
            std::vector<int> _values;
    };

    struct Violation
    {
        std::string axiom;
        std::vector<int> elements;

        auto describe() const -> std::string;
        auto operator==(const Violation &) const -> bool = default;
    };

    /// Reports the first violated axiom of the structure's kind, or nothing if it is valid.
    auto validate(const Structure & s) -> std::optional<Violation>;

    struct LineClasses
    {
        std::vector<ElementSet> regular;
        std::vector<ElementSet> singular;
        ElementSet isolated;
    };

    auto classify_lines(const Structure & geometry) -> LineClasses;

    auto is_chain(const Structure & order) -> bool;
    auto is_antichain(const Structure & order) -> bool;
}
