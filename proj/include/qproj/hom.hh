#pragma once

#include <qproj/structure.hh>

#include <optional>
#include <span>
#include <vector>

namespace qproj
{
    /// True iff `h` preserves the kind's relations from `source` into `target`.
    /// Throws std::invalid_argument on a kind or size mismatch.
    auto is_hom(const Structure & source, const Structure & target, const Mapping & h) -> bool;

    /// Backtracking enumeration of homomorphisms source -> target.
    ///
    /// Elements are assigned in index order and values tried in ascending order, so
    /// solutions come out in lexicographic order of their value arrays. Each
    /// relation, edge or line is checked once its last member is assigned.
    /// With `surjective`, branches that can no longer cover the target are cut.
    class HomSearch
    {
        public:
            HomSearch(const Structure & source, const Structure & target, bool surjective = false);

            /// Restarts the search with per-element candidate sets (empty span: unrestricted).
            auto reset(std::span<const ElementSet> candidates = {}) -> void;

            /// Advances to the next solution; false once exhausted.
            auto next() -> bool;

            auto values() const -> const std::vector<int> & { return _values; }
            auto current() const -> Mapping;

        private:
            auto consistent(int x, int v) const -> bool;
            auto cover(int v) -> void;
            auto uncover(int v) -> void;

            Kind _kind;
            int _n, _m;
            bool _surjective;

            // binary kinds: per relation, per element, earlier-or-equal neighbours
            std::vector<std::vector<std::uint64_t>> _out_before, _in_before;
            std::vector<std::vector<std::uint64_t>> _target_rows;

            // set-family kinds: the source sets whose largest member is x
            std::vector<std::vector<std::uint64_t>> _sets_ending_at;
            std::vector<std::uint64_t> _target_sets;

            std::vector<std::uint64_t> _candidates;
            std::vector<int> _values;
            std::vector<int> _cover_count;
            int _covered = 0;
            int _position = 0;
            bool _started = false, _finished = false;
    };

    /// Calls `visit(values)` for each homomorphism in lexicographic order until it returns false.
    template <typename Visitor_>
    auto for_each_hom(const Structure & source, const Structure & target, bool surjective, Visitor_ && visit) -> void
    {
        HomSearch search(source, target, surjective);
        while (search.next())
            if (! visit(search.values()))
                return;
    }

    auto enumerate_homs(const Structure & source, const Structure & target, bool surjective = false)
        -> std::vector<Mapping>;

    /// Searches for an endomorphism phi of `source` with j(phi(x)) = f(x) for every x.
    ///
    /// Preconditions (checked, std::invalid_argument): f and j are homomorphisms
    /// source -> target and j is onto.
    auto find_lift(const Structure & source, const Structure & target, const Mapping & f, const Mapping & j)
        -> std::optional<Mapping>;

    /// Repeated lift queries against one source; skips the precondition checks.
    class LiftSearcher
    {
        public:
            explicit LiftSearcher(const Structure & source);

            /// `fibers[t]` is j^{-1}(t); `f` gives f(x) for each source element.
            auto exists(std::span<const ElementSet> fibers, std::span<const int> f) -> bool;
            auto find(std::span<const ElementSet> fibers, std::span<const int> f) -> std::optional<Mapping>;

        private:
            HomSearch _search;
            std::vector<ElementSet> _candidates;
    };

    /// fibers[t] = { x : j(x) = t }.
    auto fibers_of(const Mapping & j) -> std::vector<ElementSet>;
}
