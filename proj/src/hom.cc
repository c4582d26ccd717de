#include <qproj/hom.hh>

#include <algorithm>

using std::optional;
using std::span;
using std::uint64_t;
using std::vector;

namespace qproj
{
    namespace
    {
        auto check_compatible(const Structure & source, const Structure & target, const Mapping & h) -> void
        {
            if (source.kind() != target.kind())
                throw std::invalid_argument("homomorphism between different kinds");
            if (h.domain_size() != source.size() || h.image_size() != target.size())
                throw std::invalid_argument("mapping dimensions do not match source and target");
        }

        auto is_line_image(const Structure & target, ElementSet image) -> bool
        {
            if (image.size() == 1)
                return true;
            return std::any_of(target.sets().begin(), target.sets().end(),
                    [&] (ElementSet line) { return image.subset_of(line); });
        }
    }

    auto is_hom(const Structure & source, const Structure & target, const Mapping & h) -> bool
    {
        check_compatible(source, target, h);

        if (is_binary_kind(source.kind())) {
            for (int r = 0 ; r < source.relation_count() ; ++r)
                for (int a = 0 ; a < source.size() ; ++a)
                    for (int b = 0 ; b < source.size() ; ++b)
                        if (source.related(a, b, r) && ! target.related(h[a], h[b], r))
                            return false;
            return true;
        }

        for (auto e : source.sets()) {
            auto image = h.image_of(e);
            if (source.kind() == Kind::Hypergraph ? ! target.has_set(image) : ! is_line_image(target, image))
                return false;
        }
        return true;
    }

    HomSearch::HomSearch(const Structure & source, const Structure & target, bool surjective) :
        _kind(source.kind()),
        _n(source.size()),
        _m(target.size()),
        _surjective(surjective),
        _values(source.size(), -1),
        _cover_count(target.size(), 0)
    {
        if (source.kind() != target.kind())
            throw std::invalid_argument("homomorphism search between different kinds");

        if (is_binary_kind(_kind)) {
            for (int r = 0 ; r < source.relation_count() ; ++r) {
                auto & out = _out_before.emplace_back(_n);
                auto & in = _in_before.emplace_back(_n);
                for (int x = 0 ; x < _n ; ++x) {
                    auto upto = ElementSet::range(x + 1).bits();
                    out[x] = source.relation(r).row(x).bits() & upto;
                    in[x] = source.relation(r).column(x).bits() & ElementSet::range(x).bits();
                }
                auto & rows = _target_rows.emplace_back(_m);
                for (int v = 0 ; v < _m ; ++v)
                    rows[v] = target.relation(r).row(v).bits();
            }
        }
        else {
            _sets_ending_at.resize(_n);
            for (auto e : source.sets())
                if (! e.empty())
                    _sets_ending_at[e.last()].push_back(e.bits());
            for (auto e : target.sets())
                _target_sets.push_back(e.bits());
            if (_kind == Kind::Hypergraph)
                std::sort(_target_sets.begin(), _target_sets.end());
        }

        reset();
    }

    auto HomSearch::reset(span<const ElementSet> candidates) -> void
    {
        _candidates.assign(_n, ElementSet::range(_m).bits());
        for (int x = 0 ; x < int(candidates.size()) && x < _n ; ++x)
            _candidates[x] &= candidates[x].bits();
        std::fill(_values.begin(), _values.end(), -1);
        std::fill(_cover_count.begin(), _cover_count.end(), 0);
        _covered = 0;
        _position = 0;
        _started = false;
        _finished = false;
    }

    auto HomSearch::consistent(int x, int v) const -> bool
    {
        if (is_binary_kind(_kind)) {
            for (std::size_t r = 0 ; r < _out_before.size() ; ++r) {
                auto & rows = _target_rows[r];
                for (auto bits = _out_before[r][x] ; bits ; bits &= bits - 1) {
                    int y = std::countr_zero(bits);
                    int w = y == x ? v : _values[y];
                    if (! ((rows[v] >> w) & 1))
                        return false;
                }
                for (auto bits = _in_before[r][x] ; bits ; bits &= bits - 1) {
                    int y = std::countr_zero(bits);
                    if (! ((rows[_values[y]] >> v) & 1))
                        return false;
                }
            }
            return true;
        }

        for (auto members : _sets_ending_at[x]) {
            uint64_t image = uint64_t{1} << v;
            for (auto bits = members & ~(uint64_t{1} << x) ; bits ; bits &= bits - 1)
                image |= uint64_t{1} << _values[std::countr_zero(bits)];

            if (_kind == Kind::Hypergraph) {
                if (! std::binary_search(_target_sets.begin(), _target_sets.end(), image))
                    return false;
            }
            else if (std::popcount(image) > 1
                    && std::none_of(_target_sets.begin(), _target_sets.end(),
                        [&] (uint64_t line) { return (image & ~line) == 0; }))
                return false;
        }
        return true;
    }

    auto HomSearch::cover(int v) -> void
    {
        if (_cover_count[v]++ == 0)
            ++_covered;
    }

    auto HomSearch::uncover(int v) -> void
    {
        if (--_cover_count[v] == 0)
            --_covered;
    }

    auto HomSearch::next() -> bool
    {
        if (_finished)
            return false;

        if (_n == 0) {
            // the empty map, once
            bool yield = ! _started && (! _surjective || _m == 0);
            _started = true;
            _finished = true;
            return yield;
        }

        if (! _started) {
            _started = true;
            _position = 0;
        }

        while (true) {
            int x = _position;
            int previous = _values[x];
            if (previous != -1)
                uncover(previous);

            // candidates strictly above the previous value
            uint64_t remaining = _candidates[x];
            if (previous != -1)
                remaining &= ~((uint64_t{2} << previous) - 1);

            int chosen = -1;
            for ( ; remaining ; remaining &= remaining - 1) {
                int v = std::countr_zero(remaining);
                if (! consistent(x, v))
                    continue;
                if (_surjective) {
                    int uncovered = _m - _covered - (_cover_count[v] == 0 ? 1 : 0);
                    if (_n - x - 1 < uncovered)
                        continue;
                }
                chosen = v;
                break;
            }

            if (chosen == -1) {
                _values[x] = -1;
                if (x == 0) {
                    _finished = true;
                    return false;
                }
                --_position;
                continue;
            }

            _values[x] = chosen;
            cover(chosen);
            if (x == _n - 1)
                return true;
            ++_position;
        }
    }

    auto HomSearch::current() const -> Mapping
    {
        return Mapping(_m, _values);
    }

    auto enumerate_homs(const Structure & source, const Structure & target, bool surjective) -> vector<Mapping>
    {
        vector<Mapping> result;
        HomSearch search(source, target, surjective);
        while (search.next())
            result.push_back(search.current());
        return result;
    }

    auto fibers_of(const Mapping & j) -> vector<ElementSet>
    {
        vector<ElementSet> fibers(j.image_size());
        for (int x = 0 ; x < j.domain_size() ; ++x)
            fibers[j[x]].insert(x);
        return fibers;
    }

    auto find_lift(const Structure & source, const Structure & target, const Mapping & f, const Mapping & j)
        -> optional<Mapping>
    {
        if (! is_hom(source, target, f))
            throw std::invalid_argument("find_lift: f is not a homomorphism");
        if (! is_hom(source, target, j))
            throw std::invalid_argument("find_lift: j is not a homomorphism");
        if (! j.is_surjective())
            throw std::invalid_argument("find_lift: j is not surjective");

        LiftSearcher searcher(source);
        auto fibers = fibers_of(j);
        return searcher.find(fibers, f.values());
    }

    LiftSearcher::LiftSearcher(const Structure & source) :
        _search(source, source, false),
        _candidates(source.size())
    {
    }

    auto LiftSearcher::exists(span<const ElementSet> fibers, span<const int> f) -> bool
    {
        for (std::size_t x = 0 ; x < f.size() ; ++x) {
            _candidates[x] = fibers[f[x]];
            if (_candidates[x].empty())
                return false;
        }
        _search.reset(_candidates);
        return _search.next();
    }

    auto LiftSearcher::find(span<const ElementSet> fibers, span<const int> f) -> optional<Mapping>
    {
        if (! exists(fibers, f))
            return std::nullopt;
        return _search.current();
    }
}
