#include <qproj/enumerate.hh>

#include <algorithm>
#include <numeric>

using std::uint8_t;
using std::uint64_t;
using std::vector;

namespace qproj
{
    namespace
    {
        // Branch and bound over relabelings. Position k of the labeling holds the
        // original element p[k]; fixing p[0..k] fixes a prefix of the first block.
        class CanonicalSearch
        {
            public:
                explicit CanonicalSearch(const Structure & s) :
                    _s(s),
                    _n(s.size()),
                    _p(_n),
                    _used(_n, false)
                {
                    if (_n > max_canonical_size)
                        throw BoundExceeded("canonical form limited to " + std::to_string(max_canonical_size)
                                + " elements");
                    if (is_set_family_kind(s.kind())) {
                        _is_set.assign(std::size_t{1} << _n, false);
                        for (auto e : s.sets())
                            _is_set[e.bits()] = true;
                        _preimage.assign(std::size_t{1} << _n, 0);
                    }
                }

                auto minimise() -> void
                {
                    _have_best = false;
                    _stop_on_smaller = false;
                    search(0, false);
                }

                auto identity_is_minimal() -> bool
                {
                    std::iota(_p.begin(), _p.end(), 0);
                    _best.clear();
                    for (int k = 0 ; k < _n ; ++k)
                        append_level(k, _best);
                    _best_tail = tail();
                    _have_best = true;
                    _stop_on_smaller = true;
                    _found_smaller = false;
                    search(0, false);
                    return ! _found_smaller;
                }

                auto best_bits() const -> vector<uint8_t>
                {
                    auto bits = _best;
                    bits.insert(bits.end(), _best_tail.begin(), _best_tail.end());
                    return bits;
                }

                auto best_labeling() const -> const vector<int> & { return _best_p; }

                auto bits_as_labeled() -> vector<uint8_t>
                {
                    std::iota(_p.begin(), _p.end(), 0);
                    vector<uint8_t> bits;
                    for (int k = 0 ; k < _n ; ++k)
                        append_level(k, bits);
                    auto t = tail();
                    bits.insert(bits.end(), t.begin(), t.end());
                    return bits;
                }

            private:
                auto relation_level(int r, int k, vector<uint8_t> & out) const -> void
                {
                    auto & m = _s.relation(r);
                    int x = _p[k];
                    for (int i = 0 ; i < k ; ++i) {
                        out.push_back(m.test(x, _p[i]));
                        out.push_back(m.test(_p[i], x));
                    }
                    out.push_back(m.test(x, x));
                }

                auto append_level(int k, vector<uint8_t> & out) -> void
                {
                    if (! _is_set.empty()) {
                        std::size_t low = std::size_t{1} << k;
                        _preimage[low] = uint64_t{1} << _p[k];
                        out.push_back(_is_set[_preimage[low]]);
                        for (std::size_t mask = low + 1 ; mask < 2 * low ; ++mask) {
                            _preimage[mask] = _preimage[mask - low] | _preimage[low];
                            out.push_back(_is_set[_preimage[mask]]);
                        }
                    }
                    else
                        relation_level(0, k, out);
                }

                // blocks for relations after the first, for the complete labeling in _p
                auto tail() const -> vector<uint8_t>
                {
                    vector<uint8_t> out;
                    if (_is_set.empty())
                        for (int r = 1 ; r < _s.relation_count() ; ++r)
                            for (int k = 0 ; k < _n ; ++k)
                                relation_level(r, k, out);
                    return out;
                }

                auto search(int k, bool less) -> void
                {
                    if (k == _n) {
                        auto t = tail();
                        if (_have_best && ! less) {
                            if (t > _best_tail)
                                return;
                            less = t < _best_tail;
                        }
                        if (_stop_on_smaller) {
                            _found_smaller = _found_smaller || less;
                            return;
                        }
                        if (! _have_best || less) {
                            _best = _current;
                            _best_tail = std::move(t);
                            _best_p = _p;
                            _have_best = true;
                            ++_version;
                        }
                        return;
                    }

                    for (int x = 0 ; x < _n ; ++x) {
                        if (_used[x])
                            continue;
                        _p[k] = x;
                        _used[x] = true;
                        std::size_t start = _current.size();
                        append_level(k, _current);

                        int cmp = 0;
                        if (_have_best && ! less) {
                            auto mismatch = std::mismatch(_current.begin() + start, _current.end(),
                                    _best.begin() + start);
                            if (mismatch.first != _current.end())
                                cmp = *mismatch.first < *mismatch.second ? -1 : 1;
                        }

                        if (cmp < 0 && _stop_on_smaller)
                            _found_smaller = true;
                        else if (cmp <= 0) {
                            auto version = _version;
                            search(k + 1, less || cmp < 0);
                            if (version != _version)
                                less = false;
                        }

                        _current.resize(start);
                        _used[x] = false;
                        if (_found_smaller)
                            return;
                    }
                }

                const Structure & _s;
                int _n;
                vector<int> _p;
                vector<bool> _used;
                vector<bool> _is_set;
                vector<uint64_t> _preimage;

                vector<uint8_t> _current, _best, _best_tail;
                vector<int> _best_p;
                bool _have_best = false, _stop_on_smaller = false, _found_smaller = false;
                unsigned long _version = 0;
        };

        auto check_bound(Kind kind, int n) -> void
        {
            if (n < 1)
                throw std::invalid_argument("enumeration needs n >= 1");
            if (n > enumeration_bound(kind))
                throw BoundExceeded("enumeration of " + std::string(kind_name(kind)) + " limited to n <= "
                        + std::to_string(enumeration_bound(kind)));
        }

        // Posets by deciding each pair {i<j} in turn; transitivity is checked as soon
        // as every pair inside {0..j} is decided.
        auto for_each_poset(int n, const std::function<void (const Structure &)> & visit) -> void
        {
            vector<std::pair<int, int>> pairs;
            for (int j = 1 ; j < n ; ++j)
                for (int i = 0 ; i < j ; ++i)
                    pairs.emplace_back(i, j);

            BitMatrix r(n);
            for (int a = 0 ; a < n ; ++a)
                r.set(a, a);

            auto transitive_through = [&] (int j) {
                for (int a = 0 ; a <= j ; ++a)
                    for (int b = 0 ; b <= j ; ++b)
                        for (int c = 0 ; c <= j ; ++c)
                            if ((a == j || b == j || c == j) && r.test(a, b) && r.test(b, c) && ! r.test(a, c))
                                return false;
                return true;
            };

            std::function<void (std::size_t)> step = [&] (std::size_t index) {
                if (index == pairs.size()) {
                    visit(Structure::binary(Kind::Poset, r));
                    return;
                }
                auto [i, j] = pairs[index];
                for (int choice = 0 ; choice < 3 ; ++choice) {
                    r.set(i, j, choice == 1);
                    r.set(j, i, choice == 2);
                    if (i + 1 == j && ! transitive_through(j))
                        continue;
                    step(index + 1);
                }
                r.set(i, j, false);
                r.set(j, i, false);
            };
            step(0);
        }

        auto for_each_total_order(int n, const std::function<void (const BitMatrix &)> & visit) -> void
        {
            vector<int> sequence(n);
            std::iota(sequence.begin(), sequence.end(), 0);
            do {
                vector<int> rank(n);
                for (int pos = 0 ; pos < n ; ++pos)
                    rank[sequence[pos]] = pos;
                BitMatrix m(n);
                for (int a = 0 ; a < n ; ++a)
                    for (int b = 0 ; b < n ; ++b)
                        m.set(a, b, rank[a] <= rank[b]);
                visit(m);
            } while (std::next_permutation(sequence.begin(), sequence.end()));
        }

        auto for_each_graph(Kind kind, int n, const std::function<void (const Structure &)> & visit) -> void
        {
            vector<std::pair<int, int>> free;
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b) {
                    if (a == b && ! allows_loops(kind))
                        continue;
                    if (is_symmetric_kind(kind) && b < a)
                        continue;
                    free.emplace_back(a, b);
                }
            for (uint64_t mask = 0 ; mask < (uint64_t{1} << free.size()) ; ++mask) {
                BitMatrix r(n);
                for (std::size_t i = 0 ; i < free.size() ; ++i)
                    if ((mask >> i) & 1) {
                        r.set(free[i].first, free[i].second);
                        if (is_symmetric_kind(kind))
                            r.set(free[i].second, free[i].first);
                    }
                visit(Structure::binary(kind, std::move(r)));
            }
        }

        auto for_each_hypergraph(int n, const std::function<void (const Structure &)> & visit) -> void
        {
            uint64_t subsets = (uint64_t{1} << n) - 1;
            for (uint64_t family = 0 ; family < (uint64_t{1} << subsets) ; ++family) {
                vector<ElementSet> edges;
                for (uint64_t m = 1 ; m <= subsets ; ++m)
                    if ((family >> (m - 1)) & 1)
                        edges.emplace_back(m);
                visit(Structure::set_family(Kind::Hypergraph, n, std::move(edges)));
            }
        }

        // Line families: each candidate line (>= 2 points) is in or out, subject to
        // no pair of points being covered twice.
        auto for_each_geometry(int n, const std::function<void (const Structure &)> & visit) -> void
        {
            vector<ElementSet> candidates;
            for (uint64_t m = 1 ; m < (uint64_t{1} << n) ; ++m)
                if (std::popcount(m) >= 2)
                    candidates.emplace_back(m);

            auto pair_index = [n] (int a, int b) { return a * n + b; };
            vector<uint64_t> pairs_of;
            for (auto line : candidates) {
                uint64_t covered = 0;
                auto pts = line.elements();
                for (std::size_t i = 0 ; i < pts.size() ; ++i)
                    for (std::size_t k = i + 1 ; k < pts.size() ; ++k)
                        covered |= uint64_t{1} << pair_index(pts[i], pts[k]);
                pairs_of.push_back(covered);
            }

            vector<ElementSet> chosen;
            std::function<void (std::size_t, uint64_t)> step = [&] (std::size_t index, uint64_t covered) {
                if (index == candidates.size()) {
                    visit(Structure::set_family(Kind::Geometry, n, chosen));
                    return;
                }
                step(index + 1, covered);
                if ((covered & pairs_of[index]) == 0) {
                    chosen.push_back(candidates[index]);
                    step(index + 1, covered | pairs_of[index]);
                    chosen.pop_back();
                }
            };
            step(0, 0);
        }
    }

    auto canonicalize(const Structure & s) -> CanonicalForm
    {
        CanonicalSearch search(s);
        search.minimise();
        return CanonicalForm{s.kind(), s.size(), search.best_bits()};
    }

    auto canonical_labeling(const Structure & s) -> vector<int>
    {
        CanonicalSearch search(s);
        search.minimise();
        // best_labeling()[k] is the element placed at position k
        vector<int> new_index(s.size());
        for (int k = 0 ; k < s.size() ; ++k)
            new_index[search.best_labeling()[k]] = k;
        return new_index;
    }

    auto is_canonical_labeling(const Structure & s) -> bool
    {
        return CanonicalSearch(s).identity_is_minimal();
    }

    auto encode(const Structure & s) -> CanonicalForm
    {
        return CanonicalForm{s.kind(), s.size(), CanonicalSearch(s).bits_as_labeled()};
    }

    auto enumeration_bound(Kind kind) -> int
    {
        switch (kind) {
            case Kind::Poset:
            case Kind::Lattice:
            case Kind::GraphSimple:
            case Kind::Geometry:
                return 6;
            case Kind::Permutation:
                return 8;
            case Kind::GraphLoops:
            case Kind::DigraphSimple:
                return 5;
            case Kind::DigraphLoops:
            case Kind::Hypergraph:
                return 4;
        }
        return 0;
    }

    auto for_each_labeled(Kind kind, int n, const std::function<void (const Structure &)> & visit) -> void
    {
        check_bound(kind, n);
        switch (kind) {
            case Kind::Poset:
                for_each_poset(n, visit);
                break;
            case Kind::Lattice:
                for_each_poset(n, [&] (const Structure & p) {
                        auto lattice = Structure::binary(Kind::Lattice, p.relation());
                        if (! validate(lattice))
                            visit(lattice);
                        });
                break;
            case Kind::Permutation:
                if (n > 5)
                    throw BoundExceeded("labeled permutations limited to n <= 5");
                for_each_total_order(n, [&] (const BitMatrix & first) {
                        for_each_total_order(n, [&] (const BitMatrix & second) {
                                visit(Structure::permutation_from_orders(first, second));
                                });
                        });
                break;
            case Kind::GraphSimple:
            case Kind::GraphLoops:
            case Kind::DigraphSimple:
            case Kind::DigraphLoops:
                for_each_graph(kind, n, visit);
                break;
            case Kind::Hypergraph:
                for_each_hypergraph(n, visit);
                break;
            case Kind::Geometry:
                for_each_geometry(n, visit);
                break;
        }
    }

    auto enumerate_labeled(Kind kind, int n) -> vector<Structure>
    {
        vector<Structure> result;
        for_each_labeled(kind, n, [&] (const Structure & s) { result.push_back(s); });
        return result;
    }

    auto enumerate_class(Kind kind, int n) -> vector<Structure>
    {
        check_bound(kind, n);

        vector<std::pair<CanonicalForm, Structure>> found;
        auto keep_if_canonical = [&] (const Structure & s) {
            if (is_canonical_labeling(s))
                found.emplace_back(encode(s), s);
        };

        if (kind == Kind::Permutation) {
            // each class has exactly one member whose first order is index order
            vector<int> sequence(n);
            std::iota(sequence.begin(), sequence.end(), 0);
            do
                keep_if_canonical(Structure::permutation(sequence));
            while (std::next_permutation(sequence.begin(), sequence.end()));
        }
        else
            for_each_labeled(kind, n, keep_if_canonical);

        std::sort(found.begin(), found.end(), [] (const auto & a, const auto & b) { return a.first < b.first; });
        vector<Structure> result;
        for (auto & [form, s] : found)
            result.push_back(std::move(s));
        return result;
    }
}
