#include <qproj/structure.hh>

#include <algorithm>
#include <numeric>
#include <sstream>

using std::optional;
using std::pair;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace qproj
{
    namespace
    {
        struct KindName
        {
            Kind kind;
            string_view name;
        };

        constexpr KindName kind_names[] = {
            {Kind::Poset, "poset"},
            {Kind::Lattice, "lattice"},
            {Kind::Permutation, "permutation"},
            {Kind::GraphSimple, "graph"},
            {Kind::GraphLoops, "graph-loops"},
            {Kind::DigraphSimple, "digraph"},
            {Kind::DigraphLoops, "digraph-loops"},
            {Kind::Hypergraph, "hypergraph"},
            {Kind::Geometry, "geometry"},
        };

        auto check_size(int n) -> void
        {
            if (n < 0 || n > max_elements)
                throw std::invalid_argument("structure size " + std::to_string(n) + " outside [0, 64]");
        }

        auto check_index(int x, int n) -> void
        {
            if (x < 0 || x >= n)
                throw std::out_of_range("element " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
        }

        auto violation(string axiom, vector<int> elements) -> optional<Violation>
        {
            return Violation{std::move(axiom), std::move(elements)};
        }

        // Reflexive, antisymmetric, transitive; `prefix` names the order in reports.
        auto check_partial_order(const BitMatrix & r, const string & prefix) -> optional<Violation>
        {
            int n = r.size();
            for (int a = 0 ; a < n ; ++a)
                if (! r.test(a, a))
                    return violation(prefix + "reflexivity", {a});
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if (r.test(a, b) && r.test(b, a))
                        return violation(prefix + "antisymmetry", {a, b});
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    if (r.test(a, b))
                        for (int c = 0 ; c < n ; ++c)
                            if (r.test(b, c) && ! r.test(a, c))
                                return violation(prefix + "transitivity", {a, b, c});
            return std::nullopt;
        }

        auto check_total(const BitMatrix & r, const string & prefix) -> optional<Violation>
        {
            for (int a = 0 ; a < r.size() ; ++a)
                for (int b = a + 1 ; b < r.size() ; ++b)
                    if (! r.test(a, b) && ! r.test(b, a))
                        return violation(prefix + "totality", {a, b});
            return std::nullopt;
        }

        // The least element of `candidates` under `r`, if one exists.
        auto least_in(const BitMatrix & r, ElementSet candidates) -> optional<int>
        {
            for (int x : candidates.elements())
                if (candidates.subset_of(r.row(x)))
                    return x;
            return std::nullopt;
        }

        auto check_lattice(const BitMatrix & r) -> optional<Violation>
        {
            int n = r.size();
            BitMatrix reversed = r.transposed();
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if (! least_in(r, r.row(a) & r.row(b)))
                        return violation("least upper bound", {a, b});
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    if (! least_in(reversed, reversed.row(a) & reversed.row(b)))
                        return violation("greatest lower bound", {a, b});
            return std::nullopt;
        }
    }

    auto kind_name(Kind kind) -> string_view
    {
        for (auto & [k, name] : kind_names)
            if (k == kind)
                return name;
        return "unknown";
    }

    auto parse_kind_name(string_view name) -> optional<Kind>
    {
        for (auto & [k, n] : kind_names)
            if (n == name)
                return k;
        return std::nullopt;
    }

    auto is_binary_kind(Kind kind) -> bool
    {
        return ! is_set_family_kind(kind);
    }

    auto is_set_family_kind(Kind kind) -> bool
    {
        return kind == Kind::Hypergraph || kind == Kind::Geometry;
    }

    auto is_order_kind(Kind kind) -> bool
    {
        return kind == Kind::Poset || kind == Kind::Lattice;
    }

    auto is_graph_kind(Kind kind) -> bool
    {
        return kind == Kind::GraphSimple || kind == Kind::GraphLoops || kind == Kind::DigraphSimple
            || kind == Kind::DigraphLoops;
    }

    auto allows_loops(Kind kind) -> bool
    {
        return kind == Kind::GraphLoops || kind == Kind::DigraphLoops;
    }

    auto is_symmetric_kind(Kind kind) -> bool
    {
        return kind == Kind::GraphSimple || kind == Kind::GraphLoops;
    }

    auto ElementSet::of(span<const int> elements) -> ElementSet
    {
        ElementSet result;
        for (int x : elements) {
            check_index(x, max_elements);
            result.insert(x);
        }
        return result;
    }

    auto ElementSet::elements() const -> vector<int>
    {
        vector<int> result;
        for (auto bits = _bits ; bits ; bits &= bits - 1)
            result.push_back(std::countr_zero(bits));
        return result;
    }

    auto lexicographic_less(ElementSet a, ElementSet b) -> bool
    {
        // Walk both ascending sequences; the first difference, or a proper prefix, decides.
        auto x = a.bits(), y = b.bits();
        while (x && y) {
            int ax = std::countr_zero(x), by = std::countr_zero(y);
            if (ax != by)
                return ax < by;
            x &= x - 1;
            y &= y - 1;
        }
        return y != 0;
    }

    auto BitMatrix::column(int b) const -> ElementSet
    {
        ElementSet result;
        for (int a = 0 ; a < size() ; ++a)
            if (test(a, b))
                result.insert(a);
        return result;
    }

    auto BitMatrix::transposed() const -> BitMatrix
    {
        BitMatrix result(size());
        for (int a = 0 ; a < size() ; ++a)
            for (int b = 0 ; b < size() ; ++b)
                if (test(a, b))
                    result.set(b, a);
        return result;
    }

    auto BitMatrix::count() const -> int
    {
        return std::accumulate(_rows.begin(), _rows.end(), 0,
                [] (int acc, std::uint64_t row) { return acc + std::popcount(row); });
    }

    auto Structure::binary(Kind kind, BitMatrix relation) -> Structure
    {
        if (! is_binary_kind(kind) || kind == Kind::Permutation)
            throw std::invalid_argument("binary() needs a single-relation kind");
        check_size(relation.size());
        Structure s;
        s._kind = kind;
        s._n = relation.size();
        s._relations.push_back(std::move(relation));
        return s;
    }

    auto Structure::from_pairs(Kind kind, int n, span<const pair<int, int>> pairs) -> Structure
    {
        check_size(n);
        BitMatrix r(n);
        for (auto [a, b] : pairs) {
            check_index(a, n);
            check_index(b, n);
            r.set(a, b);
            if (is_symmetric_kind(kind))
                r.set(b, a);
        }
        return binary(kind, std::move(r));
    }

    auto Structure::order(Kind kind, int n, span<const pair<int, int>> less_pairs) -> Structure
    {
        if (! is_order_kind(kind))
            throw std::invalid_argument("order() needs poset or lattice");
        check_size(n);
        BitMatrix r(n);
        for (int a = 0 ; a < n ; ++a)
            r.set(a, a);
        for (auto [a, b] : less_pairs) {
            check_index(a, n);
            check_index(b, n);
            r.set(a, b);
        }
        return binary(kind, std::move(r));
    }

    auto Structure::permutation(span<const int> order2) -> Structure
    {
        int n = int(order2.size());
        check_size(n);
        vector<int> rank(n, -1);
        for (int pos = 0 ; pos < n ; ++pos) {
            check_index(order2[pos], n);
            if (rank[order2[pos]] != -1)
                throw std::invalid_argument("permutation sequence repeats element " + std::to_string(order2[pos]));
            rank[order2[pos]] = pos;
        }
        BitMatrix first(n), second(n);
        for (int a = 0 ; a < n ; ++a)
            for (int b = 0 ; b < n ; ++b) {
                first.set(a, b, a <= b);
                second.set(a, b, rank[a] <= rank[b]);
            }
        return permutation_from_orders(std::move(first), std::move(second));
    }

    auto Structure::permutation_from_orders(BitMatrix order1, BitMatrix order2) -> Structure
    {
        if (order1.size() != order2.size())
            throw std::invalid_argument("permutation orders differ in size");
        check_size(order1.size());
        Structure s;
        s._kind = Kind::Permutation;
        s._n = order1.size();
        s._relations.push_back(std::move(order1));
        s._relations.push_back(std::move(order2));
        return s;
    }

    auto Structure::set_family(Kind kind, int n, vector<ElementSet> sets) -> Structure
    {
        if (! is_set_family_kind(kind))
            throw std::invalid_argument("set_family() needs hypergraph or geometry");
        check_size(n);
        for (auto e : sets)
            if (! e.subset_of(ElementSet::range(n)))
                throw std::out_of_range("set mentions an element outside [0, " + std::to_string(n) + ")");
        std::sort(sets.begin(), sets.end(), lexicographic_less);
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        Structure s;
        s._kind = kind;
        s._n = n;
        s._sets = std::move(sets);
        return s;
    }

    auto Structure::set_family(Kind kind, int n, const vector<vector<int>> & sets) -> Structure
    {
        vector<ElementSet> packed;
        for (auto & e : sets) {
            for (int x : e)
                check_index(x, n);
            packed.push_back(ElementSet::of(e));
        }
        return set_family(kind, n, std::move(packed));
    }

    auto Structure::has_set(ElementSet e) const -> bool
    {
        return std::binary_search(_sets.begin(), _sets.end(), e, lexicographic_less);
    }

    auto relabel(const Structure & s, span<const int> new_index) -> Structure
    {
        int n = s.size();
        if (int(new_index.size()) != n)
            throw std::invalid_argument("relabel: permutation length mismatch");
        auto image = [&] (ElementSet e) {
            ElementSet out;
            for (int x : e.elements())
                out.insert(new_index[x]);
            return out;
        };
        if (is_set_family_kind(s.kind())) {
            vector<ElementSet> sets;
            for (auto e : s.sets())
                sets.push_back(image(e));
            return Structure::set_family(s.kind(), n, std::move(sets));
        }

        vector<BitMatrix> relations;
        for (int r = 0 ; r < s.relation_count() ; ++r) {
            BitMatrix m(n);
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    if (s.related(a, b, r))
                        m.set(new_index[a], new_index[b]);
            relations.push_back(std::move(m));
        }
        if (s.kind() == Kind::Permutation)
            return Structure::permutation_from_orders(std::move(relations[0]), std::move(relations[1]));
        return Structure::binary(s.kind(), std::move(relations[0]));
    }

    auto dual(const Structure & s) -> Structure
    {
        if (! is_order_kind(s.kind()))
            throw std::invalid_argument("dual: not an order");
        return Structure::binary(s.kind(), s.relation().transposed());
    }

    auto permutation_sequence(const Structure & s) -> vector<int>
    {
        if (s.kind() != Kind::Permutation)
            throw std::invalid_argument("permutation_sequence: not a permutation");
        vector<int> sequence(s.size());
        std::iota(sequence.begin(), sequence.end(), 0);
        std::sort(sequence.begin(), sequence.end(), [&] (int a, int b) {
                return a != b && s.related(a, b, 1); });
        return sequence;
    }

    Mapping::Mapping(int image_size, vector<int> values) :
        _image_size(image_size),
        _values(std::move(values))
    {
        for (int v : _values)
            if (v < 0 || v >= _image_size)
                throw std::out_of_range("mapping value " + std::to_string(v) + " outside [0, "
                        + std::to_string(_image_size) + ")");
    }

    auto Mapping::identity(int n) -> Mapping
    {
        vector<int> values(n);
        std::iota(values.begin(), values.end(), 0);
        return Mapping(n, std::move(values));
    }

    auto Mapping::constant(int n, int image_size, int value) -> Mapping
    {
        return Mapping(image_size, vector<int>(n, value));
    }

    auto Mapping::is_surjective() const -> bool
    {
        vector<bool> hit(_image_size);
        for (int v : _values)
            hit[v] = true;
        return std::all_of(hit.begin(), hit.end(), [] (bool b) { return b; });
    }

    auto Mapping::is_injective() const -> bool
    {
        vector<bool> hit(_image_size);
        for (int v : _values) {
            if (hit[v])
                return false;
            hit[v] = true;
        }
        return true;
    }

    auto Mapping::preimage(int value) const -> ElementSet
    {
        ElementSet result;
        for (int x = 0 ; x < domain_size() ; ++x)
            if (_values[x] == value)
                result.insert(x);
        return result;
    }

    auto Mapping::then(const Mapping & after) const -> Mapping
    {
        if (after.domain_size() != _image_size)
            throw std::invalid_argument("mapping composition: size mismatch");
        vector<int> values;
        for (int v : _values)
            values.push_back(after[v]);
        return Mapping(after.image_size(), std::move(values));
    }

    auto Mapping::image_of(ElementSet set) const -> ElementSet
    {
        ElementSet result;
        for (int x : set.elements())
            result.insert(_values[x]);
        return result;
    }

    auto Violation::describe() const -> string
    {
        std::ostringstream out;
        out << axiom;
        if (! elements.empty()) {
            out << " at";
            for (int x : elements)
                out << ' ' << x;
        }
        return out.str();
    }

    auto validate(const Structure & s) -> optional<Violation>
    {
        int n = s.size();
        if (n < 1)
            return violation("nonempty carrier", {});

        switch (s.kind()) {
            case Kind::Poset:
                return check_partial_order(s.relation(), "");

            case Kind::Lattice:
                if (auto v = check_partial_order(s.relation(), ""))
                    return v;
                return check_lattice(s.relation());

            case Kind::Permutation:
                for (int r = 0 ; r < 2 ; ++r) {
                    string prefix = r == 0 ? "first order " : "second order ";
                    if (auto v = check_partial_order(s.relation(r), prefix))
                        return v;
                    if (auto v = check_total(s.relation(r), prefix))
                        return v;
                }
                return std::nullopt;

            case Kind::GraphSimple:
            case Kind::GraphLoops:
            case Kind::DigraphSimple:
            case Kind::DigraphLoops:
                if (is_symmetric_kind(s.kind()))
                    for (int a = 0 ; a < n ; ++a)
                        for (int b = a + 1 ; b < n ; ++b)
                            if (s.related(a, b) != s.related(b, a))
                                return violation("symmetry", {a, b});
                if (! allows_loops(s.kind()))
                    for (int a = 0 ; a < n ; ++a)
                        if (s.related(a, a))
                            return violation("no loops", {a});
                return std::nullopt;

            case Kind::Hypergraph:
                for (auto e : s.sets())
                    if (e.empty())
                        return violation("nonempty edges", {});
                return std::nullopt;

            case Kind::Geometry:
                for (auto l : s.sets())
                    if (l.size() < 2)
                        return violation("lines have at least two points", l.elements());
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b) {
                        auto pair_set = ElementSet::singleton(a) | ElementSet::singleton(b);
                        int holders = 0;
                        for (auto l : s.sets())
                            if (pair_set.subset_of(l))
                                ++holders;
                        if (holders > 1)
                            return violation("two points share at most one line", {a, b});
                    }
                return std::nullopt;
        }
        return std::nullopt;
    }

    auto classify_lines(const Structure & g) -> LineClasses
    {
        if (g.kind() != Kind::Geometry)
            throw std::invalid_argument("classify_lines: not a geometry");
        LineClasses result;
        ElementSet covered;
        for (auto l : g.sets()) {
            (l.size() > 2 ? result.regular : result.singular).push_back(l);
            covered = covered | l;
        }
        result.isolated = ElementSet{ElementSet::range(g.size()).bits() & ~covered.bits()};
        return result;
    }

    auto is_chain(const Structure & s) -> bool
    {
        for (int a = 0 ; a < s.size() ; ++a)
            for (int b = a + 1 ; b < s.size() ; ++b)
                if (! s.related(a, b) && ! s.related(b, a))
                    return false;
        return true;
    }

    auto is_antichain(const Structure & s) -> bool
    {
        for (int a = 0 ; a < s.size() ; ++a)
            for (int b = 0 ; b < s.size() ; ++b)
                if (a != b && s.related(a, b))
                    return false;
        return true;
    }
}
