#include <qproj/decide.hh>

#include <algorithm>
#include <numeric>
#include <optional>

using std::optional;
using std::string;
using std::vector;

namespace qproj
{
    namespace
    {
        auto qp(Reason reason, int parameter = 0) -> Verdict
        {
            return Verdict{true, reason, parameter, Failure::None, {}};
        }

        auto not_qp(Failure failure, vector<int> offending) -> Verdict
        {
            return Verdict{false, Reason::NotCharacterized, 0, failure, std::move(offending)};
        }

        auto require(const Structure & s, std::initializer_list<Kind> kinds, const char * who) -> void
        {
            if (std::find(kinds.begin(), kinds.end(), s.kind()) == kinds.end())
                throw std::invalid_argument(string(who) + ": wrong structure kind " + string(kind_name(s.kind())));
            if (auto v = validate(s))
                throw std::invalid_argument(string(who) + ": invalid structure: " + v->describe());
        }

        // Components of the comparability graph, as the smallest member of each element's component.
        auto component_roots(const Structure & s) -> vector<int>
        {
            int n = s.size();
            vector<int> root(n);
            std::iota(root.begin(), root.end(), 0);
            auto find = [&] (int x) {
                while (root[x] != x)
                    x = root[x] = root[root[x]];
                return x;
            };
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    if (s.related(a, b)) {
                        int ra = find(a), rb = find(b);
                        if (ra != rb)
                            root[std::max(ra, rb)] = std::min(ra, rb);
                    }
            for (int x = 0 ; x < n ; ++x)
                root[x] = find(x);
            return root;
        }

        auto strictly_below(const Structure & s, int a, int b) -> bool
        {
            return a != b && s.related(a, b);
        }

        auto incomparable(const Structure & s, int a, int b) -> bool
        {
            return ! s.related(a, b) && ! s.related(b, a);
        }

        auto order_failure(const Structure & s) -> Verdict
        {
            int n = s.size();
            auto root = component_roots(s);
            bool connected = std::all_of(root.begin(), root.end(), [] (int r) { return r == 0; });

            if (! connected)
                for (int u = 0 ; u < n ; ++u)
                    for (int v = 0 ; v < n ; ++v)
                        if (strictly_below(s, u, v))
                            for (int w = 0 ; w < n ; ++w)
                                if (root[w] != root[u])
                                    return not_qp(Failure::Disconnected, {u, v, w});

            for (int u = 0 ; u < n ; ++u)
                for (int v = 0 ; v < n ; ++v)
                    for (int w = 0 ; w < n ; ++w)
                        if (v != w && strictly_below(s, u, v) && strictly_below(s, u, w) && incomparable(s, v, w))
                            return not_qp(Failure::Vee, {u, v, w});

            for (int u = 0 ; u < n ; ++u)
                for (int v = 0 ; v < n ; ++v)
                    for (int w = 0 ; w < n ; ++w)
                        if (v != w && strictly_below(s, v, u) && strictly_below(s, w, u) && incomparable(s, v, w))
                            return not_qp(Failure::Wedge, {u, v, w});

            throw std::logic_error("order_failure: connected non-chain without a vee or wedge");
        }

        auto decide_binary_graph(const Structure & s) -> Verdict
        {
            int n = s.size();
            bool loops = allows_loops(s.kind());

            optional<std::pair<int, int>> non_edge, edge;
            int loop_count = 0;
            for (int a = 0 ; a < n ; ++a) {
                if (s.related(a, a))
                    ++loop_count;
                for (int b = 0 ; b < n ; ++b)
                    if (a != b) {
                        if (s.related(a, b)) {
                            if (! edge)
                                edge = {a, b};
                        }
                        else if (! non_edge)
                            non_edge = {a, b};
                    }
            }

            bool e_empty = ! edge;
            bool off_diagonal_complete = ! non_edge;

            if (! loops) {
                if (e_empty)
                    return qp(Reason::Empty);
                if (off_diagonal_complete)
                    return qp(Reason::Complete);
                return not_qp(Failure::MissingEdge, {non_edge->first, non_edge->second, edge->first, edge->second});
            }

            if (off_diagonal_complete && loop_count == n)
                return qp(Reason::Complete);
            if (e_empty && loop_count == 0)
                return qp(Reason::EEmptyNoLoops);
            if (e_empty && loop_count == n)
                return qp(Reason::EEmptyAllLoops);
            if (loop_count < n) {
                // some pair is related (an edge, or a loop elsewhere) and this vertex has no loop
                for (int v = 0 ; v < n ; ++v)
                    if (! s.related(v, v))
                        return not_qp(Failure::MissingLoop, {v});
            }
            return not_qp(Failure::MissingEdge, {non_edge->first, non_edge->second, edge->first, edge->second});
        }

        auto binomial_sum_exceeds(int n, int k, std::size_t limit) -> bool
        {
            // sum_{i=1..k} C(n, i) > limit ?
            long double total = 0, term = 1;
            for (int i = 1 ; i <= k ; ++i) {
                term = term * (n - i + 1) / i;
                total += term;
            }
            return total > static_cast<long double>(limit) + 0.5L;
        }

        // First subset of the given size (lexicographic) that is not an edge.
        auto first_missing_of_size(const Structure & s, int size) -> optional<ElementSet>
        {
            int n = s.size();
            vector<int> pick(size);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                auto e = ElementSet::of(pick);
                if (! s.has_set(e))
                    return e;
                int i = size - 1;
                while (i >= 0 && pick[i] == n - size + i)
                    --i;
                if (i < 0)
                    return std::nullopt;
                ++pick[i];
                for (int k = i + 1 ; k < size ; ++k)
                    pick[k] = pick[k - 1] + 1;
            }
        }
    }

    auto mode_name(GeometryMode mode) -> std::string_view
    {
        return mode == GeometryMode::Literal ? "literal" : "strict";
    }

    auto Verdict::tag() const -> string
    {
        switch (reason) {
            case Reason::Chain: return "Chain";
            case Reason::Antichain: return "Antichain";
            case Reason::AnyPermutation: return "AnyPermutation";
            case Reason::Complete: return "Complete";
            case Reason::Empty: return "Empty";
            case Reason::EEmptyAllLoops: return "EEmptyAllLoops";
            case Reason::EEmptyNoLoops: return "EEmptyNoLoops";
            case Reason::NoEdges: return "NoEdges";
            case Reason::DownwardComplete: return "DownwardComplete(" + std::to_string(parameter) + ")";
            case Reason::NoLines: return "NoLines";
            case Reason::AllPairsSingular: return "AllPairsSingular";
            case Reason::RegularCovered: return "RegularCovered";
            case Reason::NotCharacterized: return "NotCharacterized";
        }
        return "?";
    }

    auto decide_poset(const Structure & s) -> Verdict
    {
        require(s, {Kind::Poset}, "decide_poset");
        if (is_chain(s))
            return qp(Reason::Chain);
        if (is_antichain(s))
            return qp(Reason::Antichain);
        return order_failure(s);
    }

    auto decide_lattice(const Structure & s) -> Verdict
    {
        require(s, {Kind::Lattice}, "decide_lattice");
        if (is_chain(s))
            return qp(Reason::Chain);
        return order_failure(s);
    }

    auto decide_permutation(const Structure & s) -> Verdict
    {
        require(s, {Kind::Permutation}, "decide_permutation");
        return qp(Reason::AnyPermutation);
    }

    auto decide_graph(const Structure & s) -> Verdict
    {
        require(s, {Kind::GraphSimple, Kind::GraphLoops}, "decide_graph");
        return decide_binary_graph(s);
    }

    auto decide_digraph(const Structure & s) -> Verdict
    {
        require(s, {Kind::DigraphSimple, Kind::DigraphLoops}, "decide_digraph");
        return decide_binary_graph(s);
    }

    auto decide_hypergraph(const Structure & s) -> Verdict
    {
        require(s, {Kind::Hypergraph}, "decide_hypergraph");
        if (s.sets().empty())
            return qp(Reason::NoEdges);

        int k = 0;
        for (auto e : s.sets())
            k = std::max(k, e.size());

        if (! binomial_sum_exceeds(s.size(), k, s.sets().size())) {
            // every edge has size <= k, so a full count means nothing is missing
            return qp(Reason::DownwardComplete, k);
        }

        for (int size = 1 ; size <= k ; ++size)
            if (auto missing = first_missing_of_size(s, size))
                return not_qp(Failure::MissingSubset, missing->elements());

        throw std::logic_error("decide_hypergraph: count and subset search disagree");
    }

    auto decide_geometry(const Structure & s, GeometryMode mode) -> Verdict
    {
        require(s, {Kind::Geometry}, "decide_geometry");
        int n = s.size();
        auto & lines = s.sets();
        if (lines.empty())
            return qp(Reason::NoLines);

        auto classes = classify_lines(s);
        if (classes.regular.empty() && std::size_t(n) * (n - 1) / 2 == lines.size())
            return qp(Reason::AllPairsSingular);

        if (mode == GeometryMode::Strict) {
            if (lines.size() == 1 && lines.front().size() == n && n >= 3)
                return qp(Reason::RegularCovered);
        }
        else {
            ElementSet covered;
            for (auto l : classes.regular)
                covered = covered | l;
            if (covered == ElementSet::range(n))
                return qp(Reason::RegularCovered);
        }

        for (auto l : classes.regular)
            if (l.size() < n)
                return not_qp(Failure::PartialRegularLine, l.elements());

        // only singular lines, and not all of them
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b) {
                auto pair_set = ElementSet::singleton(a) | ElementSet::singleton(b);
                if (! s.has_set(pair_set)) {
                    auto line = classes.singular.front().elements();
                    return not_qp(Failure::MissingSingular, {a, b, line[0], line[1]});
                }
            }

        throw std::logic_error("decide_geometry: unclassified geometry");
    }

    auto decide(const Structure & s, GeometryMode mode) -> Verdict
    {
        switch (s.kind()) {
            case Kind::Poset: return decide_poset(s);
            case Kind::Lattice: return decide_lattice(s);
            case Kind::Permutation: return decide_permutation(s);
            case Kind::GraphSimple:
            case Kind::GraphLoops: return decide_graph(s);
            case Kind::DigraphSimple:
            case Kind::DigraphLoops: return decide_digraph(s);
            case Kind::Hypergraph: return decide_hypergraph(s);
            case Kind::Geometry: return decide_geometry(s, mode);
        }
        throw std::invalid_argument("decide: unknown kind");
    }
}
