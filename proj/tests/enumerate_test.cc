#include <qproj/enumerate.hh>

#include <doctest.h>

#include "brute.hh"

#include <map>
#include <random>
#include <set>

using namespace qproj;
using std::vector;

namespace
{
    // Class counts for n = 1, 2, ... (published sequences, cross-checked below by orbit counting).
    const std::map<Kind, vector<int>> known_counts{
        {Kind::Poset, {1, 2, 5, 16, 63}},
        {Kind::Lattice, {1, 1, 1, 2, 5}},
        {Kind::Permutation, {1, 2, 6, 24}},
        {Kind::GraphSimple, {1, 2, 4, 11}},
        {Kind::GraphLoops, {2, 6, 20}},
        {Kind::DigraphSimple, {1, 3, 16}},
        {Kind::DigraphLoops, {2, 10, 104}},
        {Kind::Hypergraph, {2, 6}},
        {Kind::Geometry, {1, 2, 5}}};

    auto brute_limit(Kind kind) -> int
    {
        switch (kind) {
            case Kind::DigraphLoops:
            case Kind::Hypergraph:
            case Kind::DigraphSimple:
            case Kind::GraphLoops: return 3;
            default: return 4;
        }
    }
}

TEST_CASE("class counts")
{
    for (auto & [kind, counts] : known_counts) {
        CAPTURE(kind_name(kind));
        for (int n = 1 ; n <= int(counts.size()) ; ++n) {
            CAPTURE(n);
            CHECK(int(enumerate_class(kind, n).size()) == counts[n - 1]);
        }
    }
}

TEST_CASE("class counts equal orbit counts of labeled structures")
{
    for (auto kind : all_kinds) {
        CAPTURE(kind_name(kind));
        for (int n = 1 ; n <= brute_limit(kind) ; ++n) {
            CAPTURE(n);
            auto labeled = enumerate_labeled(kind, n);
            CHECK(int(enumerate_class(kind, n).size()) == brute::count_orbits(labeled));
        }
    }
}

TEST_CASE("labeled generation is exhaustive")
{
    // every relation on two or three elements, filtered by validate
    for (auto kind : {Kind::Poset, Kind::Lattice, Kind::GraphSimple, Kind::GraphLoops, Kind::DigraphSimple,
            Kind::DigraphLoops}) {
        CAPTURE(kind_name(kind));
        for (int n = 1 ; n <= 3 ; ++n) {
            std::set<vector<std::uint8_t>> expected, produced;
            for (unsigned bits = 0 ; bits < (1u << (n * n)) ; ++bits) {
                BitMatrix r(n);
                for (int i = 0 ; i < n * n ; ++i)
                    r.set(i / n, i % n, (bits >> i) & 1);
                auto s = Structure::binary(kind, r);
                if (! validate(s))
                    expected.insert(encode(s).bits);
            }
            for (auto & s : enumerate_labeled(kind, n)) {
                CHECK_FALSE(validate(s));
                produced.insert(encode(s).bits);
            }
            CHECK(produced == expected);
            CHECK(enumerate_labeled(kind, n).size() == expected.size());
        }
    }

    for (auto kind : {Kind::Hypergraph, Kind::Geometry})
        for (int n = 1 ; n <= 3 ; ++n) {
            int subsets = (1 << n) - 1;
            std::size_t expected = 0;
            for (unsigned family = 0 ; family < (1u << subsets) ; ++family) {
                vector<ElementSet> sets;
                for (int m = 1 ; m <= subsets ; ++m)
                    if ((family >> (m - 1)) & 1)
                        sets.push_back(ElementSet{std::uint64_t(m)});
                if (! validate(Structure::set_family(kind, n, sets)))
                    ++expected;
            }
            CHECK(enumerate_labeled(kind, n).size() == expected);
        }

    CHECK(enumerate_labeled(Kind::Permutation, 3).size() == 36);
}

TEST_CASE("every labeled structure matches exactly one class")
{
    for (auto kind : all_kinds) {
        CAPTURE(kind_name(kind));
        for (int n = 1 ; n <= 3 ; ++n) {
            auto classes = enumerate_class(kind, n);
            std::map<CanonicalForm, int> index;
            for (auto & c : classes) {
                CHECK_FALSE(validate(c));
                CHECK(is_canonical_labeling(c));
                CHECK(canonicalize(c) == encode(c));
                CHECK(index.emplace(canonicalize(c), 0).second);
            }
            for (auto & s : enumerate_labeled(kind, n)) {
                auto found = index.find(canonicalize(s));
                REQUIRE(found != index.end());
                ++found->second;
            }
            for (auto & [form, hits] : index)
                CHECK(hits > 0);
        }
    }
}

TEST_CASE("classes come out sorted by canonical form")
{
    for (auto kind : all_kinds) {
        auto classes = enumerate_class(kind, 3);
        for (std::size_t i = 1 ; i < classes.size() ; ++i)
            CHECK(canonicalize(classes[i - 1]) < canonicalize(classes[i]));
    }
}

TEST_CASE("canonical forms are invariant under relabeling")
{
    std::mt19937 rng(7);
    for (auto kind : all_kinds) {
        CAPTURE(kind_name(kind));
        int n = std::min(enumeration_bound(kind), 5);
        for (auto & s : enumerate_class(kind, n)) {
            vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            for (int round = 0 ; round < 3 ; ++round) {
                std::shuffle(p.begin(), p.end(), rng);
                auto moved = relabel(s, p);
                REQUIRE(canonicalize(moved) == canonicalize(s));
                REQUIRE(encode(relabel(moved, canonical_labeling(moved))) == canonicalize(s));
            }
        }
    }
}

TEST_CASE("canonical form examples")
{
    using P = vector<std::pair<int, int>>;
    auto two_chain = Structure::order(Kind::Poset, 2, P{{0, 1}});
    CHECK(canonicalize(two_chain) == canonicalize(Structure::order(Kind::Poset, 2, P{{1, 0}})));

    auto path = Structure::from_pairs(Kind::GraphSimple, 3, P{{0, 1}, {1, 2}});
    auto other_path = Structure::from_pairs(Kind::GraphSimple, 3, P{{1, 0}, {0, 2}});
    auto k3 = Structure::from_pairs(Kind::GraphSimple, 3, P{{0, 1}, {1, 2}, {0, 2}});
    CHECK(canonicalize(path) == canonicalize(other_path));
    CHECK(canonicalize(path) != canonicalize(k3));

    // the permutation classes are the n! second orders over index order
    std::set<vector<int>> sequences;
    for (auto & s : enumerate_class(Kind::Permutation, 3))
        sequences.insert(permutation_sequence(s));
    CHECK(sequences.size() == 6);
}

TEST_CASE("enumeration bounds")
{
    for (auto kind : all_kinds) {
        CHECK_THROWS_AS(enumerate_class(kind, enumeration_bound(kind) + 1), BoundExceeded);
        CHECK_THROWS_AS(enumerate_class(kind, 0), std::invalid_argument);
    }
}
