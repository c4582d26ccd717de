#include <qproj/structure.hh>

#include <doctest.h>

#include "brute.hh"

using namespace qproj;
using std::vector;

namespace
{
    auto chain(int n) -> Structure
    {
        BitMatrix r(n);
        for (int a = 0 ; a < n ; ++a)
            for (int b = a ; b < n ; ++b)
                r.set(a, b);
        return Structure::binary(Kind::Poset, r);
    }

    auto axiom(const Structure & s) -> std::string
    {
        auto v = validate(s);
        return v ? v->axiom : "";
    }
}

TEST_CASE("kind names round-trip")
{
    for (auto kind : all_kinds)
        CHECK(parse_kind_name(kind_name(kind)) == kind);
    CHECK_FALSE(parse_kind_name("monoid"));
}

TEST_CASE("element sets")
{
    auto e = ElementSet::of(vector<int>{4, 1, 7});
    CHECK(e.size() == 3);
    CHECK(e.first() == 1);
    CHECK(e.last() == 7);
    CHECK(e.elements() == vector<int>{1, 4, 7});
    CHECK(ElementSet::singleton(4).subset_of(e));
    CHECK(lexicographic_less(ElementSet::of(vector<int>{0, 5}), ElementSet::of(vector<int>{1})));
    CHECK(lexicographic_less(ElementSet::of(vector<int>{0}), ElementSet::of(vector<int>{0, 1})));
}

TEST_CASE("valid posets and order violations")
{
    CHECK_FALSE(validate(chain(4)));
    CHECK_FALSE(validate(Structure::order(Kind::Poset, 3, vector<std::pair<int, int>>{{0, 1}, {0, 2}})));

    BitMatrix cycle(2);
    cycle.set(0, 0);
    cycle.set(1, 1);
    cycle.set(0, 1);
    cycle.set(1, 0);
    CHECK(axiom(Structure::binary(Kind::Poset, cycle)) == "antisymmetry");

    BitMatrix missing_reflexive(2);
    missing_reflexive.set(0, 0);
    CHECK(axiom(Structure::binary(Kind::Poset, missing_reflexive)) == "reflexivity");

    auto not_transitive = Structure::order(Kind::Poset, 3, vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(axiom(not_transitive) == "transitivity");
    CHECK(validate(not_transitive)->elements == vector<int>{0, 1, 2});
}

TEST_CASE("lattice axioms")
{
    auto vee = Structure::order(Kind::Lattice, 3, vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(axiom(vee) == "least upper bound");
    auto wedge = Structure::order(Kind::Lattice, 3, vector<std::pair<int, int>>{{1, 0}, {2, 0}});
    CHECK(axiom(wedge) == "greatest lower bound");
    auto diamond = Structure::order(Kind::Lattice, 4,
            vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    CHECK_FALSE(validate(diamond));
}

TEST_CASE("permutations")
{
    for (int n = 1 ; n <= 4 ; ++n)
        for (auto & p : brute::permutations(n)) {
            auto s = Structure::permutation(p);
            CHECK_FALSE(validate(s));
            CHECK(permutation_sequence(s) == p);
        }
    CHECK_THROWS_AS(Structure::permutation(vector<int>{0, 0}), std::invalid_argument);

    BitMatrix total(2), partial(2);
    total.set(0, 0);
    total.set(1, 1);
    total.set(0, 1);
    partial.set(0, 0);
    partial.set(1, 1);
    CHECK(axiom(Structure::permutation_from_orders(total, partial)) == "second order totality");
}

TEST_CASE("graph axioms")
{
    auto path = Structure::from_pairs(Kind::GraphSimple, 3, vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_FALSE(validate(path));
    CHECK(path.related(1, 0));
    CHECK(path.relation().count() == 4);

    auto looped = Structure::from_pairs(Kind::GraphSimple, 2, vector<std::pair<int, int>>{{0, 0}});
    CHECK(axiom(looped) == "no loops");
    CHECK_FALSE(validate(Structure::from_pairs(Kind::GraphLoops, 2, vector<std::pair<int, int>>{{0, 0}})));

    BitMatrix one_way(2);
    one_way.set(0, 1);
    CHECK(axiom(Structure::binary(Kind::GraphSimple, one_way)) == "symmetry");
    CHECK_FALSE(validate(Structure::binary(Kind::DigraphSimple, one_way)));
    CHECK(axiom(Structure::from_pairs(Kind::DigraphSimple, 1, vector<std::pair<int, int>>{{0, 0}})) == "no loops");
}

TEST_CASE("set families")
{
    auto h = Structure::set_family(Kind::Hypergraph, 3, vector<vector<int>>{{1, 2}, {0}, {2, 1}});
    CHECK(h.sets().size() == 2);
    CHECK(h.sets()[0] == ElementSet::singleton(0));
    CHECK_FALSE(validate(h));
    CHECK(axiom(Structure::set_family(Kind::Hypergraph, 2, vector<ElementSet>{ElementSet{}})) == "nonempty edges");

    auto short_line = Structure::set_family(Kind::Geometry, 3, vector<vector<int>>{{0}});
    CHECK(axiom(short_line) == "lines have at least two points");
    auto shared = Structure::set_family(Kind::Geometry, 4, vector<vector<int>>{{0, 1, 2}, {0, 1, 3}});
    CHECK(axiom(shared) == "two points share at most one line");
    CHECK(validate(shared)->describe() == "two points share at most one line at 0 1");

    auto g = Structure::set_family(Kind::Geometry, 6, vector<vector<int>>{{0, 1, 2}, {2, 3}});
    auto classes = classify_lines(g);
    CHECK(classes.regular.size() == 1);
    CHECK(classes.singular.size() == 1);
    CHECK(classes.isolated == ElementSet::of(vector<int>{4, 5}));
}

TEST_CASE("relabel and dual")
{
    auto vee = Structure::order(Kind::Poset, 3, vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    auto moved = relabel(vee, vector<int>{2, 0, 1});
    CHECK(moved.related(2, 0));
    CHECK(moved.related(2, 1));
    CHECK_FALSE(moved.related(0, 1));
    CHECK_FALSE(validate(moved));

    auto wedge = dual(vee);
    CHECK(wedge.related(1, 0));
    CHECK(dual(wedge) == vee);
    CHECK(is_chain(chain(3)));
    CHECK_FALSE(is_chain(vee));
    CHECK(is_antichain(Structure::order(Kind::Poset, 3, vector<std::pair<int, int>>{})));
}

TEST_CASE("mappings")
{
    Mapping m(3, vector<int>{2, 0, 2});
    CHECK_FALSE(m.is_surjective());
    CHECK_FALSE(m.is_injective());
    CHECK(m.preimage(2) == ElementSet::of(vector<int>{0, 2}));
    CHECK(m.image_of(ElementSet::range(3)) == ElementSet::of(vector<int>{0, 2}));
    CHECK(Mapping::identity(3).then(m) == m);
    CHECK(m.then(Mapping(3, vector<int>{1, 1, 0})).values() == vector<int>{0, 1, 0});
    CHECK_THROWS(Mapping(2, vector<int>{0, 2}));
}
