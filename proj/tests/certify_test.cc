#include <qproj/certify.hh>
#include <qproj/enumerate.hh>
#include <qproj/hom.hh>

#include <doctest.h>

using namespace qproj;
using std::vector;
using P = vector<std::pair<int, int>>;

namespace
{
    auto chain(int n) -> Structure
    {
        P less;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                less.emplace_back(a, b);
        return Structure::order(Kind::Poset, n, less);
    }

    auto certifies(const Structure & s, const WitnessTriple & w) -> bool
    {
        return ! check_witness(s, w) && ! find_lift(s, w.target, w.f, w.j);
    }
}

TEST_CASE("poset witnesses")
{
    auto vee = Structure::order(Kind::Poset, 3, P{{0, 1}, {0, 2}});
    auto w = witness_poset(vee);
    CHECK(w.target == chain(3));
    CHECK(w.f.values() == vector<int>{1, 2, 2});
    CHECK(w.j.values() == vector<int>{0, 1, 2});

    // something above v needs the fourth chain element
    auto tall = Structure::order(Kind::Poset, 4, P{{0, 1}, {0, 2}, {1, 3}, {0, 3}});
    auto tall_w = witness_poset(tall);
    CHECK(tall_w.target == chain(4));
    CHECK(tall_w.j.values() == vector<int>{0, 1, 2, 3});
    CHECK(certifies(tall, tall_w));

    auto split = Structure::order(Kind::Poset, 3, P{{0, 1}});
    auto split_w = witness_poset(split);
    CHECK(split_w.target == chain(2));
    CHECK(split_w.f.values() == vector<int>{0, 1, 0});
    CHECK(split_w.j.values() == vector<int>{0, 0, 1});

    auto n_poset = Structure::order(Kind::Poset, 4, P{{0, 2}, {1, 2}, {1, 3}});
    CHECK(certifies(n_poset, witness_poset(n_poset)));

    auto wedge = Structure::order(Kind::Poset, 3, P{{1, 0}, {2, 0}});
    CHECK(certifies(wedge, witness_poset(wedge)));

    auto diamond = Structure::order(Kind::Lattice, 4, P{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    auto lattice_w = witness(diamond);
    CHECK(lattice_w.target.kind() == Kind::Lattice);
    CHECK(certifies(diamond, lattice_w));
}

TEST_CASE("graph witnesses")
{
    auto path = Structure::from_pairs(Kind::GraphSimple, 3, P{{0, 1}, {1, 2}});
    auto w = witness_graph(path);
    CHECK(w.target == Structure::from_pairs(Kind::GraphSimple, 3, P{{0, 1}, {0, 2}, {1, 2}}));
    CHECK(certifies(path, w));

    // four vertices: the shift-by-two arrangement, non-edge (0,3) and edge (1,2)
    auto path4 = Structure::from_pairs(Kind::GraphSimple, 4, P{{0, 1}, {1, 2}, {2, 3}});
    auto w4 = witness_graph(path4);
    for (int i = 0 ; i < 4 ; ++i)
        CHECK(w4.j[i] == (w4.f[i] + 2) % 4);
    CHECK(certifies(path4, w4));

    auto looped = Structure::from_pairs(Kind::GraphLoops, 3, P{{0, 1}, {0, 2}, {1, 2}, {0, 0}, {1, 1}});
    auto loop_w = witness_graph(looped);
    CHECK(loop_w.target == Structure::from_pairs(Kind::GraphLoops, 2, P{{0, 0}, {0, 1}, {1, 1}}));
    CHECK(loop_w.f.values() == vector<int>{0, 0, 0});
    CHECK(loop_w.j.values() == vector<int>{1, 1, 0});
    CHECK(certifies(looped, loop_w));

    auto arc = Structure::from_pairs(Kind::DigraphSimple, 3, P{{0, 1}});
    CHECK(certifies(arc, witness_digraph(arc)));

    // two vertices, one arc: neither shift pattern applies
    auto single_arc = Structure::from_pairs(Kind::DigraphSimple, 2, P{{0, 1}});
    CHECK(certifies(single_arc, witness_digraph(single_arc)));
}

TEST_CASE("hypergraph witnesses")
{
    auto pair_only = Structure::set_family(Kind::Hypergraph, 2, vector<vector<int>>{{0, 1}});
    auto w = witness_hypergraph(pair_only);
    CHECK(w.target.size() == 2);
    CHECK(w.target.sets().size() == 3);
    CHECK(certifies(pair_only, w));

    auto missing = Structure::set_family(Kind::Hypergraph, 3, vector<vector<int>>{{0, 1}, {1, 2}, {0, 2}, {0}, {1}});
    auto missing_w = witness_hypergraph(missing);
    CHECK(missing_w.target.size() == 2);
    CHECK(certifies(missing, missing_w));

    auto triple = Structure::set_family(Kind::Hypergraph, 4, vector<vector<int>>{{0, 1, 2}});
    auto triple_w = witness_hypergraph(triple);
    CHECK(triple_w.target.size() == 2);
    CHECK(certifies(triple, triple_w));
}

TEST_CASE("geometry witnesses")
{
    auto singular = Structure::set_family(Kind::Geometry, 3, vector<vector<int>>{{0, 1}});
    CHECK(certifies(singular, witness_geometry(singular)));

    auto partial = Structure::set_family(Kind::Geometry, 4, vector<vector<int>>{{0, 1, 2}});
    auto w = witness_geometry(partial);
    CHECK(w.target == Structure::set_family(Kind::Geometry, 3, vector<vector<int>>{{0, 1, 2}}));
    CHECK(certifies(partial, w));

    auto two_lines = Structure::set_family(Kind::Geometry, 6, vector<vector<int>>{{0, 1, 2}, {3, 4, 5}});
    CHECK(certifies(two_lines, witness_geometry(two_lines, GeometryMode::Strict)));
    CHECK_THROWS_AS(witness_geometry(two_lines, GeometryMode::Literal), std::invalid_argument);
}

TEST_CASE("witness preconditions")
{
    CHECK_THROWS_AS(witness(chain(3)), std::invalid_argument);
    CHECK_THROWS_AS(witness(Structure::permutation(vector<int>{1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(witness_graph(chain(2)), std::invalid_argument);
}

TEST_CASE("check_witness rejects bad triples")
{
    auto vee = Structure::order(Kind::Poset, 3, P{{0, 1}, {0, 2}});
    auto good = witness(vee);
    CHECK_FALSE(check_witness(vee, good));

    auto liftable = good;
    liftable.f = liftable.j;
    CHECK(check_witness(vee, liftable));

    auto not_onto = good;
    not_onto.j = Mapping(3, vector<int>{0, 1, 1});
    CHECK(check_witness(vee, not_onto));

    auto not_hom = good;
    not_hom.f = Mapping(3, vector<int>{2, 0, 0});
    CHECK(check_witness(vee, not_hom));

    auto wrong_kind = good;
    wrong_kind.target = Structure::from_pairs(Kind::GraphSimple, 3, P{});
    CHECK(check_witness(vee, wrong_kind));
}

TEST_CASE("lifts")
{
    auto k3 = Structure::from_pairs(Kind::GraphSimple, 3, P{{0, 1}, {0, 2}, {1, 2}});
    auto rotation = Mapping(3, vector<int>{1, 2, 0});
    auto phi = construct_lift(k3, k3, Mapping::identity(3), rotation);
    CHECK(phi.values() == vector<int>{2, 0, 1});

    auto p = Structure::permutation(vector<int>{1, 0, 2});
    CHECK(construct_lift(p, p, Mapping::identity(3), Mapping::identity(3)) == Mapping::identity(3));

    // every pair into every smaller permutation
    for (int m = 1 ; m <= 3 ; ++m)
        for (auto & t : enumerate_class(Kind::Permutation, m))
            for (auto & j : enumerate_homs(p, t, true))
                for (auto & f : enumerate_homs(p, t)) {
                    auto phi = construct_lift(p, t, f, j);
                    CHECK(is_hom(p, p, phi));
                    for (int x = 0 ; x < 3 ; ++x)
                        CHECK(j[phi[x]] == f[x]);
                }

    auto vee = Structure::order(Kind::Poset, 3, P{{0, 1}, {0, 2}});
    CHECK_THROWS_AS(construct_lift(vee, vee, Mapping::identity(3), Mapping::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(construct_lift(k3, k3, Mapping::identity(3), Mapping(3, vector<int>{0, 0, 1})),
            std::invalid_argument);
}
