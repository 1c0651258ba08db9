#include "support.hpp"

#include "qordkit/error.hpp"
#include "qordkit/segre.hpp"

using namespace qordkit;

namespace {

SimplicialComplex triangle_boundary()
{
    return SimplicialComplex::from_facets({"0", "1", "2"}, {{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex filled_triangle()
{
    return SimplicialComplex::from_facets({"0", "1", "2"}, {{0, 1, 2}});
}

} // namespace

TEST_CASE("closure under faces")
{
    auto t = filled_triangle();
    CHECK(t.dimension() == 2);
    CHECK(t.num_simplices() == 7);
    CHECK(t.contains({0, 2}));
    CHECK(t.facets() == std::vector<Simplex>{{0, 1, 2}});
    CHECK(t.index_of({5}) == -1);
}

TEST_CASE("segre products")
{
    auto ee = segre_product(SimplicialComplex::edge(), SimplicialComplex::edge());
    CHECK(ee.num_vertices() == 4);
    CHECK(ee.faces(1).size() == 2);
    CHECK(ee.dimension() == 1);
    CHECK(connected_components(ee) == 2);
    // (1,1)-(2,2) and (1,2)-(2,1)
    CHECK(ee.contains({0, 3}));
    CHECK(ee.contains({1, 2}));

    auto t = filled_triangle();
    auto tp = segre_product(t, SimplicialComplex::point());
    CHECK(tp.num_vertices() == 3);
    CHECK(tp.dimension() == 0);

    auto tt = segre_product(t, t);
    // simplices of the product are matchings between faces of equal size
    CHECK(tt.faces(0).size() == 9);
    CHECK(tt.faces(1).size() == 3 * 3 * 2);
    CHECK(tt.faces(2).size() == 6);
}

TEST_CASE("homology")
{
    auto h = homology_ranks(triangle_boundary(), 2);
    CHECK(h.ranks == std::vector<int>{1, 1, 0});
    CHECK(h.chain_ranks == std::vector<int>{3, 3, 0, 0});

    auto f = homology_ranks(filled_triangle(), 2);
    CHECK(f.ranks == std::vector<int>{1, 0, 0});

    for (int n = 1; n <= 4; ++n) {
        auto p = segre_power(SimplicialComplex::edge(), n);
        CHECK(homology_ranks(p, 0).ranks[0] == (1 << (n - 1)));
        CHECK(connected_components(p) == (1 << (n - 1)));
    }
}

TEST_CASE("traces on homology")
{
    auto x = triangle_boundary();
    auto h = homology_ranks(x, 1);
    CHECK(homology_trace(x, h, 1, {1, 2, 0}) == Cyclotomic(1));
    CHECK(homology_trace(x, h, 1, {1, 0, 2}) == Cyclotomic(-1));
    CHECK(homology_trace(x, h, 0, {1, 0, 2}) == Cyclotomic(1));
    CHECK(homology_trace(x, h, 1, {0, 1, 2}) == Cyclotomic(1));
}

TEST_CASE("equivariant data")
{
    auto z2 = FiniteGroup::cyclic(2);
    auto table = character_table(z2);
    auto edge = SimplicialComplex::edge();
    auto action = make_action(z2, table, edge, {{1, {1, 0}}});
    CHECK(action.perms == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    auto data = equivariant_hilbert_data(edge, action, 0, 3);
    REQUIRE(data.size() == 3);
    CHECK(data[0].rank == 1);
    CHECK(data[0].monomial == Polynomial::monomial(2, {1, 0}, Cyclotomic(1)));
    CHECK(data[1].rank == 2);
    CHECK(data[1].monomial ==
          Polynomial::monomial(2, {2, 0}, Cyclotomic(1)) + Polynomial::monomial(2, {0, 2}, Cyclotomic(1)));
    CHECK(data[2].rank == 4);

    CHECK_THROWS_AS(make_action(z2, table, triangle_boundary(), {{1, {1, 2, 0}}}), Error);
}

TEST_CASE("simplex budget")
{
    auto big = SimplicialComplex::from_facets({"0", "1", "2", "3", "4", "5"}, {{0, 1, 2, 3, 4, 5}});
    CHECK_THROWS_AS(segre_power(big, 3, 1000), UnsupportedError);
}
