#include "properties.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fineint;
using namespace fineint::testing;

namespace {

LatticePolytope cube(int r)
{
    std::vector<ZVec> vs;
    for (int a : {-r, r})
        for (int b : {-r, r})
            for (int c : {-r, r}) vs.push_back(ZVec{a, b, c});
    return LatticePolytope(vs);
}

LatticePolytope unit_simplex()
{
    return LatticePolytope({ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, 0, 1}});
}

} // namespace

TEST_CASE("hull drops interior and duplicate points")
{
    std::vector<ZVec> pts{ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, 0, 1}, ZVec{0, 0, 0}};
    LatticePolytope p(pts);
    CHECK(p.dim() == 3);
    CHECK(p.vertices().size() == 4);
    CHECK(facets(p).size() == 4);
    std::vector<ZVec> with_inner = cube(1).lattice_vertices();
    with_inner.push_back(ZVec{0, 0, 0});
    with_inner.push_back(ZVec{1, 0, 1});
    LatticePolytope c(with_inner);
    CHECK(c.vertices().size() == 8);
    CHECK(facets(c).size() == 6);
    for (const auto& f : facets(c)) {
        CHECK(content(f.normal) == 1);
        CHECK(f.offset == Rational(-1));
    }
}

TEST_CASE("hull handles coplanar points and lower-dimensional input")
{
    // A square pyramid has a non-triangular facet.
    LatticePolytope pyr({ZVec{0, 0, 0}, ZVec{2, 0, 0}, ZVec{0, 2, 0}, ZVec{2, 2, 0}, ZVec{1, 1, 1}, ZVec{1, 1, 0}});
    CHECK(pyr.vertices().size() == 5);
    CHECK(facets(pyr).size() == 5);
    LatticePolytope seg({ZVec{0, 0, 0}, ZVec{2, 2, 2}, ZVec{1, 1, 1}});
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.equations().size() == 2);
    CHECK(lattice_points(seg).size() == 3);
    CHECK(interior_lattice_points(seg).size() == 1);
    CHECK_THROWS_AS(facets(seg), DimensionError);
    LatticePolytope square({ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{1, 1, 0}});
    CHECK(square.dim() == 2);
    CHECK(square.facets().size() == 4);
    Polytope pt = hull(std::vector<QVec>{QVec{Rational(1, 2), Rational(0), Rational(0)}});
    CHECK(pt.dim() == 0);
    CHECK_THROWS_AS(hull(std::vector<QVec>{}), PreconditionError);
}

TEST_CASE("lattice point counts")
{
    CHECK(count_lattice_points(cube(1)) == 27);
    CHECK(count_interior_lattice_points(cube(1)) == 1);
    CHECK(count_lattice_points(dilate(cube(1), 2)) == 125);
    CHECK(count_lattice_points(unit_simplex()) == 4);
    CHECK(count_interior_lattice_points(dilate(unit_simplex(), 4)) == 1);
    LatticePolytope p({ZVec{2, 3, 8}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{-1, -1, -1}});
    CHECK(count_lattice_points(p) == 9);
    CHECK(interior_lattice_points(p) == std::vector<ZVec>{ZVec{0, 0, 0}});
}

TEST_CASE("membership and translation")
{
    LatticePolytope c = cube(1);
    CHECK(c.contains(QVec{Rational(1), Rational(1, 2), Rational(-1)}));
    CHECK_FALSE(c.contains_in_interior(QVec{Rational(1), Rational(0), Rational(0)}));
    CHECK(c.contains_in_interior(QVec{Rational(1, 2), Rational(0), Rational(0)}));
    Polytope t = c.translated(QVec{Rational(1), Rational(0), Rational(0)});
    CHECK(t.contains(QVec{Rational(2), Rational(0), Rational(0)}));
    CHECK(c.scaled(2) == static_cast<const Polytope&>(cube(2)));
}

TEST_CASE("dual polytope and reflexivity")
{
    LatticePolytope c = cube(1);
    Polytope d = dual_polytope(c);
    CHECK(d.vertices().size() == 6);
    CHECK(d.is_integral());
    CHECK(is_reflexive(c));
    CHECK(is_reflexive(LatticePolytope(d)));
    CHECK_FALSE(is_reflexive(cube(2)));
    CHECK_THROWS(dual_polytope(unit_simplex()));
    LatticePolytope s({ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, 0, 1}, ZVec{-1, -1, -2}});
    CHECK_FALSE(is_reflexive(s));
    LatticePolytope dh = integral_dual_hull(s);
    CHECK(dh.is_full_dimensional());
}

TEST_CASE("duality is an involution")
{
    auto r = duality_involution();
    CHECK(r.cases >= 50);
    for (const auto& f : r.failures) FAIL_CHECK(f);
}

TEST_CASE("halfspace intersection")
{
    std::vector<HalfSpace> box;
    for (std::size_t i = 0; i < 3; ++i) {
        ZVec e(3);
        e[i] = 1;
        box.push_back({e, Rational(0)});
        box.push_back({-e, Rational(-1)});
    }
    Polytope p = vertices_from_halfspaces(box, 3);
    CHECK(p.vertices().size() == 8);
    auto open = box;
    open.pop_back();
    CHECK_THROWS_AS(vertices_from_halfspaces(open, 3), UnboundedError);
    auto empty = box;
    empty.push_back({ZVec{1, 1, 1}, Rational(4)});
    CHECK(vertices_from_halfspaces(empty, 3).is_empty());
    // With an equation the result is a facet of the cube.
    Polytope face = vertices_from_halfspaces(box, 3, {HalfSpace{ZVec{0, 0, 1}, Rational(1)}});
    CHECK(face.dim() == 2);
    CHECK(face.vertices().size() == 4);
    // Redundant constraints and a single point.
    std::vector<HalfSpace> pt{{ZVec{1, 0, 0}, Rational(1, 2)},  {ZVec{-1, 0, 0}, Rational(-1, 2)},
                              {ZVec{0, 1, 0}, Rational(0)},     {ZVec{0, -1, 0}, Rational(0)},
                              {ZVec{0, 0, 1}, Rational(0)},     {ZVec{0, 0, -1}, Rational(0)},
                              {ZVec{1, 1, 1}, Rational(-3)}};
    Polytope q = vertices_from_halfspaces(pt, 3);
    CHECK(q.dim() == 0);
    CHECK(q.vertices()[0] == QVec{Rational(1, 2), Rational(0), Rational(0)});
}

TEST_CASE("vertices_from_halfspaces inverts facets")
{
    for (const auto& f : canonical_fixtures()) {
        LatticePolytope p(f.vertices);
        Polytope q = vertices_from_halfspaces(facets(p), 3);
        CHECK(q == static_cast<const Polytope&>(p));
    }
}

TEST_CASE("lattice width")
{
    CHECK(lattice_width(cube(1)).width == 2);
    CHECK(lattice_width(unit_simplex()).width == 1);
    LatticePolytope d12 = LatticePolytope(hollow_fixtures()[11].vertices);
    LatticeWidth w = lattice_width(d12);
    CHECK(w.width == 3);
    CHECK(width_along(d12, w.direction) == 3);
    // A segment of lattice length 2 inside a plane.
    LatticePolytope seg({ZVec{0, 0, 0}, ZVec{2, 4, 6}});
    CHECK(lattice_width(seg).width == 2);
}

TEST_CASE("lattice width agrees with a brute-force search over small directions")
{
    const auto dirs = primitive_box(3, 4);
    std::size_t cases = 0;
    for (const auto& f : hollow_fixtures()) {
        LatticePolytope p(f.vertices);
        Integer best = -1;
        for (const auto& u : dirs) {
            Integer w = width_along(p, u);
            if (best < 0 || w < best) best = w;
        }
        CHECK(lattice_width(p).width == best);
        ++cases;
    }
    for (const auto& f : canonical_fixtures()) {
        LatticePolytope p(f.vertices);
        LatticeWidth w = lattice_width(p);
        CHECK(width_along(p, w.direction) == w.width);
        bool minimal = true;
        for (const auto& u : dirs) minimal = minimal && width_along(p, u) >= w.width;
        CHECK_MESSAGE(minimal, f.id);
        ++cases;
    }
    CHECK(cases >= 50);
}

TEST_CASE("lattice equivalence")
{
    std::mt19937 rng(11);
    for (const auto& f : canonical_fixtures()) {
        ZMatrix u = random_unimodular(rng, 3);
        std::vector<ZVec> moved;
        for (const auto& v : transform(u, f.vertices)) moved.push_back(v + ZVec{1, -2, 3});
        CHECK(lattice_equivalent(LatticePolytope(f.vertices), LatticePolytope(moved)));
    }
    CHECK_FALSE(lattice_equivalent(cube(1), cube(2)));
    CHECK_FALSE(lattice_equivalent(unit_simplex(), LatticePolytope({ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0},
                                                                      ZVec{1, 1, 2}})));
}
