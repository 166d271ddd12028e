#include "properties.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fineint;
using namespace fineint::testing;

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK(to_string(QVec{Rational(1, 2), Rational(1)}) == "(1/2,1)");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rank, determinant, inverse and solve")
{
    ZMatrix m = ZMatrix::from_rows({ZVec{2, 1, 0}, ZVec{1, 3, 1}, ZVec{0, 1, 4}}, 3);
    CHECK(determinant(m) == 18);
    CHECK(determinant(to_rational(m)) == Rational(18));
    auto inv = inverse(to_rational(m));
    REQUIRE(inv);
    CHECK(*inv * to_rational(m) == QMatrix::identity(3));
    CHECK(rank(std::vector<ZVec>{ZVec{1, 2, 3}, ZVec{2, 4, 6}, ZVec{0, 0, 1}}) == 2);
    auto x = solve(to_rational(m), QVec{1, 2, 3});
    REQUIRE(x);
    CHECK(to_rational(m) * *x == QVec{1, 2, 3});
    CHECK_FALSE(solve(to_rational(ZMatrix::from_rows({ZVec{1, 2}, ZVec{2, 4}}, 2)), QVec{1, 1}));
}

TEST_CASE("integer nullspace vectors are primitive")
{
    QMatrix a = to_rational(ZMatrix::from_rows({ZVec{2, 4, 6}}, 3));
    auto ns = integer_nullspace(a);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        CHECK(content(v) == 1);
        CHECK(dot(v, ZVec{2, 4, 6}) == 0);
    }
}

TEST_CASE("primitive vectors")
{
    CHECK(primitive(ZVec{4, -6, 2}) == ZVec{2, -3, 1});
    CHECK(primitive_direction(QVec{Rational(1, 2), Rational(1, 2), Rational(1)}) == ZVec{1, 1, 2});
    CHECK(primitive_direction(QVec{Rational(0), Rational(-2, 3), Rational(0)}) == ZVec{0, -1, 0});
}

TEST_CASE("Smith normal form satisfies U A V = S with a divisibility chain")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 2 + trial % 3, cols = 2 + (trial / 3) % 3;
        ZMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a(i, j) = e(rng);
        SmithForm f = smith_normal_form(a);
        CHECK(f.U * a * f.V == f.S);
        CHECK(abs(determinant(f.U)) == 1);
        CHECK(abs(determinant(f.V)) == 1);
        auto d = f.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(f.S(i, j) == 0);
    }
}

TEST_CASE("Smith normal form of a known matrix")
{
    ZMatrix a = ZMatrix::from_rows({ZVec{2, 4, 4}, ZVec{-6, 6, 12}, ZVec{10, -4, -16}}, 3);
    auto d = smith_normal_form(a).diagonal();
    CHECK(d == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("Hermite normal form spans the same lattice")
{
    ZMatrix a = ZMatrix::from_rows({ZVec{2, 3, 4}, ZVec{4, 6, 8}, ZVec{1, 0, 1}}, 3);
    ZMatrix h = hermite_normal_form(a);
    CHECK(h.rows() == 2);
    CHECK(h(1, 0) == 0);
    CHECK(h(0, 0) > 0);
}

TEST_CASE("complete_to_basis gives a unimodular matrix with first row v")
{
    for (ZVec v : {ZVec{1, 1, 2}, ZVec{0, 1, 0}, ZVec{0, -1, 0}, ZVec{9, 1, -3}, ZVec{-6, 10, 15}, ZVec{3, 5}}) {
        ZMatrix a = complete_to_basis(v);
        CHECK(abs(determinant(a)) == 1);
        CHECK(a.row(0) == v);
    }
    CHECK_THROWS_AS(complete_to_basis(ZVec{2, 4, 6}), PreconditionError);
}

TEST_CASE("saturated chart of a sublattice")
{
    std::vector<ZVec> gens{ZVec{2, 0, 0}, ZVec{1, 1, 0}};
    SaturatedChart c = saturated_chart(gens, 3);
    CHECK(c.rank == 2);
    // (1,0,0) lies in the saturation though not in the generated lattice.
    ZVec x{1, 0, 0};
    ZVec coords = c.coords(x);
    CHECK(coords.size() == 2);
    CHECK(c.lift(coords) == x);
    for (const auto& g : gens) CHECK(c.lift(c.coords(g)) == g);
}

TEST_CASE("affine lattice normalization of the Reid simplex")
{
    AffineLatticeSpec spec{ZVec{1, 1, 1, 1}, 5, ZVec{1, 2, 3, 4}, 5, 0};
    std::vector<ZVec> pts{ZVec{5, 0, 0, 0}, ZVec{0, 5, 0, 0}, ZVec{0, 0, 5, 0}, ZVec{0, 0, 0, 5}};
    AffineNormalization n = normalize_affine_lattice(spec, pts);
    REQUIRE(n.vertices.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(n.to_ambient(to_rational(n.vertices[i])) == to_rational(pts[i]));
    CHECK(n.to_chart(pts[0]) == n.vertices[0]);
    // The lattice points of the simplex are the affine lattice points inside it.
    LatticePolytope p(n.vertices);
    std::size_t direct = 0;
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; a + b <= 5; ++b)
            for (int c = 0; a + b + c <= 5; ++c)
                if (spec.contains(ZVec{a, b, c, 5 - a - b - c})) ++direct;
    CHECK(count_lattice_points(p) == direct);
    CHECK(count_interior_lattice_points(p) == 0);
}

TEST_CASE("affine lattice normalization rejects bad input")
{
    AffineLatticeSpec spec{ZVec{1, 1, 1, 1}, 5, ZVec{1, 2, 3, 4}, 5, 0};
    CHECK_THROWS_AS(normalize_affine_lattice(spec, {ZVec{5, 0, 0, 0}, ZVec{1, 1, 1, 1}}), PreconditionError);
    CHECK_THROWS_AS(normalize_affine_lattice(spec, {ZVec{5, 0, 0, 0}, ZVec{0, 5, 0, 0}}), PreconditionError);
}

TEST_CASE("planar convex hull is counterclockwise and strict")
{
    auto h = convex_hull_2d({ZVec{0, 0}, ZVec{2, 0}, ZVec{1, 0}, ZVec{2, 2}, ZVec{0, 2}, ZVec{1, 1}});
    REQUIRE(h.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const ZVec& a = h[i];
        const ZVec& b = h[(i + 1) % 4];
        const ZVec& c = h[(i + 2) % 4];
        CHECK((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0);
    }
}

TEST_CASE("polygon normal form separates the three reflexive facet types")
{
    const auto a = polygon_normal_form(reference_facet(PolygonType::a));
    const auto b = polygon_normal_form(reference_facet(PolygonType::b));
    const auto c = polygon_normal_form(reference_facet(PolygonType::c));
    CHECK(a != b);
    CHECK(b != c);
    CHECK(a != c);
    CHECK(polygons_equivalent(reference_facet(PolygonType::a), {ZVec{0, 0}, ZVec{3, 0}, ZVec{0, 3}}) == false);
    CHECK(polygons_equivalent({ZVec{0, 0}, ZVec{1, 0}, ZVec{0, 1}}, {ZVec{5, 5}, ZVec{6, 7}, ZVec{7, 8}}));
    CHECK_THROWS_AS(polygon_normal_form({ZVec{0, 0}, ZVec{1, 1}, ZVec{2, 2}}), DimensionError);
}

TEST_CASE("polygon normal form is invariant under unimodular maps")
{
    auto r = polygon_normal_form_invariance();
    CHECK(r.cases >= 50);
    CHECK(r.failures.empty());
}
