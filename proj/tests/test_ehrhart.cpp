#include "properties.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fineint;
using namespace fineint::testing;

namespace {

LatticePolytope polytope_of(const std::string& id)
{
    for (const auto& f : canonical_fixtures())
        if (f.id == id) return LatticePolytope(f.vertices);
    FAIL("unknown fixture " << id);
    return {};
}

} // namespace

TEST_CASE("Ehrhart profile of the unit simplex")
{
    LatticePolytope s({ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, 0, 1}});
    EhrhartProfile e = ehrhart_profile(s);
    CHECK(e.counts == std::vector<Integer>{1, 4, 10, 20});
    CHECK(e.interior_counts == std::vector<Integer>{0, 0, 0});
    CHECK(e.psi == std::vector<Integer>{1, 0, 0, 0});
    CHECK(e.volume == 1);
    CHECK_FALSE(psi_palindrome(e));
}

TEST_CASE("Ehrhart profile of the reflexive simplex 547386")
{
    EhrhartProfile e = ehrhart_profile(polytope_of("547386"));
    CHECK(e.psi == std::vector<Integer>{1, 1, 1, 1});
    CHECK(e.volume == 4);
    CHECK(psi_palindrome(e));
    CHECK(phi_vector(e) == std::vector<Integer>{0, 1, 1, 1, 1});
    CHECK(reflexive_by_count(polytope_of("547386")));
    CHECK_FALSE(reflexive_by_count(polytope_of("547385")));
}

TEST_CASE("Ehrhart profile of the cube")
{
    std::vector<ZVec> vs;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) vs.push_back(ZVec{a, b, c});
    EhrhartProfile e = ehrhart_profile(LatticePolytope(vs));
    CHECK(e.volume == 48);
    CHECK(e.psi == std::vector<Integer>{1, 23, 23, 1});
    CHECK(e.interior_counts == std::vector<Integer>{0, 1, 27});
}

TEST_CASE("reflexivity by counting in dimension 4")
{
    auto box = [](bool capped) {
        std::vector<HalfSpace> hs;
        for (std::size_t i = 0; i < 4; ++i) {
            ZVec n(4);
            n[i] = 1;
            hs.push_back({n, Rational(-1)});
        }
        if (capped) hs.push_back({ZVec{-1, 0, 0, 0}, Rational(-2)});
        hs.push_back({ZVec{-1, -1, -1, -1}, Rational(-1)});
        return LatticePolytope(vertices_from_halfspaces(hs, 4));
    };
    CHECK_FALSE(reflexive_by_count(box(true)));
    CHECK(reflexive_by_count(box(false)));
    CHECK(is_reflexive(box(false)));
}

TEST_CASE("reflexivity by counting rejects bad input")
{
    CHECK_THROWS_AS(reflexive_by_count(LatticePolytope({ZVec{-1, -1}, ZVec{1, 0}, ZVec{0, 1}})), DimensionError);
    CHECK_THROWS_AS(reflexive_by_count(LatticePolytope({ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, 0, 1}})),
                    PreconditionError);
    CHECK_THROWS_AS(ehrhart_profile(LatticePolytope({ZVec{0, 0, 0}, ZVec{1, 0, 0}})), DimensionError);
}

TEST_CASE("geometric genus")
{
    CHECK(geometric_genus(LatticePolytope({ZVec{0, 0, 0}, ZVec{1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, 0, 1}})) == 0);
    CHECK(geometric_genus(LatticePolytope(hollow_fixtures()[0].vertices)) == 0);
    for (const auto& f : canonical_fixtures()) CHECK(geometric_genus(LatticePolytope(f.vertices)) == 1);
}

TEST_CASE("psi vector matches closed forms and an independent volume")
{
    auto r = psi_consistency();
    CHECK(r.cases >= 50);
    for (const auto& f : r.failures) FAIL_CHECK(f);
}

TEST_CASE("Ehrhart reciprocity")
{
    auto r = ehrhart_reciprocity();
    CHECK(r.cases >= 50);
    for (const auto& f : r.failures) FAIL_CHECK(f);
}

TEST_CASE("reflexivity tests agree")
{
    auto r = reflexivity_equivalence();
    CHECK(r.cases >= 50);
    for (const auto& f : r.failures) FAIL_CHECK(f);
}
