#include "properties.hpp"

#include "support.hpp"

#include <chrono>
#include <functional>

namespace fineint::testing {

namespace {

SuiteResult timed(const std::string& name, const std::function<void(SuiteResult&)>& body)
{
    SuiteResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void expect(SuiteResult& r, bool ok, const std::string& what)
{
    if (!ok) r.failures.push_back(what);
}

// Full-dimensional fixtures for count-based properties.
std::vector<NamedPolytope> full_dimensional_fixtures()
{
    auto all = canonical_fixtures();
    for (auto& h : hollow_fixtures()) all.push_back(std::move(h));
    return all;
}

Rational lagrange_at(const std::vector<Integer>& values, const Rational& t)
{
    Rational s = 0;
    const long n = static_cast<long>(values.size());
    for (long k = 0; k < n; ++k) {
        Rational term = Rational(values[static_cast<std::size_t>(k)]);
        for (long j = 0; j < n; ++j)
            if (j != k) term *= (t - Rational(j)) / Rational(k - j);
        s += term;
    }
    return s;
}

} // namespace

SuiteResult duality_involution()
{
    return timed("duality involution", [](SuiteResult& r) {
        for (const auto& f : canonical_fixtures()) {
            ++r.cases;
            try {
                LatticePolytope p(f.vertices);
                Polytope dd = dual_polytope(dual_polytope(p));
                expect(r, dd == static_cast<const Polytope&>(p), f.id + ": (P*)* differs from P");
            } catch (const std::exception& e) {
                r.failures.push_back(f.id + ": " + e.what());
            }
        }
    });
}

SuiteResult fi_oracle_enlargement()
{
    return timed("Fine interior unchanged by all normals with |n|_inf <= 6", [](SuiteResult& r) {
        const auto box = primitive_box(3, 6);
        for (const auto& f : full_dimensional_fixtures()) {
            ++r.cases;
            try {
                LatticePolytope p(f.vertices);
                Polytope fi = fine_interior(p);
                // Extra constraints leave fi unchanged iff every vertex of fi satisfies them.
                // An empty fi stays empty under any enlargement.
                bool ok = true;
                for (const auto& n : box) {
                    Rational bound = Rational(ord(p, n) + 1);
                    for (const auto& v : fi.vertices())
                        if (dot(v, n) < bound) ok = false;
                    if (!ok) {
                        r.failures.push_back(f.id + ": normal " + to_string(n) + " cuts the Fine interior");
                        break;
                    }
                }
            } catch (const std::exception& e) {
                r.failures.push_back(f.id + ": " + e.what());
            }
        }
    });
}

SuiteResult supp_bruteforce()
{
    return timed("supp against brute-force enumeration", [](SuiteResult& r) {
        for (const auto& f : full_dimensional_fixtures()) {
            try {
                LatticePolytope p(f.vertices);
                FineInteriorResult fi = analyze_fine_interior(p);
                if (fi.fi.is_empty()) continue;
                ++r.cases;
                int radius = 6;
                for (const auto& s : fi.support)
                    for (const auto& x : s) radius = std::max(radius, static_cast<int>(Integer(abs(x)).get_si()));
                auto brute = support_oracle(p, fi.fi, radius);
                expect(r, brute == fi.support,
                       f.id + ": " + std::to_string(fi.support.size()) + " computed vs " +
                           std::to_string(brute.size()) + " by enumeration");
            } catch (const std::exception& e) {
                r.failures.push_back(f.id + ": " + e.what());
            }
        }
    });
}

SuiteResult psi_consistency()
{
    return timed("psi by finite differences vs closed forms vs volume", [](SuiteResult& r) {
        for (const auto& f : full_dimensional_fixtures()) {
            ++r.cases;
            try {
                LatticePolytope p(f.vertices);
                EhrhartProfile e = ehrhart_profile(p);
                const Integer inner1 = count_interior_lattice_points(p);
                const Integer inner2 = count_interior_lattice_points(dilate(p, 2));
                expect(r, e.psi[0] == 1, f.id + ": psi_0");
                expect(r, e.psi[1] == e.counts[1] - 4, f.id + ": psi_1");
                expect(r, e.psi[3] == inner1, f.id + ": psi_3");
                expect(r, e.psi[2] == inner2 - 4 * inner1, f.id + ": psi_2");
                for (const auto& x : e.psi) expect(r, x >= 0, f.id + ": negative psi entry");
                expect(r, e.volume == normalized_volume_oracle(p), f.id + ": sum of psi differs from 3! vol");
            } catch (const std::exception& e) {
                r.failures.push_back(f.id + ": " + e.what());
            }
        }
    });
}

SuiteResult ehrhart_reciprocity()
{
    return timed("Ehrhart reciprocity at k = 1, 2", [](SuiteResult& r) {
        for (const auto& f : full_dimensional_fixtures()) {
            ++r.cases;
            try {
                LatticePolytope p(f.vertices);
                EhrhartProfile e = ehrhart_profile(p);
                for (int k = 1; k <= 2; ++k) {
                    Rational poly = -lagrange_at(e.counts, Rational(-k));
                    expect(r, poly == Rational(e.interior_counts[static_cast<std::size_t>(k)]),
                           f.id + ": reciprocity fails at k = " + std::to_string(k));
                }
            } catch (const std::exception& e) {
                r.failures.push_back(f.id + ": " + e.what());
            }
        }
    });
}

SuiteResult reflexivity_equivalence()
{
    return timed("reflexive by duality, by counts and by palindromy agree", [](SuiteResult& r) {
        auto inputs = canonical_fixtures();
        inputs.push_back({"cube", {ZVec{-1, -1, -1}, ZVec{-1, -1, 1}, ZVec{-1, 1, -1}, ZVec{-1, 1, 1},
                                   ZVec{1, -1, -1}, ZVec{1, -1, 1}, ZVec{1, 1, -1}, ZVec{1, 1, 1}}});
        inputs.push_back({"octahedron", {ZVec{1, 0, 0}, ZVec{-1, 0, 0}, ZVec{0, 1, 0}, ZVec{0, -1, 0},
                                         ZVec{0, 0, 1}, ZVec{0, 0, -1}}});
        for (const auto& f : inputs) {
            ++r.cases;
            try {
                LatticePolytope p(f.vertices);
                const bool a = is_reflexive(p);
                const bool b = reflexive_by_count(p);
                const bool c = psi_palindrome(ehrhart_profile(p));
                expect(r, a == b && b == c,
                       f.id + ": duality " + std::to_string(a) + ", counts " + std::to_string(b) + ", palindrome " +
                           std::to_string(c));
            } catch (const std::exception& e) {
                r.failures.push_back(f.id + ": " + e.what());
            }
        }
    });
}

SuiteResult polygon_normal_form_invariance()
{
    return timed("polygon normal form under 100 random unimodular maps", [](SuiteResult& r) {
        std::mt19937 rng(20240607);
        std::vector<std::vector<ZVec>> polygons;
        for (auto t : {PolygonType::a, PolygonType::b, PolygonType::c}) {
            polygons.push_back(reference_facet(t));
            polygons.push_back(reference_projection(t));
        }
        std::uniform_int_distribution<int> coord(-3, 3);
        while (polygons.size() < 10) {
            std::vector<ZVec> pts;
            for (int i = 0; i < 6; ++i) pts.push_back(ZVec{coord(rng), coord(rng)});
            if (convex_hull_2d(pts).size() >= 3) polygons.push_back(convex_hull_2d(pts));
        }
        std::uniform_int_distribution<int> shift(-5, 5);
        for (std::size_t i = 0; i < polygons.size(); ++i) {
            const auto nf = polygon_normal_form(polygons[i]);
            for (int m = 0; m < 100; ++m) {
                ++r.cases;
                ZMatrix u = random_unimodular(rng, 2, 8);
                ZVec t{shift(rng), shift(rng)};
                std::vector<ZVec> img;
                for (const auto& v : polygons[i]) img.push_back(u * v + t);
                expect(r, polygon_normal_form(img) == nf, "polygon " + std::to_string(i) + ", map " + std::to_string(m));
            }
        }
    });
}

SuiteResult batch_determinism()
{
    return timed("batch output independent of the number of jobs", [](SuiteResult& r) {
        std::vector<PolytopeInput> inputs;
        for (const auto& f : canonical_fixtures()) inputs.push_back({f.id, 3, f.vertices, std::nullopt});
        BatchReport one = run_batch(inputs, 1);
        BatchReport many = run_batch(inputs, 4);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            ++r.cases;
            expect(r, to_json(one.entries[i], one.mode) == to_json(many.entries[i], many.mode),
                   inputs[i].id + ": records differ");
        }
        expect(r, emit_report(one, ReportFormat::json) == emit_report(many, ReportFormat::json), "json reports differ");
        expect(r, emit_report(one, ReportFormat::csv) == emit_report(many, ReportFormat::csv), "csv reports differ");
    });
}

std::vector<SuiteResult> all_property_suites()
{
    return {duality_involution(),   fi_oracle_enlargement(),  supp_bruteforce(),
            psi_consistency(),      ehrhart_reciprocity(),    reflexivity_equivalence(),
            polygon_normal_form_invariance(), batch_determinism()};
}

} // namespace fineint::testing
