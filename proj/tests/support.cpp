#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace fineint::testing {

std::vector<NamedPolytope> canonical_fixtures()
{
    std::vector<NamedPolytope> out;
    for (const char* sec : {"asymmetric", "symmetric", "dim3", "examples"})
        for (const auto& r : fixtures()[sec]) out.push_back({r["id"], zvecs_from_json(r["vertices"])});
    return out;
}

std::vector<NamedPolytope> hollow_fixtures()
{
    std::vector<NamedPolytope> out;
    for (const auto& r : fixtures()["hollow"])
        out.push_back({"D" + std::to_string(r["index"].get<int>()), zvecs_from_json(r["vertices"])});
    return out;
}

ZMatrix random_unimodular(std::mt19937& rng, std::size_t d, int steps)
{
    ZMatrix u = ZMatrix::identity(d);
    std::uniform_int_distribution<std::size_t> idx(0, d - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) {
            for (std::size_t c = 0; c < d; ++c) u(i, c) = -u(i, c);
            continue;
        }
        if (s % 3 == 0) {
            u.swap_rows(i, j);
            continue;
        }
        Integer k = coeff(rng);
        for (std::size_t c = 0; c < d; ++c) u(i, c) += k * u(j, c);
    }
    return u;
}

std::vector<ZVec> transform(const ZMatrix& u, const std::vector<ZVec>& vs)
{
    std::vector<ZVec> out;
    for (const auto& v : vs) out.push_back(u * v);
    return out;
}

std::vector<ZVec> primitive_box(std::size_t d, int r)
{
    std::vector<ZVec> out;
    ZVec n(d);
    for (auto& x : n) x = -r;
    for (;;) {
        if (!n.is_zero() && content(n) == 1) out.push_back(n);
        std::size_t i = 0;
        while (i < d && n[i] == r) n[i++] = -r;
        if (i == d) break;
        ++n[i];
    }
    return out;
}

Integer normalized_volume_oracle(const LatticePolytope& p)
{
    const auto& vs = p.lattice_vertices();
    const ZVec& v0 = vs[0];
    Integer total = 0;
    for (const auto& f : facets(p)) {
        if (f.tight(to_rational(v0))) continue;
        // Cyclic order of the facet's vertices via 2D lattice coordinates.
        ZMatrix a = complete_to_basis(f.normal);
        std::vector<ZVec> on, planar;
        for (const auto& w : vs)
            if (f.tight(to_rational(w))) {
                on.push_back(w);
                ZVec c = a * w;
                planar.push_back(ZVec{c[1], c[2]});
            }
        auto ring = convex_hull_2d(planar);
        std::vector<ZVec> cyc;
        for (const auto& q : ring)
            cyc.push_back(on[static_cast<std::size_t>(std::find(planar.begin(), planar.end(), q) - planar.begin())]);
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
            ZMatrix m = ZMatrix::from_columns({cyc[0] - v0, cyc[i] - v0, cyc[i + 1] - v0}, 3);
            total += abs(determinant(m));
        }
    }
    return total;
}

std::vector<ZVec> support_oracle(const LatticePolytope& p, const Polytope& fi, int r)
{
    std::vector<ZVec> out;
    for (const auto& n : primitive_box(p.ambient_dim(), r)) {
        Integer o = dot(p.lattice_vertices()[0], n);
        for (const auto& v : p.lattice_vertices()) o = std::min(o, dot(v, n));
        Rational m = dot(fi.vertices()[0], n);
        for (const auto& v : fi.vertices()) m = std::min(m, dot(v, n));
        if (m == Rational(o + 1)) out.push_back(n);
    }
    return sorted_unique(std::move(out));
}

std::vector<ZVec> polygon_dual(const std::vector<ZVec>& polygon)
{
    std::vector<QVec> pts;
    for (const auto& v : polygon) pts.push_back(to_rational(v));
    Polytope d = dual_polytope(hull(pts));
    std::vector<ZVec> out;
    for (const auto& v : d.vertices()) out.push_back(to_integer(v));
    return out;
}

} // namespace fineint::testing
