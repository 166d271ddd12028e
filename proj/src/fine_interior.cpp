#include "fineint/fine_interior.hpp"

namespace fineint {

Integer ord(const LatticePolytope& p, const ZVec& n)
{
    if (p.is_empty()) throw PreconditionError("ord of empty polytope");
    const auto& vs = p.lattice_vertices();
    Integer m = dot(vs[0], n);
    for (const auto& v : vs) {
        Integer t = dot(v, n);
        if (t < m) m = t;
    }
    return m;
}

std::vector<ZVec> fine_interior_constraints(const LatticePolytope& p, bool include_edge_cones)
{
    return fan_hilbert_union(normal_fan(p), include_edge_cones);
}

Polytope fine_interior_from(const LatticePolytope& p, const std::vector<ZVec>& normals)
{
    std::vector<HalfSpace> hs;
    for (const auto& n : normals) hs.push_back({n, Rational(ord(p, n) + 1)});
    try {
        return vertices_from_halfspaces(hs, p.ambient_dim());
    } catch (const UnboundedError&) {
        throw UnboundedError("Fine interior constraints do not bound a polytope");
    }
}

Polytope fine_interior(const LatticePolytope& p)
{
    if (!p.is_full_dimensional()) throw DimensionError("fine_interior: polytope is not full-dimensional");
    return fine_interior_from(p, fine_interior_constraints(p));
}

std::vector<ZVec> support_from(const LatticePolytope& p, const Polytope& fi, const std::vector<ZVec>& candidates)
{
    if (fi.is_empty()) throw PreconditionError("support of an empty Fine interior");
    std::vector<ZVec> out;
    for (const auto& n : candidates) {
        if (n.is_zero()) continue;
        Rational mn = dot(fi.vertices()[0], n);
        for (const auto& v : fi.vertices()) mn = std::min(mn, Rational(dot(v, n)));
        if (mn == Rational(ord(p, n) + 1)) out.push_back(n);
    }
    return sorted_unique(std::move(out));
}

std::vector<ZVec> support(const LatticePolytope& p, const Polytope& fi)
{
    return support_from(p, fi, fine_interior_constraints(p));
}

Polytope canonical_hull(const LatticePolytope& p, const std::vector<ZVec>& supp)
{
    if (supp.empty()) throw PreconditionError("canonical hull of an empty support");
    std::vector<HalfSpace> hs;
    for (const auto& n : supp) hs.push_back({n, Rational(ord(p, n))});
    try {
        return vertices_from_halfspaces(hs, p.ambient_dim());
    } catch (const UnboundedError&) {
        throw UnboundedError("support does not positively span; canonical hull is unbounded");
    }
}

FineInteriorResult analyze_fine_interior(const LatticePolytope& p)
{
    if (!p.is_full_dimensional()) throw DimensionError("fine_interior: polytope is not full-dimensional");
    FineInteriorResult r;
    r.constraints = fine_interior_constraints(p);
    r.fi = fine_interior_from(p, r.constraints);
    r.canonical_hull = Polytope::empty(p.ambient_dim());
    if (r.fi.is_empty()) return r;
    r.support = support_from(p, r.fi, r.constraints);
    r.canonical_hull = canonical_hull(p, r.support);
    r.canonical_hull_integral = r.canonical_hull.is_integral();
    return r;
}

CanonicalFano to_canonical_fano(const LatticePolytope& p)
{
    auto inner = interior_lattice_points(p);
    if (inner.size() != 1)
        throw PreconditionError("not canonical Fano: " + std::to_string(inner.size()) + " interior lattice points");
    ZVec t = inner[0];
    return {LatticePolytope(p.translated(to_rational(-t))), t};
}

bool is_canonical_fano(const LatticePolytope& p)
{
    return p.is_full_dimensional() && count_interior_lattice_points(p) == 1;
}

LatticePolytope reflexive_hull(const LatticePolytope& p)
{
    LatticePolytope d = integral_dual_hull(p);
    if (!d.is_full_dimensional() || !d.contains_in_interior(QVec(p.ambient_dim())) || !is_reflexive(d))
        throw PreconditionError("reflexive hull: integral hull of the dual is not reflexive");
    return LatticePolytope(dual_polytope(d));
}

LatticePolytope tau(const LatticePolytope& p)
{
    auto pts = interior_lattice_points(dilate(p, 2));
    if (pts.empty()) throw PreconditionError("tau: 2P has no interior lattice points");
    return LatticePolytope(pts);
}

std::vector<LatticePolytope> tau_chain(const LatticePolytope& p, std::size_t max_steps)
{
    const LatticePolytope target = reflexive_hull(p);
    std::vector<LatticePolytope> chain{p};
    while (!(static_cast<const Polytope&>(chain.back()) == target)) {
        if (chain.size() > max_steps) throw Error("tau iteration did not reach the reflexive hull");
        chain.push_back(tau(chain.back()));
    }
    return chain;
}

AlmostReflexive is_almost_reflexive(const LatticePolytope& p)
{
    const QVec origin(p.ambient_dim());
    auto inner = interior_lattice_points(p);
    if (!p.is_full_dimensional() || inner.size() != 1 || !inner[0].is_zero())
        throw PreconditionError("is_almost_reflexive: input is not canonical Fano with the origin inside");
    AlmostReflexive r;
    Polytope fi = fine_interior(p);
    r.fi_is_origin = fi.dim() == 0 && fi.vertices()[0] == origin;
    LatticePolytope d = integral_dual_hull(p);
    r.origin_interior_of_dual_hull = d.is_full_dimensional() && d.contains_in_interior(origin);
    r.tau_has_one_interior_point = count_interior_lattice_points(tau(p)) == 1;
    if (r.fi_is_origin != r.origin_interior_of_dual_hull || r.fi_is_origin != r.tau_has_one_interior_point)
        throw Error("almost-reflexivity conditions disagree");
    r.verdict = r.fi_is_origin;
    return r;
}

} // namespace fineint
