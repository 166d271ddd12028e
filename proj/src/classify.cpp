#include "fineint/classify.hpp"

#include "fineint/cone.hpp"
#include "fineint/lattice.hpp"

#include <array>

namespace fineint {

namespace {

constexpr std::array<PolygonType, 3> all_types{PolygonType::a, PolygonType::b, PolygonType::c};

std::vector<ZVec> planar(std::initializer_list<std::pair<int, int>> pts)
{
    std::vector<ZVec> out;
    for (auto [x, y] : pts) out.push_back(ZVec{x, y});
    return out;
}

std::optional<PolygonType> match(const std::vector<ZVec>& polygon,
                                 const std::vector<ZVec>& (*ref)(PolygonType))
{
    if (convex_hull_2d(polygon).size() < 3) return std::nullopt;
    auto nf = polygon_normal_form(polygon);
    for (auto t : all_types)
        if (polygon_normal_form(ref(t)) == nf) return t;
    return std::nullopt;
}

// Positive primitive relation among four vectors spanning Z^3.
std::vector<Integer> positive_relation(const std::vector<ZVec>& vs)
{
    if (vs.size() != 4) throw PreconditionError("relation: expected a simplex");
    auto ker = integer_nullspace(to_rational(ZMatrix::from_columns(vs, 3)));
    if (ker.size() != 1) throw PreconditionError("relation: vectors do not span a 3-space");
    ZVec q = primitive(ker[0]);
    if (q[0] < 0) q = -q;
    std::vector<Integer> out;
    for (const auto& x : q) {
        if (x <= 0) throw PreconditionError("relation is not sign-definite");
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::empty: return "empty";
    case Regime::k3: return "k3";
    case Regime::elliptic_symmetric: return "elliptic_symmetric";
    case Regime::elliptic_asymmetric: return "elliptic_asymmetric";
    case Regime::general_type: return "general_type";
    case Regime::nonstandard: return "nonstandard";
    }
    return "nonstandard";
}

Regime parse_regime(const std::string& s)
{
    for (auto r : {Regime::empty, Regime::k3, Regime::elliptic_symmetric, Regime::elliptic_asymmetric,
                   Regime::general_type, Regime::nonstandard})
        if (to_string(r) == s) return r;
    throw Error("unknown regime: " + s);
}

std::string to_string(PolygonType t)
{
    switch (t) {
    case PolygonType::a: return "a";
    case PolygonType::b: return "b";
    case PolygonType::c: return "c";
    }
    return "?";
}

const std::vector<ZVec>& reference_facet(PolygonType t)
{
    static const std::vector<ZVec> a = planar({{1, 0}, {0, 1}, {-1, -1}});
    static const std::vector<ZVec> b = planar({{1, 0}, {-1, 1}, {-1, -1}});
    static const std::vector<ZVec> c = planar({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    return t == PolygonType::a ? a : t == PolygonType::b ? b : c;
}

const std::vector<ZVec>& reference_projection(PolygonType t)
{
    static const std::vector<ZVec> a = planar({{-1, 2}, {-1, -1}, {2, -1}});
    static const std::vector<ZVec> b = planar({{-2, -1}, {0, 1}, {2, -1}});
    static const std::vector<ZVec> c = planar({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    return t == PolygonType::a ? a : t == PolygonType::b ? b : c;
}

std::optional<PolygonType> facet_type_of(const std::vector<ZVec>& polygon)
{
    return match(polygon, reference_facet);
}

std::optional<PolygonType> projection_type_of(const std::vector<ZVec>& polygon)
{
    return match(polygon, reference_projection);
}

AxisData fi_axis_data(const Polytope& fi)
{
    if (fi.dim() != 1) throw PreconditionError("fi_axis_data: Fine interior is not a segment");
    const QVec& a = fi.vertices()[0];
    const QVec& b = fi.vertices()[1];
    AxisData r;
    QVec end;
    if (a.is_zero() || b.is_zero()) {
        end = a.is_zero() ? b : a;
    } else if (a + b == QVec(a.size())) {
        r.symmetric = true;
        end = a;
        for (const auto& x : a)
            if (sgn(x) != 0) {
                if (sgn(x) < 0) end = b;
                break;
            }
    } else {
        throw PreconditionError("fi_axis_data: 0 is neither an endpoint nor the midpoint");
    }
    r.v_delta = primitive_direction(end);
    for (std::size_t i = 0; i < end.size(); ++i)
        if (r.v_delta[i] != 0) {
            r.lambda = end[i] / Rational(r.v_delta[i]);
            break;
        }
    return r;
}

ReflexiveFacet reflexive_facet(const LatticePolytope& p, const ZVec& v)
{
    const QVec x = to_rational(v);
    const auto& fs = facets(p);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i].tight(x)) continue;
        bool relint = true;
        for (std::size_t j = 0; j < fs.size() && relint; ++j)
            if (j != i && sgn(fs[j].slack(x)) <= 0) relint = false;
        if (!relint) continue;
        ReflexiveFacet r;
        r.normal = fs[i].normal;
        ZMatrix A = complete_to_basis(r.normal);
        for (const auto& w : p.lattice_vertices())
            if (fs[i].tight(to_rational(w))) {
                r.vertices.push_back(w);
                ZVec c = A * w;
                r.polygon.push_back(ZVec{c[1], c[2]});
            }
        r.type = facet_type_of(r.polygon);
        return r;
    }
    throw PreconditionError("reflexive_facet: " + to_string(v) + " is not in the relative interior of a facet");
}

Projection project_along(const LatticePolytope& p, const ZVec& v)
{
    ZMatrix A = complete_to_basis(v);
    QMatrix Binv = *inverse(to_rational(A.transpose()));
    std::vector<ZVec> img;
    for (const auto& w : p.lattice_vertices()) {
        ZVec c = to_integer(Binv * to_rational(w));
        img.push_back(ZVec{c[1], c[2]});
    }
    Projection r;
    r.polygon = convex_hull_2d(img);
    if (r.polygon.size() < 3) throw DimensionError("project_along: projection is not 2-dimensional");
    r.type = projection_type_of(r.polygon);
    return r;
}

std::vector<ZVec> dual_hull_facet_through_origin(const LatticePolytope& p)
{
    LatticePolytope d = integral_dual_hull(p);
    if (!d.is_full_dimensional()) throw PreconditionError("integral dual hull is not full-dimensional");
    const QVec origin(p.ambient_dim());
    for (const auto& f : facets(d)) {
        if (!f.tight(origin)) continue;
        std::vector<ZVec> out;
        for (const auto& w : d.lattice_vertices())
            if (f.tight(to_rational(w))) out.push_back(w);
        return out;
    }
    throw PreconditionError("0 is not on a facet of the integral dual hull");
}

Integer pi1_order(const LatticePolytope& p)
{
    if (p.ambient_dim() != 3 || !p.is_full_dimensional()) throw DimensionError("pi1_order needs a 3-tope");
    Fan fan = normal_fan(p);
    std::vector<ZVec> gens;
    for (const auto& c : fan.edge_cones)
        for (auto& h : hilbert_basis(c)) gens.push_back(std::move(h));
    gens = sorted_unique(std::move(gens));
    SmithForm s = smith_normal_form(ZMatrix::from_rows(gens, 3));
    if (s.rank < 3) throw PreconditionError("pi1_order: edge-cone lattice points do not span");
    Integer order = 1;
    for (const auto& x : s.diagonal()) order *= abs(x);
    return order;
}

std::vector<Integer> vertex_weight_relation(const LatticePolytope& p)
{
    return positive_relation(p.lattice_vertices());
}

std::vector<Integer> facet_normal_relation(const LatticePolytope& p)
{
    std::vector<ZVec> ns;
    for (const auto& f : facets(p)) ns.push_back(f.normal);
    return positive_relation(ns);
}

std::optional<int> kodaira_dimension(int fi_dim)
{
    switch (fi_dim) {
    case 0: return 0;
    case 1: return 1;
    case 3: return 2;
    default: return std::nullopt;
    }
}

ClassificationRecord classify(const LatticePolytope& input, const std::string& id)
{
    if (input.ambient_dim() != 3 || !input.is_full_dimensional()) throw DimensionError("classify needs a 3-tope");
    CanonicalFano cf = to_canonical_fano(input);
    const LatticePolytope& p = cf.polytope;

    ClassificationRecord r;
    r.id = id;
    r.translation = cf.translation;
    FineInteriorResult fi = analyze_fine_interior(p);
    r.fi_dim = fi.fi.dim();
    r.fi_vertices = fi.fi.vertices();
    r.supp = fi.support;
    r.canonical_hull_vertices = fi.canonical_hull.vertices();
    r.canonical_hull_integral = fi.canonical_hull_integral;
    r.equals_canonical_hull = fi.canonical_hull == static_cast<const Polytope&>(p);
    r.psi = ehrhart_profile(p).psi;
    r.pi1_order = pi1_order(p);

    switch (r.fi_dim) {
    case -1: r.regime = Regime::empty; break;
    case 0:
        r.regime = Regime::k3;
        try {
            r.reflexive_hull_vertices = reflexive_hull(p).lattice_vertices();
        } catch (const PreconditionError&) {
            r.flags.push_back("reflexive_hull_unavailable");
        }
        break;
    case 1: {
        AxisData ax;
        try {
            ax = fi_axis_data(fi.fi);
        } catch (const PreconditionError&) {
            r.regime = Regime::nonstandard;
            r.flags.push_back("fi_axis_not_through_origin");
            break;
        }
        r.v_delta = ax.v_delta;
        r.lambda = ax.lambda;
        r.regime = ax.symmetric ? Regime::elliptic_symmetric : Regime::elliptic_asymmetric;
        if (ax.lambda != Rational(1, 2) && ax.lambda != Rational(2, 3)) {
            r.regime = Regime::nonstandard;
            r.flags.push_back("lambda_outside_standard_values");
        }
        try {
            auto plus = reflexive_facet(p, ax.v_delta);
            r.theta_plus = plus.vertices;
            r.facet_type_plus = plus.type;
            if (ax.symmetric) {
                auto minus = reflexive_facet(p, -ax.v_delta);
                r.theta_minus = minus.vertices;
                r.facet_type_minus = minus.type;
            }
        } catch (const PreconditionError&) {
            r.flags.push_back("no_reflexive_facet");
        }
        if (!ax.symmetric) {
            try {
                r.Theta = dual_hull_facet_through_origin(p);
            } catch (const PreconditionError&) {
                r.flags.push_back("no_dual_facet");
            }
        }
        r.projection_type = project_along(p, ax.v_delta).type;
        if (!r.facet_type_plus || (ax.symmetric && !r.facet_type_minus)) r.flags.push_back("facet_type_unmatched");
        if (!r.projection_type) r.flags.push_back("projection_type_unmatched");
        if (r.facet_type_plus && r.projection_type && *r.facet_type_plus != *r.projection_type)
            r.flags.push_back("facet_projection_type_mismatch");
        break;
    }
    case 3: r.regime = Regime::general_type; break;
    default:
        r.regime = Regime::nonstandard;
        r.flags.push_back("fi_dim_2");
        break;
    }
    return r;
}

bool is_hollow(const Polytope& p)
{
    if (p.is_empty()) throw PreconditionError("is_hollow: empty polytope");
    return count_interior_lattice_points(p) == 0;
}

HollowRecord analyze_hollow(const LatticePolytope& p, const std::string& id)
{
    if (!is_hollow(p)) throw PreconditionError("analyze_hollow: polytope has interior lattice points");
    HollowRecord r;
    r.id = id;
    LatticeWidth w = lattice_width(p);
    r.width = w.width;
    r.width_direction = w.direction;
    if (!p.is_full_dimensional()) return r;
    FineInteriorResult fi = analyze_fine_interior(p);
    r.fi_dim = fi.fi.dim();
    r.fi_vertices = fi.fi.vertices();
    if (fi.fi.is_empty()) return r;
    r.supp = fi.support;
    r.canonical_hull_vertices = fi.canonical_hull.vertices();
    r.canonical_hull_integral = fi.canonical_hull_integral;
    r.equals_canonical_hull = fi.canonical_hull == static_cast<const Polytope&>(p);
    r.pi1_order = pi1_order(p);
    return r;
}

} // namespace fineint
