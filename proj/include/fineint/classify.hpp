#pragma once

#include "fineint/ehrhart.hpp"
#include "fineint/fine_interior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fineint {

enum class Regime { empty, k3, elliptic_symmetric, elliptic_asymmetric, general_type, nonstandard };
std::string to_string(Regime r);
Regime parse_regime(const std::string& s);

// Lattice polygon types of reflexive facets and of projections along v_Δ.
enum class PolygonType { a, b, c };
std::string to_string(PolygonType t);

const std::vector<ZVec>& reference_facet(PolygonType t);
const std::vector<ZVec>& reference_projection(PolygonType t);
std::optional<PolygonType> facet_type_of(const std::vector<ZVec>& polygon);
std::optional<PolygonType> projection_type_of(const std::vector<ZVec>& polygon);

struct AxisData {
    ZVec v_delta;
    Rational lambda;
    bool symmetric = false;
};
// fi must be a segment with 0 as an endpoint or as its midpoint. In the
// symmetric case the first nonzero coordinate of v_Δ is positive.
AxisData fi_axis_data(const Polytope& fi);

struct ReflexiveFacet {
    ZVec normal;
    std::vector<ZVec> vertices;
    std::vector<ZVec> polygon; // 2D lattice coordinates on the facet
    std::optional<PolygonType> type;
};
// Facet of Δ with v in its relative interior.
ReflexiveFacet reflexive_facet(const LatticePolytope& p, const ZVec& v);

struct Projection {
    std::vector<ZVec> polygon; // vertices in M/Zv
    std::optional<PolygonType> type;
};
Projection project_along(const LatticePolytope& p, const ZVec& v);

// Facet of [Δ*] whose relative interior contains 0, for 0 on the boundary of [Δ*].
std::vector<ZVec> dual_hull_facet_through_origin(const LatticePolytope& p);

// Index of the sublattice generated by the lattice points of the
// codimension-one cones of the normal fan.
Integer pi1_order(const LatticePolytope& p);

// Positive primitive relation sum q_i v_i = 0 among the vertices of a simplex, sorted.
std::vector<Integer> vertex_weight_relation(const LatticePolytope& p);
// The same among the primitive facet normals of a simplex.
std::vector<Integer> facet_normal_relation(const LatticePolytope& p);

struct ClassificationRecord {
    std::string id;
    int fi_dim = -1;
    Regime regime = Regime::empty;
    std::vector<QVec> fi_vertices;
    std::optional<ZVec> v_delta;
    std::optional<Rational> lambda;
    std::optional<PolygonType> facet_type_plus;
    std::optional<PolygonType> facet_type_minus;
    std::vector<ZVec> theta_plus;
    std::vector<ZVec> theta_minus;
    std::vector<ZVec> Theta;
    std::optional<PolygonType> projection_type;
    Integer pi1_order = 1;
    std::vector<ZVec> supp;
    std::vector<QVec> canonical_hull_vertices;
    bool canonical_hull_integral = false;
    bool equals_canonical_hull = false;
    std::vector<ZVec> reflexive_hull_vertices; // K3 regime only
    std::vector<Integer> psi;
    ZVec translation; // input = analyzed polytope + translation
    std::vector<std::string> flags;
};

// Kodaira dimension label: fi_dim 0, 1, 3 map to 0, 1, 2.
std::optional<int> kodaira_dimension(int fi_dim);

// Input must have exactly one interior lattice point; it is moved to the origin.
ClassificationRecord classify(const LatticePolytope& p, const std::string& id = "");

bool is_hollow(const Polytope& p);

struct HollowRecord {
    std::optional<int> index;
    std::string id;
    Integer width;
    ZVec width_direction;
    int fi_dim = -1;
    std::vector<QVec> fi_vertices;
    std::vector<ZVec> supp;
    std::vector<QVec> canonical_hull_vertices;
    bool canonical_hull_integral = false;
    bool equals_canonical_hull = false;
    std::optional<Integer> pi1_order; // present when the Fine interior is nonempty
};
HollowRecord analyze_hollow(const LatticePolytope& p, const std::string& id = "");

} // namespace fineint
