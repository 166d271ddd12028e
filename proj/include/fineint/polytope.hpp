#pragma once

#include "fineint/arith.hpp"

#include <vector>

namespace fineint {

// {x : <x, normal> >= offset}; as an equation, {x : <x, normal> = offset}.
struct HalfSpace {
    ZVec normal;
    Rational offset;

    Rational slack(const QVec& x) const { return dot(x, normal) - offset; }
    bool contains(const QVec& x) const { return sgn(slack(x)) >= 0; }
    bool tight(const QVec& x) const { return sgn(slack(x)) == 0; }
    friend bool operator==(const HalfSpace& a, const HalfSpace& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const HalfSpace& a, const HalfSpace& b)
    {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

// Rational polytope in V- and H-form. Lower-dimensional polytopes carry the
// equations of their affine hull and facets relative to it.
class Polytope {
public:
    Polytope() = default;
    static Polytope empty(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    bool is_empty() const { return dim_ < 0; }
    bool is_full_dimensional() const { return dim_ == static_cast<int>(ambient_); }
    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    const std::vector<HalfSpace>& equations() const { return equations_; }

    bool contains(const QVec& x) const;
    // Membership in the relative interior.
    bool contains_in_interior(const QVec& x) const;
    bool is_integral() const;
    std::vector<ZVec> integral_vertices() const;
    Polytope scaled(const Integer& k) const;
    Polytope translated(const QVec& t) const;

    friend bool operator==(const Polytope& a, const Polytope& b)
    {
        return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
    }
    friend Polytope hull(const std::vector<QVec>& points);

private:
    std::size_t ambient_ = 0;
    int dim_ = -1;
    std::vector<QVec> vertices_; // sorted lexicographically
    std::vector<HalfSpace> facets_;
    std::vector<HalfSpace> equations_;
};

Polytope hull(const std::vector<QVec>& points);
Polytope hull(const std::vector<ZVec>& points);

class LatticePolytope : public Polytope {
public:
    LatticePolytope() = default;
    explicit LatticePolytope(const std::vector<ZVec>& points);
    explicit LatticePolytope(const Polytope& p);
    const std::vector<ZVec>& lattice_vertices() const { return zverts_; }

private:
    std::vector<ZVec> zverts_;
};

// Facet halfspaces with primitive inward normals and offset ord(n).
const std::vector<HalfSpace>& facets(const LatticePolytope& p);

std::vector<ZVec> lattice_points(const Polytope& p);
std::vector<ZVec> interior_lattice_points(const Polytope& p);
std::size_t count_lattice_points(const Polytope& p);
std::size_t count_interior_lattice_points(const Polytope& p);

Polytope dilate(const Polytope& p, const Integer& k);
LatticePolytope dilate(const LatticePolytope& p, const Integer& k);

// Requires the origin in the interior.
Polytope dual_polytope(const Polytope& p);
LatticePolytope integral_dual_hull(const Polytope& p);
bool is_reflexive(const Polytope& p);

// Intersection of inequalities and optional equations. Empty results are a
// polytope of dimension -1; nonempty unbounded ones raise UnboundedError.
Polytope vertices_from_halfspaces(const std::vector<HalfSpace>& inequalities,
                                  std::size_t ambient,
                                  const std::vector<HalfSpace>& equations = {});

struct LatticeWidth {
    Integer width;
    ZVec direction;
};
// Width with respect to the lattice of the affine hull for lower-dimensional input.
LatticeWidth lattice_width(const LatticePolytope& p);
Integer width_along(const Polytope& p, const ZVec& u);

// Equivalence of full-dimensional lattice polytopes under affine unimodular maps.
bool lattice_equivalent(const LatticePolytope& a, const LatticePolytope& b);

} // namespace fineint
