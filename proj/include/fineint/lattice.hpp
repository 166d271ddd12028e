#pragma once

#include "fineint/arith.hpp"

#include <optional>
#include <vector>

namespace fineint {

// ---- rational linear algebra

// Reduced row echelon form; pivot columns are appended to `pivots` when given.
QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMatrix& m);
std::size_t rank(const std::vector<ZVec>& rows);
Rational determinant(const QMatrix& m);
Integer determinant(const ZMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);
// Unique solution of a square nonsingular system, or nullopt.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);
// Basis of {x : m x = 0}.
std::vector<QVec> nullspace(const QMatrix& m);
// Primitive integer basis vectors of the rational nullspace (not a lattice basis).
std::vector<ZVec> integer_nullspace(const QMatrix& m);

// ---- lattice operations

ZVec primitive(const ZVec& v);
Integer content(const ZVec& v);
// Primitive integer vector pointing along a nonzero rational vector.
ZVec primitive_direction(const QVec& v);

struct SmithForm {
    ZMatrix S, U, V; // U * A * V = S
    std::size_t rank = 0;
    std::vector<Integer> diagonal() const;
};
SmithForm smith_normal_form(const ZMatrix& a);

// Row Hermite normal form; zero rows are dropped.
ZMatrix hermite_normal_form(const ZMatrix& a);

// Unimodular matrix whose first row is the primitive vector v.
ZMatrix complete_to_basis(const ZVec& v);

// Unimodular U with span(gens) ∩ Z^d = the first `rank` columns of U^{-1}.
// Coordinates of x in that basis are the first `rank` entries of U x.
struct SaturatedChart {
    ZMatrix U, U_inv;
    std::size_t rank = 0;
    ZVec coords(const ZVec& x) const;
    ZVec lift(const ZVec& c) const;
};
SaturatedChart saturated_chart(const std::vector<ZVec>& gens, std::size_t ambient);

// Level equation a·y = level_rhs and congruence c·y ≡ congruence_rhs (mod modulus).
struct AffineLatticeSpec {
    ZVec level;
    Integer level_rhs;
    ZVec congruence;
    Integer modulus;
    Integer congruence_rhs = 0;

    bool contains(const ZVec& y) const;
};

struct AffineNormalization {
    ZVec origin;                  // the first input point
    ZMatrix basis;                // rows form an HNF basis of the difference lattice
    std::vector<ZVec> vertices;   // images in Z^3
    ZVec to_chart(const ZVec& y) const;
    QVec to_ambient(const QVec& c) const;
};
AffineNormalization normalize_affine_lattice(const AffineLatticeSpec& spec,
                                             const std::vector<ZVec>& points);

// ---- lattice polygons

// Counterclockwise strict vertices of the convex hull of planar lattice points.
std::vector<ZVec> convex_hull_2d(std::vector<ZVec> pts);
// Canonical representative up to affine unimodular maps.
std::vector<ZVec> polygon_normal_form(const std::vector<ZVec>& pts);
bool polygons_equivalent(const std::vector<ZVec>& a, const std::vector<ZVec>& b);

} // namespace fineint
