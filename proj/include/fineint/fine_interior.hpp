#pragma once

#include "fineint/cone.hpp"
#include "fineint/polytope.hpp"

#include <vector>

namespace fineint {

// min over the polytope of <x, n>.
Integer ord(const LatticePolytope& p, const ZVec& n);

// Normals whose shifted halfspaces cut out the Fine interior.
std::vector<ZVec> fine_interior_constraints(const LatticePolytope& p, bool include_edge_cones = false);
// Intersection of {<x,n> >= ord(n) + 1} over the given normals.
Polytope fine_interior_from(const LatticePolytope& p, const std::vector<ZVec>& normals);
Polytope fine_interior(const LatticePolytope& p);

// Support among the given candidates (defaults to the constraint set).
std::vector<ZVec> support(const LatticePolytope& p, const Polytope& fi);
std::vector<ZVec> support_from(const LatticePolytope& p, const Polytope& fi, const std::vector<ZVec>& candidates);

// Intersection of {<x,n> >= ord(n)} over the support.
Polytope canonical_hull(const LatticePolytope& p, const std::vector<ZVec>& supp);

struct FineInteriorResult {
    Polytope fi;
    std::vector<ZVec> constraints;
    std::vector<ZVec> support;
    Polytope canonical_hull; // empty when fi is empty
    bool canonical_hull_integral = false;
};
FineInteriorResult analyze_fine_interior(const LatticePolytope& p);

// Lattice polytope with its unique interior lattice point moved to the origin.
struct CanonicalFano {
    LatticePolytope polytope;
    ZVec translation; // original = polytope + translation
};
CanonicalFano to_canonical_fano(const LatticePolytope& p);
bool is_canonical_fano(const LatticePolytope& p);

// [Δ*]*; requires [Δ*] to be reflexive.
LatticePolytope reflexive_hull(const LatticePolytope& p);
// Convex hull of the interior lattice points of 2Δ.
LatticePolytope tau(const LatticePolytope& p);
// Iterates tau until it reaches [Δ*]*; returns the chain starting at Δ.
std::vector<LatticePolytope> tau_chain(const LatticePolytope& p, std::size_t max_steps = 10);

struct AlmostReflexive {
    bool verdict = false;
    bool fi_is_origin = false;           // Δ^FI = {0}
    bool origin_interior_of_dual_hull = false; // 0 in the interior of [Δ*]
    bool tau_has_one_interior_point = false;   // [2Δ°] has one interior lattice point
};
// Evaluates three equivalent conditions and throws if they disagree.
AlmostReflexive is_almost_reflexive(const LatticePolytope& p);

} // namespace fineint
