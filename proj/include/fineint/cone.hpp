#pragma once

#include "fineint/polytope.hpp"

#include <optional>
#include <vector>

namespace fineint {

// Pointed rational cone given by its primitive extreme rays.
struct Cone {
    std::vector<ZVec> rays;
    std::size_t ambient = 0;
    std::size_t dim = 0;

    // Drops redundant generators; throws if the cone contains a line.
    static Cone from_generators(const std::vector<ZVec>& gens);
    bool contains(const ZVec& x) const;
};

// Normal fan of a full-dimensional lattice polytope. Vertex cones are the
// maximal cones; edge cones have codimension one.
struct Fan {
    std::size_t ambient = 0;
    std::vector<ZVec> rays;
    std::vector<ZVec> vertices;
    std::vector<Cone> vertex_cones;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Cone> edge_cones;

    // Indices of maximal cones containing x.
    std::vector<std::size_t> maximal_cones_containing(const ZVec& x) const;
};

Fan normal_fan(const LatticePolytope& p);

// Rays of a 3-dimensional cone in cyclic order, starting at rays[start].
std::vector<ZVec> cyclic_order(const Cone& c, std::size_t start = 0);

// Hilbert basis of cone ∩ Z^d. `apex` selects the ray the triangulation fans
// out from; the result does not depend on it.
std::vector<ZVec> hilbert_basis(const Cone& c, std::optional<ZVec> apex = std::nullopt);

// Union of Hilbert bases of all maximal cones, optionally with the edge cones.
std::vector<ZVec> fan_hilbert_union(const Fan& f, bool include_edge_cones = false);

} // namespace fineint
