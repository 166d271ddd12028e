#pragma once

#include "fineint/classify.hpp"
#include "fineint/fixtures.hpp"
#include "fineint/io.hpp"
#include "fineint/lattice.hpp"

#include <random>
#include <string>
#include <vector>

namespace fineint::testing {

// Vertex lists of the canonical Fano fixtures (asymmetric, symmetric, dim3, examples).
struct NamedPolytope {
    std::string id;
    std::vector<ZVec> vertices;
};
std::vector<NamedPolytope> canonical_fixtures();
std::vector<NamedPolytope> hollow_fixtures();

// Product of random elementary operations, signed permutations included.
ZMatrix random_unimodular(std::mt19937& rng, std::size_t d, int steps = 6);
std::vector<ZVec> transform(const ZMatrix& u, const std::vector<ZVec>& vs);

// All primitive n with max |n_i| <= r.
std::vector<ZVec> primitive_box(std::size_t d, int r);

// d! * vol by a fan of simplices from the first vertex, 3-topes only.
Integer normalized_volume_oracle(const LatticePolytope& p);

// Normal vectors tight on fi among all primitive n in the box of radius r.
std::vector<ZVec> support_oracle(const LatticePolytope& p, const Polytope& fi, int r);

// Vertices of the dual of a lattice polygon with 0 in its interior.
std::vector<ZVec> polygon_dual(const std::vector<ZVec>& polygon);

} // namespace fineint::testing
