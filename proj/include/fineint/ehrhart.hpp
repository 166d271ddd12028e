#pragma once

#include "fineint/fine_interior.hpp"

#include <vector>

namespace fineint {

struct EhrhartProfile {
    std::size_t d = 0;
    std::vector<Integer> counts;          // |kΔ ∩ M| for k = 0..d
    std::vector<Integer> interior_counts; // |(kΔ)° ∩ M| for k = 0..2 (k = 0 entry is 0)
    std::vector<Integer> psi;             // d + 1 entries
    Integer volume;                       // normalized volume, the sum of psi
};

EhrhartProfile ehrhart_profile(const LatticePolytope& p);

// Δ is reflexive iff |Δ ∩ M| = |(2Δ)° ∩ M|, for canonical Fano Δ in dimension 3 or 4.
bool reflexive_by_count(const LatticePolytope& p);
bool psi_palindrome(const EhrhartProfile& e);
// phi_0 = 0 and phi_i = psi_{d+1-i}.
std::vector<Integer> phi_vector(const EhrhartProfile& e);
Integer geometric_genus(const LatticePolytope& p);

} // namespace fineint
