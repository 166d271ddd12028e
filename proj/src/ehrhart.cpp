#include "fineint/ehrhart.hpp"

namespace fineint {

namespace {

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

EhrhartProfile ehrhart_profile(const LatticePolytope& p)
{
    if (!p.is_full_dimensional()) throw DimensionError("ehrhart_profile: polytope is not full-dimensional");
    EhrhartProfile e;
    e.d = p.ambient_dim();
    for (std::size_t k = 0; k <= e.d; ++k) e.counts.push_back(Integer(count_lattice_points(dilate(p, Integer(k)))));
    e.interior_counts = {0};
    for (unsigned k = 1; k <= 2; ++k)
        e.interior_counts.push_back(Integer(count_interior_lattice_points(dilate(p, Integer(k)))));
    // Truncation of (1 - t)^{d+1} * sum_k L(k) t^k.
    for (std::size_t i = 0; i <= e.d; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            Integer term = binomial(e.d + 1, j) * e.counts[i - j];
            if (j % 2) s -= term;
            else s += term;
        }
        e.psi.push_back(s);
        e.volume += s;
    }
    return e;
}

bool reflexive_by_count(const LatticePolytope& p)
{
    const std::size_t d = p.ambient_dim();
    if (d != 3 && d != 4) throw DimensionError("reflexive_by_count: dimension must be 3 or 4");
    if (!is_canonical_fano(p)) throw PreconditionError("reflexive_by_count: input is not canonical Fano");
    return count_lattice_points(p) == count_interior_lattice_points(dilate(p, 2));
}

bool psi_palindrome(const EhrhartProfile& e)
{
    for (std::size_t i = 0; i <= e.d; ++i)
        if (e.psi[i] != e.psi[e.d - i]) return false;
    return true;
}

std::vector<Integer> phi_vector(const EhrhartProfile& e)
{
    std::vector<Integer> phi{0};
    for (std::size_t i = 1; i <= e.d + 1; ++i) phi.push_back(e.psi[e.d + 1 - i]);
    return phi;
}

Integer geometric_genus(const LatticePolytope& p) { return Integer(count_interior_lattice_points(p)); }

} // namespace fineint
