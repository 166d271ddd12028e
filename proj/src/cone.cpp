#include "fineint/cone.hpp"

#include "fineint/lattice.hpp"

#include <numeric>

namespace fineint {

namespace {

// x in the conic hull of gens, by Caratheodory over independent subsets.
bool in_conic_hull(const ZVec& x, const std::vector<ZVec>& gens)
{
    if (x.is_zero()) return true;
    const std::size_t n = gens.size();
    const std::size_t r = rank(gens);
    for (std::size_t k = 1; k <= std::min(r, n); ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<ZVec> sub;
            for (auto i : idx) sub.push_back(gens[i]);
            if (rank(sub) == k) {
                auto lam = solve(to_rational(ZMatrix::from_columns(sub, x.size())), to_rational(x));
                if (lam && std::all_of(lam->begin(), lam->end(), [](const Rational& q) { return sgn(q) >= 0; }))
                    return true;
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

long long to_ll(const Integer& z)
{
    if (!z.fits_slong_p()) throw Error("hilbert_basis: coordinates exceed machine range");
    return z.get_si();
}

long long mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("hilbert_basis: arithmetic overflow");
    return r;
}

long long add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("hilbert_basis: arithmetic overflow");
    return r;
}

// Simplicial piece in chart coordinates: y = R lambda, lambda = adj y / det, det > 0.
struct Simplex {
    std::vector<ZVec> rays;
    std::vector<std::vector<long long>> adj;
    long long det = 0;

    bool contains(const std::vector<long long>& y) const
    {
        for (const auto& row : adj) {
            long long s = 0;
            for (std::size_t j = 0; j < y.size(); ++j) s = add(s, mul(row[j], y[j]));
            if (s < 0) return false;
        }
        return true;
    }
};

Simplex make_simplex(const std::vector<ZVec>& rays)
{
    const std::size_t k = rays.size();
    ZMatrix R = ZMatrix::from_columns(rays, k);
    Integer det = determinant(R);
    if (det == 0) throw Error("hilbert_basis: degenerate simplicial cone");
    QMatrix inv = *inverse(to_rational(R));
    Simplex s;
    s.rays = rays;
    Integer ad = abs(det);
    s.det = to_ll(ad);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long long> row;
        for (std::size_t j = 0; j < k; ++j) row.push_back(to_ll(Rational(inv(i, j) * ad).get_num()));
        s.adj.push_back(row);
    }
    return s;
}

// Nonzero lattice points of the half-open fundamental parallelepiped.
std::vector<ZVec> parallelepiped_points(const Simplex& s)
{
    const std::size_t k = s.rays.size();
    ZMatrix R = ZMatrix::from_columns(s.rays, k);
    SmithForm f = smith_normal_form(R);
    ZMatrix Uinv = to_integer(*inverse(to_rational(f.U)));
    std::vector<Integer> sd = f.diagonal();
    std::vector<ZVec> out;
    ZVec c(k);
    const Integer D(static_cast<long>(s.det));
    for (;;) {
        ZVec g = Uinv * c;
        ZVec mu(k);
        for (std::size_t i = 0; i < k; ++i) {
            Integer t = 0;
            for (std::size_t j = 0; j < k; ++j) t += Integer(static_cast<long>(s.adj[i][j])) * g[j];
            mpz_fdiv_r(mu[i].get_mpz_t(), t.get_mpz_t(), D.get_mpz_t());
        }
        if (!mu.is_zero()) {
            ZVec x = R * mu;
            for (auto& xi : x) mpz_divexact(xi.get_mpz_t(), xi.get_mpz_t(), D.get_mpz_t());
            out.push_back(x);
        }
        std::size_t i = 0;
        while (i < k && c[i] + 1 >= sd[i]) c[i++] = 0;
        if (i == k) break;
        ++c[i];
    }
    return out;
}

std::vector<long long> small(const ZVec& v)
{
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(to_ll(x));
    return out;
}

} // namespace

Cone Cone::from_generators(const std::vector<ZVec>& gens)
{
    if (gens.empty()) throw PreconditionError("cone without generators");
    Cone c;
    c.ambient = gens[0].size();
    std::vector<ZVec> g;
    for (const auto& v : gens) {
        if (v.size() != c.ambient) throw DimensionError("cone generators of different dimension");
        if (v.is_zero()) continue;
        g.push_back(primitive(v));
    }
    g = sorted_unique(std::move(g));
    if (g.empty()) throw PreconditionError("cone without nonzero generators");
    for (const auto& v : g)
        if (in_conic_hull(-v, g)) throw PreconditionError("cone is not pointed");
    for (std::size_t i = 0; i < g.size();) {
        std::vector<ZVec> others = g;
        others.erase(others.begin() + static_cast<long>(i));
        if (!others.empty() && in_conic_hull(g[i], others))
            g = std::move(others);
        else
            ++i;
    }
    c.rays = g;
    c.dim = rank(g);
    return c;
}

bool Cone::contains(const ZVec& x) const { return in_conic_hull(x, rays); }

std::vector<std::size_t> Fan::maximal_cones_containing(const ZVec& x) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Integer here = dot(vertices[i], x);
        bool minimal = std::all_of(vertices.begin(), vertices.end(), [&](const ZVec& w) { return dot(w, x) >= here; });
        if (minimal) out.push_back(i);
    }
    return out;
}

Fan normal_fan(const LatticePolytope& p)
{
    const auto& fs = facets(p);
    Fan fan;
    fan.ambient = p.ambient_dim();
    fan.vertices = p.lattice_vertices();
    const std::size_t n = fan.vertices.size();
    std::vector<std::vector<std::size_t>> tight(n);
    for (const auto& f : fs) fan.rays.push_back(f.normal);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<ZVec> rays;
        for (std::size_t j = 0; j < fs.size(); ++j)
            if (fs[j].tight(to_rational(fan.vertices[i]))) {
                tight[i].push_back(j);
                rays.push_back(fs[j].normal);
            }
        fan.vertex_cones.push_back(Cone{sorted_unique(rays), fan.ambient, fan.ambient});
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<ZVec> common;
            for (auto j : tight[a])
                if (std::find(tight[b].begin(), tight[b].end(), j) != tight[b].end()) common.push_back(fs[j].normal);
            if (common.empty() || rank(common) + 1 != fan.ambient) continue;
            fan.edges.emplace_back(a, b);
            fan.edge_cones.push_back(Cone{sorted_unique(common), fan.ambient, fan.ambient - 1});
        }
    return fan;
}

std::vector<ZVec> cyclic_order(const Cone& c, std::size_t start)
{
    if (c.ambient != 3 || c.dim != 3) throw DimensionError("cyclic_order needs a 3-dimensional cone in Z^3");
    ZVec axis(3);
    for (const auto& r : c.rays) axis += r;
    QMatrix a(1, 3);
    for (std::size_t j = 0; j < 3; ++j) a(0, j) = axis[j];
    auto fs = integer_nullspace(a);
    struct Item {
        Integer x, y;
        std::size_t idx;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < c.rays.size(); ++i)
        items.push_back({dot(fs[0], c.rays[i]), dot(fs[1], c.rays[i]), i});
    auto half = [](const Item& t) { return (t.y > 0 || (t.y == 0 && t.x > 0)) ? 0 : 1; };
    std::sort(items.begin(), items.end(), [&](const Item& p, const Item& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        return p.x * q.y - p.y * q.x > 0;
    });
    std::size_t pos = 0;
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i].idx == start) pos = i;
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < items.size(); ++i) out.push_back(c.rays[items[(pos + i) % items.size()].idx]);
    return out;
}

std::vector<ZVec> hilbert_basis(const Cone& c, std::optional<ZVec> apex)
{
    if (c.rays.empty()) throw PreconditionError("hilbert_basis: empty cone");
    if (c.rays.size() == 1) return {c.rays[0]};
    const std::size_t k = c.dim;
    SaturatedChart chart = saturated_chart(c.rays, c.ambient);

    std::vector<std::vector<ZVec>> pieces;
    if (c.rays.size() == k) {
        pieces.push_back(c.rays);
    } else if (k == 3) {
        std::size_t start = 0;
        if (apex) {
            auto it = std::find(c.rays.begin(), c.rays.end(), *apex);
            if (it == c.rays.end()) throw PreconditionError("hilbert_basis: apex is not a ray");
            start = static_cast<std::size_t>(it - c.rays.begin());
        } else {
            start = static_cast<std::size_t>(std::min_element(c.rays.begin(), c.rays.end()) - c.rays.begin());
        }
        auto ord = cyclic_order(c, start);
        for (std::size_t i = 1; i + 1 < ord.size(); ++i) pieces.push_back({ord[0], ord[i], ord[i + 1]});
    } else {
        throw PreconditionError("hilbert_basis: unsupported cone (not simplicial and not 3-dimensional)");
    }

    std::vector<Simplex> simplices;
    std::vector<ZVec> cand;
    for (const auto& piece : pieces) {
        std::vector<ZVec> rc;
        for (const auto& r : piece) rc.push_back(chart.coords(r));
        simplices.push_back(make_simplex(rc));
        for (const auto& r : rc) cand.push_back(r);
        for (auto& x : parallelepiped_points(simplices.back())) cand.push_back(std::move(x));
    }
    cand = sorted_unique(std::move(cand));
    std::vector<std::vector<long long>> sc;
    for (const auto& x : cand) sc.push_back(small(x));

    auto in_cone = [&](const std::vector<long long>& y) {
        for (const auto& s : simplices)
            if (s.contains(y)) return true;
        return false;
    };
    std::vector<ZVec> out;
    std::vector<long long> diff(k);
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool reducible = false;
        for (std::size_t j = 0; j < cand.size() && !reducible; ++j) {
            if (i == j) continue;
            for (std::size_t t = 0; t < k; ++t) diff[t] = sc[i][t] - sc[j][t];
            reducible = in_cone(diff);
        }
        if (!reducible) out.push_back(chart.lift(cand[i]));
    }
    return sorted_unique(std::move(out));
}

std::vector<ZVec> fan_hilbert_union(const Fan& f, bool include_edge_cones)
{
    std::vector<ZVec> out;
    for (const auto& c : f.vertex_cones)
        for (auto& x : hilbert_basis(c)) out.push_back(std::move(x));
    if (include_edge_cones)
        for (const auto& c : f.edge_cones)
            for (auto& x : hilbert_basis(c)) out.push_back(std::move(x));
    return sorted_unique(std::move(out));
}

} // namespace fineint
