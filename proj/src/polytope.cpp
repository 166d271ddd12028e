#include "fineint/polytope.hpp"

#include "fineint/lattice.hpp"

#include <functional>
#include <numeric>
#include <set>

namespace fineint {

namespace {

// Calls f on every k-subset of {0..n-1} in lexicographic order; f returns false to stop.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Normal of the hyperplane through k points of Z^k (generalized cross product).
ZVec hyperplane_normal(const std::vector<const ZVec*>& pts)
{
    const std::size_t k = pts.size();
    ZVec n(k);
    for (std::size_t j = 0; j < k; ++j) {
        ZMatrix m(k - 1, k - 1);
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < k; ++c) {
                if (c == j) continue;
                m(i - 1, cc++) = (*pts[i])[c] - (*pts[0])[c];
            }
        }
        Integer det = determinant(m);
        n[j] = (j % 2 == 0) ? det : Integer(-det);
    }
    return n;
}

struct ChartFacet {
    ZVec normal;
    Integer offset;
    friend bool operator<(const ChartFacet& a, const ChartFacet& b)
    {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
    friend bool operator==(const ChartFacet& a, const ChartFacet& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

// Oriented facet through the given points if all of `cloud` lies on one side.
bool supporting(const std::vector<const ZVec*>& through, const std::vector<const ZVec*>& cloud, ChartFacet& out)
{
    ZVec n = hyperplane_normal(through);
    if (n.is_zero()) return false;
    n = primitive(n);
    Integer b = dot(n, *through[0]);
    bool pos = false, neg = false;
    for (const ZVec* z : cloud) {
        int s = sgn(Integer(dot(n, *z) - b));
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) return false;
    }
    if (neg) {
        n = -n;
        b = -b;
    }
    out = {std::move(n), std::move(b)};
    return true;
}

struct ChartHull {
    std::vector<std::size_t> vertices;
    std::vector<ChartFacet> facets;
};

bool is_vertex(const ZVec& z, const std::vector<ChartFacet>& facets, std::size_t k)
{
    std::vector<ZVec> tight;
    for (const auto& f : facets)
        if (dot(f.normal, z) == f.offset) tight.push_back(f.normal);
    return tight.size() >= k && rank(tight) == k;
}

// Hull of integer points spanning Z^k affinely, by incremental insertion.
ChartHull full_dimensional_hull(const std::vector<ZVec>& z, std::size_t k)
{
    const std::size_t m = z.size();
    ChartHull h;
    if (k == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (z[i][0] < z[lo][0]) lo = i;
            if (z[hi][0] < z[i][0]) hi = i;
        }
        h.vertices = {lo, hi};
        h.facets = {{ZVec{1}, z[lo][0]}, {ZVec{-1}, Integer(-z[hi][0])}};
        return h;
    }
    // Far points first so that most later points fall inside early.
    ZVec sum(k);
    for (const auto& p : z) sum += p;
    std::vector<Integer> key(m);
    for (std::size_t i = 0; i < m; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < k; ++j) {
            Integer c = Integer(m) * z[i][j] - sum[j];
            s += c * c;
        }
        key[i] = s;
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });

    std::vector<std::size_t> cur{order[0]};
    std::vector<ZVec> diffs;
    std::vector<bool> used(m, false);
    used[order[0]] = true;
    for (std::size_t t = 1; t < m && cur.size() < k + 1; ++t) {
        std::size_t i = order[t];
        diffs.push_back(z[i] - z[order[0]]);
        if (rank(diffs) == diffs.size()) {
            cur.push_back(i);
            used[i] = true;
        } else {
            diffs.pop_back();
        }
    }
    if (cur.size() != k + 1) throw Error("hull: points are not full-dimensional in their chart");

    std::set<ChartFacet> fs;
    std::vector<const ZVec*> cloud;
    for (auto i : cur) cloud.push_back(&z[i]);
    for_each_subset(cur.size(), k, [&](const std::vector<std::size_t>& s) {
        std::vector<const ZVec*> through;
        for (auto j : s) through.push_back(&z[cur[j]]);
        ChartFacet f;
        if (supporting(through, cloud, f)) fs.insert(f);
        return true;
    });

    for (std::size_t t = 0; t < m; ++t) {
        const std::size_t pi = order[t];
        if (used[pi]) continue;
        const ZVec& p = z[pi];
        bool outside = false;
        for (const auto& f : fs)
            if (dot(f.normal, p) < f.offset) {
                outside = true;
                break;
            }
        if (!outside) continue;
        std::set<ChartFacet> next;
        for (const auto& f : fs)
            if (dot(f.normal, p) >= f.offset) next.insert(f);
        cloud.clear();
        for (auto i : cur) cloud.push_back(&z[i]);
        cloud.push_back(&p);
        for_each_subset(cur.size(), k - 1, [&](const std::vector<std::size_t>& s) {
            std::vector<const ZVec*> through{&p};
            for (auto j : s) through.push_back(&z[cur[j]]);
            ChartFacet f;
            if (supporting(through, cloud, f)) next.insert(f);
            return true;
        });
        fs = std::move(next);
        cur.push_back(pi);
        used[pi] = true;
        std::vector<ChartFacet> fl(fs.begin(), fs.end());
        std::vector<std::size_t> kept;
        for (auto i : cur)
            if (is_vertex(z[i], fl, k)) kept.push_back(i);
        cur = std::move(kept);
    }
    h.vertices = cur;
    h.facets.assign(fs.begin(), fs.end());
    return h;
}

} // namespace

Polytope Polytope::empty(std::size_t ambient)
{
    Polytope p;
    p.ambient_ = ambient;
    return p;
}

Polytope hull(const std::vector<QVec>& points)
{
    if (points.empty()) throw PreconditionError("hull: empty point set");
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionError("hull: points of different dimension");
    std::vector<QVec> pts = sorted_unique(points);
    Polytope P;
    P.ambient_ = d;
    const QVec& p0 = pts[0];

    QMatrix diffs(pts.size() - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = pts[i][j] - p0[j];
    std::vector<std::size_t> piv;
    if (pts.size() > 1) rref(diffs, &piv);
    const std::size_t r = piv.size();
    P.dim_ = static_cast<int>(r);

    std::vector<ZVec> eq_normals;
    if (r == 0) {
        for (std::size_t j = 0; j < d; ++j) {
            ZVec e(d);
            e[j] = 1;
            eq_normals.push_back(e);
        }
    } else {
        eq_normals = integer_nullspace(diffs);
    }
    for (auto& n : eq_normals) P.equations_.push_back({n, dot(p0, n)});
    std::sort(P.equations_.begin(), P.equations_.end());

    if (r == 0) {
        P.vertices_ = {p0};
        return P;
    }

    Integer l = 1;
    for (const auto& p : pts)
        for (auto j : piv) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p[j].get_den_mpz_t());
    std::vector<ZVec> chart;
    for (const auto& p : pts) {
        ZVec c(r);
        for (std::size_t j = 0; j < r; ++j) c[j] = p[piv[j]].get_num() * (l / p[piv[j]].get_den());
        chart.push_back(c);
    }
    ChartHull ch = full_dimensional_hull(chart, r);
    for (auto i : ch.vertices) P.vertices_.push_back(pts[i]);
    std::sort(P.vertices_.begin(), P.vertices_.end());
    for (const auto& f : ch.facets) {
        ZVec n(d);
        for (std::size_t j = 0; j < r; ++j) n[piv[j]] = f.normal[j];
        Rational b = dot(P.vertices_[0], n);
        for (const auto& v : P.vertices_) b = std::min(b, Rational(dot(v, n)));
        P.facets_.push_back({n, b});
    }
    std::sort(P.facets_.begin(), P.facets_.end());
    return P;
}

Polytope hull(const std::vector<ZVec>& points)
{
    std::vector<QVec> q;
    q.reserve(points.size());
    for (const auto& p : points) q.push_back(to_rational(p));
    return hull(q);
}

bool Polytope::contains(const QVec& x) const
{
    if (is_empty()) return false;
    for (const auto& e : equations_)
        if (!e.tight(x)) return false;
    for (const auto& f : facets_)
        if (!f.contains(x)) return false;
    return true;
}

bool Polytope::contains_in_interior(const QVec& x) const
{
    if (is_empty()) return false;
    for (const auto& e : equations_)
        if (!e.tight(x)) return false;
    for (const auto& f : facets_)
        if (sgn(f.slack(x)) <= 0) return false;
    return true;
}

bool Polytope::is_integral() const
{
    return std::all_of(vertices_.begin(), vertices_.end(), [](const QVec& v) { return fineint::is_integral(v); });
}

std::vector<ZVec> Polytope::integral_vertices() const
{
    std::vector<ZVec> out;
    for (const auto& v : vertices_) out.push_back(to_integer(v));
    return out;
}

Polytope Polytope::scaled(const Integer& k) const
{
    if (k < 0) throw PreconditionError("dilation factor must be nonnegative");
    if (is_empty()) return *this;
    if (k == 0) return hull(std::vector<QVec>{QVec(ambient_)});
    Polytope p = *this;
    Rational q(k);
    for (auto& v : p.vertices_) v *= q;
    for (auto& f : p.facets_) f.offset *= q;
    for (auto& e : p.equations_) e.offset *= q;
    return p;
}

Polytope Polytope::translated(const QVec& t) const
{
    if (t.size() != ambient_) throw DimensionError("translation dimension mismatch");
    Polytope p = *this;
    for (auto& v : p.vertices_) v += t;
    std::sort(p.vertices_.begin(), p.vertices_.end());
    for (auto& f : p.facets_) f.offset += dot(t, f.normal);
    for (auto& e : p.equations_) e.offset += dot(t, e.normal);
    return p;
}

LatticePolytope::LatticePolytope(const std::vector<ZVec>& points) : LatticePolytope(hull(points)) {}

LatticePolytope::LatticePolytope(const Polytope& p) : Polytope(p)
{
    if (!p.is_integral()) throw PreconditionError("polytope has non-integral vertices");
    zverts_ = p.integral_vertices();
}

const std::vector<HalfSpace>& facets(const LatticePolytope& p)
{
    if (!p.is_full_dimensional()) throw DimensionError("facets: polytope is not full-dimensional");
    return p.facets();
}

namespace {

struct IntConstraint {
    ZVec a;
    Integer c; // a·x >= c
};

template <class Visit>
void scan_lattice_points(const Polytope& p, bool strict, Visit&& visit)
{
    if (p.is_empty()) return;
    const std::size_t d = p.ambient_dim();
    if (p.dim() == 0) {
        if (is_integral(p.vertices()[0])) visit(to_integer(p.vertices()[0]));
        return;
    }
    std::vector<IntConstraint> cs;
    for (const auto& f : p.facets())
        cs.push_back({f.normal, strict ? Integer(floor_of(f.offset) + 1) : ceil_of(f.offset)});
    for (const auto& e : p.equations()) {
        if (e.offset.get_den() != 1) return;
        cs.push_back({e.normal, e.offset.get_num()});
        cs.push_back({-e.normal, Integer(-e.offset.get_num())});
    }
    std::vector<Integer> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rational mn = p.vertices()[0][j], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_of(mn);
        hi[j] = floor_of(mx);
        if (lo[j] > hi[j]) return;
    }
    ZVec x(d);
    std::vector<Integer> partial(cs.size());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j + 1 == d) {
            Integer a = lo[j], b = hi[j];
            for (std::size_t i = 0; i < cs.size(); ++i) {
                Integer rest = cs[i].c - partial[i];
                const Integer& al = cs[i].a[j];
                if (al > 0) {
                    Integer t;
                    mpz_cdiv_q(t.get_mpz_t(), rest.get_mpz_t(), al.get_mpz_t());
                    if (t > a) a = t;
                } else if (al < 0) {
                    Integer t;
                    mpz_fdiv_q(t.get_mpz_t(), rest.get_mpz_t(), al.get_mpz_t());
                    if (t < b) b = t;
                } else if (rest > 0) {
                    return;
                }
                if (a > b) return;
            }
            for (Integer t = a; t <= b; ++t) {
                x[j] = t;
                visit(x);
            }
            return;
        }
        for (Integer t = lo[j]; t <= hi[j]; ++t) {
            x[j] = t;
            for (std::size_t i = 0; i < cs.size(); ++i) partial[i] += cs[i].a[j] * t;
            rec(j + 1);
            for (std::size_t i = 0; i < cs.size(); ++i) partial[i] -= cs[i].a[j] * t;
        }
    };
    rec(0);
}

} // namespace

std::vector<ZVec> lattice_points(const Polytope& p)
{
    std::vector<ZVec> out;
    scan_lattice_points(p, false, [&](const ZVec& x) { out.push_back(x); });
    return out;
}

std::vector<ZVec> interior_lattice_points(const Polytope& p)
{
    std::vector<ZVec> out;
    scan_lattice_points(p, true, [&](const ZVec& x) { out.push_back(x); });
    return out;
}

std::size_t count_lattice_points(const Polytope& p)
{
    std::size_t n = 0;
    scan_lattice_points(p, false, [&](const ZVec&) { ++n; });
    return n;
}

std::size_t count_interior_lattice_points(const Polytope& p)
{
    std::size_t n = 0;
    scan_lattice_points(p, true, [&](const ZVec&) { ++n; });
    return n;
}

Polytope dilate(const Polytope& p, const Integer& k) { return p.scaled(k); }

LatticePolytope dilate(const LatticePolytope& p, const Integer& k) { return LatticePolytope(p.scaled(k)); }

namespace {

void require_origin_interior(const Polytope& p)
{
    if (!p.is_full_dimensional()) throw DimensionError("polytope is not full-dimensional");
    for (const auto& f : p.facets())
        if (sgn(f.offset) >= 0) throw PreconditionError("origin is not an interior point");
}

} // namespace

Polytope dual_polytope(const Polytope& p)
{
    require_origin_interior(p);
    std::vector<QVec> verts;
    for (const auto& f : p.facets()) {
        QVec v = to_rational(f.normal);
        v *= Rational(-1 / f.offset);
        verts.push_back(v);
    }
    return hull(verts);
}

LatticePolytope integral_dual_hull(const Polytope& p) { return LatticePolytope(lattice_points(dual_polytope(p))); }

bool is_reflexive(const Polytope& p)
{
    require_origin_interior(p);
    if (!p.is_integral()) return false;
    return std::all_of(p.facets().begin(), p.facets().end(), [](const HalfSpace& f) { return f.offset == -1; });
}

// ---- halfspace intersection

namespace {

struct Overflow {};

struct SmallArith {
    using T = long long;
    static T mul(T a, T b)
    {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T add(T a, T b)
    {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b)
    {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T from(const Integer& z)
    {
        if (!z.fits_slong_p()) throw Overflow{};
        return z.get_si();
    }
    static Integer to(T x) { return Integer(static_cast<long>(x)); }
    static int sign(T x) { return (x > 0) - (x < 0); }
    static T exact_div(T a, T b) { return a / b; }
};

struct BigArith {
    using T = Integer;
    static T mul(const T& a, const T& b) { return a * b; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T from(const Integer& z) { return z; }
    static Integer to(const T& x) { return x; }
    static int sign(const T& x) { return sgn(x); }
    static T exact_div(const T& a, const T& b) { return a / b; }
};

template <class A>
typename A::T det_small(std::vector<std::vector<typename A::T>> m)
{
    using T = typename A::T;
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    T prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A::sign(m[k][k]) == 0) {
            std::size_t p = k + 1;
            while (p < n && A::sign(m[p][k]) == 0) ++p;
            if (p == n) return T(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = A::exact_div(A::sub(A::mul(m[i][j], m[k][k]), A::mul(m[i][k], m[k][j])), prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : A::sub(T(0), m[n - 1][n - 1]);
}

struct IntRow {
    ZVec a;
    Integer c;
};

template <class A>
struct Enumerator {
    using T = typename A::T;
    std::vector<std::vector<T>> ia, ea;
    std::vector<T> ic, ec;
    std::size_t d;

    Enumerator(const std::vector<IntRow>& ineq, const std::vector<IntRow>& eq, std::size_t dim) : d(dim)
    {
        for (const auto& r : ineq) {
            ia.push_back(conv(r.a));
            ic.push_back(A::from(r.c));
        }
        for (const auto& r : eq) {
            ea.push_back(conv(r.a));
            ec.push_back(A::from(r.c));
        }
    }
    static std::vector<T> conv(const ZVec& v)
    {
        std::vector<T> out;
        for (const auto& x : v) out.push_back(A::from(x));
        return out;
    }

    bool feasible(const std::vector<T>& num, const T& den) const
    {
        for (std::size_t i = 0; i < ia.size(); ++i) {
            T s = 0;
            for (std::size_t j = 0; j < d; ++j) s = A::add(s, A::mul(ia[i][j], num[j]));
            if (A::sign(A::sub(s, A::mul(ic[i], den))) < 0) return false;
        }
        return true;
    }

    std::vector<QVec> vertices() const
    {
        std::vector<QVec> out;
        const std::size_t s = d - ea.size();
        for_each_subset(ia.size(), s, [&](const std::vector<std::size_t>& idx) {
            std::vector<std::vector<T>> m = ea;
            std::vector<T> rhs = ec;
            for (auto i : idx) {
                m.push_back(ia[i]);
                rhs.push_back(ic[i]);
            }
            T den = det_small<A>(m);
            if (A::sign(den) == 0) return true;
            std::vector<T> num(d);
            for (std::size_t j = 0; j < d; ++j) {
                auto mj = m;
                for (std::size_t r = 0; r < d; ++r) mj[r][j] = rhs[r];
                num[j] = det_small<A>(mj);
            }
            if (A::sign(den) < 0) {
                den = A::sub(T(0), den);
                for (auto& x : num) x = A::sub(T(0), x);
            }
            if (!feasible(num, den)) return true;
            QVec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = Rational(A::to(num[j]), A::to(den));
            for (auto& x : v) x.canonicalize();
            out.push_back(v);
            return true;
        });
        return sorted_unique(std::move(out));
    }

    bool has_recession_direction() const
    {
        if (ea.size() >= d) return false;
        const std::size_t s = d - 1 - ea.size();
        bool found = false;
        for_each_subset(ia.size(), s, [&](const std::vector<std::size_t>& idx) {
            std::vector<std::vector<T>> m = ea;
            for (auto i : idx) m.push_back(ia[i]);
            std::vector<T> r(d);
            bool nonzero = false;
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<std::vector<T>> minor;
                for (const auto& row : m) {
                    std::vector<T> mr;
                    for (std::size_t c = 0; c < d; ++c)
                        if (c != j) mr.push_back(row[c]);
                    minor.push_back(mr);
                }
                T det = det_small<A>(minor);
                r[j] = (j % 2 == 0) ? det : A::sub(T(0), det);
                if (A::sign(r[j]) != 0) nonzero = true;
            }
            if (!nonzero) return true;
            bool pos = true, neg = true;
            for (const auto& row : ia) {
                T s2 = 0;
                for (std::size_t j = 0; j < d; ++j) s2 = A::add(s2, A::mul(row[j], r[j]));
                if (A::sign(s2) < 0) pos = false;
                if (A::sign(s2) > 0) neg = false;
            }
            if (pos || neg) found = true;
            return !found;
        });
        return found;
    }
};

IntRow integer_row(const HalfSpace& h)
{
    IntRow r{h.normal, h.offset.get_num()};
    const Integer& q = h.offset.get_den();
    if (q != 1)
        for (auto& x : r.a) x *= q;
    return r;
}

} // namespace

Polytope vertices_from_halfspaces(const std::vector<HalfSpace>& inequalities, std::size_t d,
                                  const std::vector<HalfSpace>& equations)
{
    for (const auto& h : inequalities)
        if (h.normal.size() != d) throw DimensionError("halfspace dimension mismatch");
    for (const auto& h : equations)
        if (h.normal.size() != d) throw DimensionError("equation dimension mismatch");
    if (d == 0) throw DimensionError("halfspace intersection in dimension 0");

    std::vector<IntRow> ineq;
    for (const auto& h : inequalities) ineq.push_back(integer_row(h));

    // Independent equations from the reduced echelon form of [E | f].
    std::vector<IntRow> eq;
    if (!equations.empty()) {
        QMatrix aug(equations.size(), d + 1);
        for (std::size_t i = 0; i < equations.size(); ++i) {
            for (std::size_t j = 0; j < d; ++j) aug(i, j) = equations[i].normal[j];
            aug(i, d) = equations[i].offset;
        }
        std::vector<std::size_t> piv;
        QMatrix r = rref(aug, &piv);
        for (std::size_t i = 0; i < piv.size(); ++i) {
            if (piv[i] == d) return Polytope::empty(d);
            QVec row(d + 1);
            for (std::size_t j = 0; j <= d; ++j) row[j] = r(i, j);
            ZVec z = primitive_direction(row);
            // primitive_direction keeps the sign of the row
            ZVec a(d);
            for (std::size_t j = 0; j < d; ++j) a[j] = z[j];
            eq.push_back({a, z[d]});
        }
    }

    std::vector<ZVec> all;
    for (const auto& r : ineq) all.push_back(r.a);
    for (const auto& r : eq) all.push_back(r.a);
    bool lineality = false;
    if (rank(all) < d) {
        lineality = true;
        QMatrix m = to_rational(ZMatrix::from_rows(all, d));
        if (all.empty()) m = QMatrix(0, d);
        for (const auto& l : integer_nullspace(m)) eq.push_back({l, 0});
    }

    std::vector<QVec> verts;
    bool unbounded = false;
    try {
        Enumerator<SmallArith> e(ineq, eq, d);
        verts = e.vertices();
        if (!verts.empty() && !lineality) unbounded = e.has_recession_direction();
    } catch (const Overflow&) {
        Enumerator<BigArith> e(ineq, eq, d);
        verts = e.vertices();
        if (!verts.empty() && !lineality) unbounded = e.has_recession_direction();
    }
    if (verts.empty()) return Polytope::empty(d);
    if (lineality || unbounded) throw UnboundedError("halfspace intersection is unbounded");
    return hull(verts);
}

// ---- lattice width

Integer width_along(const Polytope& p, const ZVec& u)
{
    if (p.is_empty()) throw PreconditionError("width of empty polytope");
    Rational mn = dot(p.vertices()[0], u), mx = mn;
    for (const auto& v : p.vertices()) {
        Rational t = dot(v, u);
        mn = std::min(mn, t);
        mx = std::max(mx, t);
    }
    Rational w = mx - mn;
    if (w.get_den() != 1) throw PreconditionError("width_along: non-integral width");
    return w.get_num();
}

LatticeWidth lattice_width(const LatticePolytope& p)
{
    if (p.is_empty()) throw PreconditionError("lattice width of empty polytope");
    const auto& verts = p.lattice_vertices();
    const std::size_t d = p.ambient_dim();
    std::vector<ZVec> diffs;
    for (const auto& v : verts) diffs.push_back(v - verts[0]);
    SaturatedChart chart = saturated_chart(diffs, d);
    const std::size_t r = chart.rank;
    if (r == 0) {
        ZVec e(d);
        e[0] = 1;
        return {0, e};
    }
    std::vector<ZVec> pts;
    for (const auto& v : diffs) pts.push_back(chart.coords(v));

    auto extent = [&](const ZVec& u) {
        Integer mn = dot(pts[0], u), mx = mn;
        for (const auto& q : pts) {
            Integer t = dot(q, u);
            if (t < mn) mn = t;
            if (t > mx) mx = t;
        }
        return Integer(mx - mn);
    };

    Integer best = -1;
    ZVec best_u;
    for (std::size_t j = 0; j < r; ++j) {
        ZVec e(r);
        e[j] = 1;
        Integer w = extent(e);
        if (best < 0 || w < best) {
            best = w;
            best_u = e;
        }
    }
    // Any functional of width <= W0 pairs with each difference w_i to at most W0.
    const Integer w0 = best;
    std::vector<ZVec> basis;
    for (const auto& q : pts) {
        basis.push_back(q);
        if (rank(basis) < basis.size()) basis.pop_back();
        if (basis.size() == r) break;
    }
    ZMatrix W = ZMatrix::from_rows(basis, r);
    QMatrix winv = *inverse(to_rational(W));
    const long bound = w0.get_si();
    std::vector<long> c(r, -bound);
    for (;;) {
        QVec cq(r);
        for (std::size_t i = 0; i < r; ++i) cq[i] = Rational(c[i]);
        QVec u = winv * cq;
        if (is_integral(u) && !u.is_zero()) {
            ZVec uz = to_integer(u);
            for (std::size_t i = 0; i < r; ++i)
                if (uz[i] != 0) {
                    if (uz[i] < 0) uz = -uz;
                    break;
                }
            Integer w = extent(uz);
            if (w < best || (w == best && uz < best_u)) {
                best = w;
                best_u = uz;
            }
        }
        std::size_t i = 0;
        while (i < r && c[i] == bound) c[i++] = -bound;
        if (i == r) break;
        ++c[i];
    }
    ZVec full(d);
    for (std::size_t i = 0; i < r; ++i) full[i] = best_u[i];
    return {best, chart.U.transpose() * full};
}

bool lattice_equivalent(const LatticePolytope& a, const LatticePolytope& b)
{
    if (a.ambient_dim() != b.ambient_dim() || !a.is_full_dimensional() || !b.is_full_dimensional()) return false;
    const auto& va = a.lattice_vertices();
    const auto& vb = b.lattice_vertices();
    if (va.size() != vb.size()) return false;
    const std::size_t d = a.ambient_dim();
    // A fixed affine basis among the vertices of a.
    std::vector<std::size_t> base{0};
    std::vector<ZVec> diffs;
    for (std::size_t i = 1; i < va.size() && base.size() <= d; ++i) {
        diffs.push_back(va[i] - va[0]);
        if (rank(diffs) == base.size()) base.push_back(i);
        else diffs.pop_back();
    }
    QMatrix A = to_rational(ZMatrix::from_columns(diffs, d));
    QMatrix Ainv = *inverse(A);
    std::vector<std::size_t> img(base.size());
    // Try every injective assignment of the basis vertices into b's vertices.
    std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
        if (k == base.size()) {
            std::vector<ZVec> bd;
            for (std::size_t i = 1; i < k; ++i) bd.push_back(vb[img[i]] - vb[img[0]]);
            QMatrix L = to_rational(ZMatrix::from_columns(bd, d)) * Ainv;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (L(i, j).get_den() != 1) return false;
            if (abs(determinant(L)) != 1) return false;
            std::vector<ZVec> mapped;
            for (const auto& v : va) mapped.push_back(to_integer(L * to_rational(v - va[0])) + vb[img[0]]);
            return sorted_unique(mapped) == sorted_unique(vb);
        }
        for (std::size_t j = 0; j < vb.size(); ++j) {
            if (std::find(img.begin(), img.begin() + static_cast<long>(k), j) != img.begin() + static_cast<long>(k))
                continue;
            img[k] = j;
            if (assign(k + 1)) return true;
        }
        return false;
    };
    return assign(0);
}

} // namespace fineint
