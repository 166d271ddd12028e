#include "fineint/lattice.hpp"

namespace fineint {

// ---- rational linear algebra

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots)
{
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(row, p);
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || sgn(m(i, col)) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const QMatrix& m)
{
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

std::size_t rank(const std::vector<ZVec>& rows)
{
    if (rows.empty()) return 0;
    return rank(to_rational(ZMatrix::from_rows(rows)));
}

Rational determinant(const QMatrix& a)
{
    if (a.rows() != a.cols()) throw DimensionError("determinant of non-square matrix");
    QMatrix m = a;
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Integer determinant(const ZMatrix& a)
{
    // Bareiss fraction-free elimination
    if (a.rows() != a.cols()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    ZMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::optional<QMatrix> inverse(const QMatrix& a)
{
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    aug = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b)
{
    if (a.rows() != b.size()) throw DimensionError("solve: right-hand side dimension mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    aug = rref(aug, &piv);
    if (piv.size() != a.cols()) return std::nullopt; // inconsistent or underdetermined
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    QVec x(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
    return x;
}

std::vector<QVec> nullspace(const QMatrix& m)
{
    std::vector<std::size_t> piv;
    QMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(v);
    }
    return basis;
}

std::vector<ZVec> integer_nullspace(const QMatrix& m)
{
    std::vector<ZVec> out;
    for (const auto& v : nullspace(m)) out.push_back(primitive_direction(v));
    return out;
}

// ---- lattice operations

Integer content(const ZVec& v)
{
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

ZVec primitive(const ZVec& v)
{
    Integer g = content(v);
    if (g == 0) throw PreconditionError("primitive: zero vector");
    ZVec r = v;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return r;
}

ZVec primitive_direction(const QVec& v)
{
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    ZVec z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num() * (l / v[i].get_den());
    return primitive(z);
}

std::vector<Integer> SmithForm::diagonal() const
{
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

namespace {

void add_row_multiple(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col_multiple(ZMatrix& m, std::size_t dst, std::size_t src, const Integer& q)
{
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithForm smith_normal_form(const ZMatrix& a)
{
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm f{a, ZMatrix::identity(m), ZMatrix::identity(n), 0};
    ZMatrix& S = f.S;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (S(i, j) == 0) continue;
                    Integer v = abs(S(i, j));
                    if (!found || v < best) {
                        found = true;
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                f.rank = t;
                return f;
            }
            S.swap_rows(t, pi);
            f.U.swap_rows(t, pi);
            S.swap_cols(t, pj);
            f.V.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Integer q = floor_div(S(i, t), S(t, t));
                add_row_multiple(S, i, t, q);
                add_row_multiple(f.U, i, t, q);
                if (S(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Integer q = floor_div(S(t, j), S(t, t));
                add_col_multiple(S, j, t, q);
                add_col_multiple(f.V, j, t, q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        add_row_multiple(S, t, i, -1);
                        add_row_multiple(f.U, t, i, -1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (S(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
            for (std::size_t j = 0; j < m; ++j) f.U(t, j) = -f.U(t, j);
        }
    }
    f.rank = 0;
    for (std::size_t t = 0; t < std::min(m, n); ++t)
        if (S(t, t) != 0) ++f.rank;
    return f;
}

ZMatrix hermite_normal_form(const ZMatrix& a)
{
    ZMatrix h = a;
    const std::size_t m = h.rows(), n = h.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = row; i < m; ++i)
                if (h(i, col) != 0 && (p == m || abs(h(i, col)) < abs(h(p, col)))) p = i;
            if (p == m) break;
            h.swap_rows(row, p);
            bool done = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (h(i, col) == 0) continue;
                add_row_multiple(h, i, row, floor_div(h(i, col), h(row, col)));
                if (h(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0)
            for (std::size_t j = 0; j < n; ++j) h(row, j) = -h(row, j);
        for (std::size_t i = 0; i < row; ++i) add_row_multiple(h, i, row, floor_div(h(i, col), h(row, col)));
        ++row;
    }
    ZMatrix out(row, n);
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
    return out;
}

ZMatrix complete_to_basis(const ZVec& v)
{
    const std::size_t d = v.size();
    if (d == 0 || content(v) != 1) throw PreconditionError("complete_to_basis: vector is not primitive");
    std::size_t nonzero = 0, k = 0;
    for (std::size_t i = 0; i < d; ++i)
        if (v[i] != 0) {
            ++nonzero;
            k = i;
        }
    if (nonzero == 1) {
        ZMatrix p(d, d);
        p(0, k) = v[k];
        std::size_t r = 1;
        for (std::size_t j = 0; j < d; ++j)
            if (j != k) p(r++, j) = 1;
        return p;
    }
    // Row operations U with U v = e1, then v is the first column of U^{-1}.
    ZMatrix U = ZMatrix::identity(d);
    ZVec w = v;
    for (;;) {
        std::size_t p = d;
        for (std::size_t i = 0; i < d; ++i)
            if (w[i] != 0 && (p == d || abs(w[i]) < abs(w[p]))) p = i;
        if (p != 0) {
            std::swap(w[0], w[p]);
            U.swap_rows(0, p);
        }
        bool done = true;
        for (std::size_t i = 1; i < d; ++i) {
            if (w[i] == 0) continue;
            Integer q = floor_div(w[i], w[0]);
            w[i] -= q * w[0];
            add_row_multiple(U, i, 0, q);
            if (w[i] != 0) done = false;
        }
        if (done) break;
    }
    if (w[0] < 0)
        for (std::size_t j = 0; j < d; ++j) U(0, j) = -U(0, j);
    return to_integer(*inverse(to_rational(U))).transpose();
}

ZVec SaturatedChart::coords(const ZVec& x) const
{
    ZVec full = U * x;
    ZVec c(rank);
    for (std::size_t i = 0; i < rank; ++i) c[i] = full[i];
    return c;
}

ZVec SaturatedChart::lift(const ZVec& c) const
{
    ZVec full(U.rows());
    for (std::size_t i = 0; i < rank; ++i) full[i] = c[i];
    return U_inv * full;
}

SaturatedChart saturated_chart(const std::vector<ZVec>& gens, std::size_t ambient)
{
    SaturatedChart ch;
    if (gens.empty()) {
        ch.U = ch.U_inv = ZMatrix::identity(ambient);
        return ch;
    }
    SmithForm f = smith_normal_form(ZMatrix::from_columns(gens, ambient));
    ch.U = f.U;
    ch.U_inv = to_integer(*inverse(to_rational(f.U)));
    ch.rank = f.rank;
    return ch;
}

bool AffineLatticeSpec::contains(const ZVec& y) const
{
    if (y.size() != level.size()) return false;
    if (dot(level, y) != level_rhs) return false;
    Integer r = dot(congruence, y) - congruence_rhs;
    return r % modulus == 0;
}

ZVec AffineNormalization::to_chart(const ZVec& y) const
{
    ZVec d = y - origin;
    auto c = solve(to_rational(basis.transpose()), to_rational(d));
    if (!c || !is_integral(*c)) throw PreconditionError("point " + to_string(y) + " is not in the affine lattice");
    return to_integer(*c);
}

QVec AffineNormalization::to_ambient(const QVec& c) const
{
    QVec y = to_rational(origin);
    for (std::size_t i = 0; i < basis.rows(); ++i) y += c[i] * to_rational(basis.row(i));
    return y;
}

AffineNormalization normalize_affine_lattice(const AffineLatticeSpec& spec, const std::vector<ZVec>& points)
{
    const std::size_t n = spec.level.size();
    if (spec.congruence.size() != n) throw DimensionError("affine lattice: congruence dimension mismatch");
    if (spec.modulus <= 0) throw PreconditionError("affine lattice: modulus must be positive");
    if (points.empty()) throw PreconditionError("affine lattice: no points");
    for (const auto& p : points) {
        if (p.size() != n) throw DimensionError("affine lattice: point dimension mismatch");
        if (!spec.contains(p)) throw PreconditionError("point " + to_string(p) + " violates the affine lattice constraints");
    }
    // Differences: a·y = 0 and c·y = m t for some integer t.
    ZMatrix k(2, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
        k(0, j) = spec.level[j];
        k(1, j) = spec.congruence[j];
    }
    k(1, n) = -spec.modulus;
    SmithForm f = smith_normal_form(k);
    std::vector<ZVec> gens;
    for (std::size_t j = f.rank; j < n + 1; ++j) {
        ZVec g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = f.V(i, j);
        gens.push_back(g);
    }
    AffineNormalization out;
    out.origin = points[0];
    out.basis = hermite_normal_form(ZMatrix::from_rows(gens, n));
    if (out.basis.rows() + 1 != n) throw PreconditionError("affine lattice does not have codimension 1");
    std::vector<ZVec> diffs;
    for (const auto& p : points) {
        out.vertices.push_back(out.to_chart(p));
        diffs.push_back(out.vertices.back());
    }
    if (rank(diffs) != n - 1) throw PreconditionError("points do not span the affine lattice");
    return out;
}

// ---- lattice polygons

namespace {

Integer cross(const ZVec& o, const ZVec& a, const ZVec& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<ZVec> normalized_from(const std::vector<ZVec>& w, std::size_t i)
{
    const std::size_t m = w.size();
    ZVec u = primitive(w[(i + 1) % m] - w[i]);
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), u[0].get_mpz_t(), u[1].get_mpz_t());
    // [u w] with w = (-t, s) has determinant 1; apply its inverse.
    const Integer a00 = s, a01 = t, a10 = -u[1], a11 = u[0];
    std::vector<ZVec> out;
    for (std::size_t j = 0; j < m; ++j) {
        ZVec d = w[(i + j) % m] - w[i];
        out.push_back(ZVec{a00 * d[0] + a01 * d[1], a10 * d[0] + a11 * d[1]});
    }
    const Integer h = out[2][1];
    Integer shift;
    mpz_fdiv_q(shift.get_mpz_t(), out[2][0].get_mpz_t(), h.get_mpz_t());
    for (auto& p : out) p[0] -= shift * p[1];
    return out;
}

} // namespace

std::vector<ZVec> convex_hull_2d(std::vector<ZVec> pts)
{
    for (const auto& p : pts)
        if (p.size() != 2) throw DimensionError("convex_hull_2d: points must be planar");
    pts = sorted_unique(std::move(pts));
    if (pts.size() < 3) return pts;
    std::vector<ZVec> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::vector<ZVec> polygon_normal_form(const std::vector<ZVec>& pts)
{
    std::vector<ZVec> v = convex_hull_2d(pts);
    if (v.size() < 3) throw DimensionError("polygon_normal_form: input is not 2-dimensional");
    std::vector<ZVec> mirrored;
    for (const auto& p : v) mirrored.push_back(ZVec{-p[0], p[1]});
    mirrored = convex_hull_2d(mirrored);
    std::vector<ZVec> best;
    for (const auto* w : {&v, &mirrored})
        for (std::size_t i = 0; i < w->size(); ++i) {
            auto cand = normalized_from(*w, i);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    return best;
}

bool polygons_equivalent(const std::vector<ZVec>& a, const std::vector<ZVec>& b)
{
    return polygon_normal_form(a) == polygon_normal_form(b);
}

} // namespace fineint
