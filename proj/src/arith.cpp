#include "fineint/arith.hpp"

#include <ostream>

namespace fineint {

QVec to_rational(const ZVec& v)
{
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

QMatrix to_rational(const ZMatrix& m)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    return q;
}

bool is_integral(const QVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

ZVec to_integer(const QVec& v)
{
    ZVec z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw PreconditionError("non-integral coordinate " + to_string(v[i]));
        z[i] = v[i].get_num();
    }
    return z;
}

ZMatrix to_integer(const QMatrix& m)
{
    ZMatrix z(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw PreconditionError("non-integral matrix entry");
            z(i, j) = m(i, j).get_num();
        }
    return z;
}

Integer dot(const ZVec& a, const ZVec& b)
{
    if (a.size() != b.size()) throw DimensionError("pairing of vectors of different dimension");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const QVec& a, const ZVec& b)
{
    if (a.size() != b.size()) throw DimensionError("pairing of vectors of different dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational pairing(const QVec& x, const QVec& n)
{
    if (x.size() != n.size()) throw DimensionError("pairing of vectors of different dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * n[i];
    return s;
}

Integer floor_of(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {
template <class V>
std::string join(const V& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}
} // namespace

std::string to_string(const ZVec& v) { return join(v); }
std::string to_string(const QVec& v) { return join(v); }

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) throw PreconditionError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::ostream& operator<<(std::ostream& os, const ZVec& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const QVec& v) { return os << to_string(v); }

} // namespace fineint
