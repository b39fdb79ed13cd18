#include "maclab/series.hpp"

#include "maclab/errors.hpp"

#include <sstream>

namespace maclab {

Poly CoeffRing::reduce(const Poly& p) const
{
    VarSet extra = p.variables() & ~vars;
    if (extra != 0) {
        throw Error(ErrorKind::RingMismatch, "coefficient uses " + describe_vars(extra) + " outside ring " + describe());
    }
    if (!has_cap() || p.is_zero()) return p;
    if (p.min_capped_degree(capped) < 0) {
        throw Error(ErrorKind::RingMismatch, "negative exponent in truncated variables " + describe_vars(capped));
    }
    if (p.max_capped_degree(capped) <= cap) return p;
    return p.truncated(capped, cap);
}

std::string CoeffRing::describe() const
{
    std::string s = "Q[" + describe_vars(vars) + "]";
    if (has_cap()) s += " mod deg(" + describe_vars(capped) + ")>" + std::to_string(cap);
    return s;
}

Series::Series(CoeffRing ring, Base base, int order)
    : ring_(ring)
    , base_(base)
    , order_(order)
{
    if (order < 0) throw Error(ErrorKind::ParameterOutOfRange, "series order must be non-negative");
    c_.resize(order + 1);
}

Series Series::constant(CoeffRing ring, Base base, int order, const Poly& c)
{
    Series s(ring, base, order);
    s.set(0, c);
    return s;
}

Series Series::monomial(CoeffRing ring, Base base, int order, const Poly& c, int exponent)
{
    Series s(ring, base, order);
    if (exponent < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative series exponent");
    s.add_to(exponent, c);
    return s;
}

const Poly& Series::coeff(int k) const
{
    static const Poly zero;
    if (k < 0 || k > order_) return zero;
    return c_[k];
}

void Series::add_to(int k, const Poly& p)
{
    if (k < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative series exponent");
    if (k > order_ || p.is_zero()) return;
    c_[k] += ring_.reduce(p);
}

void Series::set(int k, const Poly& p)
{
    if (k < 0 || k > order_) throw Error(ErrorKind::ParameterOutOfRange, "series exponent outside order");
    c_[k] = ring_.reduce(p);
}

void Series::check_compatible(const Series& other) const
{
    if (!(ring_ == other.ring_)) {
        throw Error(ErrorKind::RingMismatch, ring_.describe() + " vs " + other.ring_.describe());
    }
    if (base_ != other.base_) throw Error(ErrorKind::RingMismatch, "series in T mixed with series in S");
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
}

Series& Series::operator+=(const Series& other)
{
    check_compatible(other);
    if (other.order_ < order_) *this = truncated(other.order_);
    for (int k = 0; k <= order_; ++k) c_[k] += other.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& other) { return *this += -other; }

Series& Series::operator*=(const Series& other)
{
    check_compatible(other);
    int n = std::min(order_, other.order_);
    Series out(ring_, base_, n);
    for (int i = 0; i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (other.c_[j].is_zero()) continue;
            out.c_[i + j] += Poly::multiply(c_[i], other.c_[j], ring_.capped, ring_.has_cap() ? ring_.cap : -1);
        }
    }
    *this = std::move(out);
    return *this;
}

bool Series::operator==(const Series& other) const
{
    return ring_ == other.ring_ && base_ == other.base_ && order_ == other.order_ && c_ == other.c_;
}

Series Series::scaled(const Poly& c) const
{
    Poly rc = ring_.reduce(c);
    Series s(ring_, base_, order_);
    for (int k = 0; k <= order_; ++k) {
        s.c_[k] = Poly::multiply(c_[k], rc, ring_.capped, ring_.has_cap() ? ring_.cap : -1);
    }
    return s;
}

Series Series::truncated(int order) const
{
    Series s(ring_, base_, std::min(order, order_));
    for (int k = 0; k <= s.order_; ++k) s.c_[k] = c_[k];
    return s;
}

Series Series::widened(const CoeffRing& ring) const
{
    Series s(ring, base_, order_);
    for (int k = 0; k <= order_; ++k) s.set(k, c_[k]);
    return s;
}

Series Series::substituted(Var v, const Poly& value, const CoeffRing& ring) const
{
    Series s(ring, base_, order_);
    for (int k = 0; k <= order_; ++k) s.set(k, c_[k].substitute(v, value));
    return s;
}

Poly inverse_in_ring(const Poly& p, const CoeffRing& ring)
{
    if (p.is_monomial()) return p.monomial_inverse();
    if (!ring.has_cap()) throw Error(ErrorKind::BadConstantTerm, "not a unit: " + p.str());
    // Split p = u + r with u the capped-degree-0 part; r is nilpotent modulo the cap.
    Poly unit, rest;
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::monomial(m, c);
        if (capped_degree(m, ring.capped) == 0) {
            unit += t;
        } else {
            rest += t;
        }
    }
    if (!unit.is_monomial()) throw Error(ErrorKind::BadConstantTerm, "not a unit: " + p.str());
    Poly u_inv = unit.monomial_inverse();
    Poly x = -Poly::multiply(rest, u_inv, ring.capped, ring.cap);
    Poly sum(1), power(1);
    for (int k = 1; k <= ring.cap; ++k) {
        power = Poly::multiply(power, x, ring.capped, ring.cap);
        if (power.is_zero()) break;
        sum += power;
    }
    return Poly::multiply(sum, u_inv, ring.capped, ring.cap);
}

Series Series::inverse() const
{
    Poly inv0 = inverse_in_ring(c_[0], ring_);
    int cap = ring_.has_cap() ? ring_.cap : -1;
    Series b(ring_, base_, order_);
    b.c_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
        Poly acc;
        for (int j = 1; j <= k; ++j) {
            if (c_[j].is_zero() || b.c_[k - j].is_zero()) continue;
            acc += Poly::multiply(c_[j], b.c_[k - j], ring_.capped, cap);
        }
        b.c_[k] = -Poly::multiply(acc, inv0, ring_.capped, cap);
    }
    return b;
}

Series Series::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    Series result = one(ring_, base_, order_);
    Series base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Series Series::log() const
{
    if (c_[0] != Poly(1)) throw Error(ErrorKind::BadConstantTerm, "log needs constant term 1, got " + c_[0].str());
    int cap = ring_.has_cap() ? ring_.cap : -1;
    Series l(ring_, base_, order_);
    for (int k = 1; k <= order_; ++k) {
        Poly acc = c_[k].scaled(k);
        for (int j = 1; j < k; ++j) {
            if (l.c_[j].is_zero() || c_[k - j].is_zero()) continue;
            acc -= Poly::multiply(l.c_[j], c_[k - j], ring_.capped, cap).scaled(j);
        }
        l.c_[k] = acc.scaled(Rational(1, k));
    }
    return l;
}

Series Series::exp() const
{
    if (!c_[0].is_zero()) throw Error(ErrorKind::BadConstantTerm, "exp needs zero constant term");
    int cap = ring_.has_cap() ? ring_.cap : -1;
    Series g(ring_, base_, order_);
    g.c_[0] = Poly(1);
    for (int n = 1; n <= order_; ++n) {
        Poly acc;
        for (int k = 1; k <= n; ++k) {
            if (c_[k].is_zero() || g.c_[n - k].is_zero()) continue;
            acc += Poly::multiply(c_[k], g.c_[n - k], ring_.capped, cap).scaled(k);
        }
        g.c_[n] = acc.scaled(Rational(1, n));
    }
    return g;
}

Series Series::to_s_base() const
{
    if (base_ != Base::T) throw Error(ErrorKind::RingMismatch, "series is already in S");
    Series s(ring_, Base::S, 2 * order_);
    for (int k = 0; k <= order_; ++k) s.c_[2 * k] = c_[k];
    return s;
}

Series one_minus_pow(const CoeffRing& ring, Base base, int order, const Poly& a, int m, long e)
{
    if (m < 0 || (m == 0 && e < 0)) {
        throw Error(ErrorKind::NonConvergentFactor, "factor (1 - a X^" + std::to_string(m) + ")^" + std::to_string(e));
    }
    Series s = Series::one(ring, base, order);
    Poly ra = ring.reduce(a);
    if (ra.is_zero() || e == 0) return s;
    if (m == 0) {
        // A finite factor: plain polynomial power.
        Poly f = Poly(1) - ra;
        Poly acc(1);
        for (long i = 0; i < e; ++i) acc = Poly::multiply(acc, f, ring.capped, ring.has_cap() ? ring.cap : -1);
        s.set(0, acc);
        return s;
    }
    Poly neg_a = -ra;
    Poly power(1);
    Rational binom = 1;
    int cap = ring.has_cap() ? ring.cap : -1;
    for (long k = 1; k * m <= order; ++k) {
        binom = binom * Rational(e - k + 1) / Rational(k);
        if (binom == 0) break;
        power = Poly::multiply(power, neg_a, ring.capped, cap);
        if (power.is_zero()) break;
        s.add_to(static_cast<int>(k * m), power.scaled(binom));
    }
    return s;
}

Series pochhammer_inf(const CoeffRing& ring, Base base, int order, const Poly& a, int first, int step)
{
    if (step <= 0 || first < 0) {
        throw Error(ErrorKind::NonConvergentFactor, "pochhammer with start " + std::to_string(first) + " step " + std::to_string(step));
    }
    Series s = Series::one(ring, base, order);
    for (int k = first; k <= order; k += step) s *= one_minus_pow(ring, base, order, a, k, 1);
    return s;
}

Series pow_symbolic(const Series& f, const Poly& exponent)
{
    CoeffRing ring = f.ring();
    ring.vars |= exponent.variables();
    Series l = f.log().widened(ring);
    return l.scaled(exponent).exp();
}

SeriesDiff compare(const Series& a, const Series& b)
{
    SeriesDiff d;
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) {
        if (a.coeff(k) != b.coeff(k)) {
            d.equal = false;
            d.power = k;
            d.lhs = a.coeff(k);
            d.rhs = b.coeff(k);
            return d;
        }
    }
    return d;
}

std::string dump(const Series& s)
{
    std::ostringstream out;
    const char* x = s.base() == Base::T ? "T" : "S";
    for (int k = 0; k <= s.order(); ++k) out << x << "^" << k << ": " << s.coeff(k).str() << "\n";
    return out.str();
}

} // namespace maclab
