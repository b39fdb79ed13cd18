#pragma once

#include "maclab/poly.hpp"

#include <string>
#include <vector>

namespace maclab {

/** The formal variable a series is expanded in: T itself, or S with T = S^2. */
enum class Base { T, S };

/**
 * Coefficient ring of a series: Laurent polynomials in `vars` over Q,
 * optionally reduced modulo total degree > `cap` in the `capped` variables
 * (which then must only occur with non-negative exponents).
 */
struct CoeffRing {
    VarSet vars = 0;
    VarSet capped = 0;
    int cap = -1;

    bool operator==(const CoeffRing& other) const = default;
    bool has_cap() const { return cap >= 0 && capped != 0; }
    /** Reduce a polynomial into the ring, rejecting foreign variables. */
    Poly reduce(const Poly& p) const;
    std::string describe() const;
};

/** Truncated power series sum_{k<=order} c_k X^k with X the base variable. */
class Series {
public:
    Series(CoeffRing ring, Base base, int order);

    static Series constant(CoeffRing ring, Base base, int order, const Poly& c);
    static Series one(CoeffRing ring, Base base, int order) { return constant(ring, base, order, Poly(1)); }
    static Series monomial(CoeffRing ring, Base base, int order, const Poly& c, int exponent);

    const CoeffRing& ring() const { return ring_; }
    Base base() const { return base_; }
    int order() const { return order_; }
    const Poly& coeff(int k) const;
    const std::vector<Poly>& coeffs() const { return c_; }

    /** Add p to the coefficient of X^k; ignored when k exceeds the order. */
    void add_to(int k, const Poly& p);
    void set(int k, const Poly& p);

    Series operator-() const;
    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Series& other);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    bool operator==(const Series& other) const;

    Series scaled(const Poly& c) const;
    Series truncated(int order) const;
    /** Same coefficients viewed in a larger ring. */
    Series widened(const CoeffRing& ring) const;
    /** Apply a coefficient-wise substitution and land in `ring`. */
    Series substituted(Var v, const Poly& value, const CoeffRing& ring) const;

    /** Multiplicative inverse; the constant coefficient must be a unit. */
    Series inverse() const;
    Series pow(long e) const;
    /** Logarithm; requires constant coefficient 1. */
    Series log() const;
    /** Exponential; requires zero constant coefficient. */
    Series exp() const;
    /** Re-expand a T-series in S = T^{1/2} up to S^{2*order}. */
    Series to_s_base() const;

private:
    CoeffRing ring_;
    Base base_;
    int order_;
    std::vector<Poly> c_;

    void check_compatible(const Series& other) const;
};

/** (1 - a X^m)^e for any integer e, expanded by the binomial series. */
Series one_minus_pow(const CoeffRing& ring, Base base, int order, const Poly& a, int m, long e);

/** prod_{j>=0} (1 - a X^{first + j*step}) truncated at `order`. */
Series pochhammer_inf(const CoeffRing& ring, Base base, int order, const Poly& a, int first, int step);

/** f^E for a rational series f with constant term 1 and exponent E in Q[z]. */
Series pow_symbolic(const Series& f, const Poly& exponent);

/** Invert a polynomial in a degree-capped ring; requires a unit at capped degree 0. */
Poly inverse_in_ring(const Poly& p, const CoeffRing& ring);

/** First disagreement between two series. */
struct SeriesDiff {
    bool equal = true;
    int power = -1;
    Poly lhs;
    Poly rhs;
};

SeriesDiff compare(const Series& a, const Series& b);

/** Human-readable dump, one coefficient per line. */
std::string dump(const Series& s);

} // namespace maclab
