#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace maclab {

using Rational = mpq_class;
using Integer = mpz_class;

/** Variable slots of the coefficient rings used throughout the library. */
enum class Var : int { q = 0, u = 1, t = 2, z = 3, x1 = 4, x2 = 5, x3 = 6, x4 = 7 };

constexpr int kNumVars = 8;
constexpr int kMaxX = 4;

/** Exponent vector of a Laurent monomial. */
using Mono = std::array<int32_t, kNumVars>;

/** Bit set of variables. */
using VarSet = uint32_t;

constexpr VarSet var_bit(Var v) { return VarSet(1) << static_cast<int>(v); }
inline Var x_var(int i) { return static_cast<Var>(static_cast<int>(Var::x1) + i - 1); }
VarSet x_vars(int count);
const char* var_name(Var v);
std::string describe_vars(VarSet vars);

/** Sum of the exponents of `m` over the variables in `vars`. */
int capped_degree(const Mono& m, VarSet vars);

/**
 * Sparse multivariate Laurent polynomial with exact rational coefficients.
 *
 * Terms are kept sorted by exponent vector with no zero coefficients, so
 * equality is structural and printing is canonical.
 */
class Poly {
public:
    using Term = std::pair<Mono, Rational>;

    Poly() = default;
    Poly(long c);
    Poly(const Rational& c);

    static Poly variable(Var v, int exponent = 1);
    static Poly monomial(const Mono& m, const Rational& c);
    static Poly monomial(Var v, int exponent, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /** Coefficient of the constant monomial. */
    Rational constant_term() const;
    /** Coefficient of a given monomial (zero when absent). */
    Rational coefficient(const Mono& m) const;

    VarSet variables() const;
    int min_degree(Var v) const;
    int max_degree(Var v) const;
    /** Extremes of capped_degree over the terms; requires a non-zero poly. */
    int min_capped_degree(VarSet vars) const;
    int max_capped_degree(VarSet vars) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    /** Product that drops terms whose degree in `capped` exceeds `cap` (cap < 0: keep all). */
    static Poly multiply(const Poly& a, const Poly& b, VarSet capped = 0, int cap = -1);

    Poly scaled(const Rational& c) const;
    Poly shifted(const Mono& m) const;
    Poly pow(long e) const;
    /** Inverse of a monomial; throws NonDivisible otherwise. */
    Poly monomial_inverse() const;
    /** Keep only terms with degree in `vars` at most `cap`. */
    Poly truncated(VarSet vars, int cap) const;

    /** Replace variable `v` by a monomial value (possibly constant). */
    Poly substitute(Var v, const Poly& monomial_value) const;

    /** Exact quotient when `divisor` divides this polynomial in the Laurent ring. */
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
    void normalize();
};

/** Unit monomial exponent vector. */
Mono unit_mono();
Mono mono_of(Var v, int exponent);
Mono mono_add(const Mono& a, const Mono& b);

std::string rational_str(const Rational& r);

} // namespace maclab
