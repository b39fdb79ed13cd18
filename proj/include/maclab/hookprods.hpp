#pragma once

#include "maclab/littlewood.hpp"
#include "maclab/poly.hpp"
#include "maclab/vcoding.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace maclab {

/** Direction of a g-interval. */
enum class Dir { Plus, Minus };

/**
 * g-intervals: Plus gives {k : m <= k < M, k = m mod g}, Minus gives
 * {l : m < l <= M, l = M mod g}. Both may be empty.
 */
std::vector<long> g_interval(long m, long M, long g, Dir dir);

/**
 * Exact value of a product of tau-values in Q(q). A product of brackets
 * 1 - q^a factors uniquely as sign * q^shift * prod Phi_d(q)^{e_d} over
 * cyclotomic polynomials, which is a canonical form: two products are equal
 * as rational functions iff these data agree.
 */
struct CyclotomicForm {
    int sign = 1;
    long shift = 0;
    std::map<long, long> phi;  ///< d -> exponent of Phi_d, zero exponents pruned
    bool operator==(const CyclotomicForm&) const = default;
    CyclotomicForm& operator*=(const CyclotomicForm& o);
    std::string str() const;
};

/**
 * A function tau: Z -> F^x. Built-ins: identity, rational brackets
 * 1 - b^{kx}, and the symbolic bracket 1 - q^{kx}. Every built-in vanishes
 * at 0, so evaluating a product that still uses tau(0) is an error.
 */
class TauFn {
public:
    enum class Kind { Identity, RationalBracket, QBracket };

    static TauFn identity();
    /** tau(x) = 1 - base^(scale*x) over the rationals. */
    static TauFn rational_bracket(const Rational& base, int scale = 1);
    /** tau(x) = 1 - q^(scale*x) with q symbolic. */
    static TauFn q_bracket(int scale = 1);

    Kind kind() const { return kind_; }
    bool symbolic() const { return kind_ == Kind::QBracket; }
    const Rational& base() const { return base_; }
    int scale() const { return scale_; }
    std::string str() const;

    /** Rational value at x (non-symbolic kinds); throws TauZeroArgument at a zero. */
    Rational value(long x) const;
    /** Canonical factored value at x (symbolic kind); throws TauZeroArgument at 0. */
    CyclotomicForm factored(long x) const;
    /** Laurent polynomial value at x (symbolic kind). */
    Poly poly(long x) const;

private:
    Kind kind_ = Kind::Identity;
    Rational base_ = 1;
    int scale_ = 1;
};

/** The exact value of a tau-product, in the representation its TauFn uses. */
struct TauValue {
    bool symbolic = false;
    Rational rational = 1;
    CyclotomicForm factored;
    bool operator==(const TauValue&) const = default;
    std::string str() const;
};

/** Formal product prod tau(x)^{e_x}, stored as the exponent map x -> e_x. */
class TauProduct {
public:
    void mul(long x, long e = 1);
    void div(long x, long e = 1) { mul(x, -e); }
    TauProduct& operator*=(const TauProduct& o);
    const std::map<long, long>& exponents() const { return exps_; }
    bool operator==(const TauProduct&) const = default;
    /** Exact value; throws TauZeroArgument if tau(0) is used. */
    TauValue evaluate(const TauFn& tau) const;
    std::string str() const;

private:
    std::map<long, long> exps_;
};

/** Closed form of the telescoping product over a g-interval (1 when empty). */
TauValue telescoped(const TauFn& tau, long m, long M, long g, Dir dir);
/** The same product taken factor by factor. */
TauValue telescoped_naive(const TauFn& tau, long m, long M, long g, Dir dir);

/** Which sign of epsilon*g enters the hook product (Plus only for the second DD form). */
enum class Variant { Minus, Plus };

/** Per-partition hook statistics relative to a family tag. */
struct HookStats {
    long h_less = 0;           ///< #{s : h_s < g} (type A statistic)
    long h_less_plus = 0;      ///< #{s : h_s < g, eps_s = 1}
    long h_less_plus_diag = 0; ///< the same restricted to the main diagonal
    int durfee = 0;
    std::vector<long> alpha;   ///< alpha[i] for i = 1..g-1 (index 0 unused)
    std::vector<int> diagonal; ///< diagonal hook lengths, decreasing
};

HookStats hook_stats(const Partition& p, const FamilyTag& tag);

/**
 * Formal left side: prod tau(h-t)tau(h+t)/tau(h)^2 for P, otherwise
 * prod tau(h - eps*g)/tau(h) (Plus: h + eps*g). For DDp1/DDp2 the boxes with
 * hook divisible by g (the boxes of the decorating quotient) are left out:
 * their contributions cancel in pairs.
 */
TauProduct tau_lhs_product(const Partition& p, const FamilyTag& tag, Variant variant = Variant::Minus);
/** Formal closed-form right side built from the V-coding of p. */
TauProduct tau_rhs_product(const Partition& p, const FamilyTag& tag, Variant variant = Variant::Minus);

/**
 * Factor prod_{i<t} tau(i) / prod_{i != i1} tau(r_i) (i1: the slot of residue
 * g/2 - 1) that turns the printed type-D right side into a true identity.
 */
TauProduct type_d_correction(const Partition& p, const FamilyTag& tag);

TauValue tau_lhs(const Partition& p, const FamilyTag& tag, const TauFn& tau, Variant variant = Variant::Minus);
TauValue tau_rhs(const Partition& p, const FamilyTag& tag, const TauFn& tau, Variant variant = Variant::Minus);

/** Word indices of the first hook: i-indices of its eps=+1 boxes, j-indices of its eps=-1 boxes. */
struct FirstHook {
    std::set<long> plus;
    std::set<long> minus;
    bool operator==(const FirstHook&) const = default;
};

/** First hook from the union of g-intervals given by the V-coding. */
FirstHook largest_hook(const Partition& p, const FamilyTag& tag);
/** First hook read off the Ferrers diagram. */
FirstHook first_hook_direct(const Partition& p);

/** Diagonal hook lengths from the per-residue closed form, decreasing. */
std::vector<int> diagonal_hooks(const Partition& p, const FamilyTag& tag);

/** One sign congruence: both residues mod 2 and whether they agree. */
struct SignCheck {
    HookStats stats;
    int parity = 0;
    int lhs = 0;
    int rhs = 0;
    bool agree() const { return lhs == rhs; }
};

/** The sign congruence attached to the tag's root type. */
SignCheck sign_stats(const Partition& p, const FamilyTag& tag);

} // namespace maclab
