#pragma once

#include "maclab/littlewood.hpp"
#include "maclab/poly.hpp"
#include "maclab/vcoding.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maclab {

/** Classical Weyl characters: general linear, symplectic, odd and even orthogonal. */
enum class CharKind { Schur, Sp, Oo, Oe };

const char* char_kind_name(CharKind k);

/**
 * Evaluation points x_1..x_t: either independent symbols (t <= 4, the
 * x-slots of the coefficient ring) or monomials x_i = q^{a*i + b}.
 */
class XSpec {
public:
    static XSpec symbolic(int t);
    static XSpec q_powers(int t, int a, int b);

    int t() const { return t_; }
    bool is_symbolic() const { return symbolic_; }
    /** The value of x_i, 1-based. */
    Poly x(int i) const;
    /** x_i^e. */
    Poly x_pow(int i, long e) const;
    std::string str() const;

private:
    int t_ = 1;
    bool symbolic_ = true;
    int a_ = 1;
    int b_ = 0;
};

/** Determinant by fraction-free (Bareiss) elimination with exact divisions. */
Poly determinant(std::vector<std::vector<Poly>> m);

/**
 * The character indexed by mu (at most t parts) at the points xs, as the
 * exact quotient of the two alternant determinants. Throws NonDivisible if
 * the division is not exact and ParameterOutOfRange if mu is too long.
 */
Poly char_eval(CharKind kind, const Partition& mu, const XSpec& xs);

/** The character kind and evaluation points attached to a root type. */
CharKind char_kind_for(RootType type);
XSpec specialization_for(RootType type, int t);

/**
 * The index mu of the character attached to a family member: v_i - v_t + i - t
 * for type A, v_i + i - g otherwise.
 */
Partition character_index(const VCoding& vc, RootType type);

/**
 * Hook-product closed form of the specialized character: sign, a power of q
 * driven by the Durfee size, prod over boxes of (1 - q^{k(h - eps g)})/(1 - q^{kh})
 * and, except in type D, a diagonal correction. For the quotient-decorated
 * families boxes whose hook is a multiple of g keep only their diagonal
 * correction. With
 * `q_value` set the same expression is evaluated at that rational q.
 * Throws NotInFamily; type A has no such form (ParameterOutOfRange).
 */
Poly char_hook_form(const Partition& lambda, const FamilyTag& tag, std::optional<Rational> q_value = std::nullopt);

/**
 * A form of the type-D specialization that does hold: at x_i = q^{2i-2}
 * the even orthogonal character divided by 2/(1 + [mu_t = 0]) equals
 * (-1)^{|H_{<g,+}|} q^{-|mu|} prod' (1 - q^{2h - 2 eps g})/(1 - q^{2h})
 * * prod_{i != i1} (1 - q^{2 r_i}) / prod_{i<t} (1 - q^{2i}), with the
 * box product as in char_hook_form and i1 the slot of residue g/2 - 1.
 */
Poly type_d_hook_form_corrected(const Partition& lambda, const FamilyTag& tag);
/** The left side of the above: the halved character at x_i = q^{2i-2}. */
Poly type_d_character_principal(const Partition& mu, int t);

} // namespace maclab
