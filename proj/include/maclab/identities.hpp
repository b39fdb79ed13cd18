#pragma once

#include "maclab/characters.hpp"
#include "maclab/littlewood.hpp"
#include "maclab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace maclab {

/** Every identity the verifiers know about. */
enum class IdentityId {
    MACDONALD_A,
    MACDONALD_B,
    MACDONALD_BV,
    MACDONALD_C,
    MACDONALD_CV,
    MACDONALD_BC,
    MACDONALD_D,
    QNO_A,
    QNO_C,
    QNO_B,
    QNO_BV,
    QNO_CV,
    QNO_BC,
    QNO_D,
    QTNO,
    NO_CLASSICAL,
    NO_B_a,
    NO_B_b,
    NO_B_c,
    NO_BV_a,
    NO_BV_b,
    NO_C,
    NO_CV_a,
    NO_CV_b,
    NO_BC_a,
    NO_BC_b,
    NO_BC_c,
    NO_BC_d,
    NO_D,
};

enum class IdentityKind { Macdonald, QNO, QTNO, NO };

/** Static description of an identity: its family, root type and expansion variable. */
struct IdentityInfo {
    IdentityId id;
    const char* name;
    IdentityKind kind;
    std::optional<RootType> type;  ///< the attached affine type (none for QTNO/NO_CLASSICAL)
    Family family;                 ///< family summed over (cores of it for Macdonald ids)
    bool half_weight;              ///< summand carries T^{|lambda|/2} rather than T^{|lambda|}
    Base base;                     ///< S = T^{1/2} when half-integral T powers occur
    VarSet vars;                   ///< coefficient variables besides the x's
    int min_t;                     ///< smallest admissible rank (Macdonald ids)
};

const IdentityInfo& identity_info(IdentityId id);
const std::vector<IdentityId>& all_identities();
const char* identity_name(IdentityId id);
/** Throws ParameterOutOfRange for an unknown name. */
IdentityId parse_identity(const std::string& name);

/** How the Macdonald verifier chooses x. */
enum class XMode { Symbolic, Specialized };
/** How the q-NO verifier treats u. */
enum class UMode { Symbolic, Samples };
/** How the NO verifier treats z. */
enum class ZMode { Poly, Samples };
/**
 * Which statement is checked: the printed one, or (for the few statements
 * that are false as printed) the repaired form documented with each verifier.
 */
enum class Form { Printed, Corrected };

/** Does `id` have a repaired form distinct from the printed one? */
bool has_corrected_form(IdentityId id);

/** Parameters of one verification run. */
struct VerifyParams {
    int t = 0;              ///< rank (Macdonald ids)
    int order = 0;          ///< N: compare coefficients of T^0..T^N
    XMode x_mode = XMode::Specialized;
    UMode u_mode = UMode::Symbolic;
    ZMode z_mode = ZMode::Poly;
    Form form = Form::Printed;
    std::vector<Rational> samples;  ///< u- or z-samples; empty selects the defaults
    int degree_cap = -1;    ///< q-adic (QNO) or (q,t)-degree (QTNO) cap; < 0 selects the default
    bool mutate = false;    ///< flip the exponent of one product-side factor (self test)
    int workers = 0;        ///< sum-side threads; 0 reads MACLAB_WORKERS (default 1)
};

/** One compared coefficient. */
struct CoefficientCheck {
    std::string sample;  ///< sample label ("" when not sampling)
    int power = 0;       ///< exponent of the base variable
    bool match = true;
};

struct Mismatch {
    std::string sample;
    int power = 0;
    std::string base;  ///< "T" or "S"
    std::string lhs;
    std::string rhs;
};

/** Outcome of a verification: pass iff every compared coefficient matches. */
struct VerifyReport {
    IdentityId id = IdentityId::QNO_A;
    VerifyParams params;
    std::string mode;      ///< human-readable mode summary
    std::string ring;      ///< coefficient ring description
    std::vector<CoefficientCheck> checks;
    std::optional<Mismatch> first_mismatch;
    bool pass = false;
    double seconds = 0;
};

/** The worker count used when a parameter asks for the default. */
int default_workers();

/**
 * Truncated product prod (1 - a X^m)^e over a finite list of factors. The
 * product sides of all identities are assembled from such lists, which is
 * what the mutation self test perturbs.
 */
struct ProductFactor {
    Poly a;
    int m = 1;
    long e = 1;
};
Series expand_factors(const std::vector<ProductFactor>& factors, const CoeffRing& ring, Base base, int order);

// ---------------------------------------------------------------- Macdonald

/**
 * Sum side of a rewritten Macdonald identity: sign * T^{weight or weight/2}
 * * character over the g-cores of the type's family (type A: all t-cores,
 * with the extra (x_1...x_t)^{-l(omega)}). Type C-dual is expanded in S.
 */
Series macdonald_sum_side(IdentityId id, int t, int order, const XSpec& xs, Form form = Form::Printed, int workers = 0);
/**
 * Product side assembled from Pochhammer symbols and K_T. The corrected form
 * drops the prod_{i<j} x_i^{-1} in front of K_T (and the 1/2 of type D), uses
 * (T^2;T^2)(T;T)^{t-1} for type B-dual, and pairs with the corrected signs of
 * the sum side: (-1)^{d + |H+| + |H+ on the diagonal|} for types B and D,
 * (-1)^{|H+|} for type B-dual.
 */
Series macdonald_product_side(IdentityId id, int t, int order, const XSpec& xs, Form form = Form::Printed, bool mutate = false);
/** The x-points used in specialized mode. */
XSpec macdonald_points(IdentityId id, int t);
VerifyReport verify_macdonald(IdentityId id, const VerifyParams& p);

/**
 * Bounded-lattice sum of the raw alternant form (types A and C) divided by
 * the Weyl denominator, at the specialized points. The box |m_i| <= M is
 * chosen so that every omitted lattice point has T-degree > order.
 */
Series raw_lattice_side(RootType type, int t, int order, const XSpec& xs);
/** Smallest box radius M whose complement only contributes beyond `order`. */
int raw_lattice_radius(RootType type, int t, int order);
/** Compare the raw lattice sum against the rewritten sum side. */
VerifyReport verify_raw_form(RootType type, int t, int order);

// ---------------------------------------------------------------- q-NO

/**
 * Sum side of a q-Nekrasov-Okounkov identity over the whole family, in the
 * ring Q[u^{+-1}][q] modulo q^{cap+1}: each summand is a rational function
 * of q whose denominator is a unit q-adically.
 *
 * Corrected forms (each agrees with the corrected Macdonald product at the
 * type's u = q^k):
 *  - C: product (1 - u q^{r-1} T^m)/(1 - u^{-1} q^r T^m)
 *       (1 - u^{-2} q^{r+1} T^m)^c (1 - u^2 q^r T^m)^c / ((1 - q^r T^m)^c (1 - q^{r+1} T^m)^c);
 *  - B: summand prefactor (-u)^{-d}; B-dual: u^{-d};
 *  - C-dual: denominator (1 - q^{2r} T^m)^c (1 - q^{2r+2} T^m)^c;
 *  - BC: (1 - u q^{2r-2} T^m) in the denominator, the extra factor
 *        (1 - u^2 q^{4r-4} T^{2m})/(1 - u^{-2} q^{4r} T^{2m}) and the C-dual denominator;
 *  - D: the sum runs over DD with box factor (1 - u^{2 eps} q^{2h}) and the
 *       denominator is (1 - q^{2r} T^m)^c (1 - q^{2r+2} T^m)^c;
 * where c = r - floor(r/2).
 */
Series qno_sum_side(IdentityId id, int order, const CoeffRing& ring, Form form = Form::Printed, int workers = 0);
/** The product side as a factor list, truncated at T-order and q-cap. */
std::vector<ProductFactor> qno_product_factors(IdentityId id, int order, const CoeffRing& ring, Form form = Form::Printed);
Series qno_product_side(IdentityId id, int order, const CoeffRing& ring, Form form = Form::Printed, bool mutate = false);
/** Ring for symbolic u with q truncated at degree `cap`. */
CoeffRing qno_ring(int cap);
VerifyReport verify_qno(IdentityId id, const VerifyParams& p);

/**
 * The q-NO sum side at u = q^k, computed without truncation: each summand
 * is reduced to a Laurent polynomial by exact division, and summands
 * with a vanishing numerator are dropped.
 */
Series qno_sum_side_at_power(IdentityId id, int order, int k, Form form = Form::Printed);
/**
 * Substitution coherence: the q-NO sum side at the type's u = q^k against
 * the Macdonald sum side (same form) at the matching specialized points.
 */
VerifyReport verify_qno_macdonald_coherence(IdentityId qno_id, int t, int order, Form form = Form::Printed);

// ---------------------------------------------------------------- (q,t)-NO

/** Ring Q[u^{+-1}][q,t] modulo total (q,t)-degree > cap. */
CoeffRing qtno_ring(int cap);
Series qtno_sum_side(int order, const CoeffRing& ring, int workers = 0);
Series qtno_product_side(int order, const CoeffRing& ring, bool mutate = false);
VerifyReport verify_qtno(const VerifyParams& p);
/** q = t specialization of the (q,t) sum side against the q-NO type-A product side. */
VerifyReport verify_qtno_diagonal(int order, int cap);

// ---------------------------------------------------------------- NO

/**
 * Sum side of a Nekrasov-Okounkov specialization. With `z` unset the
 * coefficients are polynomials in z; otherwise z is the given rational.
 */
Series no_sum_side(IdentityId id, int order, std::optional<Rational> z, Form form = Form::Printed, int workers = 0);
/** The eta-quotient product side, with symbolic or numeric z. */
Series no_product_side(IdentityId id, int order, std::optional<Rational> z, Form form = Form::Printed, bool mutate = false);
/** Default z samples: 0, 1, -1, 2, -2, 1/2, 5/2. */
std::vector<Rational> default_z_samples();
VerifyReport verify_no(IdentityId id, const VerifyParams& p);

/** Dispatch on the identity kind. */
VerifyReport verify(IdentityId id, const VerifyParams& p);

} // namespace maclab
