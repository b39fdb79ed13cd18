#pragma once

#include "maclab/littlewood.hpp"
#include "maclab/poly.hpp"

#include <vector>

namespace maclab {

/**
 * V_{g,t}-coding of a partition: for each residue i mod g the value
 * beta_i = max{(k+1)g + i : c_{kg+i} = 0}; the residues sorted by decreasing
 * beta give the full sorting map, whose first t entries are sigma and whose
 * first t beta values are v.
 */
struct VCoding {
    int g = 0;
    int t = 0;
    std::vector<long> beta;   ///< indexed by residue 0..g-1
    std::vector<int> order;   ///< all g residues sorted by decreasing beta
    std::vector<long> v;      ///< v_1 > ... > v_t
    std::vector<int> sigma;   ///< sigma(i) = v_i mod g, i = 1..t (stored 0-based)
    int parity = 0;           ///< Z/2 parity of the sorting map (signed for symmetric families)
};

/** Coding without any family check. */
VCoding vcoding(const Partition& p, int g, int t);
/**
 * Coding of a family member; throws NotInFamily. For the symmetric families
 * the parity is the signed one, see signed_sorting_parity.
 */
VCoding vcoding(const Partition& p, const FamilyTag& tag);

/**
 * Parity of the sorting map: #{i < j <= t : sigma(i) < sigma(j)} mod 2, the
 * number of increasing pairs among the t largest residues.
 */
int sorting_parity(const std::vector<int>& sigma);

/** Sum R with residue r reflected to R - r: g for DD, g-1 for SC, g-2 for the DD' families. */
int reflection_sum(Family f, int g);

/**
 * Parity of sigma read as a signed permutation, each residue r standing for
 * the signed value r - R/2: increasing pairs, plus pairs with
 * sigma(i) + sigma(j) < R, plus entries with 2 sigma(i) < R, all mod 2.
 */
int signed_sorting_parity(const std::vector<int>& sigma, int reflection);

/** Rebuild the family member from its v-values; throws InvalidFamilyVector. */
Partition vcoding_inverse(const std::vector<long>& v, const FamilyTag& tag);

/** The family-specific shift of v (exact, possibly half-integral). */
std::vector<Rational> r_vector(const VCoding& vc, const FamilyTag& tag);

/** Constant C with |lambda| = (sum r_i^2)/D - C for the tag (D = 2t for P, else g). */
Rational weight_identity_constant(const FamilyTag& tag);
/** Evaluate (sum r_i^2)/D - C; equals the weight for every family member. */
Rational weight_from_r(const std::vector<Rational>& r, const FamilyTag& tag);

} // namespace maclab
