#pragma once

#include "maclab/partitions.hpp"

#include <string>
#include <vector>

namespace maclab {

/** Partition families: all, self-conjugate, doubled distinct, its conjugates, and the two quotient-decorated sets. */
enum class Family { P, SC, DD, DDp, DDp1, DDp2 };

/** Root-system types indexing the identities. */
enum class RootType { A, C, B, BV, CV, BC, D };

/**
 * A family restricted to g-cores (g = 0: no restriction). `t` is the rank
 * of the attached root system; for DDp1/DDp2 the quotient decoration is
 * part of the family rather than a core condition.
 */
struct FamilyTag {
    Family family = Family::P;
    int g = 0;
    int t = 0;
    bool operator==(const FamilyTag&) const = default;
    std::string str() const;
};

const char* family_name(Family f);
const char* root_type_name(RootType r);
RootType parse_root_type(const std::string& s);
Family parse_family(const std::string& s);

/** The family and modulus attached to a root-system type of rank t. */
FamilyTag tag_for(RootType type, int t);
/** The root-system type whose table entry is `tag`; throws TagMismatch. */
RootType root_type_of(const FamilyTag& tag);

/** Littlewood decomposition: the t-core and the t-quotient (nu^(0), ..., nu^(t-1)). */
struct Decomposition {
    Partition core;
    std::vector<Partition> quotient;
    std::vector<long> charges;
};

Decomposition decompose(const Partition& p, int t);
/** Inverse of decompose; throws NotACore when `core` is not a t-core. */
Partition compose(const Partition& core, const std::vector<Partition>& quotient, int t);
bool is_core(const Partition& p, int t);

/** One named relation checked by family_structure. */
struct StructureCheck {
    std::string name;
    bool holds = false;
};

/**
 * The relations the Littlewood decomposition satisfies on a symmetric family
 * member: weight splitting and hook transfer for every partition, and for
 * each of SC, DD, DD' containing p the core membership, the conjugation
 * symmetry among quotient components and the family weight splitting.
 * Throws NotInFamily when p lies in none of the three families.
 */
struct StructureReport {
    Decomposition data;
    std::vector<Family> families;
    std::vector<StructureCheck> checks;
    bool pass() const;
};
StructureReport family_structure(const Partition& p, int t);

/** Charge vector (n_0, ..., n_{t-1}) of a t-core; throws NotACore. */
std::vector<long> phi(const Partition& core, int t);
/** Core with a given zero-sum charge vector; throws UnbalancedVector. */
Partition phi_inverse(const std::vector<long>& n);
/** Weight of the core with charge vector n, via the quadratic form. */
long core_weight(const std::vector<long>& n);

/**
 * Coordinates of a family member: the free core charges (the full vector
 * for P), plus m1 (rectangle quotient) and mt (square quotient) when the
 * family carries them.
 */
struct FamilyVector {
    FamilyTag tag;
    std::vector<long> core;
    long m1 = 0;
    long mt = 0;
    bool operator==(const FamilyVector&) const = default;
};

/** Residues whose charges are free coordinates for the family's cores. */
std::vector<int> free_residues(Family f, int g);
/** Residue paired with r by the family's core symmetry (-1 when r is fixed). */
int reflected_residue(Family f, int g, int r);
/** Expand the free charges to the full zero-sum charge vector. */
std::vector<long> expand_core_charges(Family f, int g, const std::vector<long>& free);

bool in_family(const Partition& p, const FamilyTag& tag);
FamilyVector to_family_vector(const Partition& p, const FamilyTag& tag);
Partition from_family_vector(const FamilyVector& v);
/** Weight from the closed quadratic form, without building the partition. */
long family_weight(const FamilyVector& v);

/** Members of weight <= max_weight, ordered by weight then lexicographically. */
std::vector<Partition> enumerate(const FamilyTag& tag, int max_weight);

/** The rectangle with m rows of length m - 1. */
Partition rectangle_quotient(long m1);
/** The m x m square. */
Partition square_quotient(long m);

} // namespace maclab
