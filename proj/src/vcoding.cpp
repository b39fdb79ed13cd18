#include "maclab/vcoding.hpp"

#include "maclab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace maclab {

namespace {

long mod_floor(long a, long g) { return ((a % g) + g) % g; }

/** Shift s with r_i = v_i - s. */
Rational r_shift(const FamilyTag& tag)
{
    Rational half_g(tag.g, 2);
    half_g.canonicalize();
    switch (tag.family) {
    case Family::P: return 0;
    case Family::DD: return half_g;
    case Family::SC: return half_g - Rational(1, 2);
    case Family::DDp:
    case Family::DDp1:
    case Family::DDp2: return half_g - 1;
    }
    return 0;
}

long weight_denominator(const FamilyTag& tag) { return tag.family == Family::P ? 2L * tag.t : tag.g; }

} // namespace

VCoding vcoding(const Partition& p, int g, int t)
{
    if (g < 1 || t < 1 || t > g) throw Error(ErrorKind::ParameterOutOfRange, "need 1 <= t <= g");
    BoundaryWord w = encode_word(p);
    VCoding vc;
    vc.g = g;
    vc.t = t;
    vc.beta.assign(g, 0);
    for (int i = 0; i < g; ++i) {
        // Last zero of residue i: inside the window if any, else just before it.
        long last = w.offset() - 1 - mod_floor(w.offset() - 1 - i, g);
        for (long k = w.end() - 1; k >= w.offset(); --k) {
            if (mod_floor(k, g) == i && w.at(k) == 0) {
                last = k;
                break;
            }
        }
        vc.beta[i] = last + g;
    }
    vc.order.resize(g);
    std::iota(vc.order.begin(), vc.order.end(), 0);
    std::sort(vc.order.begin(), vc.order.end(), [&](int a, int b) { return vc.beta[a] > vc.beta[b]; });
    for (int i = 0; i < t; ++i) {
        vc.sigma.push_back(vc.order[i]);
        vc.v.push_back(vc.beta[vc.order[i]]);
    }
    vc.parity = sorting_parity(vc.sigma);
    return vc;
}

VCoding vcoding(const Partition& p, const FamilyTag& tag)
{
    if (!in_family(p, tag)) throw Error(ErrorKind::NotInFamily, p.str() + " not in " + tag.str());
    VCoding vc = vcoding(p, tag.g, tag.t);
    if (tag.family != Family::P) vc.parity = signed_sorting_parity(vc.sigma, reflection_sum(tag.family, tag.g));
    return vc;
}

int reflection_sum(Family f, int g)
{
    switch (f) {
    case Family::DD: return g;
    case Family::SC: return g - 1;
    case Family::DDp:
    case Family::DDp1:
    case Family::DDp2: return g - 2;
    case Family::P: break;
    }
    throw Error(ErrorKind::TagMismatch, "the unrestricted family has no residue reflection");
}

int signed_sorting_parity(const std::vector<int>& sigma, int reflection)
{
    int count = sorting_parity(sigma);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (sigma[i] + sigma[j] < reflection) ++count;
        }
        if (2 * sigma[i] < reflection) ++count;
    }
    return count % 2;
}

int sorting_parity(const std::vector<int>& sigma)
{
    int count = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma.size(); ++j) {
            if (sigma[i] < sigma[j]) ++count;
        }
    }
    return count % 2;
}

Partition vcoding_inverse(const std::vector<long>& v, const FamilyTag& tag)
{
    long g = tag.g;
    if (static_cast<int>(v.size()) != tag.t) throw Error(ErrorKind::InvalidFamilyVector, "v must have t entries");
    FamilyVector fv;
    fv.tag = tag;
    fv.m1 = 1;
    std::vector<long> charge(g, 0);
    std::vector<bool> seen(g, false);
    for (long x : v) {
        long r = mod_floor(x, g);
        if (seen[r]) throw Error(ErrorKind::InvalidFamilyVector, "repeated residue in v");
        seen[r] = true;
        charge[r] = (x - r) / g;
    }
    auto take = [&](long r) {
        if (!seen[r]) throw Error(ErrorKind::InvalidFamilyVector, "v misses residue " + std::to_string(r));
        seen[r] = false;
        return charge[r];
    };
    if (tag.family == Family::P) {
        for (long r = 0; r < g; ++r) fv.core.push_back(take(r));
        return from_family_vector(fv);
    }
    if (tag.family == Family::DDp1 || tag.family == Family::DDp2) fv.m1 = take(g - 1) + 1;
    if (tag.family == Family::DDp2) fv.mt = take(g / 2 - 1);
    for (int r : free_residues(tag.family, tag.g)) {
        // Exactly one residue of each reflected pair appears among the t largest.
        int partner_res = reflected_residue(tag.family, tag.g, r);
        if (seen[r]) {
            fv.core.push_back(take(r));
        } else if (partner_res >= 0 && seen[partner_res]) {
            fv.core.push_back(-take(partner_res));
        } else {
            throw Error(ErrorKind::InvalidFamilyVector, "v misses the pair of residue " + std::to_string(r));
        }
    }
    for (long r = 0; r < g; ++r) {
        if (seen[r]) throw Error(ErrorKind::InvalidFamilyVector, "unexpected residue " + std::to_string(r) + " in v");
    }
    Partition p = from_family_vector(fv);
    if (vcoding(p, tag).v != v) throw Error(ErrorKind::InvalidFamilyVector, "v is not a valid coding");
    return p;
}

std::vector<Rational> r_vector(const VCoding& vc, const FamilyTag& tag)
{
    if (vc.g != tag.g || vc.t != tag.t) throw Error(ErrorKind::TagMismatch, "coding (g,t) differs from " + tag.str());
    Rational s = r_shift(tag);
    std::vector<Rational> r;
    for (long x : vc.v) r.push_back(Rational(x) - s);
    return r;
}

Rational weight_identity_constant(const FamilyTag& tag)
{
    // The empty partition has v_i = g - i for every family.
    Rational s = r_shift(tag);
    Rational c = 0;
    for (int i = 1; i <= tag.t; ++i) {
        Rational r = Rational(tag.g - i) - s;
        c += r * r;
    }
    return c / weight_denominator(tag);
}

Rational weight_from_r(const std::vector<Rational>& r, const FamilyTag& tag)
{
    Rational sum = 0;
    for (const auto& x : r) sum += x * x;
    return sum / weight_denominator(tag) - weight_identity_constant(tag);
}

} // namespace maclab
