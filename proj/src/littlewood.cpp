#include "maclab/littlewood.hpp"

#include "maclab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace maclab {

namespace {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void require_modulus(int t)
{
    if (t < 1) throw Error(ErrorKind::ParameterOutOfRange, "modulus must be >= 1, got " + std::to_string(t));
}

/** Sub-word of residue k: letters c_{t*i + k}. */
BoundaryWord subword(const BoundaryWord& w, int t, int k)
{
    long lo = floor_div(w.offset() - k, t) - 1;
    long hi = floor_div(w.end() - 1 - k, t) + 1;
    std::vector<uint8_t> letters;
    for (long i = lo; i <= hi; ++i) letters.push_back(static_cast<uint8_t>(w.at(t * i + k)));
    return BoundaryWord(lo, std::move(letters));
}

/** Interleave t sub-words back into one word. */
BoundaryWord interleave(const std::vector<BoundaryWord>& parts)
{
    long t = static_cast<long>(parts.size());
    long lo = 0, hi = 0;
    for (long k = 0; k < t; ++k) {
        const auto& p = parts[k];
        long a = t * (p.offset() - 1) + k, b = t * p.end() + k;
        if (k == 0 || a < lo) lo = a;
        if (k == 0 || b > hi) hi = b;
    }
    std::vector<uint8_t> letters;
    for (long idx = lo; idx <= hi; ++idx) {
        long k = ((idx % t) + t) % t;
        letters.push_back(static_cast<uint8_t>(parts[k].at((idx - k) / t)));
    }
    return BoundaryWord(lo, std::move(letters));
}

/** Word with c_{t*i + k} = [i >= n_k]. */
BoundaryWord core_word(const std::vector<long>& n)
{
    std::vector<BoundaryWord> parts;
    for (long nk : n) parts.push_back(BoundaryWord(nk, {}));
    return interleave(parts);
}

/** Partner residue under the family's reflection, or -1 for a fixed residue. */
int partner(Family f, int g, int r)
{
    switch (f) {
    case Family::DD:
        return r == 0 || 2 * r == g ? -1 : g - r;
    case Family::SC:
        return 2 * r == g - 1 ? -1 : g - 1 - r;
    case Family::DDp:
    case Family::DDp1:
    case Family::DDp2:
        return r == g - 1 || 2 * r == g - 2 ? -1 : g - 2 - r;
    case Family::P:
        return r;
    }
    return -1;
}

Family core_family(Family f)
{
    return (f == Family::DDp1 || f == Family::DDp2) ? Family::DDp : f;
}

bool family_shape(const Partition& p, Family f)
{
    switch (f) {
    case Family::P: return true;
    case Family::SC: return is_self_conjugate(p);
    case Family::DD: return is_doubled_distinct(p);
    case Family::DDp:
    case Family::DDp1:
    case Family::DDp2: return is_doubled_distinct_conjugate(p);
    }
    return false;
}

/** Linear coefficient c_r of the separable weight g*n_r^2 + c_r*n_r. */
long linear_coefficient(Family f, int g, int r)
{
    switch (core_family(f)) {
    case Family::DD: return 2L * r - g;
    case Family::SC: return 2L * r - g + 1;
    default: return 2L * r - g + 2;
    }
}

int square_residue(const FamilyTag& tag) { return tag.g / 2 - 1; }

} // namespace

std::string FamilyTag::str() const
{
    return std::string(family_name(family)) + "_" + std::to_string(g) + (t ? "(t=" + std::to_string(t) + ")" : "");
}

const char* family_name(Family f)
{
    switch (f) {
    case Family::P: return "P";
    case Family::SC: return "SC";
    case Family::DD: return "DD";
    case Family::DDp: return "DDp";
    case Family::DDp1: return "DDp1";
    case Family::DDp2: return "DDp2";
    }
    return "?";
}

const char* root_type_name(RootType r)
{
    switch (r) {
    case RootType::A: return "A";
    case RootType::C: return "C";
    case RootType::B: return "B";
    case RootType::BV: return "BV";
    case RootType::CV: return "CV";
    case RootType::BC: return "BC";
    case RootType::D: return "D";
    }
    return "?";
}

RootType parse_root_type(const std::string& s)
{
    for (RootType r : {RootType::A, RootType::C, RootType::B, RootType::BV, RootType::CV, RootType::BC, RootType::D}) {
        if (s == root_type_name(r)) return r;
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown root type '" + s + "'");
}

Family parse_family(const std::string& s)
{
    for (Family f : {Family::P, Family::SC, Family::DD, Family::DDp, Family::DDp1, Family::DDp2}) {
        if (s == family_name(f)) return f;
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown family '" + s + "'");
}

FamilyTag tag_for(RootType type, int t)
{
    if (t < 1) throw Error(ErrorKind::ParameterOutOfRange, "rank t must be >= 1");
    switch (type) {
    case RootType::A: return {Family::P, t, t};
    case RootType::C: return {Family::DD, 2 * t + 2, t};
    case RootType::B: return {Family::DDp1, 2 * t - 1, t};
    case RootType::BV: return {Family::DDp1, 2 * t, t};
    case RootType::CV: return {Family::SC, 2 * t, t};
    case RootType::BC: return {Family::DD, 2 * t + 1, t};
    case RootType::D:
        if (t < 3) throw Error(ErrorKind::ParameterOutOfRange, "type D needs t >= 3");
        return {Family::DDp2, 2 * t - 2, t};
    }
    throw Error(ErrorKind::ParameterOutOfRange, "bad root type");
}

RootType root_type_of(const FamilyTag& tag)
{
    for (RootType r : {RootType::A, RootType::C, RootType::B, RootType::BV, RootType::CV, RootType::BC, RootType::D}) {
        if (tag.t < 1 || (r == RootType::D && tag.t < 3)) continue;
        if (tag_for(r, tag.t) == tag) return r;
    }
    throw Error(ErrorKind::TagMismatch, tag.str() + " is not attached to a root-system type");
}

Decomposition decompose(const Partition& p, int t)
{
    require_modulus(t);
    BoundaryWord w = encode_word(p);
    Decomposition d;
    for (int k = 0; k < t; ++k) {
        BoundaryWord sw = subword(w, t, k);
        long charge = -sw.imbalance();
        d.charges.push_back(charge);
        d.quotient.push_back(decode_word(sw.shifted(charge)));
    }
    d.core = decode_word(core_word(d.charges));
    return d;
}

bool is_core(const Partition& p, int t)
{
    require_modulus(t);
    for (const auto& hb : hook_boxes(p)) {
        if (hb.hook % t == 0) return false;
    }
    return true;
}

std::vector<long> phi(const Partition& core, int t)
{
    require_modulus(t);
    if (!is_core(core, t)) throw Error(ErrorKind::NotACore, core.str() + " is not a " + std::to_string(t) + "-core");
    return decompose(core, t).charges;
}

Partition phi_inverse(const std::vector<long>& n)
{
    if (n.empty()) throw Error(ErrorKind::UnbalancedVector, "empty charge vector");
    long s = std::accumulate(n.begin(), n.end(), 0L);
    if (s != 0) throw Error(ErrorKind::UnbalancedVector, "charges sum to " + std::to_string(s));
    return decode_word(core_word(n));
}

long core_weight(const std::vector<long>& n)
{
    long g = static_cast<long>(n.size());
    long sq = 0, lin = 0;
    for (long i = 0; i < g; ++i) {
        sq += n[i] * n[i];
        lin += i * n[i];
    }
    long twice = g * sq + 2 * lin;
    if (twice % 2 != 0) throw Error(ErrorKind::UnbalancedVector, "charges do not sum to zero");
    return twice / 2;
}

Partition compose(const Partition& core, const std::vector<Partition>& quotient, int t)
{
    require_modulus(t);
    if (static_cast<int>(quotient.size()) != t) {
        throw Error(ErrorKind::ParameterOutOfRange, "quotient must have exactly t components");
    }
    std::vector<long> n = phi(core, t);
    std::vector<BoundaryWord> parts;
    for (int k = 0; k < t; ++k) parts.push_back(encode_word(quotient[k]).shifted(-n[k]));
    return decode_word(interleave(parts));
}

bool StructureReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const StructureCheck& c) { return c.holds; });
}

StructureReport family_structure(const Partition& p, int t)
{
    require_modulus(t);
    StructureReport rep;
    if (is_self_conjugate(p)) rep.families.push_back(Family::SC);
    if (is_doubled_distinct(p)) rep.families.push_back(Family::DD);
    if (is_doubled_distinct_conjugate(p)) rep.families.push_back(Family::DDp);
    if (rep.families.empty()) throw Error(ErrorKind::NotInFamily, p.str() + " is not in SC, DD or DD'");

    rep.data = decompose(p, t);
    const Partition& core = rep.data.core;
    const auto& nu = rep.data.quotient;
    auto check = [&](std::string name, bool holds) { rep.checks.push_back({std::move(name), holds}); };
    auto size = [&](int i) { return static_cast<long>(nu[i].weight()); };
    auto conj_pair = [&](int i, int j) { return nu[i] == nu[j].conjugate(); };

    long total = core.weight();
    std::vector<int> scaled;
    for (int i = 0; i < t; ++i) {
        total += t * size(i);
        for (int h : hook_multiset(nu[i])) scaled.push_back(t * h);
    }
    std::sort(scaled.rbegin(), scaled.rend());
    check("P2", total == p.weight());
    check("P3", hooks_mod(p, t) == scaled);

    bool odd = t % 2 == 1;
    for (Family f : rep.families) {
        long w = core.weight();
        bool sym = true;
        if (f == Family::SC) {
            check("SC1", is_self_conjugate(core));
            for (int j = 0; j < t / 2; ++j) {
                sym = sym && conj_pair(j, t - 1 - j);
                w += 2L * t * size(j);
            }
            if (odd) {
                int mid = (t - 1) / 2;
                check("SC'2", is_self_conjugate(nu[mid]));
                w += t * size(mid);
            }
            check("SC2", sym);
            check("SC3", w == p.weight());
        } else if (f == Family::DD) {
            check("DD1", is_doubled_distinct(core));
            for (int j = 1; j <= t / 2; ++j) sym = sym && conj_pair(j, t - j);
            bool special = is_doubled_distinct(nu[0]) && (odd || is_self_conjugate(nu[t / 2]));
            for (int j = 1; j <= (odd ? (t - 1) / 2 : t / 2 - 1); ++j) w += 2L * t * size(j);
            w += t * size(0);
            if (!odd) w += t * size(t / 2);
            check("DD2", sym && special);
            check("DD3", w == p.weight());
        } else {
            check("DD'1", is_doubled_distinct_conjugate(core));
            for (int j = 0; j < t / 2; ++j) sym = sym && conj_pair(j, t - 2 - j);
            bool special = is_doubled_distinct_conjugate(nu[t - 1]) && (odd || is_self_conjugate(nu[t / 2 - 1]));
            for (int j = 0; j <= (odd ? (t - 3) / 2 : t / 2 - 2); ++j) w += 2L * t * size(j);
            w += t * size(t - 1);
            if (!odd) w += t * size(t / 2 - 1);
            check("DD'2", sym && special);
            check("DD'3", w == p.weight());
        }
    }
    return rep;
}

std::vector<int> free_residues(Family f, int g)
{
    std::vector<int> out;
    switch (core_family(f)) {
    case Family::P:
        for (int r = 0; r < g; ++r) out.push_back(r);
        break;
    case Family::DD:
        for (int r = 1; r <= (g - 1) / 2; ++r) out.push_back(r);
        break;
    case Family::SC:
        for (int r = 0; r < g / 2; ++r) out.push_back(r);
        break;
    default:
        for (int r = 0; r < (g - 1) / 2; ++r) out.push_back(r);
        break;
    }
    return out;
}

int reflected_residue(Family f, int g, int r)
{
    if (f == Family::P) return -1;
    return partner(core_family(f), g, r);
}

std::vector<long> expand_core_charges(Family f, int g, const std::vector<long>& free)
{
    Family cf = core_family(f);
    std::vector<int> res = free_residues(cf, g);
    if (free.size() != res.size()) {
        throw Error(ErrorKind::InvalidFamilyVector,
            "expected " + std::to_string(res.size()) + " core coordinates, got " + std::to_string(free.size()));
    }
    if (cf == Family::P) {
        if (std::accumulate(free.begin(), free.end(), 0L) != 0) {
            throw Error(ErrorKind::UnbalancedVector, "charges must sum to zero");
        }
        return free;
    }
    std::vector<long> n(g, 0);
    for (std::size_t i = 0; i < res.size(); ++i) {
        n[res[i]] = free[i];
        n[partner(cf, g, res[i])] = -free[i];
    }
    return n;
}

Partition rectangle_quotient(long m1)
{
    if (m1 < 1) throw Error(ErrorKind::InvalidFamilyVector, "m1 must be >= 1");
    return Partition(std::vector<int>(m1 - 1 > 0 ? m1 : 0, static_cast<int>(m1 - 1)));
}

Partition square_quotient(long m)
{
    if (m < 0) throw Error(ErrorKind::InvalidFamilyVector, "m_t must be >= 0");
    return Partition(std::vector<int>(m, static_cast<int>(m)));
}

bool in_family(const Partition& p, const FamilyTag& tag)
{
    if (!family_shape(p, tag.family)) return false;
    if (tag.g == 0) return tag.family != Family::DDp1 && tag.family != Family::DDp2;
    if (tag.family != Family::DDp1 && tag.family != Family::DDp2) return is_core(p, tag.g);
    if (tag.family == Family::DDp2 && tag.g % 2 != 0) return false;
    Decomposition d = decompose(p, tag.g);
    if (!is_doubled_distinct_conjugate(d.core)) return false;
    for (int k = 0; k < tag.g; ++k) {
        const Partition& nu = d.quotient[k];
        if (k == tag.g - 1) {
            if (!(nu == rectangle_quotient(std::max<long>(1, nu.length())))) return false;
        } else if (tag.family == Family::DDp2 && k == square_residue(tag)) {
            if (!(nu == square_quotient(nu.length()))) return false;
        } else if (!nu.empty()) {
            return false;
        }
    }
    return true;
}

FamilyVector to_family_vector(const Partition& p, const FamilyTag& tag)
{
    if (tag.g < 1) throw Error(ErrorKind::ParameterOutOfRange, "family vectors need a modulus g >= 1");
    if (!in_family(p, tag)) throw Error(ErrorKind::NotInFamily, p.str() + " not in " + tag.str());
    Decomposition d = decompose(p, tag.g);
    FamilyVector v;
    v.tag = tag;
    for (int r : free_residues(tag.family, tag.g)) v.core.push_back(d.charges[r]);
    if (tag.family == Family::DDp1 || tag.family == Family::DDp2) {
        v.m1 = std::max(1, d.quotient[tag.g - 1].length());
    }
    if (tag.family == Family::DDp2) v.mt = d.quotient[square_residue(tag)].length();
    return v;
}

Partition from_family_vector(const FamilyVector& v)
{
    const FamilyTag& tag = v.tag;
    if (tag.g < 1) throw Error(ErrorKind::ParameterOutOfRange, "family vectors need a modulus g >= 1");
    std::vector<long> n = expand_core_charges(tag.family, tag.g, v.core);
    Partition core = phi_inverse(n);
    if (tag.family != Family::DDp1 && tag.family != Family::DDp2) return core;
    if (tag.family == Family::DDp2 && tag.g % 2 != 0) {
        throw Error(ErrorKind::InvalidFamilyVector, "DDp2 needs an even modulus");
    }
    std::vector<Partition> quotient(tag.g);
    quotient[tag.g - 1] = rectangle_quotient(v.m1);
    if (tag.family == Family::DDp2) quotient[square_residue(tag)] = square_quotient(v.mt);
    return compose(core, quotient, tag.g);
}

long family_weight(const FamilyVector& v)
{
    const FamilyTag& tag = v.tag;
    long g = tag.g;
    long w = 0;
    if (tag.family == Family::P) {
        w = core_weight(expand_core_charges(Family::P, tag.g, v.core));
    } else {
        std::vector<int> res = free_residues(tag.family, tag.g);
        if (res.size() != v.core.size()) throw Error(ErrorKind::InvalidFamilyVector, "wrong number of core coordinates");
        for (std::size_t i = 0; i < res.size(); ++i) {
            long n = v.core[i];
            w += g * n * n + linear_coefficient(tag.family, tag.g, res[i]) * n;
        }
    }
    if (tag.family == Family::DDp1 || tag.family == Family::DDp2) {
        if (v.m1 < 1) throw Error(ErrorKind::InvalidFamilyVector, "m1 must be >= 1");
        w += g * v.m1 * (v.m1 - 1);
    }
    if (tag.family == Family::DDp2) {
        if (v.mt < 0) throw Error(ErrorKind::InvalidFamilyVector, "m_t must be >= 0");
        w += g * v.mt * v.mt;
    }
    return w;
}

namespace {

std::vector<Partition> enumerate_unrestricted(Family f, int max_weight)
{
    std::vector<Partition> out;
    if (f == Family::P) return all_partitions(max_weight);
    // SC: (b|b) with weight sum(2b+1); DD: (b+1|b) with weight sum(2b+2); DDp: (b|b+1).
    // Each part of s is the weight of one diagonal hook of the member.
    for (const auto& s : strict_partitions(max_weight, 1)) {
        std::vector<int> a, b;
        bool ok = true;
        for (int x : s) {
            if (f == Family::SC) {
                if (x % 2 == 0) { ok = false; break; }
                a.push_back((x - 1) / 2);
                b.push_back((x - 1) / 2);
            } else {
                if (x % 2 != 0) { ok = false; break; }
                int beta = x / 2 - 1;
                a.push_back(f == Family::DD ? beta + 1 : beta);
                b.push_back(f == Family::DD ? beta : beta + 1);
            }
        }
        if (ok) out.push_back(from_frobenius(a, b));
    }
    return out;
}

long min_quadratic(long g, long c)
{
    // min over integers of g n^2 + c n
    long best = 0;
    long n0 = floor_div(-c, 2 * g);
    for (long n = n0 - 1; n <= n0 + 2; ++n) best = std::min(best, g * n * n + c * n);
    return best;
}

} // namespace

std::vector<Partition> enumerate(const FamilyTag& tag, int max_weight)
{
    std::vector<Partition> out;
    if (max_weight < 0) return out;
    if (tag.g == 0) {
        if (tag.family == Family::DDp1 || tag.family == Family::DDp2) {
            throw Error(ErrorKind::ParameterOutOfRange, "decorated families need a modulus");
        }
        out = enumerate_unrestricted(tag.family, max_weight);
        std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
            return x.weight() != y.weight() ? x.weight() < y.weight() : x < y;
        });
        return out;
    }
    long g = tag.g;
    if (tag.family == Family::DDp2 && g % 2 != 0) throw Error(ErrorKind::ParameterOutOfRange, "DDp2 needs an even modulus");
    std::vector<FamilyVector> vecs;
    if (tag.family == Family::P) {
        // Every charge obeys (g n + i)^2 <= 2g (W + (g-1)(2g-1)/12).
        double bound = (std::sqrt(2.0 * g * (max_weight + (g - 1) * (2.0 * g - 1) / 12.0)) + g) / g;
        long b = static_cast<long>(std::ceil(bound));
        std::vector<long> n(g, 0);
        std::function<void(long)> rec = [&](long i) {
            if (i == g - 1) {
                long s = 0;
                for (long k = 0; k < g - 1; ++k) s += n[k];
                n[g - 1] = -s;
                if (std::labs(n[g - 1]) > b) return;
                FamilyVector v{tag, n, 0, 0};
                if (family_weight(v) <= max_weight) vecs.push_back(v);
                return;
            }
            for (long x = -b; x <= b; ++x) {
                n[i] = x;
                rec(i + 1);
            }
        };
        rec(0);
    } else {
        std::vector<int> res = free_residues(tag.family, tag.g);
        std::vector<long> mins;
        for (int r : res) mins.push_back(min_quadratic(g, linear_coefficient(tag.family, tag.g, r)));
        std::vector<long> suffix_min(res.size() + 1, 0);
        for (long i = static_cast<long>(res.size()) - 1; i >= 0; --i) suffix_min[i] = suffix_min[i + 1] + mins[i];
        std::vector<long> free(res.size(), 0);
        std::vector<std::pair<std::vector<long>, long>> cores;
        std::function<void(std::size_t, long)> rec = [&](std::size_t i, long acc) {
            if (i == res.size()) {
                cores.emplace_back(free, acc);
                return;
            }
            long c = linear_coefficient(tag.family, tag.g, res[i]);
            long budget = max_weight - acc - suffix_min[i + 1];
            for (long n = floor_div(-c, 2 * g);; --n) {
                long val = g * n * n + c * n;
                if (val > budget) break;
                free[i] = n;
                rec(i + 1, acc + val);
            }
            for (long n = floor_div(-c, 2 * g) + 1;; ++n) {
                long val = g * n * n + c * n;
                if (val > budget) break;
                free[i] = n;
                rec(i + 1, acc + val);
            }
        };
        rec(0, 0);
        for (auto& [core, w] : cores) {
            if (tag.family == Family::DDp1 || tag.family == Family::DDp2) {
                for (long m1 = 1; w + g * m1 * (m1 - 1) <= max_weight; ++m1) {
                    long w1 = w + g * m1 * (m1 - 1);
                    if (tag.family == Family::DDp1) {
                        vecs.push_back({tag, core, m1, 0});
                        continue;
                    }
                    for (long mt = 0; w1 + g * mt * mt <= max_weight; ++mt) vecs.push_back({tag, core, m1, mt});
                }
            } else {
                vecs.push_back({tag, core, 0, 0});
            }
        }
    }
    for (const auto& v : vecs) out.push_back(from_family_vector(v));
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        return x.weight() != y.weight() ? x.weight() < y.weight() : x < y;
    });
    return out;
}

} // namespace maclab
