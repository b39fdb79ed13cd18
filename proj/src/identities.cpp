#include "maclab/identities.hpp"

#include "maclab/errors.hpp"
#include "maclab/hookprods.hpp"
#include "maclab/vcoding.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <thread>

namespace maclab {

namespace {

constexpr VarSet kQ = var_bit(Var::q);
constexpr VarSet kU = var_bit(Var::u);
constexpr VarSet kT = var_bit(Var::t);
constexpr VarSet kZ = var_bit(Var::z);

const std::vector<IdentityInfo>& info_table()
{
    using I = IdentityId;
    using K = IdentityKind;
    using R = RootType;
    using F = Family;
    static const std::vector<IdentityInfo> table = {
        {I::MACDONALD_A, "MACDONALD_A", K::Macdonald, R::A, F::P, false, Base::T, 0, 2},
        {I::MACDONALD_B, "MACDONALD_B", K::Macdonald, R::B, F::DDp1, true, Base::T, 0, 3},
        {I::MACDONALD_BV, "MACDONALD_BV", K::Macdonald, R::BV, F::DDp1, true, Base::T, 0, 3},
        {I::MACDONALD_C, "MACDONALD_C", K::Macdonald, R::C, F::DD, true, Base::T, 0, 2},
        {I::MACDONALD_CV, "MACDONALD_CV", K::Macdonald, R::CV, F::SC, true, Base::S, 0, 2},
        {I::MACDONALD_BC, "MACDONALD_BC", K::Macdonald, R::BC, F::DD, true, Base::T, 0, 1},
        {I::MACDONALD_D, "MACDONALD_D", K::Macdonald, R::D, F::DDp2, true, Base::T, 0, 4},
        {I::QNO_A, "QNO_A", K::QNO, R::A, F::P, false, Base::T, kQ | kU, 0},
        {I::QNO_C, "QNO_C", K::QNO, R::C, F::DD, true, Base::T, kQ | kU, 0},
        {I::QNO_B, "QNO_B", K::QNO, R::B, F::DDp, true, Base::T, kQ | kU, 0},
        {I::QNO_BV, "QNO_BV", K::QNO, R::BV, F::DDp, true, Base::T, kQ | kU, 0},
        {I::QNO_CV, "QNO_CV", K::QNO, R::CV, F::SC, true, Base::S, kQ | kU, 0},
        {I::QNO_BC, "QNO_BC", K::QNO, R::BC, F::DD, true, Base::T, kQ | kU, 0},
        {I::QNO_D, "QNO_D", K::QNO, R::D, F::DDp, true, Base::T, kQ | kU, 0},
        {I::QTNO, "QTNO", K::QTNO, std::nullopt, F::P, false, Base::T, kQ | kT | kU, 0},
        {I::NO_CLASSICAL, "NO_CLASSICAL", K::NO, std::nullopt, F::P, false, Base::T, kZ, 0},
        {I::NO_B_a, "NO_B_a", K::NO, R::B, F::DD, true, Base::T, kZ, 0},
        {I::NO_B_b, "NO_B_b", K::NO, R::B, F::DDp, true, Base::T, kZ, 0},
        {I::NO_B_c, "NO_B_c", K::NO, R::B, F::SC, true, Base::S, kZ, 0},
        {I::NO_BV_a, "NO_BV_a", K::NO, R::BV, F::DDp, true, Base::T, kZ, 0},
        {I::NO_BV_b, "NO_BV_b", K::NO, R::BV, F::DDp, true, Base::T, kZ, 0},
        {I::NO_C, "NO_C", K::NO, R::C, F::DD, true, Base::T, kZ, 0},
        {I::NO_CV_a, "NO_CV_a", K::NO, R::CV, F::SC, false, Base::T, kZ, 0},
        {I::NO_CV_b, "NO_CV_b", K::NO, R::CV, F::SC, false, Base::T, kZ, 0},
        {I::NO_BC_a, "NO_BC_a", K::NO, R::BC, F::DD, true, Base::T, kZ, 0},
        {I::NO_BC_b, "NO_BC_b", K::NO, R::BC, F::SC, true, Base::S, kZ, 0},
        {I::NO_BC_c, "NO_BC_c", K::NO, R::BC, F::DD, true, Base::T, kZ, 0},
        {I::NO_BC_d, "NO_BC_d", K::NO, R::BC, F::SC, true, Base::S, kZ, 0},
        {I::NO_D, "NO_D", K::NO, R::D, F::DDp, true, Base::T, kZ, 0},
    };
    return table;
}

double elapsed(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/** Exponent of the base variable X carried by T^k. */
int t_power(Base base, int k) { return base == Base::S ? 2 * k : k; }

/** Series order in the base variable for a T-order N. */
int base_order(Base base, int order) { return base == Base::S ? 2 * order : order; }

/** Exponent of X for a summand of weight w. */
int weight_power(const IdentityInfo& info, int w)
{
    if (info.base == Base::S) return info.half_weight ? w : 2 * w;
    if (info.half_weight) {
        if (w % 2 != 0) throw Error(ErrorKind::ParameterOutOfRange, "odd weight in a T^{|lambda|/2} sum expanded in T");
        return w / 2;
    }
    return w;
}

/** Largest weight that can reach X^order. */
int weight_bound(const IdentityInfo& info, int order) { return info.half_weight ? 2 * order : order; }

/**
 * Sum `term(p, acc)` over the members on a pool of threads. Each worker owns
 * a contiguous block and a private accumulator; the blocks are merged in
 * order. Exact arithmetic makes the result independent of the split.
 */
Series parallel_sum(const std::vector<Partition>& members, const Series& zero, int workers,
                    const std::function<void(const Partition&, Series&)>& term)
{
    int w = workers > 0 ? workers : default_workers();
    w = std::max(1, std::min<int>(w, static_cast<int>(members.size())));
    std::vector<Series> partial(w, zero);
    std::vector<std::exception_ptr> errors(w);
    auto run = [&](int k) {
        try {
            std::size_t lo = members.size() * k / w;
            std::size_t hi = members.size() * (k + 1) / w;
            for (std::size_t i = lo; i < hi; ++i) term(members[i], partial[k]);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    if (w == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < w; ++k) pool.emplace_back(run, k);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    Series total = zero;
    for (const auto& s : partial) total += s;
    return total;
}

/** Record the comparison of two series into a report. */
void record(VerifyReport& r, const Series& lhs, const Series& rhs, const std::string& sample)
{
    const char* base = lhs.base() == Base::S ? "S" : "T";
    int n = std::min(lhs.order(), rhs.order());
    for (int k = 0; k <= n; ++k) {
        bool ok = lhs.coeff(k) == rhs.coeff(k);
        r.checks.push_back({sample, k, ok});
        if (!ok && !r.first_mismatch) r.first_mismatch = Mismatch{sample, k, base, lhs.coeff(k).str(), rhs.coeff(k).str()};
    }
}

void finish(VerifyReport& r, std::chrono::steady_clock::time_point start)
{
    r.pass = !r.first_mismatch && !r.checks.empty();
    r.seconds = elapsed(start);
}

long floor_half(long r) { return r >= 0 ? r / 2 : -((-r + 1) / 2); }
/** r - floor(r/2), the multiplicity pattern of the q-NO product sides. */
long ceil_half(long r) { return r - floor_half(r); }

Poly qu(int qe, int ue, const Rational& c = 1)
{
    Mono m = unit_mono();
    m[static_cast<int>(Var::q)] = qe;
    m[static_cast<int>(Var::u)] = ue;
    return Poly::monomial(m, c);
}

Poly poly_product(const Poly& a, const Poly& b, const CoeffRing& ring)
{
    return Poly::multiply(a, b, ring.capped, ring.has_cap() ? ring.cap : -1);
}

} // namespace

// ------------------------------------------------------------------ metadata

const IdentityInfo& identity_info(IdentityId id)
{
    for (const auto& i : info_table()) {
        if (i.id == id) return i;
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown identity");
}

const std::vector<IdentityId>& all_identities()
{
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& i : info_table()) v.push_back(i.id);
        return v;
    }();
    return ids;
}

const char* identity_name(IdentityId id) { return identity_info(id).name; }

IdentityId parse_identity(const std::string& name)
{
    for (const auto& i : info_table()) {
        if (name == i.name) return i.id;
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown identity " + name);
}

bool has_corrected_form(IdentityId id)
{
    switch (id) {
    case IdentityId::MACDONALD_B:
    case IdentityId::MACDONALD_BV:
    case IdentityId::MACDONALD_C:
    case IdentityId::MACDONALD_CV:
    case IdentityId::MACDONALD_BC:
    case IdentityId::MACDONALD_D:
    case IdentityId::QNO_C:
    case IdentityId::QNO_B:
    case IdentityId::QNO_BV:
    case IdentityId::QNO_CV:
    case IdentityId::QNO_BC:
    case IdentityId::QNO_D:
    case IdentityId::NO_B_c:
    case IdentityId::NO_BV_a:
    case IdentityId::NO_D: return true;
    default: return false;
    }
}

int default_workers()
{
    if (const char* env = std::getenv("MACLAB_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

Series expand_factors(const std::vector<ProductFactor>& factors, const CoeffRing& ring, Base base, int order)
{
    // Group by T-power so that each (1 - a X^m)^e is expanded only to X^order.
    Series s = Series::one(ring, base, order);
    for (const auto& f : factors) {
        if (f.m > order || f.e == 0) continue;
        s *= one_minus_pow(ring, base, order, f.a, f.m, f.e);
    }
    return s;
}

// ------------------------------------------------------------------ Macdonald

namespace {

RootType macdonald_type(IdentityId id)
{
    const auto& info = identity_info(id);
    if (info.kind != IdentityKind::Macdonald) throw Error(ErrorKind::ParameterOutOfRange, std::string(info.name) + " is not a Macdonald identity");
    return *info.type;
}

void check_rank(IdentityId id, int t)
{
    const auto& info = identity_info(id);
    if (t < info.min_t) {
        throw Error(ErrorKind::ParameterOutOfRange, std::string(info.name) + " needs t >= " + std::to_string(info.min_t));
    }
}

CoeffRing x_ring(const XSpec& xs) { return CoeffRing{xs.is_symbolic() ? x_vars(xs.t()) : kQ, 0, -1}; }

/** Sign exponent of a summand: the statistic attached to each type. */
long macdonald_sign(RootType type, const Partition& p, const FamilyTag& tag, Form form)
{
    HookStats st = hook_stats(p, tag);
    if (form == Form::Corrected) {
        // The repaired signs of the types summed over DD'-decorated cores.
        switch (type) {
        case RootType::B:
        case RootType::D: return st.durfee + st.h_less_plus + st.h_less_plus_diag;
        case RootType::BV: return st.h_less_plus;
        default: break;
        }
    }
    switch (type) {
    case RootType::A: return st.h_less;
    case RootType::C:
    case RootType::BV:
    case RootType::D: return st.durfee + st.h_less_plus;
    case RootType::B:
    case RootType::BC: return st.h_less_plus + st.h_less_plus_diag;
    case RootType::CV: return st.h_less_plus + st.h_less_plus_diag + st.durfee;
    }
    return 0;
}

/** prod_{j >= first, step} (1 - a X^j) as factors. */
void push_pochhammer(std::vector<ProductFactor>& out, const Poly& a, int first, int step, int order, long e = 1)
{
    for (int j = first; j <= order; j += step) out.push_back({a, j, e});
}

} // namespace

XSpec macdonald_points(IdentityId id, int t) { return specialization_for(macdonald_type(id), t); }

Series macdonald_sum_side(IdentityId id, int t, int order, const XSpec& xs, Form form, int workers)
{
    RootType type = macdonald_type(id);
    check_rank(id, t);
    if (xs.t() != t) throw Error(ErrorKind::ParameterOutOfRange, "evaluation points do not match t");
    const auto& info = identity_info(id);
    FamilyTag tag = tag_for(type, t);
    CharKind kind = char_kind_for(type);
    int n = base_order(info.base, order);
    Series zero(x_ring(xs), info.base, n);
    std::vector<Partition> members = enumerate(tag, weight_bound(info, order));
    return parallel_sum(members, zero, workers, [&](const Partition& p, Series& acc) {
        VCoding vc = vcoding(p, tag);
        Poly c = char_eval(kind, character_index(vc, type), xs);
        if (type == RootType::A) {
            for (int i = 1; i <= t; ++i) c *= xs.x_pow(i, -p.length());
        }
        if (macdonald_sign(type, p, tag, form) % 2 != 0) c = -c;
        acc.add_to(weight_power(info, p.weight()), c);
    });
}

Series macdonald_product_side(IdentityId id, int t, int order, const XSpec& xs, Form form, bool mutate)
{
    RootType type = macdonald_type(id);
    check_rank(id, t);
    if (xs.t() != t) throw Error(ErrorKind::ParameterOutOfRange, "evaluation points do not match t");
    const auto& info = identity_info(id);
    Base base = info.base;
    int n = base_order(base, order);
    int T1 = t_power(base, 1);
    CoeffRing ring = x_ring(xs);
    std::vector<ProductFactor> f;
    Poly one(1);
    Poly prefactor(1);
    auto x = [&](int i, int e) { return xs.x_pow(i, e); };
    auto euler = [&](int power) { push_pochhammer(f, one, T1, T1, n, power); };
    if (type == RootType::A) {
        euler(t - 1);
        for (int i = 1; i <= t; ++i) {
            for (int j = i + 1; j <= t; ++j) {
                push_pochhammer(f, x(i, 1) * x(j, -1), T1, T1, n);
                push_pochhammer(f, x(i, -1) * x(j, 1), T1, T1, n);
            }
        }
    } else {
        // (T;T)^t, except C-dual: (T^{1/2};T^{1/2}) (T;T)^{t-1}.
        if (type == RootType::CV) {
            push_pochhammer(f, one, 1, 1, n);
            euler(t - 1);
        } else if (type == RootType::BV && form == Form::Corrected) {
            push_pochhammer(f, one, 2 * T1, 2 * T1, n);
            euler(t - 1);
        } else {
            euler(t);
        }
        // K_T: prod_{i<j} x_i^{-1} (T x_i^{+-} x_j^{+-}; T).
        for (int i = 1; i <= t; ++i) {
            for (int j = i + 1; j <= t; ++j) {
                if (form == Form::Printed) prefactor *= x(i, -1);
                for (int si : {1, -1}) {
                    for (int sj : {1, -1}) push_pochhammer(f, x(i, si) * x(j, sj), T1, T1, n);
                }
            }
        }
        for (int i = 1; i <= t; ++i) {
            for (int s : {1, -1}) {
                switch (type) {
                case RootType::C: push_pochhammer(f, x(i, 2 * s), T1, T1, n); break;
                case RootType::B: push_pochhammer(f, x(i, s), T1, T1, n); break;
                case RootType::BV: push_pochhammer(f, x(i, 2 * s), 2 * T1, 2 * T1, n); break;
                case RootType::CV: push_pochhammer(f, x(i, s), 1, 1, n); break;
                case RootType::BC:
                    push_pochhammer(f, x(i, s), T1, T1, n);
                    push_pochhammer(f, x(i, 2 * s), T1, 2 * T1, n);
                    break;
                default: break;
                }
            }
        }
    }
    if (mutate && !f.empty()) f.front().e = -f.front().e;
    Series s = expand_factors(f, ring, base, n);
    if (type == RootType::D && form == Form::Printed) prefactor = prefactor.scaled(Rational(1, 2));
    return prefactor == Poly(1) ? s : s.scaled(prefactor);
}

VerifyReport verify_macdonald(IdentityId id, const VerifyParams& p)
{
    auto start = std::chrono::steady_clock::now();
    macdonald_type(id);
    check_rank(id, p.t);
    if (p.order < 0) throw Error(ErrorKind::ParameterOutOfRange, "order must be >= 0");
    VerifyReport r;
    r.id = id;
    r.params = p;
    XSpec xs = p.x_mode == XMode::Symbolic ? XSpec::symbolic(p.t) : macdonald_points(id, p.t);
    if (p.x_mode == XMode::Symbolic && p.t > 3) throw Error(ErrorKind::ParameterOutOfRange, "symbolic x is limited to t <= 3");
    r.mode = (p.x_mode == XMode::Symbolic ? std::string("symbolic-x") : "specialized " + xs.str()) +
             (p.form == Form::Corrected ? ", corrected form" : "");
    Series lhs = macdonald_sum_side(id, p.t, p.order, xs, p.form, p.workers);
    Series rhs = macdonald_product_side(id, p.t, p.order, xs, p.form, p.mutate);
    r.ring = lhs.ring().describe();
    record(r, lhs, rhs, "");
    finish(r, start);
    return r;
}

// ------------------------------------------------------------------ raw lattice forms

namespace {

/** T-exponent of one column of the raw alternant, per type. */
long raw_exponent(RootType type, int t, long m, int sigma, int branch)
{
    if (type == RootType::A) return static_cast<long>(t) * m * (m - 1) / 2 + static_cast<long>(sigma - 1) * m;
    // (t+1) m^2 + m (sigma - t - 1) or (t+1) m^2 + m (t + 1 - sigma).
    long c = branch == 0 ? sigma - t - 1 : t + 1 - sigma;
    return static_cast<long>(t + 1) * m * m + m * c;
}

long raw_min_exponent(RootType type, int t, long m)
{
    long best = -1;
    for (int s = 1; s <= t; ++s) {
        for (int b = 0; b < (type == RootType::A ? 1 : 2); ++b) {
            long e = raw_exponent(type, t, m, s, b);
            if (best < 0 || e < best) best = e;
        }
    }
    return best;
}

} // namespace

int raw_lattice_radius(RootType type, int t, int order)
{
    if (type != RootType::A && type != RootType::C) throw Error(ErrorKind::ParameterOutOfRange, "raw forms are implemented for types A and C");
    // Every per-coordinate exponent is >= 0, so a point is omitted safely once
    // one coordinate alone exceeds the order; the exponent grows with |m|.
    int M = 0;
    while (raw_min_exponent(type, t, M + 1) <= order || raw_min_exponent(type, t, -(M + 1)) <= order) ++M;
    return M;
}

Series raw_lattice_side(RootType type, int t, int order, const XSpec& xs)
{
    int M = raw_lattice_radius(type, t, order);
    CoeffRing ring = x_ring(xs);
    Series acc(ring, Base::T, order);
    std::vector<int> perm(t);
    std::vector<long> m(t, -M);
    auto add_point = [&]() {
        if (type == RootType::A) {
            long s = 0;
            for (long v : m) s += v;
            if (s != 0) return;
        }
        for (int i = 0; i < t; ++i) perm[i] = i + 1;
        do {
            int inv = 0;
            for (int i = 0; i < t; ++i) {
                for (int j = i + 1; j < t; ++j) {
                    if (perm[i] > perm[j]) ++inv;
                }
            }
            // Expand prod_i (first - second) for type C; a single term for A.
            int branches = type == RootType::A ? 1 : 2;
            int total = 1;
            for (int i = 0; i < t; ++i) total *= branches;
            for (int mask = 0; mask < total; ++mask) {
                long texp = 0;
                Poly mono(inv % 2 ? -1 : 1);
                for (int i = 0; i < t; ++i) {
                    int b = (mask >> i) & 1;
                    int sg = perm[i];
                    texp += raw_exponent(type, t, m[i], sg, b);
                    long xe;
                    if (type == RootType::A) {
                        xe = static_cast<long>(t) * m[i] + sg - 1;
                    } else {
                        long base = static_cast<long>(2 * t + 2) * m[i];
                        xe = b == 0 ? base + sg - t - 1 : base + t + 1 - sg;
                        if (b == 1) mono = -mono;
                    }
                    mono *= xs.x_pow(i + 1, xe);
                }
                if (texp <= order) acc.add_to(static_cast<int>(texp), mono);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    std::function<void(int)> rec = [&](int i) {
        if (i == t) {
            add_point();
            return;
        }
        for (long v = -M; v <= M; ++v) {
            m[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    // Divide by the Weyl denominator det(x_i^{j-1}) or det(x_i^{j-t-1} - x_i^{-(j-t-1)}).
    std::vector<std::vector<Poly>> den(t, std::vector<Poly>(t));
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            den[i - 1][j - 1] = type == RootType::A ? xs.x_pow(i, j - 1) : xs.x_pow(i, j - t - 1) - xs.x_pow(i, -(j - t - 1));
        }
    }
    Poly d = determinant(den);
    Series out(ring, Base::T, order);
    for (int k = 0; k <= order; ++k) {
        auto qk = acc.coeff(k).divide_exact(d);
        if (!qk) throw Error(ErrorKind::NonDivisible, "raw lattice coefficient of T^" + std::to_string(k) + " is not divisible by the Weyl denominator");
        out.set(k, *qk);
    }
    return out;
}

VerifyReport verify_raw_form(RootType type, int t, int order)
{
    auto start = std::chrono::steady_clock::now();
    IdentityId id = type == RootType::A ? IdentityId::MACDONALD_A : IdentityId::MACDONALD_C;
    VerifyReport r;
    r.id = id;
    r.params.t = t;
    r.params.order = order;
    XSpec xs = macdonald_points(id, t);
    r.mode = "raw lattice |m_i| <= " + std::to_string(raw_lattice_radius(type, t, order)) + ", " + xs.str();
    Series raw = raw_lattice_side(type, t, order, xs);
    Series rewritten = macdonald_sum_side(id, t, order, xs);
    r.ring = raw.ring().describe();
    record(r, raw, rewritten, "");
    finish(r, start);
    return r;
}

// ------------------------------------------------------------------ q-NO

CoeffRing qno_ring(int cap) { return CoeffRing{kQ | kU, kQ, cap}; }

namespace {

IdentityKind require_kind(IdentityId id, IdentityKind k)
{
    const auto& info = identity_info(id);
    if (info.kind != k) throw Error(ErrorKind::ParameterOutOfRange, std::string(info.name) + " has the wrong kind for this verifier");
    return k;
}

/**
 * One q-NO summand as numerator / denominator, both polynomials in q and u
 * (with u possibly a power of q): the prefactor in u, the box product and
 * the diagonal product of the identity.
 */
struct Fraction {
    Poly num{1};
    Poly den{1};
};

Fraction qno_term(IdentityId id, const Partition& p, const std::function<Poly(int, int)>& mono, Form form)
{
    // mono(qe, ue) builds q^qe u^ue in whatever ring the caller uses.
    Fraction f;
    int d = p.durfee();
    bool fix = form == Form::Corrected;
    Rational parity(d % 2 ? -1 : 1);
    auto times = [](Poly& a, const Poly& b) { a *= b; };
    switch (id) {
    case IdentityId::QNO_A:
        for (const auto& hb : hook_boxes(p)) {
            times(f.num, (Poly(1) - mono(hb.hook, 1)) * (Poly(1) - mono(hb.hook, -1)));
            Poly b = Poly(1) - mono(hb.hook, 0);
            times(f.den, b * b);
        }
        return f;
    case IdentityId::QNO_C: f.num = mono(0, d).scaled(parity); break;
    // Corrected: (-u)^{-d} for B and u^{-d} for B-dual.
    case IdentityId::QNO_B: f.num = fix ? mono(0, -d).scaled(parity) : mono(0, -d); break;
    case IdentityId::QNO_BV: f.num = fix ? mono(0, -d) : mono(0, -d).scaled(parity); break;
    case IdentityId::QNO_CV: f.num = Poly(parity); break;
    case IdentityId::QNO_BC: f.num = mono(0, d); break;
    case IdentityId::QNO_D: f.num = mono(0, -2 * d).scaled(parity); break;
    default: throw Error(ErrorKind::ParameterOutOfRange, "not a q-NO identity");
    }
    // Box scale: q^h for C and B-dual, q^{2h} otherwise.
    bool unit_scale = id == IdentityId::QNO_C || id == IdentityId::QNO_BV;
    int k = unit_scale ? 1 : 2;
    // Corrected type D sums over DD with u^{+2 eps} in the box factor.
    int eps_sign = fix && id == IdentityId::QNO_D ? -1 : 1;
    for (const auto& hb : hook_boxes(p)) {
        times(f.num, Poly(1) - mono(k * hb.hook, -2 * eps_sign * hb.eps));
        times(f.den, Poly(1) - mono(k * hb.hook, 0));
        if (!hb.diagonal() || id == IdentityId::QNO_D) continue;
        if (unit_scale) {
            // (1 + u q^{h/2}) / (1 + u^{-1} q^{h/2}); diagonal hooks are even here.
            times(f.num, Poly(1) + mono(hb.hook / 2, 1));
            times(f.den, Poly(1) + mono(hb.hook / 2, -1));
        } else {
            times(f.num, Poly(1) - mono(hb.hook, 1));
            times(f.den, Poly(1) - mono(hb.hook, -1));
        }
    }
    return f;
}

Family qno_family(IdentityId id, Form form)
{
    if (id == IdentityId::QNO_D && form == Form::Corrected) return Family::DD;
    return identity_info(id).family;
}

} // namespace

Series qno_sum_side(IdentityId id, int order, const CoeffRing& ring, Form form, int workers)
{
    require_kind(id, IdentityKind::QNO);
    const auto& info = identity_info(id);
    int n = base_order(info.base, order);
    Series zero(ring, info.base, n);
    std::vector<Partition> members = enumerate(FamilyTag{qno_family(id, form), 0, 0}, weight_bound(info, order));
    auto mono = [](int qe, int ue) { return qu(qe, ue); };
    return parallel_sum(members, zero, workers, [&](const Partition& p, Series& acc) {
        Fraction f = qno_term(id, p, mono, form);
        Poly num = ring.reduce(f.num);
        Poly inv = inverse_in_ring(ring.reduce(f.den), ring);
        acc.add_to(weight_power(info, p.weight()), poly_product(num, inv, ring));
    });
}

std::vector<ProductFactor> qno_product_factors(IdentityId id, int order, const CoeffRing& ring, Form form)
{
    bool fix = form == Form::Corrected;
    require_kind(id, IdentityKind::QNO);
    const auto& info = identity_info(id);
    Base base = info.base;
    int n = base_order(base, order);
    int cap = ring.has_cap() ? ring.cap : -1;
    if (cap < 0) throw Error(ErrorKind::ParameterOutOfRange, "q-NO product sides need a q-degree cap");
    std::vector<ProductFactor> f;
    // A factor (1 - c q^qe u^ue X^m)^e; dropped when q^qe is beyond the cap.
    auto add = [&](int sign, int qe, int ue, int m, long e) {
        if (qe > cap || m > n || e == 0) return;
        f.push_back({qu(qe, ue, sign), m, e});
    };
    int T1 = t_power(base, 1);
    for (int m = T1; m <= n; m += T1) {
        for (int r = 1; r <= cap + 2; ++r) {
            long c = ceil_half(r);
            long c1 = ceil_half(r + 1);
            switch (id) {
            case IdentityId::QNO_A:
                add(1, r, 1, m, r);
                add(1, r, -1, m, r);
                add(1, r - 1, 0, m, -r);
                add(1, r + 1, 0, m, -r);
                break;
            case IdentityId::QNO_C:
                if (fix) {
                    add(1, r - 1, 1, m, 1);
                    add(1, r, -1, m, -1);
                    add(1, r + 1, -2, m, c);
                    add(1, r, 2, m, c);
                } else {
                    add(-1, r - 1, 1, m, 1);
                    add(-1, r, -1, m, -1);
                    add(1, r + 2, -2, m, c);
                    add(1, r - 1, 2, m, c);
                }
                add(1, r, 0, m, -c);
                add(1, r + 1, 0, m, -c);
                break;
            case IdentityId::QNO_B:
                add(1, 2 * (r - 1), -1, m, 1);
                add(1, 2 * r, 1, m, -1);
                add(1, 2 * r, -2, m, c);
                add(1, 2 * (r + 1), 2, m, c);
                add(1, 2 * r, 0, m, -c1);
                add(1, 2 * (r + 2), 0, m, -c);
                break;
            case IdentityId::QNO_BV:
                if (r == 1) add(-1, 0, -1, m, 1);
                add(-1, r, -1, m, 1);
                add(-1, r, 1, m, -1);
                add(1, r + 1, 2, m, c);
                add(1, r, -2, m, c);
                add(1, r, 0, m, -c);
                add(1, r + 1, 0, m, -c);
                break;
            case IdentityId::QNO_BC:
                add(1, 2 * r, -1, m, 1);
                if (fix) {
                    add(1, 2 * (r - 1), 1, m, -1);
                    add(1, 4 * (r - 1), 2, 2 * m, 1);
                    add(1, 4 * r, -2, 2 * m, -1);
                } else {
                    add(1, 2 * r, 1, m, -1);
                    add(1, 4 * r, -2, 2 * m + 1, 1);
                    add(1, 4 * r, 2, 2 * m + 1, -1);
                }
                add(1, 2 * (r + 1), -2, m, c);
                add(1, 2 * r, 2, m, c);
                add(1, 2 * r, 0, m, fix ? -c : -c1);
                add(1, 2 * (r + 1), 0, m, -c);
                break;
            case IdentityId::QNO_D:
                add(1, 2 * (r + 2), 2, m, c);
                add(1, 2 * (r - 1), -2, m, c);
                if (fix) add(1, 2 * r, 0, m, -c);
                add(1, 2 * (r + 1), 0, m, -c);
                if (!fix) add(1, 2 * (r + 2), 0, m, -c);
                break;
            default: break;
            }
        }
    }
    if (id == IdentityId::QNO_CV) {
        // Expanded in S = T^{1/2}: T^{m/2} = S^m and T^m = S^{2m}.
        for (int m = 1; m <= n; ++m) {
            add(-1, 0, 0, m, -1);
            for (int r = 1; r <= cap + 2; ++r) {
                long c = ceil_half(r);
                long c1 = ceil_half(r + 1);
                add(1, 2 * r - 1, -1, m, 1);
                add(1, 2 * r - 1, 1, m, -1);
                add(1, 2 * (r + 1), -2, 2 * m, c);
                add(1, 2 * r, 2, 2 * m, c);
                add(1, 2 * r, 0, 2 * m, fix ? -c : -c1);
                add(1, 2 * (r + 1), 0, 2 * m, -c);
            }
        }
    }
    return f;
}

Series qno_product_side(IdentityId id, int order, const CoeffRing& ring, Form form, bool mutate)
{
    const auto& info = identity_info(id);
    std::vector<ProductFactor> f = qno_product_factors(id, order, ring, form);
    if (mutate && !f.empty()) f.front().e = -f.front().e;
    return expand_factors(f, ring, info.base, base_order(info.base, order));
}

VerifyReport verify_qno(IdentityId id, const VerifyParams& p)
{
    auto start = std::chrono::steady_clock::now();
    require_kind(id, IdentityKind::QNO);
    if (p.order < 0) throw Error(ErrorKind::ParameterOutOfRange, "order must be >= 0");
    VerifyReport r;
    r.id = id;
    r.params = p;
    int cap = p.degree_cap >= 0 ? p.degree_cap : 2 * p.order + 2;
    r.params.degree_cap = cap;
    CoeffRing ring = qno_ring(cap);
    Series lhs = qno_sum_side(id, p.order, ring, p.form, p.workers);
    Series rhs = qno_product_side(id, p.order, ring, p.form, p.mutate);
    std::string form = p.form == Form::Corrected && has_corrected_form(id) ? ", corrected form" : "";
    if (p.u_mode == UMode::Symbolic) {
        r.mode = "symbolic u, q-adic cap " + std::to_string(cap) + form;
        r.ring = ring.describe();
        record(r, lhs, rhs, "");
    } else {
        std::vector<Rational> us = p.samples.empty() ? std::vector<Rational>{2, -1, Rational(1, 2), Rational(-3, 2)} : p.samples;
        CoeffRing qring{kQ, kQ, cap};
        r.mode = "u samples, q-adic cap " + std::to_string(cap) + form;
        r.ring = qring.describe();
        for (const auto& u : us) {
            if (u == 0) throw Error(ErrorKind::ZeroDenominator, "u = 0 is not allowed");
            record(r, lhs.substituted(Var::u, Poly(u), qring), rhs.substituted(Var::u, Poly(u), qring), "u=" + rational_str(u));
        }
    }
    finish(r, start);
    return r;
}

Series qno_sum_side_at_power(IdentityId id, int order, int k, Form form)
{
    require_kind(id, IdentityKind::QNO);
    const auto& info = identity_info(id);
    CoeffRing ring{kQ, 0, -1};
    Series acc(ring, info.base, base_order(info.base, order));
    auto mono = [k](int qe, int ue) { return Poly::variable(Var::q, qe + k * ue); };
    for (const auto& p : enumerate(FamilyTag{qno_family(id, form), 0, 0}, weight_bound(info, order))) {
        Fraction f = qno_term(id, p, mono, form);
        if (f.num.is_zero()) continue;
        if (f.den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "summand of " + p.str() + " at u = q^" + std::to_string(k));
        auto v = f.num.divide_exact(f.den);
        if (!v) throw Error(ErrorKind::NonDivisible, "summand of " + p.str() + " is not a Laurent polynomial at u = q^" + std::to_string(k));
        acc.add_to(weight_power(info, p.weight()), *v);
    }
    return acc;
}

VerifyReport verify_qno_macdonald_coherence(IdentityId qno_id, int t, int order, Form form)
{
    auto start = std::chrono::steady_clock::now();
    require_kind(qno_id, IdentityKind::QNO);
    // u = q^k where k is the exponent attached to each type.
    IdentityId mac;
    int k;
    switch (qno_id) {
    case IdentityId::QNO_A: mac = IdentityId::MACDONALD_A; k = t; break;
    case IdentityId::QNO_C: mac = IdentityId::MACDONALD_C; k = t + 1; break;
    case IdentityId::QNO_B: mac = IdentityId::MACDONALD_B; k = 2 * t - 1; break;
    case IdentityId::QNO_BV: mac = IdentityId::MACDONALD_BV; k = t; break;
    case IdentityId::QNO_CV: mac = IdentityId::MACDONALD_CV; k = 2 * t; break;
    case IdentityId::QNO_BC: mac = IdentityId::MACDONALD_BC; k = 2 * t + 1; break;
    default: mac = IdentityId::MACDONALD_D; k = 2 * t - 2; break;
    }
    check_rank(mac, t);
    VerifyReport r;
    r.id = qno_id;
    r.params.t = t;
    r.params.order = order;
    XSpec xs = macdonald_points(mac, t);
    r.params.form = form;
    r.mode = "u = q^" + std::to_string(k) + " against the Macdonald sum at " + xs.str() +
             (form == Form::Corrected ? ", corrected forms" : "");
    Series lhs = qno_sum_side_at_power(qno_id, order, k, form);
    Series rhs = macdonald_sum_side(mac, t, order, xs, form);
    r.ring = lhs.ring().describe();
    record(r, lhs, rhs, "");
    finish(r, start);
    return r;
}

// ------------------------------------------------------------------ (q,t)-NO

CoeffRing qtno_ring(int cap) { return CoeffRing{kQ | kT | kU, kQ | kT, cap}; }

namespace {

Poly qtu(int qe, int te, int ue)
{
    Mono m = unit_mono();
    m[static_cast<int>(Var::q)] = qe;
    m[static_cast<int>(Var::t)] = te;
    m[static_cast<int>(Var::u)] = ue;
    return Poly::monomial(m, 1);
}

} // namespace

Series qtno_sum_side(int order, const CoeffRing& ring, int workers)
{
    Series zero(ring, Base::T, order);
    std::vector<Partition> members = all_partitions(order);
    return parallel_sum(members, zero, workers, [&](const Partition& p, Series& acc) {
        Poly num(1), den(1);
        for (const auto& hb : hook_boxes(p)) {
            int a = arm(p, hb.box);
            int l = leg(p, hb.box);
            num = poly_product(num, (Poly(1) - qtu(a + 1, l, 1)) * (Poly(1) - qtu(a, l + 1, -1)), ring);
            den = poly_product(den, (Poly(1) - qtu(a + 1, l, 0)) * (Poly(1) - qtu(a, l + 1, 0)), ring);
        }
        acc.add_to(p.weight(), poly_product(ring.reduce(num), inverse_in_ring(ring.reduce(den), ring), ring));
    });
}

Series qtno_product_side(int order, const CoeffRing& ring, bool mutate)
{
    int cap = ring.cap;
    std::vector<ProductFactor> f;
    for (int k = 1; k <= order; ++k) {
        // Factors whose smallest (q,t)-degree exceeds the cap are 1 in the ring.
        for (int i = 1; i + 0 <= cap + 2; ++i) {
            for (int j = 1; i + j - 2 <= cap; ++j) {
                if (i + j - 1 <= cap) f.push_back({qtu(i, j - 1, 1), k, 1});
                if (i + j - 1 <= cap) f.push_back({qtu(i - 1, j, -1), k, 1});
                f.push_back({qtu(i - 1, j - 1, 0), k, -1});
                if (i + j <= cap) f.push_back({qtu(i, j, 0), k, -1});
            }
        }
    }
    if (mutate && !f.empty()) f.front().e = -f.front().e;
    return expand_factors(f, ring, Base::T, order);
}

VerifyReport verify_qtno(const VerifyParams& p)
{
    auto start = std::chrono::steady_clock::now();
    if (p.order < 0) throw Error(ErrorKind::ParameterOutOfRange, "order must be >= 0");
    VerifyReport r;
    r.id = IdentityId::QTNO;
    r.params = p;
    int cap = p.degree_cap >= 0 ? p.degree_cap : 6;
    r.params.degree_cap = cap;
    CoeffRing ring = qtno_ring(cap);
    r.mode = "symbolic u, (q,t)-degree cap " + std::to_string(cap);
    r.ring = ring.describe();
    record(r, qtno_sum_side(p.order, ring, p.workers), qtno_product_side(p.order, ring, p.mutate), "");
    finish(r, start);
    return r;
}

VerifyReport verify_qtno_diagonal(int order, int cap)
{
    auto start = std::chrono::steady_clock::now();
    VerifyReport r;
    r.id = IdentityId::QTNO;
    r.params.order = order;
    r.params.degree_cap = cap;
    r.mode = "q = t against the type-A q-NO product side";
    CoeffRing ring = qtno_ring(cap);
    CoeffRing qring = qno_ring(cap);
    Series diag = qtno_sum_side(order, ring).substituted(Var::t, Poly::variable(Var::q), qring);
    Series qno = qno_product_side(IdentityId::QNO_A, order, qring);
    r.ring = qring.describe();
    record(r, diag, qno, "");
    finish(r, start);
    return r;
}

// ------------------------------------------------------------------ NO

namespace {

/** Affine map z -> c1 z + c0 with rational coefficients. */
struct Lin {
    Rational c1;
    Rational c0;
};

/** Description of one NO specialization. */
struct NoSpec {
    Family family;
    bool sign_d;               ///< (-1)^{d_lambda}
    bool classical;            ///< NO_CLASSICAL box factor 1 - z/h^2
    Lin box;                   ///< box factor 1 + box(z) eps/h
    std::optional<Lin> diag;   ///< diagonal factor 1 + diag(z)/h
    /** Product: prod (X^k; X^k)^{E(z)} with k the step in the base variable. */
    std::vector<std::pair<int, std::function<Poly(const Poly&)>>> eta;
};

Poly zpoly(const Rational& c1, const Rational& c0) { return Poly::monomial(Var::z, 1, c1) + Poly(c0); }

NoSpec no_spec(IdentityId id, Form form)
{
    using I = IdentityId;
    auto lin = [](long a, long b) { return Lin{Rational(a), Rational(b)}; };
    NoSpec s{};
    const auto& info = identity_info(id);
    s.family = info.family;
    // Eta steps in the base variable: with S = T^{1/2}, (T^{1/2};T^{1/2}) has
    // step 1, (T;T) step 2, (T^2;T^2) step 4; in base T they are 1 and 2.
    int e1 = info.base == Base::S ? 2 : 1;  // (T;T)
    int e2 = 2 * e1;                        // (T^2;T^2)
    bool fix = form == Form::Corrected;
    switch (id) {
    case I::NO_CLASSICAL:
        s.classical = true;
        s.eta = {{1, [](const Poly& z) { return z - Poly(1); }}};
        break;
    case I::NO_B_a:
        s.sign_d = true;
        s.box = lin(2, -1);
        s.eta = {{e1, [](const Poly& z) { return z * z * Poly(2) + z; }}};
        break;
    case I::NO_B_b:
        s.box = lin(-2, 1);
        s.eta = {{e1, [](const Poly& z) { return (z * Poly(2) - Poly(3)) * z; }}, {e2, [](const Poly& z) { return z * Poly(2); }}};
        break;
    case I::NO_B_c:
        s.sign_d = true;
        s.box = lin(2, -1);
        s.eta = {{1, [](const Poly& z) { return z * Poly(2); }}};
        if (fix) {
            s.eta.push_back({e1, [](const Poly& z) { return (z * Poly(2) - Poly(3)) * z; }});
        } else {
            s.eta.push_back({e1, [](const Poly& z) { return (z * Poly(2) + Poly(3)) * z; }});
        }
        break;
    case I::NO_BV_a:
        s.sign_d = !fix;
        s.box = lin(-2, 0);
        s.eta = {{e1, [](const Poly& z) { return (z - Poly(1)) * (z * Poly(2) + Poly(1)); }},
                 {e2, [](const Poly& z) { return z * Poly(2) + Poly(1); }}};
        break;
    case I::NO_BV_b:
        s.box = lin(2, 0);
        s.eta = {{e1, [](const Poly& z) { return (z + Poly(1)) * (z * Poly(2) - Poly(1)); }},
                 {e2, [](const Poly& z) { return -(z * Poly(2) - Poly(1)); }}};
        break;
    case I::NO_C:
        s.sign_d = true;
        s.box = lin(-2, -2);
        s.eta = {{e1, [](const Poly& z) { return z * z * Poly(2) + z; }}};
        break;
    case I::NO_CV_a:
        s.sign_d = true;
        s.box = lin(-2, 0);
        s.diag = lin(2, 0);
        s.eta = {{e1, [](const Poly& z) { return z * Poly(2) + Poly(1); }},
                 {e2, [](const Poly& z) { return (z - Poly(1)) * (z * Poly(2) + Poly(1)); }}};
        break;
    case I::NO_CV_b:
        s.sign_d = true;
        s.box = lin(-2, 0);
        s.eta = {{e2, [](const Poly& z) { return (z + Poly(1)) * (z * Poly(2) - Poly(1)); }},
                 {e1, [](const Poly& z) { return -(z * Poly(2) - Poly(1)); }}};
        break;
    case I::NO_BC_a:
        s.box = lin(-2, -1);
        s.diag = lin(2, 1);
        s.eta = {{e1, [](const Poly& z) { return (z * Poly(2) + Poly(3)) * z; }}, {e2, [](const Poly& z) { return z * Poly(-2); }}};
        break;
    case I::NO_BC_b:
        s.box = lin(-2, -1);
        s.eta = {{1, [](const Poly& z) { return z * Poly(2); }},
                 {e1, [](const Poly& z) { return (z * Poly(2) - Poly(3)) * z; }},
                 {e2, [](const Poly& z) { return z * Poly(2); }}};
        break;
    case I::NO_BC_c:
        s.sign_d = true;
        s.box = lin(-2, -1);
        s.eta = {{e1, [](const Poly& z) { return z * z * Poly(2) - z; }}};
        break;
    case I::NO_BC_d:
        s.sign_d = true;
        s.box = lin(-2, -1);
        s.eta = {{e1, [](const Poly& z) { return (z * Poly(2) + Poly(3)) * z; }}, {1, [](const Poly& z) { return z * Poly(-2); }}};
        break;
    case I::NO_D:
        s.sign_d = true;
        if (fix) {
            s.family = Family::DD;
            s.box = lin(2, -2);
        } else {
            s.box = lin(-2, 2);
        }
        s.eta = {{e1, [](const Poly& z) { return z * z * Poly(2) - z; }}};
        break;
    default: throw Error(ErrorKind::ParameterOutOfRange, "not a Nekrasov-Okounkov specialization");
    }
    return s;
}

/** Evaluate c1 z + c0 either symbolically or at a rational z. */
Poly lin_value(const Lin& l, const std::optional<Rational>& z)
{
    if (z) return Poly(l.c1 * *z + l.c0);
    return zpoly(l.c1, l.c0);
}

} // namespace

std::vector<Rational> default_z_samples() { return {0, 1, -1, 2, -2, Rational(1, 2), Rational(5, 2)}; }

Series no_sum_side(IdentityId id, int order, std::optional<Rational> z, Form form, int workers)
{
    require_kind(id, IdentityKind::NO);
    const auto& info = identity_info(id);
    NoSpec spec = no_spec(id, form);
    CoeffRing ring{z ? VarSet(0) : kZ, 0, -1};
    int n = base_order(info.base, order);
    Series zero(ring, info.base, n);
    std::vector<Partition> members = enumerate(FamilyTag{spec.family, 0, 0}, weight_bound(info, order));
    Poly zz = z ? Poly(*z) : Poly::variable(Var::z);
    return parallel_sum(members, zero, workers, [&](const Partition& p, Series& acc) {
        // Numerator prod (h + c(z) eps) over the cleared denominator prod h.
        Poly num(spec.sign_d && p.durfee() % 2 ? -1 : 1);
        Integer clear = 1;
        for (const auto& hb : hook_boxes(p)) {
            Poly h(static_cast<long>(hb.hook));
            if (spec.classical) {
                num *= Poly(static_cast<long>(hb.hook) * hb.hook) - zz;
                clear *= static_cast<long>(hb.hook) * hb.hook;
                continue;
            }
            if (hb.diagonal() && spec.diag) {
                num *= h + lin_value(*spec.diag, z);
            } else {
                Poly c = lin_value(spec.box, z);
                num *= hb.eps > 0 ? h + c : h - c;
            }
            clear *= hb.hook;
        }
        acc.add_to(weight_power(info, p.weight()), num.scaled(Rational(Integer(1), clear)));
    });
}

Series no_product_side(IdentityId id, int order, std::optional<Rational> z, Form form, bool mutate)
{
    require_kind(id, IdentityKind::NO);
    const auto& info = identity_info(id);
    NoSpec spec = no_spec(id, form);
    CoeffRing ring{0, 0, -1};
    int n = base_order(info.base, order);
    Poly zz = z ? Poly(*z) : Poly::variable(Var::z);
    Series s = Series::one(CoeffRing{z ? VarSet(0) : kZ, 0, -1}, info.base, n);
    bool first = true;
    for (const auto& [step, exponent] : spec.eta) {
        Series eta = pochhammer_inf(ring, info.base, n, Poly(1), step, step);
        Poly e = exponent(zz);
        if (mutate && first) e = -e;
        first = false;
        Series f = pow_symbolic(eta, e);
        s *= f.widened(s.ring());
    }
    return s;
}

VerifyReport verify_no(IdentityId id, const VerifyParams& p)
{
    auto start = std::chrono::steady_clock::now();
    require_kind(id, IdentityKind::NO);
    if (p.order < 0) throw Error(ErrorKind::ParameterOutOfRange, "order must be >= 0");
    VerifyReport r;
    r.id = id;
    r.params = p;
    std::string form = p.form == Form::Corrected && has_corrected_form(id) ? ", corrected form" : "";
    if (p.z_mode == ZMode::Poly) {
        r.mode = "z polynomial" + form;
        Series lhs = no_sum_side(id, p.order, std::nullopt, p.form, p.workers);
        Series rhs = no_product_side(id, p.order, std::nullopt, p.form, p.mutate);
        r.ring = lhs.ring().describe();
        record(r, lhs, rhs, "");
    } else {
        std::vector<Rational> zs = p.samples.empty() ? default_z_samples() : p.samples;
        r.params.samples = zs;
        r.mode = "z samples" + form;
        r.ring = "Q";
        for (const auto& z : zs) {
            record(r, no_sum_side(id, p.order, z, p.form, p.workers), no_product_side(id, p.order, z, p.form, p.mutate),
                   "z=" + rational_str(z));
        }
    }
    finish(r, start);
    return r;
}

VerifyReport verify(IdentityId id, const VerifyParams& p)
{
    switch (identity_info(id).kind) {
    case IdentityKind::Macdonald: return verify_macdonald(id, p);
    case IdentityKind::QNO: return verify_qno(id, p);
    case IdentityKind::QTNO: return verify_qtno(p);
    case IdentityKind::NO: return verify_no(id, p);
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown identity kind");
}

} // namespace maclab
