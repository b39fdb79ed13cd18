#include "maclab/hookprods.hpp"

#include "maclab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace maclab {

namespace {

long to_integer(const Rational& r)
{
    if (r.get_den() != 1) throw Error(ErrorKind::TagMismatch, "expected an integral r-value, got " + rational_str(r));
    return r.get_num().get_si();
}

Rational rational_pow(const Rational& b, long e)
{
    Rational out = 1;
    Rational base = e >= 0 ? b : Rational(1) / b;
    for (long k = 0; k < (e >= 0 ? e : -e); ++k) out *= base;
    return out;
}

bool has_quotient_decoration(Family f) { return f == Family::DDp1 || f == Family::DDp2; }

} // namespace

std::vector<long> g_interval(long m, long M, long g, Dir dir)
{
    if (g < 1) throw Error(ErrorKind::ParameterOutOfRange, "g-intervals need g >= 1");
    std::vector<long> out;
    if (dir == Dir::Plus) {
        for (long k = m; k < M; k += g) out.push_back(k);
    } else {
        for (long l = M; l > m; l -= g) out.push_back(l);
        std::reverse(out.begin(), out.end());
    }
    return out;
}

CyclotomicForm& CyclotomicForm::operator*=(const CyclotomicForm& o)
{
    sign *= o.sign;
    shift += o.shift;
    for (const auto& [d, e] : o.phi) {
        long& x = phi[d];
        x += e;
        if (x == 0) phi.erase(d);
    }
    return *this;
}

std::string CyclotomicForm::str() const
{
    std::ostringstream out;
    out << (sign < 0 ? "-" : "") << "q^" << shift;
    for (const auto& [d, e] : phi) out << "*Phi" << d << "^" << e;
    return out.str();
}

TauFn TauFn::identity() { return TauFn(); }

TauFn TauFn::rational_bracket(const Rational& base, int scale)
{
    if (base <= 0 || base == 1 || scale == 0) {
        throw Error(ErrorKind::ParameterOutOfRange, "rational bracket needs base > 0, base != 1, scale != 0");
    }
    TauFn f;
    f.kind_ = Kind::RationalBracket;
    f.base_ = base;
    f.scale_ = scale;
    return f;
}

TauFn TauFn::q_bracket(int scale)
{
    if (scale == 0) throw Error(ErrorKind::ParameterOutOfRange, "q bracket needs scale != 0");
    TauFn f;
    f.kind_ = Kind::QBracket;
    f.scale_ = scale;
    return f;
}

std::string TauFn::str() const
{
    std::string e = scale_ == 1 ? "x" : std::to_string(scale_) + "x";
    switch (kind_) {
    case Kind::Identity: return "x";
    case Kind::RationalBracket: return "1-(" + rational_str(base_) + ")^" + e;
    case Kind::QBracket: return "1-q^" + e;
    }
    return "?";
}

Rational TauFn::value(long x) const
{
    if (x == 0) throw Error(ErrorKind::TauZeroArgument, "tau(0) = 0 for " + str());
    if (kind_ == Kind::Identity) return Rational(x);
    if (kind_ == Kind::QBracket) throw Error(ErrorKind::RingMismatch, "q bracket has no rational value");
    return Rational(1) - rational_pow(base_, static_cast<long>(scale_) * x);
}

CyclotomicForm TauFn::factored(long x) const
{
    if (kind_ != Kind::QBracket) throw Error(ErrorKind::RingMismatch, "only the q bracket has a factored value");
    if (x == 0) throw Error(ErrorKind::TauZeroArgument, "tau(0) = 0 for " + str());
    long a = static_cast<long>(scale_) * x;
    long n = a > 0 ? a : -a;
    // 1 - q^n = -prod_{d|n} Phi_d and 1 - q^{-n} = q^{-n} prod_{d|n} Phi_d.
    CyclotomicForm f;
    f.sign = a > 0 ? -1 : 1;
    f.shift = a > 0 ? 0 : a;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        f.phi[d] += 1;
        if (d * d != n) f.phi[n / d] += 1;
    }
    return f;
}

Poly TauFn::poly(long x) const
{
    if (kind_ != Kind::QBracket) throw Error(ErrorKind::RingMismatch, "only the q bracket has a polynomial value");
    if (x == 0) throw Error(ErrorKind::TauZeroArgument, "tau(0) = 0 for " + str());
    return Poly(1) - Poly::variable(Var::q, static_cast<int>(scale_ * x));
}

std::string TauValue::str() const { return symbolic ? factored.str() : rational_str(rational); }

void TauProduct::mul(long x, long e)
{
    if (e == 0) return;
    long& v = exps_[x];
    v += e;
    if (v == 0) exps_.erase(x);
}

TauProduct& TauProduct::operator*=(const TauProduct& o)
{
    for (const auto& [x, e] : o.exps_) mul(x, e);
    return *this;
}

TauValue TauProduct::evaluate(const TauFn& tau) const
{
    TauValue v;
    v.symbolic = tau.symbolic();
    for (const auto& [x, e] : exps_) {
        if (v.symbolic) {
            CyclotomicForm f = tau.factored(x);
            if (e % 2 == 0) f.sign = 1;
            f.shift *= e;
            for (auto& [d, k] : f.phi) k *= e;
            v.factored *= f;
        } else {
            v.rational *= rational_pow(tau.value(x), e);
        }
    }
    return v;
}

std::string TauProduct::str() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [x, e] : exps_) {
        out << (first ? "" : " ") << "tau(" << x << ")^" << e;
        first = false;
    }
    return first ? "1" : out.str();
}

TauValue telescoped(const TauFn& tau, long m, long M, long g, Dir dir)
{
    auto I = g_interval(m, M, g, dir);
    TauProduct p;
    if (!I.empty()) {
        if (dir == Dir::Plus) {
            p.mul(M - I.back() - g);
            p.div(M - m);
        } else {
            p.mul(M - m + g);
            p.div(I.front() - m);
        }
    }
    return p.evaluate(tau);
}

TauValue telescoped_naive(const TauFn& tau, long m, long M, long g, Dir dir)
{
    TauValue v;
    v.symbolic = tau.symbolic();
    for (long k : g_interval(m, M, g, dir)) {
        TauProduct f;
        if (dir == Dir::Plus) {
            f.mul(M - k - g);
            f.div(M - k);
        } else {
            f.mul(k - m + g);
            f.div(k - m);
        }
        TauValue x = f.evaluate(tau);
        if (v.symbolic) {
            v.factored *= x.factored;
        } else {
            v.rational *= x.rational;
        }
    }
    return v;
}

HookStats hook_stats(const Partition& p, const FamilyTag& tag)
{
    if (tag.g < 1) throw Error(ErrorKind::ParameterOutOfRange, "hook statistics need g >= 1");
    HookStats s;
    s.durfee = p.durfee();
    s.alpha.assign(tag.g, 0);
    bool type_a = tag.family == Family::P;
    for (const auto& hb : hook_boxes(p)) {
        if (hb.hook < tag.g) {
            ++s.h_less;
            if (hb.eps == 1) {
                ++s.h_less_plus;
                if (hb.diagonal()) ++s.h_less_plus_diag;
            }
            if (type_a || hb.eps == 1) ++s.alpha[tag.g - hb.hook];
        }
    }
    s.diagonal = maclab::diagonal_hooks(p);
    return s;
}

TauProduct tau_lhs_product(const Partition& p, const FamilyTag& tag, Variant variant)
{
    TauProduct out;
    long g = tag.g;
    bool skip_multiples = has_quotient_decoration(tag.family);
    for (const auto& hb : hook_boxes(p)) {
        long h = hb.hook;
        if (tag.family == Family::P) {
            out.mul(h - g);
            out.mul(h + g);
            out.div(h, 2);
            continue;
        }
        if (skip_multiples && h % g == 0) continue;
        long sg = (variant == Variant::Minus ? -1 : 1) * hb.eps * g;
        out.mul(h + sg);
        out.div(h);
    }
    return out;
}

TauProduct tau_rhs_product(const Partition& p, const FamilyTag& tag, Variant variant)
{
    RootType type = root_type_of(tag);
    if (variant == Variant::Plus && type != RootType::C) {
        throw Error(ErrorKind::TagMismatch, "the plus variant exists only for the doubled distinct (2t+2)-cores");
    }
    VCoding vc = vcoding(p, tag);
    std::vector<Rational> rr = r_vector(vc, tag);
    HookStats st = hook_stats(p, tag);
    long g = tag.g, t = tag.t;
    TauProduct out;
    for (long i = 1; i < g; ++i) {
        out.mul(-i, st.alpha[i]);
        out.div(i, st.alpha[i]);
    }
    // Pair products; r_i - r_j is always integral, r_i + r_j too outside type A.
    for (long i = 1; i <= t; ++i) {
        for (long j = i + 1; j <= t; ++j) {
            out.mul(to_integer(rr[i - 1] - rr[j - 1]));
            out.div(j - i);
            if (type == RootType::A) continue;
            out.mul(to_integer(rr[i - 1] + rr[j - 1]));
            long base = 0;
            switch (type) {
            case RootType::C:
            case RootType::BC: base = g; break;
            case RootType::CV: base = g + 1; break;
            default: base = g + 2; break;
            }
            out.div(base - i - j);
        }
    }
    if (type == RootType::C || type == RootType::BV) {
        for (long i = 1; i <= t; ++i) {
            long r = to_integer(rr[i - 1]);
            out.mul(r);
            out.div(i);
            if (variant == Variant::Plus) {
                out.mul(2 * r);
                out.div(2 * i);
                out.mul(r + t + 1);
                out.mul(r - t - 1);
                out.div(i + t + 1);
                out.div(i - t - 1);
            }
        }
    }
    return out;
}

TauProduct type_d_correction(const Partition& p, const FamilyTag& tag)
{
    if (root_type_of(tag) != RootType::D) throw Error(ErrorKind::TagMismatch, "type D correction needs a type D tag");
    VCoding vc = vcoding(p, tag);
    std::vector<Rational> rr = r_vector(vc, tag);
    TauProduct out;
    for (long i = 1; i < tag.t; ++i) out.mul(i);
    for (int i = 0; i < tag.t; ++i) {
        if (vc.sigma[i] != tag.g / 2 - 1) out.div(to_integer(rr[i]));
    }
    return out;
}

TauValue tau_lhs(const Partition& p, const FamilyTag& tag, const TauFn& tau, Variant variant)
{
    if (!in_family(p, tag)) throw Error(ErrorKind::NotInFamily, p.str() + " not in " + tag.str());
    return tau_lhs_product(p, tag, variant).evaluate(tau);
}

TauValue tau_rhs(const Partition& p, const FamilyTag& tag, const TauFn& tau, Variant variant)
{
    return tau_rhs_product(p, tag, variant).evaluate(tau);
}

FirstHook first_hook_direct(const Partition& p)
{
    FirstHook h;
    if (p.empty()) return h;
    for (int c = 1; c <= p.part(1); ++c) h.plus.insert(box_indices(p, {1, c}).first);
    for (int r = 2; r <= p.length(); ++r) h.minus.insert(box_indices(p, {r, 1}).second);
    return h;
}

namespace {

class IntervalUnion {
public:
    explicit IntervalUnion(long g)
        : g_(g)
    {
    }
    void add(long m, long M, Dir d)
    {
        for (long x : g_interval(m, M, g_, d)) set_.insert(x);
    }
    /** Add I(m,M) minus I(m2,M2), both of direction d. */
    void add_minus(long m, long M, long m2, long M2, Dir d)
    {
        auto cut = g_interval(m2, M2, g_, d);
        std::set<long> c(cut.begin(), cut.end());
        for (long x : g_interval(m, M, g_, d)) {
            if (!c.count(x)) set_.insert(x);
        }
    }
    std::set<long> take() { return std::move(set_); }

private:
    long g_;
    std::set<long> set_;
};

} // namespace

FirstHook largest_hook(const Partition& p, const FamilyTag& tag)
{
    if (p.empty()) throw Error(ErrorKind::EmptyPartition, "the empty partition has no first hook");
    if (!in_family(p, tag)) throw Error(ErrorKind::NotInFamily, p.str() + " not in " + tag.str());
    if (tag.family == Family::P) return first_hook_direct(p);
    RootType type = root_type_of(tag);
    VCoding vc = vcoding(p, tag);
    const auto& v = vc.v;
    long g = tag.g, t = tag.t;
    long top = v[0] - g;  // j-index of the corner box
    IntervalUnion plus(g), minus(g);
    const Dir P = Dir::Plus, M = Dir::Minus;

    if (type == RootType::C || type == RootType::BC || type == RootType::CV) {
        // i-index of the corner box: the reflection of its j-index.
        long low = type == RootType::CV ? -top - 1 : -top;
        long refl = type == RootType::CV ? g - 1 : g;
        plus.add(low, top, P);
        minus.add(low, v[0] - 2 * g, M);
        if (type != RootType::CV) {
            plus.add(0, top, P);
            minus.add(low, -g, M);
        }
        if (type == RootType::C) {
            plus.add(g / 2, top, P);
            minus.add(low, -g / 2, M);
        }
        for (long i = 2; i <= t; ++i) {
            plus.add(v[i - 1], top, P);
            plus.add(-v[i - 1] + refl, top, P);
            minus.add(low, v[i - 1] - g, M);
            minus.add(low, -v[i - 1] + refl - g, M);
        }
        return {plus.take(), minus.take()};
    }

    // DD' families: i_min = -top - 2; i0 (and i1) located by residue.
    long low = -top - 2;
    auto slot = [&](long residue) {
        for (long i = 0; i < t; ++i) {
            if (vc.sigma[i] == residue) return i;
        }
        throw Error(ErrorKind::InvalidFamilyVector, "missing residue " + std::to_string(residue));
    };
    long i0 = slot(g - 1);
    long i1 = type == RootType::D ? slot(g / 2 - 1) : -1;
    // When the decorated residue owns the corner box, its own sets already
    // describe the first row; the corner's j-index then belongs to H1+ only.
    bool corner_decorated = i0 == 0 || i1 == 0;
    if (!corner_decorated) {
        plus.add(low, top, P);
        minus.add(low, v[0] - 2 * g, M);
    }
    auto below_corner = [&](long i) { return i == 0 ? v[i] - 2 * g : v[i] - g; };
    plus.add(v[i0], top, P);
    plus.add_minus(-v[i0] + g - 2, top, -1, top, P);
    minus.add(low, -v[i0] - 2, M);
    minus.add_minus(low, below_corner(i0), low, -g - 1, M);
    if (type == RootType::BV) {
        plus.add(g / 2 - 1, top, P);
        minus.add(low, -g / 2 - 1, M);
    }
    if (type == RootType::D) {
        plus.add(v[i1], top, P);
        plus.add_minus(-v[i1] + g - 2, top, g / 2 - 1, top, P);
        minus.add(low, -v[i1] - 2, M);
        minus.add_minus(low, below_corner(i1), low, -g / 2 - 1, M);
    }
    for (long i = 1; i < t; ++i) {
        if (i == i0 || i == i1) continue;
        plus.add(v[i], top, P);
        plus.add(-v[i] + g - 2, top, P);
        minus.add(low, v[i] - g, M);
        minus.add(low, -v[i] - 2, M);
    }
    return {plus.take(), minus.take()};
}

std::vector<int> diagonal_hooks(const Partition& p, const FamilyTag& tag)
{
    if (tag.family == Family::P) return maclab::diagonal_hooks(p);
    VCoding vc = vcoding(p, tag);
    long g = tag.g;
    long offset = 0;
    switch (tag.family) {
    case Family::DD: offset = 0; break;
    case Family::SC: offset = 1; break;
    default: offset = 2; break;
    }
    std::vector<int> out;
    for (int i = 0; i < tag.t; ++i) {
        long s = vc.sigma[i];
        long n = (vc.v[i] - s) / g;
        for (long k = 0; k < n; ++k) out.push_back(static_cast<int>(2 * k * g + 2 * s + offset));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

SignCheck sign_stats(const Partition& p, const FamilyTag& tag)
{
    if (!in_family(p, tag)) throw Error(ErrorKind::NotInFamily, p.str() + " not in " + tag.str());
    SignCheck c;
    c.stats = hook_stats(p, tag);
    VCoding vc = vcoding(p, tag);
    c.parity = vc.parity;
    const HookStats& s = c.stats;
    int d = s.durfee % 2, diag = static_cast<int>(s.h_less_plus_diag % 2);
    switch (root_type_of(tag)) {
    case RootType::A:
        c.lhs = static_cast<int>(s.h_less % 2);
        c.rhs = c.parity;
        break;
    case RootType::C:
    case RootType::BV:
    case RootType::D:
        c.lhs = static_cast<int>(s.h_less_plus % 2);
        c.rhs = (d + c.parity) % 2;
        break;
    case RootType::BC:
    case RootType::B:
        c.lhs = static_cast<int>(s.h_less_plus % 2);
        c.rhs = (diag + c.parity) % 2;
        break;
    case RootType::CV:
        c.lhs = static_cast<int>(s.h_less_plus % 2);
        c.rhs = (diag + d + c.parity) % 2;
        break;
    }
    return c;
}

} // namespace maclab
