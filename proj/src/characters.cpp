#include "maclab/characters.hpp"

#include "maclab/errors.hpp"
#include "maclab/partitions.hpp"

#include <algorithm>
#include <utility>

namespace maclab {

namespace {

/** 1 + s * q^e at a rational q. */
Rational binomial_at(int s, long e, const Rational& q)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    Rational p = e < 0 ? Rational(den, num) : Rational(num, den);
    p.canonicalize();
    return 1 + s * p;
}

Rational power_at(const Rational& q, long e) { return binomial_at(1, e, q) - 1; }

/** Exponent of q^{coefficient * d} in the hook form. */
long durfee_power(RootType type, long g)
{
    switch (type) {
    case RootType::C: return g / 2;
    case RootType::BV: return -g / 2;
    case RootType::B: return -g;
    case RootType::CV: return 0;
    case RootType::BC: return g;
    case RootType::D: return -2 * g;
    case RootType::A: break;
    }
    return 0;
}

/**
 * Dense univariate Laurent polynomial in q with integer coefficients: the
 * fast path for determinants at specialized points, where the sparse
 * multivariate Poly would spend most of its time on bookkeeping.
 */
struct Dense {
    long lo = 0;
    std::vector<mpz_class> c;  ///< c[k] is the coefficient of q^{lo + k}; no zero ends

    bool zero() const { return c.empty(); }
    long hi() const { return lo + static_cast<long>(c.size()) - 1; }

    void trim()
    {
        std::size_t a = 0, b = c.size();
        while (a < b && c[a] == 0) ++a;
        while (b > a && c[b - 1] == 0) --b;
        if (a == b) {
            c.clear();
            lo = 0;
            return;
        }
        c = std::vector<mpz_class>(c.begin() + static_cast<long>(a), c.begin() + static_cast<long>(b));
        lo += static_cast<long>(a);
    }
};

/** Poly -> Dense when the polynomial only involves q with integer coefficients. */
std::optional<Dense> to_dense(const Poly& p)
{
    if (p.variables() & ~var_bit(Var::q)) return std::nullopt;
    Dense d;
    if (p.is_zero()) return d;
    d.lo = p.min_degree(Var::q);
    d.c.assign(static_cast<std::size_t>(p.max_degree(Var::q) - d.lo + 1), 0);
    for (const auto& [m, coef] : p.terms()) {
        if (coef.get_den() != 1) return std::nullopt;
        d.c[static_cast<std::size_t>(m[static_cast<int>(Var::q)] - d.lo)] = coef.get_num();
    }
    return d;
}

Poly from_dense(const Dense& d)
{
    Poly out;
    for (std::size_t k = 0; k < d.c.size(); ++k) {
        if (d.c[k] != 0) out += Poly::monomial(Var::q, static_cast<int>(d.lo + static_cast<long>(k)), Rational(d.c[k]));
    }
    return out;
}

Dense dense_mul(const Dense& a, const Dense& b)
{
    Dense out;
    if (a.zero() || b.zero()) return out;
    out.lo = a.lo + b.lo;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    out.trim();
    return out;
}

Dense dense_sub(const Dense& a, const Dense& b)
{
    if (b.zero()) return a;
    if (a.zero()) {
        Dense out = b;
        for (auto& x : out.c) x = -x;
        return out;
    }
    Dense out;
    out.lo = std::min(a.lo, b.lo);
    out.c.assign(static_cast<std::size_t>(std::max(a.hi(), b.hi()) - out.lo + 1), 0);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[static_cast<std::size_t>(a.lo - out.lo) + k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[static_cast<std::size_t>(b.lo - out.lo) + k] -= b.c[k];
    out.trim();
    return out;
}

/** Exact quotient a / b with integer coefficients, if there is one. */
std::optional<Dense> dense_div(const Dense& a, const Dense& b)
{
    if (b.zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
    Dense q;
    if (a.zero()) return q;
    long qlen = static_cast<long>(a.c.size()) - static_cast<long>(b.c.size()) + 1;
    if (qlen <= 0) return std::nullopt;
    std::vector<mpz_class> rem = a.c;
    q.lo = a.lo - b.lo;
    q.c.assign(static_cast<std::size_t>(qlen), 0);
    const mpz_class& lead = b.c.back();
    std::size_t bl = b.c.size();
    for (long k = qlen - 1; k >= 0; --k) {
        mpz_class& top = rem[static_cast<std::size_t>(k) + bl - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_class f = top / lead;
        for (std::size_t j = 0; j < bl; ++j) rem[static_cast<std::size_t>(k) + j] -= f * b.c[j];
        q.c[static_cast<std::size_t>(k)] = f;
    }
    for (const auto& x : rem) {
        if (x != 0) return std::nullopt;
    }
    q.trim();
    return q;
}

/** d * (1 + s q^e). */
Dense times_binomial(const Dense& d, int s, long e)
{
    Dense shifted = d;
    shifted.lo += e;
    for (auto& x : shifted.c) x *= -s;
    return dense_sub(d, shifted);
}

Dense dense_one()
{
    Dense d;
    d.c = {1};
    return d;
}

/** Bareiss elimination on dense entries; nullopt when a step is not exact. */
std::optional<Dense> dense_determinant(std::vector<std::vector<Dense>> m)
{
    std::size_t n = m.size();
    int sign = 1;
    Dense prev;
    prev.c = {1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].zero()) ++r;
            if (r == n) return Dense();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto q = dense_div(dense_sub(dense_mul(m[k][k], m[i][j]), dense_mul(m[i][k], m[k][j])), prev);
                if (!q) return std::nullopt;
                m[i][j] = std::move(*q);
            }
        }
        prev = m[k][k];
    }
    Dense d = m[n - 1][n - 1];
    if (sign < 0) {
        for (auto& x : d.c) x = -x;
    }
    return d;
}

/** Both determinants and their quotient on the dense path, if every entry qualifies. */
std::optional<Poly> dense_ratio(const std::vector<std::vector<Poly>>& num, const std::vector<std::vector<Poly>>& den)
{
    auto convert = [](const std::vector<std::vector<Poly>>& m) -> std::optional<std::vector<std::vector<Dense>>> {
        std::vector<std::vector<Dense>> out(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (const auto& e : m[i]) {
                auto d = to_dense(e);
                if (!d) return std::nullopt;
                out[i].push_back(std::move(*d));
            }
        }
        return out;
    };
    auto dn = convert(num), dd = convert(den);
    if (!dn || !dd) return std::nullopt;
    auto a = dense_determinant(std::move(*dn)), b = dense_determinant(std::move(*dd));
    if (!a || !b) return std::nullopt;
    if (b->zero()) throw Error(ErrorKind::ZeroDenominator, "the evaluation points are not generic");
    auto q = dense_div(*a, *b);
    if (!q) return std::nullopt;
    return from_dense(*q);
}

} // namespace

const char* char_kind_name(CharKind k)
{
    switch (k) {
    case CharKind::Schur: return "schur";
    case CharKind::Sp: return "sp";
    case CharKind::Oo: return "oo";
    case CharKind::Oe: return "oe";
    }
    return "?";
}

XSpec XSpec::symbolic(int t)
{
    if (t < 1 || t > kMaxX) throw Error(ErrorKind::ParameterOutOfRange, "symbolic evaluation points need 1 <= t <= 4");
    XSpec xs;
    xs.t_ = t;
    xs.symbolic_ = true;
    return xs;
}

XSpec XSpec::q_powers(int t, int a, int b)
{
    if (t < 1) throw Error(ErrorKind::ParameterOutOfRange, "need t >= 1");
    XSpec xs;
    xs.t_ = t;
    xs.symbolic_ = false;
    xs.a_ = a;
    xs.b_ = b;
    return xs;
}

Poly XSpec::x(int i) const { return x_pow(i, 1); }

Poly XSpec::x_pow(int i, long e) const
{
    if (symbolic_) return Poly::variable(x_var(i), static_cast<int>(e));
    return Poly::variable(Var::q, static_cast<int>(e * (a_ * i + b_)));
}

std::string XSpec::str() const
{
    if (symbolic_) return "x_1..x_" + std::to_string(t_);
    std::string e = std::to_string(a_) + "i";
    if (b_ > 0) e += "+" + std::to_string(b_);
    if (b_ < 0) e += std::to_string(b_);
    return "x_i=q^(" + e + "), t=" + std::to_string(t_);
}

Poly determinant(std::vector<std::vector<Poly>> m)
{
    std::size_t n = m.size();
    if (n == 0) return Poly(1);
    int sign = 1;
    Poly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Poly();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divide_exact(prev);
                if (!q) throw Error(ErrorKind::NonDivisible, "Bareiss step is not exact");
                m[i][j] = std::move(*q);
            }
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

Poly char_eval(CharKind kind, const Partition& mu, const XSpec& xs)
{
    int n = xs.t();
    if (mu.length() > n) throw Error(ErrorKind::ParameterOutOfRange, "the index has more parts than variables");
    auto entry = [&](int i, long lam_j, int j) -> Poly {
        switch (kind) {
        case CharKind::Schur: return xs.x_pow(i, lam_j + n - j);
        case CharKind::Sp: return xs.x_pow(i, lam_j + n - j + 1) - xs.x_pow(i, -(lam_j + n - j + 1));
        case CharKind::Oo: return xs.x_pow(i, lam_j + n - j + 1) - xs.x_pow(i, -(lam_j + n - j));
        case CharKind::Oe: return xs.x_pow(i, lam_j + n - j) + xs.x_pow(i, -(lam_j + n - j));
        }
        return Poly();
    };
    std::vector<std::vector<Poly>> num(n, std::vector<Poly>(n)), den(n, std::vector<Poly>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            num[i - 1][j - 1] = entry(i, mu.part(j), j);
            den[i - 1][j - 1] = entry(i, 0, j);
        }
    }
    std::optional<Poly> q = dense_ratio(num, den);
    if (!q) {
        Poly d = determinant(std::move(den));
        if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "the evaluation points are not generic: " + xs.str());
        q = determinant(std::move(num)).divide_exact(d);
    }
    if (!q) throw Error(ErrorKind::NonDivisible, std::string(char_kind_name(kind)) + " alternant quotient for " + mu.str());
    // The even orthogonal character carries 2 / (1 + [mu_n = 0]).
    if (kind == CharKind::Oe && mu.part(n) > 0) return q->scaled(2);
    return *q;
}

CharKind char_kind_for(RootType type)
{
    switch (type) {
    case RootType::A: return CharKind::Schur;
    case RootType::C:
    case RootType::BV: return CharKind::Sp;
    case RootType::B:
    case RootType::CV:
    case RootType::BC: return CharKind::Oo;
    case RootType::D: return CharKind::Oe;
    }
    return CharKind::Schur;
}

XSpec specialization_for(RootType type, int t)
{
    switch (char_kind_for(type)) {
    case CharKind::Schur:
    case CharKind::Sp: return XSpec::q_powers(t, 1, 0);
    case CharKind::Oo:
    case CharKind::Oe: return XSpec::q_powers(t, 2, -1);
    }
    return XSpec::q_powers(t, 1, 0);
}

Partition character_index(const VCoding& vc, RootType type)
{
    std::vector<int> parts;
    for (int i = 1; i <= vc.t; ++i) {
        long m = type == RootType::A ? vc.v[i - 1] - vc.v[vc.t - 1] + i - vc.t : vc.v[i - 1] + i - vc.g;
        if (m < 0) throw Error(ErrorKind::InvalidParts, "negative character index entry");
        if (m > 0) parts.push_back(static_cast<int>(m));
    }
    return Partition(parts);
}

Poly char_hook_form(const Partition& lambda, const FamilyTag& tag, std::optional<Rational> q_value)
{
    if (!in_family(lambda, tag)) throw Error(ErrorKind::NotInFamily, lambda.str() + " not in " + tag.str());
    RootType type = root_type_of(tag);
    if (type == RootType::A) throw Error(ErrorKind::ParameterOutOfRange, "type A has no hook form of its character");
    long g = tag.g;
    bool spread = char_kind_for(type) != CharKind::Sp;  // q -> q^2 in the box product
    long k = spread ? 2 : 1;
    bool skip_multiples = tag.family == Family::DDp1 || tag.family == Family::DDp2;

    // Numerator and denominator are kept apart and divided once at the end.
    Dense num = dense_one(), den = dense_one();
    Rational num_v(1), den_v(1);
    auto factor = [&](bool top, int s, long e) {
        if (q_value) {
            (top ? num_v : den_v) *= binomial_at(s, e, *q_value);
        } else {
            Dense& target = top ? num : den;
            target = times_binomial(target, s, e);
        }
    };

    long sign_count = 0;
    int d = lambda.durfee();
    for (const auto& hb : hook_boxes(lambda)) {
        long h = hb.hook;
        if (h < g && hb.eps == 1) {
            ++sign_count;
            if (hb.diagonal() && type != RootType::C && type != RootType::BV && type != RootType::D) ++sign_count;
        }
        if (!skip_multiples || h % g != 0) {
            factor(true, -1, k * (h - hb.eps * g));
            factor(false, -1, k * h);
        }
        if (!hb.diagonal() || type == RootType::D) continue;
        if (spread) {
            factor(true, -1, g + h);
            factor(false, -1, h - g);
        } else {
            factor(true, 1, (g + h) / 2);
            factor(false, 1, (h - g) / 2);
        }
    }
    long shift = durfee_power(type, g) * d;
    int sign = sign_count % 2 == 0 ? 1 : -1;
    if (q_value) {
        if (den_v == 0) throw Error(ErrorKind::ZeroDenominator, "hook form vanishes in the denominator at q = " + q_value->get_str());
        return Poly(sign * power_at(*q_value, shift) * num_v / den_v);
    }
    auto quotient = dense_div(num, den);
    if (!quotient) throw Error(ErrorKind::NonDivisible, "hook form of " + lambda.str() + " is not a Laurent polynomial");
    return from_dense(*quotient).shifted(mono_of(Var::q, static_cast<int>(shift))).scaled(sign);
}

Poly type_d_hook_form_corrected(const Partition& lambda, const FamilyTag& tag)
{
    if (!in_family(lambda, tag)) throw Error(ErrorKind::NotInFamily, lambda.str() + " not in " + tag.str());
    if (root_type_of(tag) != RootType::D) throw Error(ErrorKind::TagMismatch, "the corrected form is specific to type D");
    long g = tag.g;
    Dense num = dense_one(), den = dense_one();
    long sign_count = 0;
    for (const auto& hb : hook_boxes(lambda)) {
        if (hb.hook < g && hb.eps == 1) ++sign_count;
        if (hb.hook % g == 0) continue;
        num = times_binomial(num, -1, 2L * (hb.hook - hb.eps * g));
        den = times_binomial(den, -1, 2L * hb.hook);
    }
    VCoding vc = vcoding(lambda, tag);
    std::vector<Rational> r = r_vector(vc, tag);
    for (int i = 0; i < tag.t; ++i) {
        if (vc.sigma[i] != g / 2 - 1) num = times_binomial(num, -1, 2 * r[i].get_num().get_si());
    }
    for (long i = 1; i < tag.t; ++i) den = times_binomial(den, -1, 2 * i);
    auto quotient = dense_div(num, den);
    if (!quotient) throw Error(ErrorKind::NonDivisible, "corrected hook form of " + lambda.str() + " is not a Laurent polynomial");
    long shift = -character_index(vc, RootType::D).weight();
    return from_dense(*quotient).shifted(mono_of(Var::q, static_cast<int>(shift))).scaled(sign_count % 2 == 0 ? 1 : -1);
}

Poly type_d_character_principal(const Partition& mu, int t)
{
    Poly c = char_eval(CharKind::Oe, mu, XSpec::q_powers(t, 2, -2));
    return mu.part(t) > 0 ? c.scaled(Rational(1, 2)) : c;
}

} // namespace maclab
