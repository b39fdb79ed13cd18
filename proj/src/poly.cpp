#include "maclab/poly.hpp"

#include "maclab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace maclab {

namespace {

const char* kVarNames[kNumVars] = {"q", "u", "t", "z", "x1", "x2", "x3", "x4"};

/** Merge two sorted term lists, adding coefficients of equal monomials. */
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b)
{
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            Rational c = a[i].second + b[j].second;
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

bool within_cap(const Mono& m, VarSet capped, int cap)
{
    if (cap < 0) return true;
    int d = capped_degree(m, capped);
    if (d < 0) {
        throw Error(ErrorKind::RingMismatch, "negative degree in a truncated variable");
    }
    return d <= cap;
}

} // namespace

VarSet x_vars(int count)
{
    VarSet s = 0;
    for (int i = 1; i <= count; ++i) s |= var_bit(x_var(i));
    return s;
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::string describe_vars(VarSet vars)
{
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (vars & (VarSet(1) << i)) {
            if (!out.empty()) out += ",";
            out += kVarNames[i];
        }
    }
    return out.empty() ? "-" : out;
}

int capped_degree(const Mono& m, VarSet vars)
{
    int d = 0;
    for (int i = 0; i < kNumVars; ++i) {
        if (vars & (VarSet(1) << i)) d += m[i];
    }
    return d;
}

Mono unit_mono()
{
    Mono m{};
    return m;
}

Mono mono_of(Var v, int exponent)
{
    Mono m{};
    m[static_cast<int>(v)] = exponent;
    return m;
}

Mono mono_add(const Mono& a, const Mono& b)
{
    Mono m;
    for (int i = 0; i < kNumVars; ++i) m[i] = a[i] + b[i];
    return m;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Poly::Poly(long c)
{
    if (c != 0) terms_.emplace_back(unit_mono(), Rational(c));
}

Poly::Poly(const Rational& c)
{
    if (c != 0) terms_.emplace_back(unit_mono(), c);
}

Poly Poly::variable(Var v, int exponent) { return monomial(mono_of(v, exponent), 1); }

Poly Poly::monomial(const Mono& m, const Rational& c)
{
    Poly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
}

Poly Poly::monomial(Var v, int exponent, const Rational& c) { return monomial(mono_of(v, exponent), c); }

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == unit_mono()); }

Rational Poly::constant_term() const { return coefficient(unit_mono()); }

Rational Poly::coefficient(const Mono& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
        [](const Term& t, const Mono& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

VarSet Poly::variables() const
{
    VarSet s = 0;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] != 0) s |= VarSet(1) << i;
        }
    }
    return s;
}

int Poly::min_degree(Var v) const
{
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m[static_cast<int>(v)];
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

int Poly::max_degree(Var v) const
{
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m[static_cast<int>(v)];
        if (first || e > best) best = e;
        first = false;
    }
    return best;
}

int Poly::min_capped_degree(VarSet vars) const
{
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = capped_degree(m, vars);
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

int Poly::max_capped_degree(VarSet vars) const
{
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = capped_degree(m, vars);
        if (first || e > best) best = e;
        first = false;
    }
    return best;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = other.terms_;
        return *this;
    }
    terms_ = merge_terms(terms_, other.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other)
{
    *this = multiply(*this, other);
    return *this;
}

bool Poly::operator==(const Poly& other) const
{
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != other.terms_[i].first || terms_[i].second != other.terms_[i].second) return false;
    }
    return true;
}

Poly Poly::multiply(const Poly& a, const Poly& b, VarSet capped, int cap)
{
    if (a.is_zero() || b.is_zero()) return Poly();
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& big = a.size() <= b.size() ? b : a;

    // Shifting a sorted term list by a fixed monomial keeps it sorted, so
    // products with short factors reduce to a chain of linear merges.
    if (small.size() <= 16) {
        std::vector<Term> acc;
        for (const auto& [sm, sc] : small.terms_) {
            std::vector<Term> part;
            part.reserve(big.size());
            for (const auto& [bm, bc] : big.terms_) {
                Mono m = mono_add(sm, bm);
                if (!within_cap(m, capped, cap)) continue;
                part.emplace_back(m, sc * bc);
            }
            acc = acc.empty() ? std::move(part) : merge_terms(acc, part);
        }
        Poly p;
        p.terms_ = std::move(acc);
        return p;
    }

    std::vector<Term> all;
    all.reserve(a.size() * b.size());
    for (const auto& [am, ac] : a.terms_) {
        for (const auto& [bm, bc] : b.terms_) {
            Mono m = mono_add(am, bm);
            if (!within_cap(m, capped, cap)) continue;
            all.emplace_back(m, ac * bc);
        }
    }
    Poly p;
    p.terms_ = std::move(all);
    p.normalize();
    return p;
}

void Poly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && out.back().second == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().second == 0) out.pop_back();
    terms_ = std::move(out);
}

Poly Poly::scaled(const Rational& c) const
{
    if (c == 0) return Poly();
    Poly p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

Poly Poly::shifted(const Mono& m) const
{
    Poly p = *this;
    for (auto& t : p.terms_) t.first = mono_add(t.first, m);
    return p;
}

Poly Poly::pow(long e) const
{
    if (e < 0) return monomial_inverse().pow(-e);
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly Poly::monomial_inverse() const
{
    if (!is_monomial()) throw Error(ErrorKind::NonDivisible, "only monomials are invertible, got " + str());
    Mono m;
    for (int i = 0; i < kNumVars; ++i) m[i] = -terms_[0].first[i];
    return monomial(m, 1 / terms_[0].second);
}

Poly Poly::truncated(VarSet vars, int cap) const
{
    Poly p;
    for (const auto& t : terms_) {
        if (capped_degree(t.first, vars) <= cap) p.terms_.push_back(t);
    }
    return p;
}

Poly Poly::substitute(Var v, const Poly& monomial_value) const
{
    if (monomial_value.is_zero()) {
        // Only terms free of v survive; negative powers of v would divide by zero.
        Poly p;
        for (const auto& t : terms_) {
            int e = t.first[static_cast<int>(v)];
            if (e < 0) throw Error(ErrorKind::ZeroDenominator, std::string("substituting 0 for ") + var_name(v));
            if (e == 0) p.terms_.push_back(t);
        }
        return p;
    }
    if (!monomial_value.is_monomial()) {
        throw Error(ErrorKind::ParameterOutOfRange, "substitution value must be a monomial");
    }
    const Mono& vm = monomial_value.terms_[0].first;
    const Rational& vc = monomial_value.terms_[0].second;
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        int e = m[static_cast<int>(v)];
        Mono nm = m;
        nm[static_cast<int>(v)] = 0;
        Rational nc = c;
        for (int i = 0; i < kNumVars; ++i) nm[i] += e * vm[i];
        if (e != 0) {
            Rational f;
            mpz_pow_ui(f.get_num_mpz_t(), vc.get_num_mpz_t(), std::abs(e));
            mpz_pow_ui(f.get_den_mpz_t(), vc.get_den_mpz_t(), std::abs(e));
            f.canonicalize();
            if (e < 0) f = 1 / f;
            nc *= f;
        }
        p.terms_.emplace_back(nm, nc);
    }
    p.normalize();
    return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const
{
    if (divisor.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
    if (is_zero()) return Poly();
    if (divisor.is_monomial()) return *this * divisor.monomial_inverse();

    // Any quotient term lies in the box spanned by the exponent ranges.
    Mono lo, hi;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        lo[i] = min_degree(v) - divisor.max_degree(v);
        hi[i] = max_degree(v) - divisor.min_degree(v);
    }
    const Term& lead_div = divisor.terms_.back();
    Poly rem = *this;
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& lead = rem.terms_.back();
        Mono m;
        for (int i = 0; i < kNumVars; ++i) {
            m[i] = lead.first[i] - lead_div.first[i];
            if (m[i] < lo[i] || m[i] > hi[i]) return std::nullopt;
        }
        Rational c = lead.second / lead_div.second;
        quotient.emplace_back(m, c);
        rem -= divisor.shifted(m).scaled(c);
    }
    Poly q;
    q.terms_ = std::move(quotient);
    q.normalize();
    return q;
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool is_unit = (m == unit_mono());
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (is_unit || mag != 1) {
            out << mag.get_str();
            wrote = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (wrote) out << "*";
            out << kVarNames[i];
            if (m[i] != 1) out << "^" << m[i];
            wrote = true;
        }
    }
    return out.str();
}

} // namespace maclab
