#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maclab/errors.hpp"
#include "maclab/poly.hpp"
#include "maclab/series.hpp"
#include "oracle.hpp"

#include <random>

using namespace maclab;

namespace {

Poly q(int e = 1) { return Poly::variable(Var::q, e); }
Poly u(int e = 1) { return Poly::variable(Var::u, e); }
Poly z() { return Poly::variable(Var::z); }

const CoeffRing kQ{};                                  // plain rationals
const CoeffRing kQU{var_bit(Var::q) | var_bit(Var::u)}; // Laurent polynomials in q, u
const CoeffRing kZ{var_bit(Var::z)};

/** Integer series from a coefficient list. */
Series from_ints(const std::vector<long long>& c, int order)
{
    Series s(kQ, Base::T, order);
    for (int k = 0; k <= order && k < static_cast<int>(c.size()); ++k) s.set(k, Poly(static_cast<long>(c[k])));
    return s;
}

Series euler(const CoeffRing& ring, int order) { return pochhammer_inf(ring, Base::T, order, Poly(1), 1, 1); }

Series partitions_series(int order)
{
    auto p = oracle::partition_counts(order);
    return from_ints(p, order);
}

Poly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> coef(-3, 3), exp(-2, 2), terms(0, 3);
    Poly p;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) p += q(exp(rng)) * u(exp(rng)) * Poly(coef(rng));
    return p;
}

Series random_series(std::mt19937& rng, int order)
{
    Series s(kQU, Base::T, order);
    for (int k = 0; k <= order; ++k) s.set(k, random_poly(rng));
    return s;
}

} // namespace

TEST_CASE("polynomials are kept in canonical form")
{
    Poly a = q() + u();
    Poly b = u() + q();
    CHECK(a == b);
    CHECK((a - b).is_zero());
    CHECK((q() * q(-1)) == Poly(1));
    CHECK((q() + Poly(1)).pow(2) == q(2) + q() * Poly(2) + Poly(1));
    CHECK(q(3).monomial_inverse() == q(-3));
    CHECK_THROWS_AS((q() + Poly(1)).monomial_inverse(), Error);
    CHECK(Poly(Rational(1, 2)).str() == "1/2");
    CHECK(Poly().str() == "0");
    CHECK(rational_str(Rational(-3, 4)) == "-3/4");
    CHECK((q(2) * u()).substitute(Var::q, u(-1)) == u(-1));
    CHECK((q(2) + Poly(1)).substitute(Var::q, Poly(2)) == Poly(5));
}

TEST_CASE("exact division")
{
    Poly a = Poly(1) - q(6);
    Poly b = Poly(1) - q(2);
    auto r = a.divide_exact(b);
    REQUIRE(r.has_value());
    CHECK(*r == Poly(1) + q(2) + q(4));
    CHECK_FALSE((Poly(1) + q()).divide_exact(Poly(1) - q()).has_value());
    CHECK((q(-2) - q(3)).divide_exact(q(-2)).value() == Poly(1) - q(5));
}

TEST_CASE("polynomial ring axioms")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (b - a) == b);
        if (!b.is_zero()) CHECK((a * b).divide_exact(b).value() == a);
    }
}

TEST_CASE("basic series products")
{
    Series one_plus = from_ints({1, 1}, 2);
    Series one_minus = from_ints({1, -1}, 2);
    CHECK(one_plus * one_minus == from_ints({1, 0, -1}, 2));
    Series short_s = from_ints({1, 2, 3, 4}, 3);
    Series long_s = from_ints({1, 1, 1, 1, 1, 1}, 5);
    CHECK((short_s * long_s).order() == 3);
    CHECK((long_s * short_s).order() == 3);
    CHECK(short_s * long_s == from_ints({1, 3, 6, 10}, 3));
    CHECK(compare(short_s, short_s).equal);
    // Terms beyond the order are invisible: 1 and 1 + T^{N+1} agree at order N.
    Series s = Series::one(kQ, Base::T, 4);
    s.add_to(5, Poly(1));
    CHECK(compare(s, Series::one(kQ, Base::T, 4)).equal);
    CHECK_THROWS_AS(Series(kQ, Base::T, 3) * Series(kQ, Base::S, 3), Error);
    CHECK_THROWS_AS(Series(kQ, Base::T, 3) * Series(kQU, Base::T, 3), Error);
}

TEST_CASE("series ring axioms")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 10;
        Series a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Series(kQU, Base::T, n));
    }
}

TEST_CASE("Euler product and partition numbers")
{
    Series e8 = euler(kQ, 8);
    CHECK(e8 == from_ints({1, -1, -1, 0, 0, 1, 0, 1, 0}, 8));

    int n = 50;
    Series e = euler(kQ, n);
    auto naive = oracle::euler(n);
    auto pent = oracle::pentagonal(n);
    for (int k = 0; k <= n; ++k) {
        long expected = pent.count(k) ? pent.at(k) : 0;
        CHECK(e.coeff(k) == Poly(expected));
        CHECK(naive[k] == expected);
    }
    CHECK(partitions_series(10) * euler(kQ, 10) == Series::one(kQ, Base::T, 10));
    CHECK(euler(kQ, 30).inverse() == partitions_series(30));
    CHECK(partitions_series(6).coeff(6) == Poly(11));
}

TEST_CASE("Pochhammer symbols")
{
    Series s = pochhammer_inf(kQU, Base::T, 2, q(), 1, 1);
    Series expected(kQU, Base::T, 2);
    expected.set(0, Poly(1));
    expected.set(1, -q());
    expected.set(2, -q());
    CHECK(s == expected);
    CHECK(pochhammer_inf(kQU, Base::T, 3, q(), 1, 1).coeff(3) == q(2) - q());
    // The empty product: a zero exponent gives 1.
    CHECK(one_minus_pow(kQU, Base::T, 5, u(), 1, 0) == Series::one(kQU, Base::T, 5));
    // (1 - uT)^{-1} is the geometric series.
    Series geo = one_minus_pow(kQU, Base::T, 5, u(), 1, -1);
    for (int k = 0; k <= 5; ++k) CHECK(geo.coeff(k) == u(k));
    // (1 - T^2)^3 by the binomial theorem.
    CHECK(one_minus_pow(kQ, Base::T, 6, Poly(1), 2, 3) == from_ints({1, 0, -3, 0, 3, 0, -1}, 6));
    // (u;T)_infinity starts with the factor 1 - u.
    CHECK(pochhammer_inf(kQU, Base::T, 1, u(), 0, 1).coeff(0) == Poly(1) - u());
    CHECK_THROWS_AS(pochhammer_inf(kQ, Base::T, 4, Poly(1), 1, 0), Error);
}

TEST_CASE("symbolic powers")
{
    Series e = euler(kQ, 12).widened(kZ);
    // exponent z - 1 at z = 0 gives the partition generating series.
    Series f = pow_symbolic(e, z() - Poly(1));
    CHECK(f.substituted(Var::z, Poly(0), kQ) == partitions_series(12));
    // exponent z - 1 at z = 2 gives the Euler product back.
    CHECK(f.substituted(Var::z, Poly(2), kQ) == euler(kQ, 12));
    CHECK(pow_symbolic(e, Poly(0)) == Series::one(kZ, Base::T, 12));
    CHECK(pow_symbolic(e, Poly(2)) == e * e);
    CHECK(euler(kQ, 12).pow(2) == euler(kQ, 12) * euler(kQ, 12));
    CHECK(euler(kQ, 12).pow(-1) == partitions_series(12));
}

TEST_CASE("log, exp and inverse")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Series a = random_series(rng, 6);
        a.set(0, Poly(1));
        CHECK(a.log().exp() == a);
        CHECK(a * a.inverse() == Series::one(kQU, Base::T, 6));
    }
    Series nonunit = from_ints({2, 1}, 3);
    CHECK_THROWS_AS(nonunit.log(), Error);
    CHECK_THROWS_AS(nonunit.exp(), Error);
    CHECK((nonunit * nonunit.inverse()) == Series::one(kQ, Base::T, 3));
    CHECK_THROWS_AS(from_ints({0, 1}, 3).inverse(), Error);
}

TEST_CASE("half-integral base")
{
    // (1 - T) seen in S = T^{1/2} is 1 - S^2.
    Series s = from_ints({1, -1}, 3).to_s_base();
    CHECK(s.base() == Base::S);
    CHECK(s.order() == 6);
    CHECK(s.coeff(2) == Poly(-1));
    CHECK(s.coeff(1).is_zero());
}

TEST_CASE("degree-capped coefficient rings")
{
    CoeffRing capped{var_bit(Var::q) | var_bit(Var::u), var_bit(Var::q), 5};
    Poly inv = inverse_in_ring(Poly(1) - q(), capped);
    CHECK(inv == Poly(1) + q() + q(2) + q(3) + q(4) + q(5));
    CHECK(capped.reduce(q(7) + u()) == u());
    CHECK_THROWS_AS(capped.reduce(q(-1)), Error);
    CHECK_THROWS_AS(kQ.reduce(q()), Error);
    // Products in a capped series ring drop everything beyond the cap.
    Series a(capped, Base::T, 2);
    a.set(0, q(3));
    CHECK((a * a).coeff(0).is_zero());
}
