#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maclab/errors.hpp"
#include "maclab/littlewood.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <random>

using namespace maclab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const Partition kFig3 = Partition({11, 6, 4, 2, 2, 1, 1, 1, 1, 1});

/** A pseudo-random partition of n built from random parts. */
Partition random_partition(std::mt19937& rng, int n)
{
    std::vector<int> parts;
    while (n > 0) {
        std::uniform_int_distribution<int> d(1, n);
        int k = d(rng);
        parts.push_back(k);
        n -= k;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

std::vector<int> quotient_sizes(const Decomposition& d)
{
    std::vector<int> s;
    for (const auto& nu : d.quotient) s.push_back(nu.weight());
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST_CASE("worked decomposition")
{
    Decomposition d = decompose(P({4, 4, 3, 2}), 3);
    CHECK(d.core == P({1}));
    REQUIRE(d.quotient.size() == 3);
    CHECK(d.quotient[0] == P({1, 1}));
    CHECK(d.quotient[1] == P({}));
    CHECK(d.quotient[2] == P({2}));
    CHECK(compose(P({1}), {P({1, 1}), P({}), P({2})}, 3) == P({4, 4, 3, 2}));
    CHECK(compose(P({}), {P({}), P({}), P({})}, 3) == P({}));

    Decomposition f = decompose(kFig3, 6);
    CHECK(f.core == kFig3);
    for (const auto& nu : f.quotient) CHECK(nu.empty());
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(compose(P({2}), {P({}), P({})}, 2), Error);  // (2) is not a 2-core
    CHECK_THROWS_AS(compose(P({}), {P({})}, 2), Error);           // wrong component count
    CHECK_THROWS_AS(decompose(P({1}), 0), Error);
}

TEST_CASE("core and quotient sizes agree with the abacus")
{
    for (int t = 2; t <= 5; ++t) {
        for (const auto& p : all_partitions(15)) {
            Decomposition d = decompose(p, t);
            CHECK(d.core.parts() == oracle::core(p.parts(), t));
            CHECK(quotient_sizes(d) == oracle::quotient_sizes(p.parts(), t));
            CHECK(is_core(d.core, t));
            CHECK(compose(d.core, d.quotient, t) == p);
        }
    }
}

TEST_CASE("cores are fixed points")
{
    for (int t = 2; t <= 6; ++t) {
        for (const auto& p : all_partitions(16)) {
            if (!is_core(p, t)) continue;
            Decomposition d = decompose(p, t);
            CHECK(d.core == p);
            for (const auto& nu : d.quotient) CHECK(nu.empty());
        }
    }
}

TEST_CASE("a t-core is exactly a partition with no hook equal to t")
{
    for (int t = 2; t <= 7; ++t) {
        for (const auto& p : all_partitions(20)) {
            auto h = oracle::hooks(p.parts());
            bool has_t = std::find(h.begin(), h.end(), t) != h.end();
            CHECK(is_core(p, t) == !has_t);
            CHECK(is_core(p, t) == (oracle::core(p.parts(), t) == p.parts()));
        }
    }
}

TEST_CASE("weight splitting and hook transfer on random partitions")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> weight(0, 60), modulus(2, 7);
    for (int trial = 0; trial < 1000; ++trial) {
        Partition p = random_partition(rng, weight(rng));
        int t = modulus(rng);
        Decomposition d = decompose(p, t);
        long total = d.core.weight();
        std::vector<int> scaled;
        for (const auto& nu : d.quotient) {
            total += static_cast<long>(t) * nu.weight();
            for (int h : oracle::hooks(nu.parts())) scaled.push_back(t * h);
        }
        std::sort(scaled.begin(), scaled.end());
        std::vector<int> divisible;
        for (int h : oracle::hooks(p.parts())) {
            if (h % t == 0) divisible.push_back(h);
        }
        CHECK(total == p.weight());
        CHECK(divisible == scaled);
        CHECK(compose(d.core, d.quotient, t) == p);
    }
}

TEST_CASE("structure of symmetric family members")
{
    SUBCASE("self-conjugate, t = 4")
    {
        Partition p = P({5, 3, 3, 1, 1});
        StructureReport r = family_structure(p, 4);
        CHECK(r.pass());
        const auto& nu = r.data.quotient;
        CHECK(nu[0] == nu[3].conjugate());
        CHECK(nu[1] == nu[2].conjugate());
        CHECK(is_self_conjugate(r.data.core));
    }
    SUBCASE("doubled distinct, t = 3")
    {
        StructureReport r = family_structure(P({6, 4, 4, 1, 1}), 3);
        CHECK(r.pass());
        const auto& nu = r.data.quotient;
        CHECK(is_doubled_distinct(nu[0]));
        CHECK(nu[1] == nu[2].conjugate());
    }
    SUBCASE("empty partition")
    {
        StructureReport r = family_structure(P({}), 5);
        CHECK(r.families.size() == 3);
        CHECK(r.pass());
    }
    CHECK_THROWS_AS(family_structure(P({3}), 2), Error);
}

TEST_CASE("structure relations hold exhaustively")
{
    int members = 0;
    for (const auto& p : all_partitions(30)) {
        if (!is_self_conjugate(p) && !is_doubled_distinct(p) && !is_doubled_distinct_conjugate(p)) continue;
        ++members;
        for (int t = 2; t <= 6; ++t) {
            StructureReport r = family_structure(p, t);
            for (const auto& c : r.checks) {
                INFO(p.str(), " t=", t, " ", c.name);
                CHECK(c.holds);
            }
        }
    }
    CHECK(members > 100);
}
