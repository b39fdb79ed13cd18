#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maclab/errors.hpp"
#include "maclab/littlewood.hpp"
#include "maclab/vcoding.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

using namespace maclab;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const Partition kFig3 = Partition({11, 6, 4, 2, 2, 1, 1, 1, 1, 1});

constexpr RootType kTypes[] = {RootType::A, RootType::C, RootType::B, RootType::BV,
                               RootType::CV, RootType::BC, RootType::D};

/** Ranks exercised per type; type D needs g = 2t - 2 >= 4. */
std::vector<int> ranks(RootType type)
{
    return type == RootType::D ? std::vector<int>{3, 4, 5, 6} : std::vector<int>{2, 3, 4, 5, 6};
}

/** Membership read off the definitions, independently of the library. */
bool oracle_member(const Partition& p, const FamilyTag& tag)
{
    const auto& parts = p.parts();
    bool g_core = oracle::core(parts, tag.g) == parts;
    switch (tag.family) {
    case Family::P: return g_core;
    case Family::DD: return oracle::is_dd(parts) && g_core;
    case Family::SC: return oracle::is_sc(parts) && g_core;
    default: break;
    }
    // DD' decorated families: every g-quotient component is empty except the
    // rectangle on runner g-1 and (DDp2) the square on runner g/2-1.
    if (!oracle::is_ddp(parts)) return false;
    auto nu = oracle::quotient(parts, tag.g);
    auto is_shape = [](const oracle::Parts& q, const Partition& shape) { return q == shape.parts(); };
    bool rect = false;
    for (int m = 1; m <= 8 && !rect; ++m) rect = is_shape(nu[tag.g - 1], rectangle_quotient(m));
    bool square = tag.family == Family::DDp1;
    int sq = tag.g / 2 - 1;
    for (int m = 0; m <= 8 && !square; ++m) square = is_shape(nu[sq], square_quotient(m));
    for (int r = 0; r < tag.g - 1; ++r) {
        if (!(tag.family == Family::DDp2 && r == sq) && !nu[r].empty()) return false;
    }
    return rect && square;
}

} // namespace

TEST_CASE("phi on the worked examples")
{
    CHECK(phi(P({4, 2}), 3) == std::vector<long>{2, -1, -1});
    CHECK(phi(P({}), 4) == std::vector<long>{0, 0, 0, 0});
    CHECK(phi(kFig3, 6) == std::vector<long>{0, 1, -2, 0, 2, -1});
    CHECK(phi_inverse({2, -1, -1}) == P({4, 2}));
    CHECK(core_weight({2, -1, -1}) == 6);
    CHECK(core_weight({0, 0, 0}) == 0);
    CHECK_THROWS_AS(phi(P({2}), 2), Error);
    CHECK_THROWS_AS(phi_inverse({1, 0}), Error);
}

TEST_CASE("phi is a weight-preserving bijection on cores")
{
    for (int t = 2; t <= 6; ++t) {
        std::set<std::vector<long>> images;
        for (const auto& p : all_partitions(40 - 10 * (t == 2))) {
            if (!is_core(p, t)) continue;
            auto n = phi(p, t);
            CHECK(std::accumulate(n.begin(), n.end(), 0L) == 0);
            CHECK(core_weight(n) == p.weight());
            CHECK(phi_inverse(n) == p);
            images.insert(n);
        }
        // Every zero-sum vector in a small box whose core is light enough is hit.
        std::vector<long> n(t, 0);
        std::function<void(int, long)> walk = [&](int i, long sum) {
            if (i == t - 1) {
                n[i] = -sum;
                if (core_weight(n) <= 30 - 10 * (t == 2)) CHECK(images.count(n) == 1);
                return;
            }
            for (long x = -3; x <= 3; ++x) {
                n[i] = x;
                walk(i + 1, sum + x);
            }
        };
        walk(0, 0);
    }
}

TEST_CASE("family vectors on the worked example")
{
    FamilyTag dd6{Family::DD, 6, 2};
    CHECK(in_family(kFig3, dd6));
    FamilyVector v = to_family_vector(kFig3, dd6);
    CHECK(v.core == std::vector<long>{1, -2});
    CHECK(family_weight(v) == 30);
    CHECK(from_family_vector(v) == kFig3);

    for (RootType type : kTypes) {
        for (int t : ranks(type)) {
            FamilyTag tag = tag_for(type, t);
            FamilyVector e = to_family_vector(P({}), tag);
            CHECK(family_weight(e) == 0);
            CHECK(from_family_vector(e).empty());
            CHECK(std::all_of(e.core.begin(), e.core.end(), [](long x) { return x == 0; }));
        }
    }
    // m1 = 1 on the rectangle family carries an empty rectangle.
    FamilyTag b3 = tag_for(RootType::B, 3);
    FamilyVector r{b3, std::vector<long>(2, 0), 1, 0};
    CHECK(family_weight(r) == 0);
    CHECK_THROWS_AS(to_family_vector(P({3}), dd6), Error);
}

TEST_CASE("decorating quotient shapes")
{
    for (int m = 1; m <= 6; ++m) {
        Partition r = rectangle_quotient(m);
        CHECK(r.weight() == m * (m - 1));
        CHECK(r.weight() == r.length() * r.part(1));  // a rectangle
        Partition s = square_quotient(m);
        CHECK(s == Partition(std::vector<int>(m, m)));
    }
}

TEST_CASE("tags follow the type table")
{
    CHECK(tag_for(RootType::A, 3) == FamilyTag{Family::P, 3, 3});
    CHECK(tag_for(RootType::C, 2) == FamilyTag{Family::DD, 6, 2});
    CHECK(tag_for(RootType::B, 3) == FamilyTag{Family::DDp1, 5, 3});
    CHECK(tag_for(RootType::BV, 3) == FamilyTag{Family::DDp1, 6, 3});
    CHECK(tag_for(RootType::CV, 2) == FamilyTag{Family::SC, 4, 2});
    CHECK(tag_for(RootType::BC, 2) == FamilyTag{Family::DD, 5, 2});
    CHECK(tag_for(RootType::D, 4) == FamilyTag{Family::DDp2, 6, 4});
    for (RootType type : kTypes) CHECK(root_type_of(tag_for(type, 4)) == type);
}

TEST_CASE("enumeration matches the membership definitions")
{
    for (RootType type : kTypes) {
        for (int t : ranks(type)) {
            FamilyTag tag = tag_for(type, t);
            std::vector<Partition> filtered;
            for (const auto& p : all_partitions(20)) {
                bool member = in_family(p, tag);
                INFO(tag.str(), " ", p.str());
                CHECK(member == oracle_member(p, tag));
                if (member) filtered.push_back(p);
            }
            CHECK(enumerate(tag, 20) == filtered);
        }
    }
}

TEST_CASE("family vectors round trip and give the weight")
{
    for (RootType type : kTypes) {
        for (int t : ranks(type)) {
            FamilyTag tag = tag_for(type, t);
            std::set<std::vector<long>> seen;
            for (const auto& p : enumerate(tag, 40)) {
                FamilyVector v = to_family_vector(p, tag);
                CHECK(v.tag == tag);
                CHECK(family_weight(v) == p.weight());
                CHECK(from_family_vector(v) == p);
                auto key = v.core;
                key.push_back(v.m1);
                key.push_back(v.mt);
                CHECK(seen.insert(key).second);
            }
        }
    }
}

TEST_CASE("V-coding of the worked example")
{
    VCoding vc = vcoding(kFig3, 6, 2);
    CHECK(vc.v == std::vector<long>{16, 7});
    CHECK(vc.sigma == std::vector<int>{4, 1});
    auto r = r_vector(vc, FamilyTag{Family::DD, 6, 2});
    CHECK(r == std::vector<Rational>{13, 4});
    CHECK(weight_from_r(r, FamilyTag{Family::DD, 6, 2}) == 30);
    CHECK(vcoding_inverse(vc.v, FamilyTag{Family::DD, 6, 2}) == kFig3);

    for (int t = 2; t <= 6; ++t) {
        FamilyTag c = tag_for(RootType::C, t);
        VCoding e = vcoding(P({}), c);
        for (int i = 1; i <= t; ++i) {
            CHECK(e.v[i - 1] == c.g - i);
            CHECK(r_vector(e, c)[i - 1] == t + 1 - i);
        }
        FamilyTag sc = tag_for(RootType::CV, t);
        auto rs = r_vector(vcoding(P({}), sc), sc);
        for (int i = 0; i < t; ++i) {
            CHECK(rs[i] > 0);
            CHECK(rs[i].get_den() == 2);
            if (i > 0) CHECK(rs[i] < rs[i - 1]);
        }
    }
    CHECK_THROWS_AS(vcoding(P({3}), tag_for(RootType::C, 2)), Error);
}

TEST_CASE("V-coding invariants and inverse")
{
    for (RootType type : kTypes) {
        for (int t : ranks(type)) {
            FamilyTag tag = tag_for(type, t);
            bool core_family = tag.family == Family::DD || tag.family == Family::SC;
            for (const auto& p : enumerate(tag, 40)) {
                VCoding vc = vcoding(p, tag);
                INFO(tag.str(), " ", p.str());
                REQUIRE(vc.v.size() == static_cast<std::size_t>(t));
                std::set<int> residues;
                for (int i = 0; i < t; ++i) {
                    if (i > 0) CHECK(vc.v[i] < vc.v[i - 1]);
                    long m = ((vc.v[i] % tag.g) + tag.g) % tag.g;
                    CHECK(m == vc.sigma[i]);
                    residues.insert(vc.sigma[i]);
                    if (core_family) CHECK(2 * vc.v[i] >= tag.g);
                }
                CHECK(residues.size() == static_cast<std::size_t>(t));
                CHECK((vc.parity == 0 || vc.parity == 1));
                CHECK(vcoding_inverse(vc.v, tag) == p);
                CHECK(weight_from_r(r_vector(vc, tag), tag) == p.weight());
            }
        }
    }
}

TEST_CASE("type A coding reads the charges by floor division")
{
    for (int t = 2; t <= 6; ++t) {
        for (const auto& p : enumerate(tag_for(RootType::A, t), 30)) {
            VCoding vc = vcoding(p, t, t);
            auto n = phi(p, t);
            std::vector<long> rebuilt(t, 0);
            for (int i = 0; i < t; ++i) {
                long q = vc.v[i] >= 0 ? vc.v[i] / t : -((-vc.v[i] + t - 1) / t);
                rebuilt[vc.sigma[i]] = q;
            }
            CHECK(rebuilt == n);
        }
    }
}

TEST_CASE("sorting parity counts increasing pairs")
{
    CHECK(sorting_parity({4, 1}) == 0);
    CHECK(sorting_parity({1, 4}) == 1);
    CHECK(sorting_parity({3, 2, 1}) == 0);
    CHECK(sorting_parity({1, 2, 3}) == 1);
    CHECK(reflection_sum(Family::DD, 6) == 6);
    CHECK(reflection_sum(Family::SC, 4) == 3);
    CHECK(reflection_sum(Family::DDp1, 5) == 3);
}
