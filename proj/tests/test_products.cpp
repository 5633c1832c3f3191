#include "doctest.h"

#include <algorithm>
#include <map>

#include "eorbit/orbits.hpp"
#include "eorbit/rootsystem.hpp"
#include "eorbit/weylgroup.hpp"

using namespace eorbit;

namespace {

struct Ctx {
    RootSystemData sys;
    WeylGroup W;
};

Ctx ctx_of(const char* name) {
    auto s = build(DiagramSpec::parse(name));
    auto W = WeylGroup::generate(s);
    return Ctx{s, W};
}

QVec qv(std::initializer_list<long long> v) {
    QVec r;
    for (auto x : v) r.push_back(Rat(x));
    return r;
}

std::map<QVec, long long> as_map(const OrbitDecomposition& d) {
    std::map<QVec, long long> m;
    for (const auto& t : d.terms) m[t.rep] += t.multiplicity;
    return m;
}

long long orbit_points_total(const Ctx& c, const OrbitDecomposition& d,
                             const ChamberConfig& cfg = {}) {
    long long total = 0;
    for (const auto& t : d.terms)
        total += t.multiplicity * static_cast<long long>(we_orbit(c.sys, c.W, t.rep, cfg).size());
    return total;
}

}  // namespace

TEST_CASE("product with the origin orbit") {
    for (const char* name : {"A2", "C2", "G2"}) {
        auto c = ctx_of(name);
        for (auto lam : {qv({1, 2}), qv({-1, 3}), qv({2, 0})}) {
            Orbit o = we_orbit(c.sys, c.W, lam);
            OrbitDecomposition d = product_decompose(c.sys, c.W, qv({0, 0}), lam);
            REQUIRE(d.terms.size() == 1);
            CHECK(d.terms[0].rep == o.rep);
            CHECK(d.terms[0].multiplicity == 1);
        }
    }
}

TEST_CASE("known small product") {
    auto a2 = ctx_of("A2");
    OrbitDecomposition d = product_decompose(a2.sys, a2.W, qv({1, 0}), qv({0, 1}));
    CHECK(as_map(d) == std::map<QVec, long long>{
                           {qv({0, 0}), 3}, {qv({-1, 2}), 1}, {qv({1, 1}), 1}});
    CHECK(d.multiplicity_of(qv({0, 0})) == 3);
    CHECK(d.multiplicity_of(qv({1, 1})) == 1);
    CHECK(d.multiplicity_of(qv({5, 5})) == 0);

    auto c2 = ctx_of("C2");
    OrbitDecomposition sq = product_decompose(c2.sys, c2.W, qv({1, 0}), qv({1, 0}));
    CHECK(as_map(sq) == std::map<QVec, long long>{
                            {qv({0, 0}), 4}, {qv({0, 1}), 2}, {qv({2, 0}), 1}});
}

TEST_CASE("point count conservation") {
    for (const char* name : {"A2", "C2", "G2"}) {
        auto c = ctx_of(name);
        for (long long l1 = 0; l1 <= 2; ++l1)
            for (long long l2 = 0; l2 <= 2; ++l2)
                for (long long m1 = 0; m1 <= 2; ++m1)
                    for (long long m2 = 0; m2 <= 2; ++m2) {
                        QVec lam = qv({l1, l2}), mu = qv({m1, m2});
                        OrbitDecomposition d = product_decompose(c.sys, c.W, lam, mu);
                        long long expect =
                            static_cast<long long>(we_orbit(c.sys, c.W, lam).size()) *
                            static_cast<long long>(we_orbit(c.sys, c.W, mu).size());
                        CHECK(orbit_points_total(c, d) == expect);
                        for (const auto& t : d.terms) {
                            CHECK(t.multiplicity >= 1);
                            // Representatives are canonical.
                            CHECK(we_orbit(c.sys, c.W, t.rep).rep == t.rep);
                        }
                        CHECK(std::is_sorted(
                            d.terms.begin(), d.terms.end(),
                            [](const OrbitTerm& x, const OrbitTerm& y) {
                                return x.rep < y.rep;
                            }));
                        // No repeated representative.
                        CHECK(as_map(d).size() == d.terms.size());
                    }
    }
}

TEST_CASE("products commute") {
    for (const char* name : {"A2", "C2", "G2", "A3"}) {
        auto c = ctx_of(name);
        QVec lam(c.sys.rank, Rat(1));
        QVec mu(c.sys.rank, Rat(0));
        mu[0] = Rat(2);
        lam[c.sys.rank - 1] = Rat(2);
        OrbitDecomposition ab = product_decompose(c.sys, c.W, lam, mu);
        OrbitDecomposition ba = product_decompose(c.sys, c.W, mu, lam);
        CHECK(as_map(ab) == as_map(ba));
    }
}

TEST_CASE("strict product with points off the walls has multiplicity one") {
    // For strictly dominant lambda and mu where no sum w lambda + mu lands on
    // a chamber wall, each resulting orbit appears exactly once.
    auto a2 = ctx_of("A2");
    QVec lam = qv({4, 1}), mu = qv({1, 2});
    Orbit ol = we_orbit(a2.sys, a2.W, lam);
    bool onWall = false;
    for (const auto& p : ol.points) {
        QVec s(p.size());
        for (size_t i = 0; i < p.size(); ++i) s[i] = p[i] + mu[i];
        if (we_orbit(a2.sys, a2.W, s).size() != a2.W.evenOrder()) onWall = true;
    }
    REQUIRE(!onWall);
    OrbitDecomposition d = product_decompose(a2.sys, a2.W, lam, mu);
    CHECK(d.terms.size() == ol.size());
    for (const auto& t : d.terms) CHECK(t.multiplicity == 1);
}

TEST_CASE("split root choice does not change the point content") {
    for (const char* name : {"A2", "C2"}) {
        auto c = ctx_of(name);
        ChamberConfig alt;
        alt.splitRoot = c.sys.highestRootIndex;
        for (auto [lam, mu] : std::initializer_list<std::pair<QVec, QVec>>{
                 {qv({1, 1}), qv({1, 1})},
                 {qv({-1, 2}), qv({2, 0})},
                 {qv({1, -1}), qv({0, 2})},
                 {qv({-2, 1}), qv({1, 2})}}) {
            OrbitDecomposition d1 = product_decompose(c.sys, c.W, lam, mu);
            OrbitDecomposition d2 = product_decompose(c.sys, c.W, lam, mu, alt);
            std::map<QVec, long long> pts1, pts2;
            for (const auto& t : d1.terms)
                for (const auto& p : we_orbit(c.sys, c.W, t.rep).points)
                    pts1[p] += t.multiplicity;
            for (const auto& t : d2.terms)
                for (const auto& p : we_orbit(c.sys, c.W, t.rep, alt).points)
                    pts2[p] += t.multiplicity;
            CHECK(pts1 == pts2);
            CHECK(d1.terms.size() == d2.terms.size());
        }
    }
}
