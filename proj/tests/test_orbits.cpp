#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

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

std::set<QVec> point_set(const std::vector<Weight>& pts) {
    return std::set<QVec>(pts.begin(), pts.end());
}

std::set<QVec> neg_set(const std::set<QVec>& pts) {
    std::set<QVec> out;
    for (const auto& p : pts) {
        QVec q;
        for (const auto& r : p) q.push_back(-r);
        out.insert(q);
    }
    return out;
}

}  // namespace

TEST_CASE("orbit points, representatives and kinds") {
    auto a2 = ctx_of("A2");
    Orbit o = we_orbit(a2.sys, a2.W, qv({1, 2}));
    CHECK(o.rep == qv({1, 2}));
    CHECK(o.kind == OrbitKind::FirstType);
    CHECK(o.stabilizerOrder == 1);
    CHECK(point_set(o.points) ==
          std::set<QVec>{qv({1, 2}), qv({-3, 1}), qv({2, -3})});
    CHECK(std::is_sorted(o.points.begin(), o.points.end()));

    // Any point of the orbit reproduces the same orbit.
    for (const auto& p : o.points) {
        Orbit again = we_orbit(a2.sys, a2.W, p);
        CHECK(again.rep == o.rep);
        CHECK(again.points == o.points);
    }

    // The mirror orbit is of second type with the mirrored representative.
    Orbit m = we_orbit(a2.sys, a2.W, qv({-1, 3}));
    CHECK(m.rep == qv({-1, 3}));
    CHECK(m.kind == OrbitKind::SecondType);
    CHECK(point_set(m.points) ==
          std::set<QVec>{qv({-1, 3}), qv({3, -2}), qv({-2, -1})});

    // Wall orbits are of first type.
    Orbit w = we_orbit(a2.sys, a2.W, qv({0, -2}));
    CHECK(w.rep == qv({2, 0}));
    CHECK(w.kind == OrbitKind::FirstType);
    CHECK(point_set(w.points) == std::set<QVec>{qv({2, 0}), qv({-2, 2}), qv({0, -2})});

    Orbit zero = we_orbit(a2.sys, a2.W, qv({0, 0}));
    CHECK(zero.size() == 1);
    CHECK(zero.stabilizerOrder == 3);
}

TEST_CASE("orbit sizes times stabilizer orders") {
    for (const char* name : {"A2", "C2", "G2", "A3", "B3", "C3", "D4"}) {
        auto c = ctx_of(name);
        std::vector<QVec> lams;
        lams.push_back(QVec(c.sys.rank, Rat(1)));       // strictly dominant
        lams.push_back(QVec(c.sys.rank, Rat(0)));       // origin
        QVec wall(c.sys.rank, Rat(1));
        wall[0] = Rat(0);
        lams.push_back(wall);
        for (const auto& lam : lams) {
            Orbit o = we_orbit(c.sys, c.W, lam);
            CHECK(o.size() * o.stabilizerOrder == c.W.evenOrder());
            CHECK(point_set(o.points).size() == o.size());
            CHECK(std::is_sorted(o.points.begin(), o.points.end()));
            // The representative is a point of the orbit.
            CHECK(point_set(o.points).count(o.rep) == 1);
        }
        // A strictly dominant weight has a free orbit.
        CHECK(we_orbit(c.sys, c.W, lams[0]).size() == c.W.evenOrder());
    }
}

TEST_CASE("full Weyl orbit splits into two even orbits") {
    for (const char* name : {"A2", "C2", "G2", "A3", "B3", "C3"}) {
        auto c = ctx_of(name);
        QVec lam(c.sys.rank, Rat(1));
        lam[0] = Rat(2);
        auto full = point_set(w_orbit_points(c.sys, c.W, lam));
        auto ra = root_reflection(c.sys, resolve_split_root(c.sys, {}));
        auto plus = point_set(we_orbit(c.sys, c.W, lam).points);
        auto minus = point_set(we_orbit(c.sys, c.W, mat_apply(ra.matrix, lam)).points);
        CHECK(plus.size() + minus.size() == full.size());
        std::set<QVec> uni = plus;
        uni.insert(minus.begin(), minus.end());
        CHECK(uni == full);
        // Disjoint halves.
        for (const auto& p : plus) CHECK(minus.count(p) == 0);

        // On a wall the even orbit is the whole Weyl orbit.
        QVec wall(c.sys.rank, Rat(1));
        wall[0] = Rat(0);
        CHECK(point_set(we_orbit(c.sys, c.W, wall).points) ==
              point_set(w_orbit_points(c.sys, c.W, wall)));
    }
}

TEST_CASE("strict orbits of B3 and C3 are not closed under negation") {
    // Minus one is an odd element of these Weyl groups, so the negative of a
    // strict even orbit is the mirror orbit.
    for (const char* name : {"B3", "C3"}) {
        auto c = ctx_of(name);
        QVec lam = qv({1, 1, 1});
        auto ra = root_reflection(c.sys, resolve_split_root(c.sys, {}));
        auto plus = point_set(we_orbit(c.sys, c.W, lam).points);
        auto minus = point_set(we_orbit(c.sys, c.W, mat_apply(ra.matrix, lam)).points);
        CHECK(neg_set(plus) == minus);
        QVec negLam;
        for (const auto& r : lam) negLam.push_back(-r);
        CHECK(plus.count(negLam) == 0);
    }
    // In C2 and G2 minus one is even and strict orbits are symmetric.
    for (const char* name : {"C2", "G2"}) {
        auto c = ctx_of(name);
        auto plus = point_set(we_orbit(c.sys, c.W, qv({2, 1})).points);
        CHECK(neg_set(plus) == plus);
    }
}

TEST_CASE("selected tabulated orbits") {
    auto g2 = ctx_of("G2");
    CHECK(point_set(we_orbit(g2.sys, g2.W, qv({1, 1})).points) ==
          std::set<QVec>{qv({1, 1}), qv({3, -4}), qv({-2, 5}), qv({-1, -1}),
                         qv({-3, 4}), qv({2, -5})});
    CHECK(point_set(we_orbit(g2.sys, g2.W, qv({1, 0})).points) ==
          std::set<QVec>{qv({1, 0}), qv({-1, 3}), qv({2, -3}), qv({-1, 0}),
                         qv({1, -3}), qv({-2, 3})});
    auto c2 = ctx_of("C2");
    CHECK(point_set(we_orbit(c2.sys, c2.W, qv({0, 1})).points) ==
          std::set<QVec>{qv({0, 1}), qv({2, -1}), qv({0, -1}), qv({-2, 1})});
    auto a3 = ctx_of("A3");
    CHECK(point_set(we_orbit(a3.sys, a3.W, qv({1, 0, 0})).points) ==
          std::set<QVec>{qv({1, 0, 0}), qv({-1, 1, 0}), qv({0, 0, -1}),
                         qv({0, -1, 1})});
    CHECK(point_set(we_orbit(a3.sys, a3.W, qv({0, 1, 0})).points) ==
          std::set<QVec>{qv({0, 1, 0}), qv({1, -1, 1}), qv({1, 0, -1}),
                         qv({-1, 1, -1}), qv({0, -1, 0}), qv({-1, 0, 1})});
    auto b3 = ctx_of("B3");
    CHECK(point_set(we_orbit(b3.sys, b3.W, qv({0, 0, 1})).points) ==
          std::set<QVec>{qv({0, 0, 1}), qv({1, -1, 1}), qv({0, 1, -1}),
                         qv({-1, 0, 1}), qv({0, 0, -1}), qv({-1, 1, -1}),
                         qv({0, -1, 1}), qv({1, 0, -1})});
    CHECK(point_set(we_orbit(b3.sys, b3.W, qv({1, 0, 0})).points) ==
          std::set<QVec>{qv({1, 0, 0}), qv({1, -1, 0}), qv({0, 1, -2}),
                         qv({-1, 0, 0}), qv({-1, 1, 0}), qv({0, -1, 2})});
    auto c3 = ctx_of("C3");
    CHECK(point_set(we_orbit(c3.sys, c3.W, qv({0, 0, 1})).points) ==
          std::set<QVec>{qv({0, 0, 1}), qv({0, 2, -1}), qv({2, -2, 1}),
                         qv({2, 0, -1}), qv({0, 0, -1}), qv({0, -2, 1}),
                         qv({-2, 2, -1}), qv({-2, 0, 1})});
}

TEST_CASE("signed orbits") {
    auto a2 = ctx_of("A2");
    SignedOrbit s = signed_orbit(a2.sys, a2.W, qv({1, 2}));
    CHECK(s.points.size() == 6);
    std::set<QVec> plus, minus;
    for (const auto& sp : s.points) {
        CHECK((sp.sign == 1 || sp.sign == -1));
        (sp.sign == 1 ? plus : minus).insert(sp.point);
    }
    CHECK(plus == point_set(we_orbit(a2.sys, a2.W, qv({1, 2})).points));
    CHECK(minus == point_set(we_orbit(a2.sys, a2.W, qv({-1, 3})).points));
    CHECK(std::is_sorted(s.points.begin(), s.points.end(),
                         [](const SignedPoint& x, const SignedPoint& y) {
                             return x.point < y.point;
                         }));

    CHECK_THROWS_AS(signed_orbit(a2.sys, a2.W, qv({1, 0})), NotStrictlyDominant);
    CHECK_THROWS_AS(signed_orbit(a2.sys, a2.W, qv({-1, 3})), NotStrictlyDominant);
    CHECK_THROWS_AS(signed_orbit(a2.sys, a2.W, qv({0, 0})), NotStrictlyDominant);
}

TEST_CASE("split root configuration") {
    // A different split reflection relabels second-type representatives but
    // not the underlying point sets.
    for (const char* name : {"A2", "C2", "G2", "B3"}) {
        auto c = ctx_of(name);
        ChamberConfig alt;
        alt.splitRoot = c.sys.highestRootIndex;
        QVec lam(c.sys.rank, Rat(1));
        QVec image = mat_apply(reflection_matrix(c.sys, 1).matrix, lam);
        Orbit o1 = we_orbit(c.sys, c.W, image);
        Orbit o2 = we_orbit(c.sys, c.W, image, alt);
        CHECK(point_set(o1.points) == point_set(o2.points));
        CHECK(o1.kind == OrbitKind::SecondType);
        CHECK(o2.kind == OrbitKind::SecondType);
        CHECK(point_set(o1.points).count(o2.rep) == 1);
    }
    auto a2 = ctx_of("A2");
    ChamberConfig bad;
    bad.splitRoot = 99;
    CHECK_THROWS_AS(we_orbit(a2.sys, a2.W, qv({-1, 2}), bad), IndexOutOfRange);
}
