#include "doctest.h"

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

size_t root_index(const RootSystemData& sys, const IVec& alpha) {
    for (size_t i = 0; i < sys.positiveRoots.size(); ++i)
        if (sys.positiveRoots[i] == alpha) return i;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("coordinate drop targets") {
    auto a3 = ctx_of("A3");
    BranchTarget t = branch_target(a3.sys, BranchRule::coordinate_drop());
    CHECK(t.system.cartan == IMat{{2, -1}, {-1, 2}});
    CHECK(t.chartFamily == Series::A);
    CHECK(t.chartRank == 2);

    auto b3 = ctx_of("B3");
    t = branch_target(b3.sys, BranchRule::coordinate_drop());
    CHECK(t.system.cartan == IMat{{2, -2}, {-1, 2}});
    CHECK(t.system.positiveRoots.size() == 4);
    CHECK(t.chartFamily == Series::B);

    auto c3 = ctx_of("C3");
    t = branch_target(c3.sys, BranchRule::coordinate_drop());
    CHECK(t.system.cartan == IMat{{2, -1}, {-2, 2}});

    auto d4 = ctx_of("D4");
    t = branch_target(d4.sys, BranchRule::coordinate_drop());
    CHECK(t.system.cartan == IMat{{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}});
    CHECK(t.system.positiveRoots.size() == 6);

    auto a2 = ctx_of("A2");
    CHECK(branch_target(a2.sys, BranchRule::coordinate_drop()).system.cartan ==
          IMat{{2}});
    auto c2 = ctx_of("C2");
    CHECK(branch_target(c2.sys, BranchRule::coordinate_drop()).system.cartan ==
          IMat{{2}});
}

TEST_CASE("coordinate drop decompositions") {
    auto a2 = ctx_of("A2");
    CHECK(as_map(branch_decompose(a2.sys, a2.W, qv({1, 0}),
                                  BranchRule::coordinate_drop())) ==
          std::map<QVec, long long>{{qv({-1}), 1}, {qv({0}), 1}, {qv({1}), 1}});

    auto a3 = ctx_of("A3");
    CHECK(as_map(branch_decompose(a3.sys, a3.W, qv({1, 0, 0}),
                                  BranchRule::coordinate_drop())) ==
          std::map<QVec, long long>{{qv({0, 0}), 1}, {qv({1, 0}), 1}});

    auto b3 = ctx_of("B3");
    CHECK(as_map(branch_decompose(b3.sys, b3.W, qv({0, 0, 1}),
                                  BranchRule::coordinate_drop())) ==
          std::map<QVec, long long>{{qv({0, 1}), 2}});

    auto c3 = ctx_of("C3");
    CHECK(as_map(branch_decompose(c3.sys, c3.W, qv({0, 0, 1}),
                                  BranchRule::coordinate_drop())) ==
          std::map<QVec, long long>{{qv({0, 1}), 2}});

    auto d4 = ctx_of("D4");
    CHECK(as_map(branch_decompose(d4.sys, d4.W, qv({1, 0, 0, 0}),
                                  BranchRule::coordinate_drop())) ==
          std::map<QVec, long long>{{qv({0, 0, 0}), 2}, {qv({1, 0, 0}), 1}});
}

TEST_CASE("branching conserves point counts") {
    struct Case {
        const char* name;
        std::vector<QVec> lams;
    };
    for (const Case& k : {Case{"A3", {qv({1, 1, 1}), qv({2, 1, 3}), qv({1, 0, 2})}},
                          Case{"B3", {qv({1, 1, 1}), qv({0, 1, 2}), qv({2, 0, 0})}},
                          Case{"C3", {qv({1, 1, 1}), qv({1, 2, 0}), qv({0, 0, 3})}},
                          Case{"D4", {qv({1, 1, 1, 1}), qv({0, 1, 0, 2})}}}) {
        auto c = ctx_of(k.name);
        BranchTarget t = branch_target(c.sys, BranchRule::coordinate_drop());
        auto subW = WeylGroup::generate(t.system);
        for (const auto& lam : k.lams) {
            OrbitDecomposition d =
                branch_decompose(c.sys, c.W, lam, BranchRule::coordinate_drop());
            long long total = 0;
            for (const auto& term : d.terms) {
                CHECK(term.multiplicity >= 1);
                Orbit sub = we_orbit(t.system, subW, term.rep);
                CHECK(sub.rep == term.rep);
                total += term.multiplicity * static_cast<long long>(sub.size());
            }
            CHECK(total ==
                  static_cast<long long>(we_orbit(c.sys, c.W, lam).size()));
        }
    }
}

TEST_CASE("coordinate drop agrees with direct projection") {
    auto a3 = ctx_of("A3");
    QVec lam = qv({2, 1, 1});
    BranchTarget t = branch_target(a3.sys, BranchRule::coordinate_drop());
    auto subW = WeylGroup::generate(t.system);

    std::map<QVec, long long> landed;
    for (const auto& p : we_orbit(a3.sys, a3.W, lam).points) {
        QVec x = basis_convert(a3.sys, p, Basis::Omega, Basis::Orthogonal);
        x.pop_back();
        QVec sub = orthogonal_chart_to_omega(Series::A, 2, x);
        ++landed[we_orbit(t.system, subW, sub).rep];
    }
    std::map<QVec, long long> expect;
    for (const auto& [rep, count] : landed) {
        long long size = static_cast<long long>(we_orbit(t.system, subW, rep).size());
        REQUIRE(count % size == 0);
        expect[rep] = count / size;
    }
    CHECK(as_map(branch_decompose(a3.sys, a3.W, lam, BranchRule::coordinate_drop())) ==
          expect);
}

TEST_CASE("equal rank branching") {
    auto c2 = ctx_of("C2");
    // The two long roots span an orthogonal pair of A1 factors.
    size_t long1 = root_index(c2.sys, {0, 1});
    size_t long2 = root_index(c2.sys, {2, 1});
    BranchRule rule = BranchRule::equal_rank({long1, long2});
    BranchTarget t = branch_target(c2.sys, rule);
    CHECK(t.system.cartan == IMat{{2, 0}, {0, 2}});
    CHECK(!diagram_connected(t.system));

    OrbitDecomposition d = branch_decompose(c2.sys, c2.W, qv({1, 1}), rule);
    CHECK(as_map(d) ==
          std::map<QVec, long long>{{qv({-2, 1}), 1}, {qv({1, 2}), 1}});

    // Choosing the simple roots reproduces the system itself; the orbit
    // restricts to itself with multiplicity one.
    BranchRule self = BranchRule::equal_rank(
        {root_index(c2.sys, {1, 0}), root_index(c2.sys, {0, 1})});
    CHECK(branch_target(c2.sys, self).system.cartan == c2.sys.cartan);
    for (auto lam : {qv({1, 1}), qv({-1, 2}), qv({2, 0})}) {
        OrbitDecomposition id = branch_decompose(c2.sys, c2.W, lam, self);
        REQUIRE(id.terms.size() == 1);
        CHECK(id.terms[0].multiplicity == 1);
        CHECK(id.terms[0].rep == we_orbit(c2.sys, c2.W, lam).rep);
    }

    auto b3 = ctx_of("B3");
    BranchRule b3self = BranchRule::equal_rank({root_index(b3.sys, {1, 0, 0}),
                                                root_index(b3.sys, {0, 1, 0}),
                                                root_index(b3.sys, {0, 0, 1})});
    CHECK(branch_target(b3.sys, b3self).system.cartan == b3.sys.cartan);
}

TEST_CASE("unsupported branch rules") {
    auto g2 = ctx_of("G2");
    CHECK_THROWS_AS(branch_target(g2.sys, BranchRule::coordinate_drop()),
                    UnsupportedBranch);
    auto a1 = ctx_of("A1");
    CHECK_THROWS_AS(branch_target(a1.sys, BranchRule::coordinate_drop()),
                    UnsupportedBranch);
    auto c2 = ctx_of("C2");
    CHECK_THROWS_AS(branch_target(c2.sys, BranchRule::equal_rank({0})),
                    UnsupportedBranch);
    CHECK_THROWS_AS(branch_target(c2.sys, BranchRule::equal_rank({0, 0})),
                    UnsupportedBranch);
    CHECK_THROWS_AS(branch_target(c2.sys, BranchRule::equal_rank({0, 99})),
                    UnsupportedBranch);
    // A short simple root together with the highest root is not a base.
    CHECK_THROWS_AS(branch_target(c2.sys, BranchRule::equal_rank(
                                              {root_index(c2.sys, {1, 0}),
                                               root_index(c2.sys, {2, 1})})),
                    UnsupportedBranch);
}
