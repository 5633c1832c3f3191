#pragma once
// W_e-orbits (even Weyl group orbits), signed orbits, and the decomposition
// of orbit products and subgroup branchings into multisets of W_e-orbits.

#include <cstdint>
#include <vector>

#include "eorbit/errors.hpp"
#include "eorbit/linalg.hpp"
#include "eorbit/rootsystem.hpp"
#include "eorbit/weylgroup.hpp"

namespace eorbit {

// First type: the canonical representative is dominant.  Second type: the
// representative lies in r_alpha D_+ only (r_alpha of a strictly dominant
// point).
enum class OrbitKind { FirstType, SecondType };

struct Orbit {
    Weight rep;                        // canonical even-dominant representative
    std::vector<Weight> points;        // exact, lexicographically sorted
    OrbitKind kind = OrbitKind::FirstType;
    std::size_t stabilizerOrder = 1;   // |W_lambda| within W_e

    std::size_t size() const { return points.size(); }
};

struct SignedPoint {
    Weight point;
    int sign = 1;  // det of the group element producing the point
};

// Signed W-orbit of a strictly dominant weight: the +1 points form
// O_e(lambda), the -1 points form O_e(r_alpha lambda).
struct SignedOrbit {
    std::vector<SignedPoint> points;  // sorted by point
};

struct OrbitTerm {
    Weight rep;
    long long multiplicity = 0;
};

struct OrbitDecomposition {
    std::vector<OrbitTerm> terms;  // sorted by rep

    // Total point count: sum of multiplicity * |O_e(rep)| is checked against
    // the source count by the producing operation.
    long long multiplicity_of(const Weight& rep) const;
};

// How to restrict an orbit to a subsystem.
struct BranchRule {
    enum class Kind { EqualRank, CoordinateDrop };
    Kind kind = Kind::CoordinateDrop;
    // Equal-rank only: indices into RootSystemData::positiveRoots choosing a
    // base of the subsystem (must span, one index per rank).
    std::vector<std::size_t> rootIndices;

    static BranchRule coordinate_drop();
    static BranchRule equal_rank(std::vector<std::size_t> indices);
};

// The subsystem an orbit is branched to.  For coordinate-drop rules of the
// classical series the chart family/rank describe how dropped orthogonal
// coordinates map into the target's omega basis (the target Cartan matrix
// itself may be explicit, e.g. B2 or D3).
struct BranchTarget {
    RootSystemData system;
    Series chartFamily = Series::Explicit;
    int chartRank = 0;
};

// Full W-orbit of lambda (points sorted, exact).
std::vector<Weight> w_orbit_points(const RootSystemData& sys, const WeylGroup& W,
                                   const Weight& lambda);

// W_e-orbit through lambda (reduced internally to its canonical
// representative first).
Orbit we_orbit(const RootSystemData& sys, const WeylGroup& W, const Weight& lambda,
               const ChamberConfig& cfg = {});

// Signed W-orbit; throws NotStrictlyDominant unless all coordinates > 0.
SignedOrbit signed_orbit(const RootSystemData& sys, const WeylGroup& W,
                         const Weight& lambda);

// Decomposes O_e(lambda) tensor O_e(mu) by brute force: all point-pair sums
// are reduced to canonical representatives and grouped; the multiplicity of
// each representative is (landing count)/|O_e(rep)|, which must be integral
// (NonIntegralMultiplicity otherwise).
OrbitDecomposition product_decompose(const RootSystemData& sys, const WeylGroup& W,
                                     const Weight& lambda, const Weight& mu,
                                     const ChamberConfig& cfg = {});

// Builds the target subsystem for a branch rule.  Coordinate-drop supports
// A_n -> A_{n-1} (n >= 2), B_n -> B_{n-1}, C_n -> C_{n-1} (n >= 2), and
// D_n -> D_{n-1}; equal-rank accepts any spanning base of positive roots.
// Throws UnsupportedBranch.
BranchTarget branch_target(const RootSystemData& sys, const BranchRule& rule);

// Restricts O_e(lambda) to the subsystem: projects every orbit point (in
// orthogonal coordinates for coordinate-drop; by coroot pairing for
// equal-rank), reduces in the target, and groups with multiplicities.
OrbitDecomposition branch_decompose(const RootSystemData& sys, const WeylGroup& W,
                                    const Weight& lambda, const BranchRule& rule,
                                    const ChamberConfig& cfg = {});

}  // namespace eorbit
