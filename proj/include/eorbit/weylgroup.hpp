#pragma once
// Weyl group machinery: reflection matrices, group generation by BFS,
// reduction of weights to (even-)dominant representatives, and affine
// reduction into the fundamental region of the affine Weyl group.
//
// All reflection matrices act on weights written in omega coordinates,
// as column vectors: y = R * x.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "eorbit/errors.hpp"
#include "eorbit/linalg.hpp"
#include "eorbit/rootsystem.hpp"

namespace eorbit {

// One group element: its matrix in omega coordinates, its determinant
// (+1 or -1), and a shortest word in the simple reflections (1-based
// generator indices, applied right-to-left: word {i,j} means r_i r_j).
struct GroupElement {
    IMat matrix;
    int det = 1;
    std::vector<int> word;

    bool is_even() const { return det == 1; }
};

// Orientation conventions used when splitting orbits.  splitRoot indexes
// into RootSystemData::positiveRoots and selects the reflection r_alpha
// that doubles the dominant chamber: D_+^e = D_+ union r_alpha D_+.  The
// default sentinel resolves to the first simple root alpha_1.
struct ChamberConfig {
    static constexpr std::size_t kFirstSimple =
        std::numeric_limits<std::size_t>::max();
    std::size_t splitRoot = kFirstSimple;
};

// Resolves cfg.splitRoot to a concrete index into sys.positiveRoots.
std::size_t resolve_split_root(const RootSystemData& sys,
                               const ChamberConfig& cfg);

class WeylGroup {
public:
    // Generates the full group from the simple reflections.  Throws
    // RankTooLarge for rank > maxRank and GroupTooLarge if the element
    // count exceeds maxElements.
    static WeylGroup generate(const RootSystemData& sys,
                              std::size_t maxRank = 8,
                              std::size_t maxElements = 1000000);

    const RootSystemData& system() const { return *sys_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<IMat>& generators() const { return generators_; }

    std::size_t order() const { return elements_.size(); }
    std::size_t evenOrder() const { return evenIndices_.size(); }
    // Indices into elements() of the rotation (determinant +1) subgroup.
    const std::vector<std::size_t>& evenIndices() const { return evenIndices_; }

private:
    const RootSystemData* sys_ = nullptr;
    std::vector<GroupElement> elements_;
    std::vector<IMat> generators_;
    std::vector<std::size_t> evenIndices_;
};

// Simple reflection r_i (i is 1-based) in omega coordinates:
// (r_i x)_k = x_k - x_i M_ik.  Throws IndexOutOfRange.
GroupElement reflection_matrix(const RootSystemData& sys, int i);

// Reflection through an arbitrary positive root, given by its index into
// sys.positiveRoots.  Entries are integers for any crystallographic root
// system.  word is filled only when the root is simple.
GroupElement root_reflection(const RootSystemData& sys, std::size_t rootIndex);

// Result of reducing a weight into a chamber: the representative and a
// group element g with rep = g * x.
struct Reduction {
    Weight rep;
    GroupElement g;
};

// Maps x to the unique dominant weight in its Weyl orbit.  Deterministic:
// repeatedly applies r_i at the smallest index i with x_i < 0.
Reduction reduce_to_dominant(const RootSystemData& sys, const Weight& x);

// Maps x to the canonical representative of its even-subgroup orbit:
//   - the dominant representative x* when it is reached by a rotation, or
//     when x* lies on a chamber wall (both half-orbits meet there and the
//     D_+ copy is canonical);
//   - otherwise r_alpha x*, where r_alpha is the splitting reflection.
// The returned element is always even.
Reduction reduce_to_even_dominant(const RootSystemData& sys, const Weight& x,
                                  const ChamberConfig& cfg = {});

// Affine reduction: maps x into the closure of the fundamental region F of
// the affine Weyl group (all omega coordinates >= 0 and sum b_k q_k <= 1,
// q = comarks), or for even=true into F union r_alpha F reachable by an
// even affine transformation.  Exact rational arithmetic.  parityOut
// (optional) receives the determinant of the linear part of the
// transformation actually applied.  Throws NonConvergence at the iteration
// cap and InvalidDiagram for disconnected diagrams.
Weight affine_reduce(const RootSystemData& sys, const Weight& x, bool even,
                     int* parityOut = nullptr,
                     const ChamberConfig& cfg = {});

// Floating-point variant: coordinates within snapTol of a chamber wall are
// snapped onto it so that boundary points reduce consistently.
std::vector<double> affine_reduce(const RootSystemData& sys,
                                  const std::vector<double>& x, bool even,
                                  double snapTol = 1e-12,
                                  const ChamberConfig& cfg = {});

// True if b (omega coordinates) lies in the closed fundamental region F.
bool in_affine_fundamental_region(const RootSystemData& sys, const Weight& b);

}  // namespace eorbit
