#include "eorbit/weylgroup.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace eorbit {

namespace {

constexpr int kReduceIterationCap = 100000;

std::vector<double> apply_imat(const IMat& m, const std::vector<double>& x) {
    size_t n = m.size();
    std::vector<double> y(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) y[i] += static_cast<double>(m[i][j]) * x[j];
    return y;
}

// Composes refl * g.  Words are kept only when the reflection carries a
// valid witness word (always true for simple reflections).
GroupElement compose_reflection(const GroupElement& refl, const GroupElement& g) {
    GroupElement out;
    out.matrix = mat_mul(refl.matrix, g.matrix);
    out.det = refl.det * g.det;
    if (!refl.word.empty() || refl.matrix == identity_imat(refl.matrix.size())) {
        out.word = refl.word;
        out.word.insert(out.word.end(), g.word.begin(), g.word.end());
    }
    return out;
}

}  // namespace

std::size_t resolve_split_root(const RootSystemData& sys, const ChamberConfig& cfg) {
    if (cfg.splitRoot == ChamberConfig::kFirstSimple) {
        for (std::size_t idx = 0; idx < sys.positiveRoots.size(); ++idx) {
            const IVec& r = sys.positiveRoots[idx];
            if (r[0] != 1) continue;
            bool simple = true;
            for (std::size_t k = 1; k < r.size(); ++k)
                if (r[k] != 0) { simple = false; break; }
            if (simple) return idx;
        }
        throw IndexOutOfRange("first simple root not found among positive roots");
    }
    if (cfg.splitRoot >= sys.positiveRoots.size())
        throw IndexOutOfRange("splitRoot index exceeds positive-root count");
    return cfg.splitRoot;
}

GroupElement reflection_matrix(const RootSystemData& sys, int i) {
    int n = sys.rank;
    if (i < 1 || i > n) throw IndexOutOfRange("simple-root index out of range");
    size_t col = static_cast<size_t>(i - 1);
    IMat r = identity_imat(static_cast<size_t>(n));
    for (size_t k = 0; k < static_cast<size_t>(n); ++k)
        r[k][col] = (k == col ? 1 : 0) - sys.cartan[col][k];
    GroupElement g;
    g.matrix = std::move(r);
    g.det = -1;
    g.word = {i};
    return g;
}

GroupElement root_reflection(const RootSystemData& sys, std::size_t rootIndex) {
    size_t n = static_cast<size_t>(sys.rank);
    if (rootIndex >= sys.positiveRoots.size())
        throw IndexOutOfRange("positive-root index out of range");
    const IVec& a = sys.positiveRoots[rootIndex];

    // beta in omega coordinates: b_k = sum_i a_i M_ik.
    IVec b(n, 0);
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i) b[k] += a[i] * sys.cartan[i][k];

    // <beta,beta> = sum_ij a_i a_j M_ij <a_j,a_j>/2.
    Rat norm;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            norm += Rat(a[i]) * Rat(a[j]) * Rat(sys.cartan[i][j]) * sys.rootNorms[j] / Rat(2);

    // beta^vee in coroot coordinates: c_i = a_i <a_i,a_i> / <beta,beta>.
    // Integral for every root of a crystallographic system.
    IVec c(n, 0);
    for (size_t i = 0; i < n; ++i) {
        Rat ci = Rat(a[i]) * sys.rootNorms[i] / norm;
        if (!ci.is_integer())
            throw InvalidDiagram("coroot of a positive root is not integral");
        c[i] = ci.as_integer();
    }

    GroupElement g;
    g.matrix = identity_imat(n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) g.matrix[k][j] -= b[k] * c[j];
    g.det = -1;
    // A witness word is recorded only for simple roots.
    long long height = 0;
    for (long long v : a) height += v;
    if (height == 1) {
        for (size_t i = 0; i < n; ++i)
            if (a[i] == 1) g.word = {static_cast<int>(i + 1)};
    }
    return g;
}

WeylGroup WeylGroup::generate(const RootSystemData& sys, std::size_t maxRank,
                              std::size_t maxElements) {
    size_t n = static_cast<size_t>(sys.rank);
    if (n > maxRank)
        throw RankTooLarge("rank " + std::to_string(n) + " exceeds group-generation cap " +
                           std::to_string(maxRank));
    WeylGroup w;
    w.sys_ = &sys;
    for (size_t i = 1; i <= n; ++i)
        w.generators_.push_back(reflection_matrix(sys, static_cast<int>(i)).matrix);

    std::unordered_map<IMat, size_t, IMatHash> seen;
    GroupElement id;
    id.matrix = identity_imat(n);
    id.det = 1;
    w.elements_.push_back(id);
    seen.emplace(w.elements_[0].matrix, 0);

    // Breadth-first closure: elements come out sorted by word length, and
    // each carries a shortest witness word by construction.
    for (size_t head = 0; head < w.elements_.size(); ++head) {
        for (size_t i = 0; i < n; ++i) {
            IMat cand = mat_mul(w.elements_[head].matrix, w.generators_[i]);
            if (seen.count(cand)) continue;
            GroupElement e;
            e.matrix = cand;
            e.det = -w.elements_[head].det;
            e.word = w.elements_[head].word;
            e.word.push_back(static_cast<int>(i + 1));
            seen.emplace(e.matrix, w.elements_.size());
            w.elements_.push_back(std::move(e));
            if (w.elements_.size() > maxElements)
                throw GroupTooLarge("Weyl group exceeds element cap " +
                                    std::to_string(maxElements));
        }
    }
    for (size_t k = 0; k < w.elements_.size(); ++k)
        if (w.elements_[k].det == 1) w.evenIndices_.push_back(k);
    return w;
}

Reduction reduce_to_dominant(const RootSystemData& sys, const Weight& x) {
    size_t n = static_cast<size_t>(sys.rank);
    if (x.size() != n) throw RankMismatch("reduce_to_dominant: wrong rank");
    Reduction red;
    red.rep = x;
    red.g.matrix = identity_imat(n);
    red.g.det = 1;
    for (int it = 0; it < kReduceIterationCap; ++it) {
        size_t neg = n;
        for (size_t i = 0; i < n; ++i)
            if (red.rep[i] < Rat(0)) { neg = i; break; }
        if (neg == n) return red;
        GroupElement r = reflection_matrix(sys, static_cast<int>(neg + 1));
        red.rep = mat_apply(r.matrix, red.rep);
        red.g = compose_reflection(r, red.g);
    }
    throw NonConvergence("reduce_to_dominant did not terminate");
}

Reduction reduce_to_even_dominant(const RootSystemData& sys, const Weight& x,
                                  const ChamberConfig& cfg) {
    Reduction red = reduce_to_dominant(sys, x);
    if (red.g.det == 1) return red;
    // Odd element: if the dominant representative sits on a chamber wall the
    // two half-orbits meet there, and composing with the wall reflection
    // makes the witness even without moving the point.
    for (size_t i = 0; i < red.rep.size(); ++i) {
        if (red.rep[i].is_zero()) {
            GroupElement r = reflection_matrix(sys, static_cast<int>(i + 1));
            red.g = compose_reflection(r, red.g);
            return red;
        }
    }
    // Strictly dominant: the orbit is of the second kind; its canonical
    // representative is r_alpha applied to the dominant point.
    GroupElement ra = root_reflection(sys, resolve_split_root(sys, cfg));
    red.rep = mat_apply(ra.matrix, red.rep);
    red.g = compose_reflection(ra, red.g);
    return red;
}

bool in_affine_fundamental_region(const RootSystemData& sys, const Weight& b) {
    if (b.size() != static_cast<size_t>(sys.rank))
        throw RankMismatch("in_affine_fundamental_region: wrong rank");
    Rat level;
    for (size_t k = 0; k < b.size(); ++k) {
        if (b[k] < Rat(0)) return false;
        level += b[k] * sys.comarks[k];
    }
    return level <= Rat(1);
}

Weight affine_reduce(const RootSystemData& sys, const Weight& x, bool even,
                     int* parityOut, const ChamberConfig& cfg) {
    if (!diagram_connected(sys))
        throw InvalidDiagram("affine reduction requires a connected diagram");
    size_t n = static_cast<size_t>(sys.rank);
    if (x.size() != n) throw RankMismatch("affine_reduce: wrong rank");

    const IMat rXi = root_reflection(sys, sys.highestRootIndex).matrix;
    // Translation part of r_0: the highest coroot xi^vee in omega coordinates.
    QVec xiShift(n);
    for (size_t k = 0; k < n; ++k) {
        Rat s;
        for (size_t i = 0; i < n; ++i)
            s += Rat(sys.highestRootMarks[i]) * Rat(sys.cartan[i][k]);
        xiShift[k] = s;
    }

    Weight y = x;
    int parity = 1;
    bool done = false;
    for (int it = 0; it < kReduceIterationCap; ++it) {
        Reduction red = reduce_to_dominant(sys, y);
        parity *= red.g.det;
        y = red.rep;
        Rat level;
        for (size_t k = 0; k < n; ++k) level += y[k] * sys.comarks[k];
        if (level <= Rat(1)) { done = true; break; }
        y = mat_apply(rXi, y) + xiShift;
        parity = -parity;
    }
    if (!done) throw NonConvergence("affine_reduce did not terminate");

    if (even && parity == -1) {
        Rat level;
        for (size_t k = 0; k < n; ++k) level += y[k] * sys.comarks[k];
        bool onWall = level == Rat(1);
        for (size_t k = 0; k < n && !onWall; ++k) onWall = y[k].is_zero();
        // A wall point is fixed by the wall reflection, so an even witness
        // exists for y itself; an interior point must move to r_alpha F.
        if (!onWall)
            y = mat_apply(root_reflection(sys, resolve_split_root(sys, cfg)).matrix, y);
        parity = 1;
    }
    if (parityOut) *parityOut = parity;
    return y;
}

std::vector<double> affine_reduce(const RootSystemData& sys,
                                  const std::vector<double>& x, bool even,
                                  double snapTol, const ChamberConfig& cfg) {
    if (!diagram_connected(sys))
        throw InvalidDiagram("affine reduction requires a connected diagram");
    size_t n = static_cast<size_t>(sys.rank);
    if (x.size() != n) throw RankMismatch("affine_reduce: wrong rank");

    const IMat rXi = root_reflection(sys, sys.highestRootIndex).matrix;
    std::vector<double> xiShift(n, 0.0);
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            xiShift[k] += static_cast<double>(sys.highestRootMarks[i]) *
                          static_cast<double>(sys.cartan[i][k]);
    std::vector<double> comarks(n);
    for (size_t k = 0; k < n; ++k) comarks[k] = sys.comarks[k].to_double();

    std::vector<double> y = x;
    int parity = 1;
    bool done = false;
    for (int it = 0; it < kReduceIterationCap && !done; ++it) {
        // Finite reduction with wall snapping.
        int guard = 0;
        for (; guard < kReduceIterationCap; ++guard) {
            size_t neg = n;
            for (size_t i = 0; i < n; ++i)
                if (y[i] < -snapTol) { neg = i; break; }
            if (neg == n) break;
            y = apply_imat(reflection_matrix(sys, static_cast<int>(neg + 1)).matrix, y);
            parity = -parity;
        }
        if (guard >= kReduceIterationCap) throw NonConvergence("affine_reduce (float)");
        for (size_t i = 0; i < n; ++i)
            if (std::fabs(y[i]) <= snapTol) y[i] = 0.0;
        double level = 0;
        for (size_t k = 0; k < n; ++k) level += y[k] * comarks[k];
        if (level <= 1.0 + snapTol) { done = true; break; }
        y = apply_imat(rXi, y);
        for (size_t k = 0; k < n; ++k) y[k] += xiShift[k];
        parity = -parity;
    }
    if (!done) throw NonConvergence("affine_reduce (float) did not terminate");

    if (even && parity == -1) {
        double level = 0;
        for (size_t k = 0; k < n; ++k) level += y[k] * comarks[k];
        bool onWall = std::fabs(level - 1.0) <= snapTol;
        for (size_t k = 0; k < n && !onWall; ++k) onWall = y[k] == 0.0;
        if (!onWall)
            y = apply_imat(root_reflection(sys, resolve_split_root(sys, cfg)).matrix, y);
    }
    return y;
}

}  // namespace eorbit
