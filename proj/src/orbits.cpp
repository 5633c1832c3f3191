#include "eorbit/orbits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace eorbit {

namespace {

bool all_nonnegative(const Weight& b) {
    for (const Rat& r : b)
        if (r < Rat(0)) return false;
    return true;
}

std::size_t orbit_size(const WeylGroup& W, const Weight& canonicalRep) {
    std::set<QVec> pts;
    for (std::size_t k : W.evenIndices())
        pts.insert(mat_apply(W.elements()[k].matrix, canonicalRep));
    return pts.size();
}

}  // namespace

long long OrbitDecomposition::multiplicity_of(const Weight& rep) const {
    for (const OrbitTerm& t : terms)
        if (t.rep == rep) return t.multiplicity;
    return 0;
}

BranchRule BranchRule::coordinate_drop() {
    BranchRule r;
    r.kind = Kind::CoordinateDrop;
    return r;
}

BranchRule BranchRule::equal_rank(std::vector<std::size_t> indices) {
    BranchRule r;
    r.kind = Kind::EqualRank;
    r.rootIndices = std::move(indices);
    return r;
}

std::vector<Weight> w_orbit_points(const RootSystemData& sys, const WeylGroup& W,
                                   const Weight& lambda) {
    Weight rep = reduce_to_dominant(sys, lambda).rep;
    std::set<QVec> pts;
    for (const GroupElement& e : W.elements()) pts.insert(mat_apply(e.matrix, rep));
    return {pts.begin(), pts.end()};
}

Orbit we_orbit(const RootSystemData& sys, const WeylGroup& W, const Weight& lambda,
               const ChamberConfig& cfg) {
    Orbit o;
    o.rep = reduce_to_even_dominant(sys, lambda, cfg).rep;
    std::set<QVec> pts;
    for (std::size_t k : W.evenIndices())
        pts.insert(mat_apply(W.elements()[k].matrix, o.rep));
    o.points.assign(pts.begin(), pts.end());
    o.kind = all_nonnegative(o.rep) ? OrbitKind::FirstType : OrbitKind::SecondType;
    o.stabilizerOrder = W.evenOrder() / o.points.size();
    return o;
}

SignedOrbit signed_orbit(const RootSystemData& sys, const WeylGroup& W,
                         const Weight& lambda) {
    if (lambda.size() != static_cast<size_t>(sys.rank))
        throw RankMismatch("signed_orbit: wrong rank");
    for (const Rat& r : lambda)
        if (!(r > Rat(0)))
            throw NotStrictlyDominant("signed_orbit requires all coordinates > 0");
    std::set<std::pair<QVec, int>> pts;
    for (const GroupElement& e : W.elements())
        pts.emplace(mat_apply(e.matrix, lambda), e.det);
    SignedOrbit s;
    for (const auto& [p, sign] : pts) s.points.push_back({p, sign});
    return s;
}

OrbitDecomposition product_decompose(const RootSystemData& sys, const WeylGroup& W,
                                     const Weight& lambda, const Weight& mu,
                                     const ChamberConfig& cfg) {
    Orbit a = we_orbit(sys, W, lambda, cfg);
    Orbit b = we_orbit(sys, W, mu, cfg);
    std::map<QVec, long long> landed;
    for (const Weight& p : a.points)
        for (const Weight& q : b.points) ++landed[reduce_to_even_dominant(sys, p + q, cfg).rep];

    OrbitDecomposition dec;
    for (const auto& [rep, count] : landed) {
        long long size = static_cast<long long>(orbit_size(W, rep));
        if (count % size != 0)
            throw NonIntegralMultiplicity("orbit product: " + std::to_string(count) +
                                          " points over orbit of size " +
                                          std::to_string(size));
        dec.terms.push_back({rep, count / size});
    }
    return dec;
}

namespace {

IMat explicit_cartan_b2() { return {{2, -2}, {-1, 2}}; }
IMat explicit_cartan_c1() { return {{2}}; }
IMat explicit_cartan_d3() { return {{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}}; }

}  // namespace

BranchTarget branch_target(const RootSystemData& sys, const BranchRule& rule) {
    BranchTarget t;
    if (rule.kind == BranchRule::Kind::CoordinateDrop) {
        int m = sys.rank - 1;
        switch (sys.series) {
            case Series::A:
                if (m < 1) throw UnsupportedBranch("A1 has no coordinate-drop target");
                t.system = build(DiagramSpec::of(Series::A, m));
                break;
            case Series::B:
                t.system = m >= 3 ? build(DiagramSpec::of(Series::B, m))
                                  : build(DiagramSpec::explicit_matrix(explicit_cartan_b2()));
                break;
            case Series::C:
                t.system = m >= 2 ? build(DiagramSpec::of(Series::C, m))
                                  : build(DiagramSpec::explicit_matrix(explicit_cartan_c1()));
                break;
            case Series::D:
                t.system = m >= 4 ? build(DiagramSpec::of(Series::D, m))
                                  : build(DiagramSpec::explicit_matrix(explicit_cartan_d3()));
                break;
            default:
                throw UnsupportedBranch("coordinate-drop branching needs series A/B/C/D");
        }
        t.chartFamily = sys.series;
        t.chartRank = m;
        return t;
    }

    // Equal rank: the chosen positive roots must form a base of a subsystem
    // of full rank.
    size_t n = static_cast<size_t>(sys.rank);
    if (rule.rootIndices.size() != n)
        throw UnsupportedBranch("equal-rank rule needs exactly rank many roots");
    std::vector<QVec> betas;  // omega coordinates of the chosen roots
    for (std::size_t idx : rule.rootIndices) {
        if (idx >= sys.positiveRoots.size())
            throw UnsupportedBranch("equal-rank root index out of range");
        const IVec& aVec = sys.positiveRoots[idx];
        QVec b(n, Rat());
        for (size_t k = 0; k < n; ++k)
            for (size_t i = 0; i < n; ++i) b[k] += Rat(aVec[i]) * Rat(sys.cartan[i][k]);
        betas.push_back(std::move(b));
    }
    QMat span(n, QVec(n));
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) span[k][j] = betas[j][k];
    try {
        mat_inverse(span);
    } catch (const std::domain_error&) {
        throw UnsupportedBranch("equal-rank roots do not span the weight space");
    }
    IMat sub(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) {
        Rat nj = scalar_product(sys, betas[i], betas[i]);
        for (size_t j = 0; j < n; ++j) {
            Rat mij = Rat(2) * scalar_product(sys, betas[j], betas[i]) / nj;
            if (!mij.is_integer())
                throw UnsupportedBranch("chosen roots have non-integral Cartan pairings");
            sub[j][i] = mij.as_integer();
        }
    }
    try {
        t.system = build(DiagramSpec::explicit_matrix(sub));
    } catch (const Error& e) {
        throw UnsupportedBranch(std::string("chosen roots do not form a base: ") +
                                e.what());
    }
    return t;
}

OrbitDecomposition branch_decompose(const RootSystemData& sys, const WeylGroup& W,
                                    const Weight& lambda, const BranchRule& rule,
                                    const ChamberConfig& cfg) {
    BranchTarget target = branch_target(sys, rule);
    WeylGroup subW = WeylGroup::generate(target.system);
    Orbit orbit = we_orbit(sys, W, lambda, cfg);

    // Precompute equal-rank projection data: target omega coordinates are
    // b'_k = 2<p, beta_k>/<beta_k, beta_k>.
    std::vector<QVec> betas;
    QVec betaNorms;
    if (rule.kind == BranchRule::Kind::EqualRank) {
        size_t n = static_cast<size_t>(sys.rank);
        for (std::size_t idx : rule.rootIndices) {
            const IVec& aVec = sys.positiveRoots[idx];
            QVec b(n, Rat());
            for (size_t k = 0; k < n; ++k)
                for (size_t i = 0; i < n; ++i) b[k] += Rat(aVec[i]) * Rat(sys.cartan[i][k]);
            betaNorms.push_back(scalar_product(sys, b, b));
            betas.push_back(std::move(b));
        }
    }

    std::map<QVec, long long> landed;
    for (const Weight& p : orbit.points) {
        QVec sub;
        if (rule.kind == BranchRule::Kind::CoordinateDrop) {
            QVec x = basis_convert(sys, p, Basis::Omega, Basis::Orthogonal);
            QVec dropped;
            if (sys.series == Series::A)
                dropped.assign(x.begin(), x.end() - 1);
            else
                dropped.assign(x.begin() + 1, x.end());
            sub = orthogonal_chart_to_omega(target.chartFamily, target.chartRank, dropped);
        } else {
            for (size_t k = 0; k < betas.size(); ++k)
                sub.push_back(Rat(2) * scalar_product(sys, p, betas[k]) / betaNorms[k]);
        }
        ++landed[reduce_to_even_dominant(target.system, sub, cfg).rep];
    }

    OrbitDecomposition dec;
    for (const auto& [rep, count] : landed) {
        long long size = static_cast<long long>(orbit_size(subW, rep));
        if (count % size != 0)
            throw NonIntegralMultiplicity("branching: " + std::to_string(count) +
                                          " points over orbit of size " +
                                          std::to_string(size));
        dec.terms.push_back({rep, count / size});
    }
    return dec;
}

}  // namespace eorbit
