#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eorbit/errors.hpp"
#include "eorbit/linalg.hpp"

namespace eorbit {

enum class Series { A, B, C, D, E, F, G, Explicit };

std::string series_name(Series s);

// A Coxeter–Dynkin diagram: either a series letter with a rank, or an
// explicit Cartan matrix (which may be reducible / block-diagonal).
struct DiagramSpec {
    Series series = Series::Explicit;
    int rank = 0;
    IMat cartan;  // used when series == Explicit

    static DiagramSpec of(Series s, int rank);
    static DiagramSpec explicit_matrix(IMat m);
    // "A2", "C3", "G2", ... (series letter + rank).
    static DiagramSpec parse(const std::string& text);
};

enum class Basis { Omega, Alpha, CorootAlpha, Orthogonal };

// All static data derived from a diagram.  Immutable after build().
struct RootSystemData {
    Series series = Series::Explicit;
    int rank = 0;
    IMat cartan;                    // M, M_ij = 2<a_i,a_j>/<a_j,a_j>
    QMat cartanInverse;
    QVec rootNorms;                 // <a_i,a_i>; long roots normalized to 2
    QMat quadraticForm;             // S = M^{-1} D, Gram matrix of the ω-basis
    std::vector<IVec> positiveRoots;  // α-coordinates, lexicographically sorted
    IVec highestRootMarks;          // m_i: ξ = Σ m_i α_i
    QVec comarks;                   // q_i: ξ = Σ q_i α_i^vee
    size_t highestRootIndex = 0;    // index of ξ in positiveRoots

    bool has_orthogonal_chart() const {
        return series == Series::A || series == Series::B || series == Series::C ||
               series == Series::D;
    }
    // Dimension of the orthogonal chart (rank+1 for A, rank otherwise).
    int orthogonal_dim() const { return series == Series::A ? rank + 1 : rank; }
    // The chart bilinear form is w·(Euclidean dot); w = 1/2 for series C.
    Rat orthogonal_metric_weight() const {
        return series == Series::C ? Rat(1, 2) : Rat(1);
    }
};

RootSystemData build(const DiagramSpec& spec);

// <x,y> = x S y^T, exact.
Rat scalar_product(const RootSystemData& sys, const QVec& x, const QVec& y);

QVec basis_convert(const RootSystemData& sys, const QVec& v, Basis from, Basis to);

// Float version of the ω -> orthogonal chart map (A/B/C/D only), used at
// function-evaluation boundaries.
std::vector<double> omega_to_orthogonal(const RootSystemData& sys,
                                        const std::vector<double>& omega);

// ω-coordinates of Σ c_i α_i^vee for integer coroot coordinates.
QVec coroot_to_omega(const RootSystemData& sys, const QVec& c);

// Exact inverse chart of a classical family: orthogonal coordinates to
// ω-coordinates.  Standalone so it also serves branch targets whose Cartan
// matrix is explicit (B2, D3, ...).  family must be A/B/C/D; for A the
// input carries rank+1 entries (any overall shift is accepted).
QVec orthogonal_chart_to_omega(Series family, int rank, const QVec& x);

// True if the diagram is connected (single simple component).  Affine
// reductions and grids require this.
bool diagram_connected(const RootSystemData& sys);

} // namespace eorbit
