#pragma once
// Evaluation of orbit functions: E (even-orbit exponential sums), their
// normalized variants, the symmetric C- and antisymmetric S-functions, the
// determinant-split forms for the A series, and finite-difference Laplacian
// residuals.

#include <complex>
#include <vector>

#include "eorbit/orbits.hpp"
#include "eorbit/rootsystem.hpp"
#include "eorbit/weylgroup.hpp"

namespace eorbit {

enum class Family { E, EHat, C, CHat, S };

Family family_parse(const std::string& name);
std::string family_name(Family f);

// Evaluates the requested orbit function at x (omega coordinates, floats):
//   E     = sum over O_e(lambda) of e^{2 pi i <mu, x>}
//   EHat  = |W_lambda ∩ W_e| * E
//   C     = sum over the full W-orbit O(lambda)
//   CHat  = |W_lambda| * C
//   S     = sum over W of det(w) e^{2 pi i <w lambda, x>}  (strictly dominant
//           lambda only; NotStrictlyDominant otherwise)
// Orbit points are summed in canonical sorted order with compensated
// accumulation, so results are bit-reproducible.
std::complex<double> eval(const RootSystemData& sys, const WeylGroup& W, Family family,
                          const Weight& lambda, const std::vector<double>& x,
                          const ChamberConfig& cfg = {});

// A-series determinant split: sum over even (plus) or signed odd (minus)
// permutations of det(e^{2 pi i m_i x_j}).  m and x are orthogonal
// coordinates (rank+1 entries each); plus + minus = full determinant.
// Throws UnsupportedSeries for non-A systems and RankTooLarge above rank 6.
std::complex<double> eval_detsplit_An(const RootSystemData& sys,
                                      const std::vector<double>& m,
                                      const std::vector<double>& x, bool plusPart);

// |Delta_h E_lambda(x) + 4 pi^2 <lambda,lambda> E_lambda(x)| with a
// central-difference Laplacian: in orthogonal coordinates (with the C-series
// metric weight) for A/B/C/D, in the omega-basis bilinear form for E/F/G.
double laplacian_residual(const RootSystemData& sys, const WeylGroup& W,
                          const Weight& lambda, const std::vector<double>& x,
                          double h = 1e-4, const ChamberConfig& cfg = {});

// Residual |sum_ij coeffs_ij d_i d_j E_lambda(x) - eigenvalue * E_lambda(x)|
// for an arbitrary omega-basis bilinear operator, via central differences.
double bilinear_laplacian_residual(const RootSystemData& sys, const WeylGroup& W,
                                   const QMat& coeffs, double eigenvalue,
                                   const Weight& lambda, const std::vector<double>& x,
                                   double h = 1e-4, const ChamberConfig& cfg = {});

// Compensated (Neumaier) accumulator used for all orbit sums.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace eorbit
