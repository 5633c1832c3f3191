#pragma once

// Discrete sampling grids (T_m, F_M, F^e_M), discrete inner products, and the
// finite E-orbit function transform (analyze/synthesize), together with the
// torus-sum realization of Fourier-series coefficients.

#include <complex>
#include <cstdint>
#include <vector>

#include "eorbit/errors.hpp"
#include "eorbit/linalg.hpp"
#include "eorbit/rootsystem.hpp"
#include "eorbit/weylgroup.hpp"

namespace eorbit {

// Hard cap on generated grid sizes; grid_tm / grid_fm throw GridTooLarge beyond it.
inline constexpr long long kGridPointCap = 4'000'000;

// T_m = { m^{-1} (d_1 α_1^∨ + ... + d_n α_n^∨) : d_i ∈ {0..m-1} } as exact
// ω-coordinates.  dTuples[i] holds the (d_1..d_n) odometer tuple of points[i]
// (last index fastest); the pairing ⟨λ, x_i⟩ with an integral weight λ equals
// (Σ_k λ_k d_k)/m exactly.
struct GridTm {
  long long m = 1;
  std::vector<IVec> dTuples;
  std::vector<Weight> points;

  std::size_t size() const { return points.size(); }
};

GridTm grid_tm(const RootSystemData& sys, long long m,
               long long pointCap = kGridPointCap);

// F_M = { Σ_i (s_i/M) ω_i^∨ : s_i ≥ 0, s_0 + Σ s_i m_i = M for some s_0 ≥ 0 },
// stored as exact ω-coordinates, lexicographically sorted.  With `even` set the
// set becomes F^e_M = F_M ∪ r_α F_M with duplicates removed.
struct GridFM {
  long long M = 1;
  bool even = false;
  std::vector<Weight> points;

  std::size_t size() const { return points.size(); }
};

GridFM grid_fm(const RootSystemData& sys, long long M, bool even,
               const ChamberConfig& cfg = {}, long long pointCap = kGridPointCap);

// Candidate spectrum Ω for square sampling against F^e_M: the integral weights
// Ξ = { Σ s_i ω_i } over the F_M index set, united with r_α Ξ and deduplicated.
struct SpectrumSet {
  std::vector<Weight> lambdas;

  std::size_t size() const { return lambdas.size(); }
};

SpectrumSet spectrum_omega(const RootSystemData& sys, long long M,
                           const ChamberConfig& cfg = {});

// E_λ evaluated at every grid point of T_m through exact root-of-unity phases
// (λ must be integral in ω-coordinates).
std::vector<std::complex<double>> eval_e_on_tm(const RootSystemData& sys,
                                               const WeylGroup& W,
                                               const Weight& lambda,
                                               const GridTm& grid,
                                               const ChamberConfig& cfg = {});

// ⟨f, g⟩_{T_m} = Σ_x f(x) conj(g(x)) over aligned sample vectors, summed in a
// fixed order with compensated accumulation.
std::complex<double> tm_inner(const std::vector<std::complex<double>>& f,
                              const std::vector<std::complex<double>>& g);

// Exact separation test: T_m separates the orbits of `lambdas` when no two
// distinct orbit points (pooled over all listed orbits) have all ω-coordinate
// differences divisible by m.  On failure the two even-dominant representatives
// whose orbits collide are reported (a == b for a self-collision).
struct SeparationReport {
  bool separated = true;
  Weight a;
  Weight b;
};

SeparationReport check_separation(const RootSystemData& sys, const WeylGroup& W,
                                  const std::vector<Weight>& lambdas,
                                  long long m, const ChamberConfig& cfg = {});

// Smallest m of the form 2·(max |orbit coordinate|)+1 that the exact check
// confirms separating (the Nyquist-style start value is verified, not trusted).
long long suggested_separation_m(const RootSystemData& sys, const WeylGroup& W,
                                 const std::vector<Weight>& lambdas,
                                 const ChamberConfig& cfg = {});

// Every even-dominant representative whose full W_e-orbit fits in the band
// |coordinate| ≤ (m-1)/2.  Such a spectrum is always separated by T_m.
SpectrumSet auto_spectrum(const RootSystemData& sys, const WeylGroup& W,
                          long long m, const ChamberConfig& cfg = {});

enum class AnalyzeMethod {
  Direct,   // a_λ = m^{-n} |O_e(λ)|^{-1} Σ_{x∈T_m} f(x) conj(E_λ(x))
  FDomain,  // regrouped over canonical fundamental-domain points s with
            // stabilizer weights: a_λ = m^{-n} |W_λ| Σ_s |W_s|^{-1} f(s) conj(E_λ(s))
};

// Finite E-orbit transform of samples given on grid_tm order.  Throws
// OrbitsNotSeparated (naming the colliding pair) when the spectrum is not
// separated by T_m.  threads ≤ 1 runs serially; results are independent of the
// thread count.
std::vector<std::complex<double>> analyze(
    const RootSystemData& sys, const WeylGroup& W, const GridTm& grid,
    const std::vector<std::complex<double>>& samples,
    const SpectrumSet& spectrum, AnalyzeMethod method = AnalyzeMethod::Direct,
    const ChamberConfig& cfg = {}, int threads = 1);

// f(x) = Σ_j a_j E_{λ_j}(x) at arbitrary points x (ω-coordinates, floating).
std::vector<std::complex<double>> synthesize(
    const RootSystemData& sys, const WeylGroup& W, const SpectrumSet& spectrum,
    const std::vector<std::complex<double>>& coeffs,
    const std::vector<std::vector<double>>& points,
    const ChamberConfig& cfg = {});

// Torus-sum realization of the Fourier-series coefficient
//   c_λ = |W_e|^{-1} m^{-n} Σ_{x∈T_m} f(x) Ê_λ(x)
// (exact for band-limited f).  Throws BandLimitExceeded when O_e(λ) is not
// self-separated at resolution m.
std::complex<double> fourier_series_coeff(const RootSystemData& sys,
                                          const WeylGroup& W,
                                          const GridTm& grid,
                                          const std::vector<std::complex<double>>& samples,
                                          const Weight& lambda,
                                          const ChamberConfig& cfg = {});

// Square sampling on F^e_M against Ω = spectrum_omega(M): least-squares solve
// of E_{λ_i}(x_j) a_i = f(x_j) with a rank report (the sampling matrix is not
// guaranteed invertible; callers should warn when rank < cols).
struct SquareSampleResult {
  SpectrumSet spectrum;
  std::vector<std::complex<double>> coeffs;
  long long rank = 0;
  long long rows = 0;
  long long cols = 0;

  bool rankDeficient() const { return rank < cols; }
};

SquareSampleResult fm_square_analyze(const RootSystemData& sys,
                                     const WeylGroup& W, long long M,
                                     const std::vector<std::complex<double>>& samples,
                                     const ChamberConfig& cfg = {});

}  // namespace eorbit
