#pragma once

// Even-symmetric families built from one-variable function sets: symmetrized
// separable products against E-orbit functions, symmetric orthogonal-polynomial
// families over even permutation groups, and symmetrized multivariate Hermite
// polynomials.

#include <complex>
#include <functional>
#include <vector>

#include "eorbit/rootsystem.hpp"
#include "eorbit/weylgroup.hpp"

namespace eorbit {

// One-variable evaluator: (index, point) -> value.
using SeparableFamily = std::function<double(int, double)>;

// Physicists' Hermite polynomial H_m(x) by the three-term recurrence
// H_{m+1}(x) = 2x H_m(x) - 2m H_{m-1}(x).
double hermite_value(int m, double x);

// H_m(x) / sqrt(2^m m! sqrt(pi)): orthonormal under the weight e^{-x^2}.
double hermite_orthonormal(int m, double x);

// All even permutations of {0,..,n-1} in lexicographic order.
std::vector<std::vector<int>> even_permutations(int n);

// p^sym_m(x) = Σ over coset representatives of S^e_n / S_m of
// p_{m_{w(1)}}(x_1) ... p_{m_{w(n)}}(x_n); representatives are realized as the
// distinct even-permutation images of the index tuple, each taken once.
double sym_poly_eval(const SeparableFamily& family, const std::vector<int>& indices,
                     const std::vector<double>& x);

// H_script_m(lambda) = Σ_{w in S^e_n} H_{w m}(lambda): full even-group sum,
// with repeated terms kept.  Terms are accumulated in a canonical order so the
// permutation invariances H_{wm} = H_m hold exactly in floating point.
double sym_hermite_eval(const std::vector<int>& indices,
                        const std::vector<double>& lambda);

// |O_e(m)|: the number of distinct even-permutation images of the tuple m.
long long even_orbit_size(const std::vector<int>& indices);

// Gauss-Hermite rule for the weight e^{-x^2} (Golub-Welsch); exact for
// polynomials of degree <= 2q-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule gauss_hermite(int q);

// Torus-grid realization of the symmetrized separable integral
//   ∫_{F_e} u_{i_1..i_k}(x) E_lambda(x) dx
//     ≈ |W_e|^{-1} m^{-n} Σ_{x in T_m} u(reduce(x)) E_lambda(x),
// where reduce(x) is the canonical even fundamental-domain representative and
// u is the separable product over the point's orthogonal-chart coordinates
// (ω-coordinates if the family has no orthogonal chart).  The error estimate is
// the Richardson difference between resolutions m and 2m; the returned value is
// the 2m evaluation.
struct SymmetrizeResult {
  std::complex<double> value;
  double errorEstimate = 0.0;
};

SymmetrizeResult symmetrize_separable(const RootSystemData& sys,
                                      const WeylGroup& W,
                                      const SeparableFamily& u,
                                      const std::vector<int>& indices,
                                      const Weight& lambda, long long m,
                                      const ChamberConfig& cfg = {});

}  // namespace eorbit
