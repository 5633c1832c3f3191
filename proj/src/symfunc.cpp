#include "eorbit/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include <Eigen/Dense>

#include "eorbit/efunctions.hpp"
#include "eorbit/errors.hpp"
#include "eorbit/orbits.hpp"
#include "eorbit/transforms.hpp"

namespace eorbit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

bool is_even_permutation(const std::vector<int>& perm) {
  long long inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

std::vector<int> apply_perm(const std::vector<int>& indices,
                            const std::vector<int>& perm) {
  std::vector<int> out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) out[i] = indices[perm[i]];
  return out;
}

}  // namespace

double hermite_value(int m, double x) {
  if (m < 0) throw IndexOutOfRange("Hermite index must be non-negative");
  double prev = 1.0;  // H_0
  if (m == 0) return prev;
  double cur = 2.0 * x;  // H_1
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * x * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_orthonormal(int m, double x) {
  double normSq = std::sqrt(std::numbers::pi_v<double>);
  for (int k = 1; k <= m; ++k) normSq *= 2.0 * static_cast<double>(k);
  return hermite_value(m, x) / std::sqrt(normSq);
}

std::vector<std::vector<int>> even_permutations(int n) {
  if (n < 1) throw IndexOutOfRange("permutation degree must be >= 1");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    if (is_even_permutation(perm)) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

double sym_poly_eval(const SeparableFamily& family, const std::vector<int>& indices,
                     const std::vector<double>& x) {
  if (indices.size() != x.size())
    throw RankMismatch("index tuple and point must have the same length");
  const int n = static_cast<int>(indices.size());
  std::set<std::vector<int>> images;
  for (const std::vector<int>& perm : even_permutations(n))
    images.insert(apply_perm(indices, perm));
  double sum = 0.0;
  for (const std::vector<int>& tuple : images) {
    double prod = 1.0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      prod *= family(tuple[i], x[i]);
    sum += prod;
  }
  return sum;
}

double sym_hermite_eval(const std::vector<int>& indices,
                        const std::vector<double>& lambda) {
  if (indices.size() != lambda.size())
    throw RankMismatch("index tuple and point must have the same length");
  const int n = static_cast<int>(indices.size());
  // Evaluate at the lexicographically smallest even image of lambda so the
  // summation order (and hence the floating result) is identical for every
  // even permutation of the argument, not just mathematically equal.
  std::vector<double> canon = lambda;
  for (const std::vector<int>& perm : even_permutations(n)) {
    std::vector<double> img(lambda.size());
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    if (img < canon) canon = std::move(img);
  }
  std::map<std::vector<int>, long long> terms;
  for (const std::vector<int>& perm : even_permutations(n))
    ++terms[apply_perm(indices, perm)];
  double sum = 0.0;
  for (const auto& [tuple, count] : terms) {
    double prod = 1.0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      prod *= hermite_value(tuple[i], canon[i]);
    sum += static_cast<double>(count) * prod;
  }
  return sum;
}

long long even_orbit_size(const std::vector<int>& indices) {
  const int n = static_cast<int>(indices.size());
  std::set<std::vector<int>> images;
  for (const std::vector<int>& perm : even_permutations(n))
    images.insert(apply_perm(indices, perm));
  return static_cast<long long>(images.size());
}

QuadratureRule gauss_hermite(int q) {
  if (q < 1) throw IndexOutOfRange("quadrature order must be >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(q, q);
  for (int k = 1; k < q; ++k) {
    const double off = std::sqrt(static_cast<double>(k) / 2.0);
    J(k - 1, k) = off;
    J(k, k - 1) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(J);
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(q));
  rule.weights.resize(static_cast<std::size_t>(q));
  const double mu0 = std::sqrt(std::numbers::pi_v<double>);
  for (int i = 0; i < q; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mu0 * v0 * v0;
  }
  return rule;
}

namespace {

std::complex<double> symmetrized_value(const RootSystemData& sys,
                                       const WeylGroup& W,
                                       const SeparableFamily& u,
                                       const std::vector<int>& indices,
                                       const std::vector<IVec>& orbit,
                                       long long m, const ChamberConfig& cfg) {
  const GridTm grid = grid_tm(sys, m);
  CompensatedSum re, im;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const QVec rep = affine_reduce(sys, grid.points[i], /*even=*/true, nullptr, cfg);
    QVec chart = rep;
    if (sys.has_orthogonal_chart())
      chart = basis_convert(sys, rep, Basis::Omega, Basis::Orthogonal);
    double uval = 1.0;
    for (std::size_t k = 0; k < chart.size(); ++k)
      uval *= u(indices[k], chart[k].to_double());
    CompensatedSum ere, eim;
    for (const IVec& sigma : orbit) {
      long long dot = 0;
      for (std::size_t k = 0; k < sigma.size(); ++k)
        dot += sigma[k] * grid.dTuples[i][k];
      dot %= m;
      if (dot < 0) dot += m;
      const double angle = kTwoPi * static_cast<double>(dot) / static_cast<double>(m);
      ere.add(std::cos(angle));
      eim.add(std::sin(angle));
    }
    const std::complex<double> term =
        uval * std::complex<double>(ere.value(), eim.value());
    re.add(term.real());
    im.add(term.imag());
  }
  const double mPowN =
      std::pow(static_cast<double>(m), static_cast<double>(sys.rank));
  const double scale = 1.0 / (static_cast<double>(W.evenOrder()) * mPowN);
  return std::complex<double>(re.value(), im.value()) * scale;
}

}  // namespace

SymmetrizeResult symmetrize_separable(const RootSystemData& sys,
                                      const WeylGroup& W,
                                      const SeparableFamily& u,
                                      const std::vector<int>& indices,
                                      const Weight& lambda, long long m,
                                      const ChamberConfig& cfg) {
  const std::size_t chartDim = sys.has_orthogonal_chart()
                                   ? static_cast<std::size_t>(sys.orthogonal_dim())
                                   : static_cast<std::size_t>(sys.rank);
  if (indices.size() != chartDim)
    throw RankMismatch("separable index tuple must match the chart dimension");
  if (lambda.size() != static_cast<std::size_t>(sys.rank))
    throw RankMismatch("weight length does not match diagram rank");
  for (const Rat& v : lambda)
    if (!v.is_integer())
      throw UnsupportedBasis("symmetrized integrals require integral weights");
  Orbit orb = we_orbit(sys, W, lambda, cfg);
  std::vector<IVec> orbit;
  orbit.reserve(orb.points.size());
  for (const QVec& p : orb.points) {
    IVec q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[k].as_integer();
    orbit.push_back(std::move(q));
  }
  const std::complex<double> coarse =
      symmetrized_value(sys, W, u, indices, orbit, m, cfg);
  const std::complex<double> fine =
      symmetrized_value(sys, W, u, indices, orbit, 2 * m, cfg);
  return {fine, std::abs(fine - coarse)};
}

}  // namespace eorbit
