#include "eorbit/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <thread>
#include <unordered_map>
#include <utility>

#include <Eigen/Dense>

#include "eorbit/efunctions.hpp"
#include "eorbit/orbits.hpp"

namespace eorbit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

long long checked_power(long long base, std::size_t exp, long long cap) {
  long long v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

std::vector<IVec> integral_orbit_points(const RootSystemData& sys,
                                        const WeylGroup& W, const Weight& lambda,
                                        const ChamberConfig& cfg,
                                        long long* stabilizerOut = nullptr) {
  if (lambda.size() != static_cast<std::size_t>(sys.rank))
    throw RankMismatch("weight length does not match diagram rank");
  for (const Rat& v : lambda)
    if (!v.is_integer())
      throw UnsupportedBasis("discrete transforms require integral weights in the omega basis");
  Orbit orb = we_orbit(sys, W, lambda, cfg);
  if (stabilizerOut) *stabilizerOut = orb.stabilizerOrder;
  std::vector<IVec> out;
  out.reserve(orb.points.size());
  for (const QVec& p : orb.points) {
    IVec q(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) q[k] = p[k].as_integer();
    out.push_back(std::move(q));
  }
  return out;
}

// E_λ at one T_m point given the point's d-tuple: Σ_σ e^{2πi (σ·d)/m}.
std::complex<double> e_at_tuple(const std::vector<IVec>& orbit, const IVec& d,
                                long long m) {
  CompensatedSum re, im;
  for (const IVec& sigma : orbit) {
    long long dot = 0;
    for (std::size_t k = 0; k < d.size(); ++k) dot += sigma[k] * d[k];
    dot %= m;
    if (dot < 0) dot += m;
    const double angle = kTwoPi * static_cast<double>(dot) / static_cast<double>(m);
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  return {re.value(), im.value()};
}

// Exact pairing ⟨σ, x⟩ for integral σ and rational x (both in ω-coordinates):
// with c = S·x the α^∨-coordinates of x, ⟨σ, x⟩ = Σ σ_i c_i.
Rat exact_pairing(const RootSystemData& sys, const IVec& sigma, const QVec& x) {
  const QVec c = mat_apply(sys.quadraticForm, x);
  Rat r;
  for (std::size_t i = 0; i < c.size(); ++i) r = r + Rat(sigma[i]) * c[i];
  return r;
}

std::complex<double> e_at_rational(const RootSystemData& sys,
                                   const std::vector<IVec>& orbit, const QVec& x) {
  CompensatedSum re, im;
  for (const IVec& sigma : orbit) {
    Rat r = exact_pairing(sys, sigma, x);
    r = r - Rat(r.floor());
    const double angle = kTwoPi * r.to_double();
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  return {re.value(), im.value()};
}

void run_over_lambdas(std::size_t count, int threads,
                      const std::function<void(std::size_t)>& task) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t j = 0; j < count; ++j) task(j);
    return;
  }
  const std::size_t nThreads =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(nThreads);
  for (std::size_t t = 0; t < nThreads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t j = t; j < count; j += nThreads) task(j);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

GridTm grid_tm(const RootSystemData& sys, long long m, long long pointCap) {
  if (m < 1) throw GridTooLarge("grid resolution m must be >= 1");
  const std::size_t n = static_cast<std::size_t>(sys.rank);
  const long long total = checked_power(m, n, pointCap);
  if (total > pointCap)
    throw GridTooLarge("T_m would exceed the grid point cap of " +
                       std::to_string(pointCap) + " points");
  GridTm grid;
  grid.m = m;
  grid.dTuples.reserve(static_cast<std::size_t>(total));
  grid.points.reserve(static_cast<std::size_t>(total));
  IVec d(n, 0);
  while (true) {
    QVec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Rat(d[i], m);
    grid.dTuples.push_back(d);
    grid.points.push_back(coroot_to_omega(sys, c));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++d[pos] < m) break;
      d[pos] = 0;
      if (pos == 0) return grid;
    }
    if (n == 0) return grid;
  }
}

GridFM grid_fm(const RootSystemData& sys, long long M, bool even,
               const ChamberConfig& cfg, long long pointCap) {
  if (M < 1) throw GridTooLarge("grid resolution M must be >= 1");
  const std::size_t n = static_cast<std::size_t>(sys.rank);
  std::set<QVec> pts;
  IVec s(n, 0);
  // Odometer over s-tuples subject to Σ s_i m_i ≤ M using the highest-root marks.
  const IVec& marks = sys.highestRootMarks;
  auto weightOf = [&](const IVec& t) {
    long long w = 0;
    for (std::size_t i = 0; i < n; ++i) w += t[i] * marks[i];
    return w;
  };
  while (true) {
    if (weightOf(s) <= M) {
      QVec b(n);
      for (std::size_t i = 0; i < n; ++i)
        b[i] = Rat(2 * s[i]) / (sys.rootNorms[i] * Rat(M));
      pts.insert(std::move(b));
      if (static_cast<long long>(pts.size()) > pointCap)
        throw GridTooLarge("F_M would exceed the grid point cap of " +
                           std::to_string(pointCap) + " points");
    }
    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      ++s[pos];
      if (weightOf(s) <= M) {
        done = false;
        break;
      }
      s[pos] = 0;
      if (pos == 0) break;
    }
    if (done) break;
  }
  if (even) {
    const GroupElement rAlpha =
        root_reflection(sys, resolve_split_root(sys, cfg));
    std::set<QVec> extra;
    for (const QVec& p : pts) extra.insert(mat_apply(rAlpha.matrix, p));
    pts.insert(extra.begin(), extra.end());
  }
  GridFM grid;
  grid.M = M;
  grid.even = even;
  grid.points.assign(pts.begin(), pts.end());
  return grid;
}

SpectrumSet spectrum_omega(const RootSystemData& sys, long long M,
                           const ChamberConfig& cfg) {
  const std::size_t n = static_cast<std::size_t>(sys.rank);
  std::set<QVec> lams;
  IVec s(n, 0);
  const IVec& marks = sys.highestRootMarks;
  auto weightOf = [&](const IVec& t) {
    long long w = 0;
    for (std::size_t i = 0; i < n; ++i) w += t[i] * marks[i];
    return w;
  };
  const GroupElement rAlpha = root_reflection(sys, resolve_split_root(sys, cfg));
  while (true) {
    if (weightOf(s) <= M) {
      QVec lam(n);
      for (std::size_t i = 0; i < n; ++i) lam[i] = Rat(s[i]);
      lams.insert(mat_apply(rAlpha.matrix, lam));
      lams.insert(std::move(lam));
    }
    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      ++s[pos];
      if (weightOf(s) <= M) {
        done = false;
        break;
      }
      s[pos] = 0;
      if (pos == 0) break;
    }
    if (done) break;
  }
  SpectrumSet out;
  out.lambdas.assign(lams.begin(), lams.end());
  return out;
}

std::vector<std::complex<double>> eval_e_on_tm(const RootSystemData& sys,
                                               const WeylGroup& W,
                                               const Weight& lambda,
                                               const GridTm& grid,
                                               const ChamberConfig& cfg) {
  const std::vector<IVec> orbit = integral_orbit_points(sys, W, lambda, cfg);
  std::vector<std::complex<double>> out;
  out.reserve(grid.size());
  for (const IVec& d : grid.dTuples) out.push_back(e_at_tuple(orbit, d, grid.m));
  return out;
}

std::complex<double> tm_inner(const std::vector<std::complex<double>>& f,
                              const std::vector<std::complex<double>>& g) {
  if (f.size() != g.size())
    throw RankMismatch("T_m inner product requires sample vectors of equal length");
  CompensatedSum re, im;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::complex<double> term = f[i] * std::conj(g[i]);
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

SeparationReport check_separation(const RootSystemData& sys, const WeylGroup& W,
                                  const std::vector<Weight>& lambdas,
                                  long long m, const ChamberConfig& cfg) {
  SeparationReport report;
  std::map<IVec, std::pair<std::size_t, IVec>> seen;  // residue -> (λ index, point)
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const std::vector<IVec> orbit = integral_orbit_points(sys, W, lambdas[j], cfg);
    for (const IVec& sigma : orbit) {
      IVec residue(sigma.size());
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        long long r = sigma[k] % m;
        if (r < 0) r += m;
        residue[k] = r;
      }
      auto [it, inserted] = seen.emplace(residue, std::make_pair(j, sigma));
      if (!inserted && it->second.second != sigma) {
        report.separated = false;
        report.a = lambdas[it->second.first];
        report.b = lambdas[j];
        return report;
      }
    }
  }
  return report;
}

long long suggested_separation_m(const RootSystemData& sys, const WeylGroup& W,
                                 const std::vector<Weight>& lambdas,
                                 const ChamberConfig& cfg) {
  long long maxCoord = 0;
  for (const Weight& lam : lambdas) {
    const std::vector<IVec> orbit = integral_orbit_points(sys, W, lam, cfg);
    for (const IVec& sigma : orbit)
      for (long long v : sigma) maxCoord = std::max(maxCoord, std::llabs(v));
  }
  long long m = 2 * maxCoord + 1;
  while (!check_separation(sys, W, lambdas, m, cfg).separated) ++m;
  return m;
}

SpectrumSet auto_spectrum(const RootSystemData& sys, const WeylGroup& W,
                          long long m, const ChamberConfig& cfg) {
  const std::size_t n = static_cast<std::size_t>(sys.rank);
  const long long K = (m - 1) / 2;
  const GroupElement rAlpha = root_reflection(sys, resolve_split_root(sys, cfg));
  std::set<QVec> reps;
  auto orbitFits = [&](const QVec& rep) {
    Orbit orb = we_orbit(sys, W, rep, cfg);
    for (const QVec& p : orb.points)
      for (const Rat& v : p)
        if (v.abs() > Rat(K)) return false;
    return true;
  };
  IVec s(n, 0);
  while (true) {
    QVec lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = Rat(s[i]);
    if (orbitFits(lam)) reps.insert(lam);
    bool strict = true;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] == 0) strict = false;
    if (strict) {
      const QVec mirrored = mat_apply(rAlpha.matrix, lam);
      if (orbitFits(mirrored)) reps.insert(mirrored);
    }
    std::size_t pos = n;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++s[pos] <= K) {
        done = false;
        break;
      }
      s[pos] = 0;
      if (pos == 0) break;
    }
    if (done) break;
  }
  SpectrumSet out;
  out.lambdas.assign(reps.begin(), reps.end());
  return out;
}

std::vector<std::complex<double>> analyze(
    const RootSystemData& sys, const WeylGroup& W, const GridTm& grid,
    const std::vector<std::complex<double>>& samples,
    const SpectrumSet& spectrum, AnalyzeMethod method, const ChamberConfig& cfg,
    int threads) {
  if (samples.size() != grid.size())
    throw RankMismatch("sample vector length must equal |T_m|");
  const SeparationReport sep =
      check_separation(sys, W, spectrum.lambdas, grid.m, cfg);
  if (!sep.separated)
    throw OrbitsNotSeparated("T_m with m=" + std::to_string(grid.m) +
                             " does not separate the orbits of " +
                             vec_str(sep.a) + " and " + vec_str(sep.b));
  const double mPowN =
      std::pow(static_cast<double>(grid.m), static_cast<double>(sys.rank));
  std::vector<std::complex<double>> coeffs(spectrum.size());

  if (method == AnalyzeMethod::Direct) {
    run_over_lambdas(spectrum.size(), threads, [&](std::size_t j) {
      const std::vector<IVec> orbit =
          integral_orbit_points(sys, W, spectrum.lambdas[j], cfg);
      CompensatedSum re, im;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::complex<double> term =
            samples[i] * std::conj(e_at_tuple(orbit, grid.dTuples[i], grid.m));
        re.add(term.real());
        im.add(term.imag());
      }
      const double scale = mPowN * static_cast<double>(orbit.size());
      coeffs[j] = std::complex<double>(re.value(), im.value()) / scale;
    });
    return coeffs;
  }

  // Fundamental-domain form: group T_m into W_e^aff classes with canonical
  // representatives s in F̄_e; the effective stabilizer order |W_s| satisfies
  // |class| = |W_e| / |W_s|, and
  //   a_λ = m^{-n} |W_λ| Σ_s |W_s|^{-1} f(s) conj(E_λ(s)).
  struct ClassInfo {
    QVec rep;
    long long count = 0;
    std::size_t firstSample = 0;
  };
  std::map<QVec, ClassInfo> classMap;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    QVec rep = affine_reduce(sys, grid.points[i], /*even=*/true, nullptr, cfg);
    auto [it, inserted] = classMap.try_emplace(rep);
    if (inserted) {
      it->second.rep = rep;
      it->second.firstSample = i;
    }
    ++it->second.count;
  }
  std::vector<ClassInfo> classes;
  classes.reserve(classMap.size());
  for (auto& [rep, info] : classMap) classes.push_back(info);
  const double evenOrder = static_cast<double>(W.evenOrder());

  run_over_lambdas(spectrum.size(), threads, [&](std::size_t j) {
    long long stab = 0;
    const std::vector<IVec> orbit =
        integral_orbit_points(sys, W, spectrum.lambdas[j], cfg, &stab);
    CompensatedSum re, im;
    for (const ClassInfo& cls : classes) {
      const double invStab = static_cast<double>(cls.count) / evenOrder;
      const std::complex<double> term =
          samples[cls.firstSample] *
          std::conj(e_at_rational(sys, orbit, cls.rep)) * invStab;
      re.add(term.real());
      im.add(term.imag());
    }
    coeffs[j] = std::complex<double>(re.value(), im.value()) *
                (static_cast<double>(stab) / mPowN);
  });
  return coeffs;
}

std::vector<std::complex<double>> synthesize(
    const RootSystemData& sys, const WeylGroup& W, const SpectrumSet& spectrum,
    const std::vector<std::complex<double>>& coeffs,
    const std::vector<std::vector<double>>& points, const ChamberConfig& cfg) {
  if (coeffs.size() != spectrum.size())
    throw RankMismatch("coefficient vector length must equal the spectrum size");
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const std::vector<double>& x : points) {
    CompensatedSum re, im;
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
      const std::complex<double> term =
          coeffs[j] * eval(sys, W, Family::E, spectrum.lambdas[j], x, cfg);
      re.add(term.real());
      im.add(term.imag());
    }
    out.emplace_back(re.value(), im.value());
  }
  return out;
}

std::complex<double> fourier_series_coeff(const RootSystemData& sys,
                                          const WeylGroup& W,
                                          const GridTm& grid,
                                          const std::vector<std::complex<double>>& samples,
                                          const Weight& lambda,
                                          const ChamberConfig& cfg) {
  if (samples.size() != grid.size())
    throw RankMismatch("sample vector length must equal |T_m|");
  const SeparationReport sep = check_separation(sys, W, {lambda}, grid.m, cfg);
  if (!sep.separated)
    throw BandLimitExceeded("O_e(" + vec_str(lambda) +
                            ") is not separated by T_m at m=" +
                            std::to_string(grid.m));
  long long stab = 0;
  const std::vector<IVec> orbit =
      integral_orbit_points(sys, W, lambda, cfg, &stab);
  CompensatedSum re, im;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::complex<double> term =
        samples[i] * e_at_tuple(orbit, grid.dTuples[i], grid.m);
    re.add(term.real());
    im.add(term.imag());
  }
  const double mPowN =
      std::pow(static_cast<double>(grid.m), static_cast<double>(sys.rank));
  const double scale =
      static_cast<double>(stab) / (static_cast<double>(W.evenOrder()) * mPowN);
  return std::complex<double>(re.value(), im.value()) * scale;
}

SquareSampleResult fm_square_analyze(const RootSystemData& sys,
                                     const WeylGroup& W, long long M,
                                     const std::vector<std::complex<double>>& samples,
                                     const ChamberConfig& cfg) {
  SquareSampleResult result;
  const GridFM grid = grid_fm(sys, M, /*even=*/true, cfg);
  result.spectrum = spectrum_omega(sys, M, cfg);
  result.rows = static_cast<long long>(grid.size());
  result.cols = static_cast<long long>(result.spectrum.size());
  if (samples.size() != grid.size())
    throw RankMismatch("square sampling requires one sample per F^e_M point");

  Eigen::MatrixXcd A(result.rows, result.cols);
  for (long long i = 0; i < result.cols; ++i) {
    const std::vector<IVec> orbit = integral_orbit_points(
        sys, W, result.spectrum.lambdas[static_cast<std::size_t>(i)], cfg);
    for (long long j = 0; j < result.rows; ++j)
      A(j, i) = e_at_rational(sys, orbit,
                              grid.points[static_cast<std::size_t>(j)]);
  }
  Eigen::VectorXcd b(result.rows);
  for (long long j = 0; j < result.rows; ++j)
    b(j) = samples[static_cast<std::size_t>(j)];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
  result.rank = qr.rank();
  const Eigen::VectorXcd sol = qr.solve(b);
  result.coeffs.resize(static_cast<std::size_t>(result.cols));
  for (long long i = 0; i < result.cols; ++i)
    result.coeffs[static_cast<std::size_t>(i)] = sol(i);
  return result;
}

}  // namespace eorbit
