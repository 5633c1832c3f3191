#include "eorbit/efunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eorbit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> to_doubles(const QVec& v) {
    std::vector<double> d(v.size());
    for (size_t i = 0; i < v.size(); ++i) d[i] = v[i].to_double();
    return d;
}

// Terms e^{2 pi i phase} * weight accumulated in a fixed order.
struct PhaseSum {
    CompensatedSum re, im;
    void add(double phase, double weight) {
        re.add(weight * std::cos(kTwoPi * phase));
        im.add(weight * std::sin(kTwoPi * phase));
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

// <mu, x> for mu rational omega coordinates and float x: mu . (S x).
double pairing(const QMat& s, const QVec& mu, const std::vector<double>& x) {
    size_t n = mu.size();
    double acc = 0;
    for (size_t i = 0; i < n; ++i) {
        double row = 0;
        for (size_t j = 0; j < n; ++j) row += s[i][j].to_double() * x[j];
        acc += mu[i].to_double() * row;
    }
    return acc;
}

}  // namespace

Family family_parse(const std::string& name) {
    if (name == "E") return Family::E;
    if (name == "E-hat" || name == "Ehat") return Family::EHat;
    if (name == "C") return Family::C;
    if (name == "C-hat" || name == "Chat") return Family::CHat;
    if (name == "S") return Family::S;
    throw UnsupportedBasis("unknown function family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::E: return "E";
        case Family::EHat: return "E-hat";
        case Family::C: return "C";
        case Family::CHat: return "C-hat";
        case Family::S: return "S";
    }
    return "?";
}

std::complex<double> eval(const RootSystemData& sys, const WeylGroup& W, Family family,
                          const Weight& lambda, const std::vector<double>& x,
                          const ChamberConfig& cfg) {
    if (x.size() != static_cast<size_t>(sys.rank))
        throw RankMismatch("eval: point has wrong rank");
    PhaseSum acc;
    switch (family) {
        case Family::E:
        case Family::EHat: {
            Orbit o = we_orbit(sys, W, lambda, cfg);
            double w = family == Family::EHat ? static_cast<double>(o.stabilizerOrder) : 1.0;
            for (const Weight& mu : o.points) acc.add(pairing(sys.quadraticForm, mu, x), w);
            break;
        }
        case Family::C:
        case Family::CHat: {
            std::vector<Weight> pts = w_orbit_points(sys, W, lambda);
            double w = family == Family::CHat
                           ? static_cast<double>(W.order() / pts.size())
                           : 1.0;
            for (const Weight& mu : pts) acc.add(pairing(sys.quadraticForm, mu, x), w);
            break;
        }
        case Family::S: {
            SignedOrbit so = signed_orbit(sys, W, lambda);
            for (const SignedPoint& sp : so.points)
                acc.add(pairing(sys.quadraticForm, sp.point, x),
                        static_cast<double>(sp.sign));
            break;
        }
    }
    return acc.value();
}

std::complex<double> eval_detsplit_An(const RootSystemData& sys,
                                      const std::vector<double>& m,
                                      const std::vector<double>& x, bool plusPart) {
    if (sys.series != Series::A)
        throw UnsupportedSeries("determinant split is defined for the A series only");
    if (sys.rank > 6) throw RankTooLarge("determinant split limited to rank 6");
    size_t d = static_cast<size_t>(sys.rank) + 1;
    if (m.size() != d || x.size() != d)
        throw RankMismatch("detsplit: need rank+1 orthogonal coordinates");

    std::vector<size_t> perm(d);
    for (size_t i = 0; i < d; ++i) perm[i] = i;
    PhaseSum acc;
    // Lexicographic permutation order keeps the summation reproducible.
    do {
        // Parity of perm.
        int parity = 1;
        std::vector<char> used(d, 0);
        for (size_t i = 0; i < d; ++i) {
            if (used[i]) continue;
            size_t len = 0;
            for (size_t j = i; !used[j]; j = perm[j]) {
                used[j] = 1;
                ++len;
            }
            if (len % 2 == 0) parity = -parity;
        }
        bool even = parity == 1;
        if (even != plusPart) continue;
        double phase = 0;
        for (size_t j = 0; j < d; ++j) phase += m[perm[j]] * x[j];
        // The minus part carries the determinant-expansion signs of the odd
        // permutations.
        acc.add(phase, plusPart ? 1.0 : -1.0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.value();
}

namespace {

// E_lambda evaluated in an orthogonal chart: points are the orbit in
// orthogonal coordinates; the chart pairing is weight * dot.
struct OrthEvaluator {
    std::vector<std::vector<double>> points;
    double weight = 1.0;

    std::complex<double> operator()(const std::vector<double>& xo) const {
        PhaseSum acc;
        for (const auto& mu : points) {
            double dot = 0;
            for (size_t k = 0; k < mu.size(); ++k) dot += mu[k] * xo[k];
            acc.add(weight * dot, 1.0);
        }
        return acc.value();
    }
};

// E_lambda as a function of omega coordinates.
struct OmegaEvaluator {
    const QMat* s = nullptr;
    std::vector<QVec> points;

    std::complex<double> operator()(const std::vector<double>& x) const {
        PhaseSum acc;
        for (const QVec& mu : points) acc.add(pairing(*s, mu, x), 1.0);
        return acc.value();
    }
};

// Central second differences, Richardson-extrapolated (steps h and h/2) so
// the truncation error drops from O(h^2 f'''') to O(h^4 f^(6)); high-frequency
// exponentials would otherwise dominate the residual.
template <typename F>
std::complex<double> fd_second_step(const F& f, std::vector<double>& x, size_t k,
                                    double h) {
    std::complex<double> c = f(x);
    x[k] += h;
    std::complex<double> p = f(x);
    x[k] -= 2 * h;
    std::complex<double> q = f(x);
    x[k] += h;
    return (p - 2.0 * c + q) / (h * h);
}

template <typename F>
std::complex<double> fd_second(const F& f, std::vector<double> x, size_t k, double h) {
    std::complex<double> coarse = fd_second_step(f, x, k, h);
    std::complex<double> fine = fd_second_step(f, x, k, h / 2);
    return (4.0 * fine - coarse) / 3.0;
}

template <typename F>
std::complex<double> fd_cross_step(const F& f, const std::vector<double>& x, size_t i,
                                   size_t j, double h) {
    auto at = [&](double di, double dj) {
        std::vector<double> y = x;
        y[i] += di;
        y[j] += dj;
        return f(y);
    };
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
}

template <typename F>
std::complex<double> fd_cross(const F& f, std::vector<double> x, size_t i, size_t j,
                              double h) {
    std::complex<double> coarse = fd_cross_step(f, x, i, j, h);
    std::complex<double> fine = fd_cross_step(f, x, i, j, h / 2);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

double laplacian_residual(const RootSystemData& sys, const WeylGroup& W,
                          const Weight& lambda, const std::vector<double>& x, double h,
                          const ChamberConfig& cfg) {
    if (h <= 0) throw std::invalid_argument("laplacian_residual: h must be positive");
    double eigen = -kTwoPi * kTwoPi *
                   scalar_product(sys, lambda, lambda).to_double();  // -4 pi^2 <l,l>

    if (sys.has_orthogonal_chart()) {
        Orbit o = we_orbit(sys, W, lambda, cfg);
        OrthEvaluator f;
        f.weight = sys.orthogonal_metric_weight().to_double();
        for (const Weight& mu : o.points)
            f.points.push_back(
                to_doubles(basis_convert(sys, mu, Basis::Omega, Basis::Orthogonal)));
        std::vector<double> xo = omega_to_orthogonal(sys, x);
        // Laplace-Beltrami for metric weight*I is (1/weight) * sum d_k^2.
        std::complex<double> lap = 0;
        for (size_t k = 0; k < xo.size(); ++k) lap += fd_second(f, xo, k, h);
        lap /= f.weight;
        return std::abs(lap - eigen * f(xo));
    }

    // omega-basis bilinear Laplacian: coefficients (D^{-1} M)_ij give
    // sum_ij c_ij d_i d_j E = -4 pi^2 <lambda,lambda> E.
    size_t n = static_cast<size_t>(sys.rank);
    QMat coeffs(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            coeffs[i][j] = Rat(2) / sys.rootNorms[i] * Rat(sys.cartan[i][j]);
    return bilinear_laplacian_residual(sys, W, coeffs, eigen, lambda, x, h, cfg);
}

double bilinear_laplacian_residual(const RootSystemData& sys, const WeylGroup& W,
                                   const QMat& coeffs, double eigenvalue,
                                   const Weight& lambda, const std::vector<double>& x,
                                   double h, const ChamberConfig& cfg) {
    if (h <= 0) throw std::invalid_argument("bilinear_laplacian_residual: h > 0 required");
    size_t n = static_cast<size_t>(sys.rank);
    OmegaEvaluator f;
    f.s = &sys.quadraticForm;
    Orbit o = we_orbit(sys, W, lambda, cfg);
    f.points = o.points;

    std::complex<double> op = 0;
    for (size_t i = 0; i < n; ++i) {
        double cii = coeffs[i][i].to_double();
        if (cii != 0) op += cii * fd_second(f, x, i, h);
        for (size_t j = i + 1; j < n; ++j) {
            double cij = coeffs[i][j].to_double() + coeffs[j][i].to_double();
            if (cij != 0) op += cij * fd_cross(f, x, i, j, h);
        }
    }
    return std::abs(op - eigenvalue * f(x));
}

}  // namespace eorbit
