#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include "eorbit/rootsystem.hpp"
#include "eorbit/symfunc.hpp"
#include "eorbit/weylgroup.hpp"

using namespace eorbit;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed-form Hermite series: H_m(x) = m! sum_k (-1)^k (2x)^{m-2k} / (k! (m-2k)!).
double hermite_series(int m, double x) {
    double total = 0.0;
    for (int k = 0; 2 * k <= m; ++k) {
        double term = (k % 2 == 0) ? 1.0 : -1.0;
        for (int i = 1; i <= m; ++i) term *= i;            // m!
        for (int i = 1; i <= k; ++i) term /= i;            // / k!
        for (int i = 1; i <= m - 2 * k; ++i) term /= i;    // / (m-2k)!
        total += term * std::pow(2.0 * x, m - 2 * k);
    }
    return total;
}

int parity_of(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}

QVec qv(std::initializer_list<long long> v) {
    QVec r;
    for (auto x : v) r.push_back(Rat(x));
    return r;
}

}  // namespace

TEST_CASE("Hermite polynomial values") {
    CHECK(hermite_value(0, 0.7) == 1.0);
    CHECK(std::abs(hermite_value(1, 0.7) - 1.4) < 1e-13);
    CHECK(std::abs(hermite_value(2, 0.7) - (4 * 0.49 - 2)) < 1e-12);
    CHECK(std::abs(hermite_value(3, 0.7) - (8 * 0.343 - 12 * 0.7)) < 1e-12);
    CHECK(std::abs(hermite_value(4, 0.7) -
                   (16 * std::pow(0.7, 4) - 48 * 0.49 + 12)) < 1e-11);
    for (int m = 0; m <= 10; ++m)
        for (double x : {-1.3, 0.0, 0.4, 2.2}) {
            double want = hermite_series(m, x);
            CHECK(std::abs(hermite_value(m, x) - want) <=
                  1e-12 * (1.0 + std::abs(want)));
        }
}

TEST_CASE("Gauss-Hermite quadrature") {
    QuadratureRule q1 = gauss_hermite(1);
    REQUIRE(q1.nodes.size() == 1);
    CHECK(std::abs(q1.nodes[0]) < 1e-14);
    CHECK(std::abs(q1.weights[0] - std::sqrt(kPi)) < 1e-13);

    QuadratureRule q = gauss_hermite(8);
    double m0 = 0, m2 = 0, m4 = 0;
    for (size_t k = 0; k < q.nodes.size(); ++k) {
        m0 += q.weights[k];
        m2 += q.weights[k] * q.nodes[k] * q.nodes[k];
        m4 += q.weights[k] * std::pow(q.nodes[k], 4);
    }
    CHECK(std::abs(m0 - std::sqrt(kPi)) < 1e-12);
    CHECK(std::abs(m2 - std::sqrt(kPi) / 2) < 1e-12);
    CHECK(std::abs(m4 - 0.75 * std::sqrt(kPi)) < 1e-12);

    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            double acc = 0;
            for (size_t k = 0; k < q.nodes.size(); ++k)
                acc += q.weights[k] * hermite_orthonormal(a, q.nodes[k]) *
                       hermite_orthonormal(b, q.nodes[k]);
            CHECK(std::abs(acc - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("even permutations") {
    CHECK(even_permutations(1) == std::vector<std::vector<int>>{{0}});
    CHECK(even_permutations(2) == std::vector<std::vector<int>>{{0, 1}});
    auto p3 = even_permutations(3);
    CHECK(p3 == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    auto p4 = even_permutations(4);
    CHECK(p4.size() == 12);
    CHECK(std::is_sorted(p4.begin(), p4.end()));
    for (const auto& p : p4) CHECK(parity_of(p) == 0);
    CHECK(std::set<std::vector<int>>(p4.begin(), p4.end()).size() == 12);
}

TEST_CASE("even orbit sizes of index tuples") {
    CHECK(even_orbit_size({0, 0, 0}) == 1);
    CHECK(even_orbit_size({2, 1, 0}) == 3);
    CHECK(even_orbit_size({1, 1, 0}) == 3);
    CHECK(even_orbit_size({5}) == 1);
    // Against a direct enumeration.
    for (std::vector<int> idx :
         {std::vector<int>{1, 1, 0, 0}, {3, 2, 1, 0}, {2, 0, 0, 0}}) {
        std::set<std::vector<int>> images;
        for (const auto& w : even_permutations(int(idx.size()))) {
            std::vector<int> im(idx.size());
            for (size_t i = 0; i < idx.size(); ++i) im[i] = idx[w[i]];
            images.insert(im);
        }
        CHECK(even_orbit_size(idx) == (long long)images.size());
    }
}

TEST_CASE("symmetric polynomial sums") {
    auto fam = [](int m, double x) { return hermite_orthonormal(m, x); };
    std::vector<double> x = {0.3, -0.8, 1.1};

    // Distinct even images, each exactly once.
    std::set<std::vector<int>> images;
    std::vector<int> idx = {2, 1, 0};
    for (const auto& w : even_permutations(3)) {
        std::vector<int> im(3);
        for (int i = 0; i < 3; ++i) im[i] = idx[w[i]];
        images.insert(im);
    }
    double byHand = 0;
    for (const auto& im : images) {
        double term = 1;
        for (int i = 0; i < 3; ++i) term *= fam(im[i], x[i]);
        byHand += term;
    }
    CHECK(std::abs(sym_poly_eval(fam, idx, x) - byHand) < 1e-13);

    // A constant tuple collapses to a single product.
    double single = fam(0, x[0]) * fam(0, x[1]) * fam(0, x[2]);
    CHECK(std::abs(sym_poly_eval(fam, {0, 0, 0}, x) - single) < 1e-13);
}

TEST_CASE("symmetrized Hermite polynomials are exactly invariant") {
    std::vector<int> idx = {2, 1, 0};
    std::vector<double> lam = {0.3, -0.8, 1.1};
    double v0 = sym_hermite_eval(idx, lam);
    // Even (cyclic) relabeling of both the indices and the points.
    std::vector<int> idxc = {idx[1], idx[2], idx[0]};
    std::vector<double> lamc = {lam[1], lam[2], lam[0]};
    CHECK(sym_hermite_eval(idxc, lam) == v0);
    CHECK(sym_hermite_eval(idx, lamc) == v0);
    CHECK(sym_hermite_eval(idxc, lamc) == v0);

    // Full even-group sum keeps repeated terms: constant tuples scale by the
    // group order.
    double h0 = hermite_value(1, lam[0]) * hermite_value(1, lam[1]) *
                hermite_value(1, lam[2]);
    CHECK(std::abs(sym_hermite_eval({1, 1, 1}, lam) - 3.0 * h0) < 1e-12);
}

TEST_CASE("symmetric family orthogonality") {
    auto fam = [](int m, double x) { return hermite_orthonormal(m, x); };
    QuadratureRule q = gauss_hermite(8);
    auto integ3 = [&](const std::vector<int>& ma, const std::vector<int>& mb) {
        double acc = 0;
        for (size_t i = 0; i < q.nodes.size(); ++i)
            for (size_t j = 0; j < q.nodes.size(); ++j)
                for (size_t k = 0; k < q.nodes.size(); ++k) {
                    std::vector<double> xx = {q.nodes[i], q.nodes[j], q.nodes[k]};
                    acc += q.weights[i] * q.weights[j] * q.weights[k] *
                           sym_poly_eval(fam, ma, xx) * sym_poly_eval(fam, mb, xx);
                }
        return acc;
    };
    CHECK(std::abs(integ3({2, 1, 0}, {2, 1, 0}) - 3.0) < 1e-8);
    CHECK(std::abs(integ3({1, 1, 0}, {1, 1, 0}) - 3.0) < 1e-8);
    CHECK(std::abs(integ3({2, 1, 0}, {3, 1, 0})) < 1e-8);
    CHECK(std::abs(integ3({2, 1, 0}, {1, 1, 0})) < 1e-8);
}

TEST_CASE("Hermite functions are Fourier eigenfunctions") {
    QuadratureRule q = gauss_hermite(40);
    for (int m = 0; m < 5; ++m) {
        for (double xv : {0.3, -0.6}) {
            cplx acc = 0;
            for (size_t k = 0; k < q.nodes.size(); ++k) {
                double u = q.nodes[k];
                double p = u / std::sqrt(kPi);
                acc += q.weights[k] / std::sqrt(kPi) *
                       std::exp(cplx(0, 2 * kPi * p * xv)) *
                       hermite_value(m, std::numbers::sqrt2 * u);
            }
            cplx want = std::pow(cplx(0, 1), m) * std::exp(-kPi * xv * xv) *
                        hermite_value(m, std::sqrt(2 * kPi) * xv);
            CHECK(std::abs(acc - want) < 1e-6);
        }
    }
}

TEST_CASE("symmetrized separable integrals") {
    auto s = build(DiagramSpec::parse("A2"));
    auto W = WeylGroup::generate(s);
    auto ones = [](int, double) { return 1.0; };
    SymmetrizeResult r = symmetrize_separable(s, W, ones, {0, 0, 0}, qv({0, 0}), 4);
    CHECK(std::abs(r.value - cplx(1.0 / 3.0, 0)) < 1e-12);
    CHECK(r.errorEstimate < 1e-12);
    // Against a non-trivial orbit function the constant integrand averages to
    // zero by character orthogonality.
    SymmetrizeResult r2 = symmetrize_separable(s, W, ones, {0, 0, 0}, qv({1, 0}), 4);
    CHECK(std::abs(r2.value) < 1e-12);
}
