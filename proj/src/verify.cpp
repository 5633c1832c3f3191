#include "eorbit/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eorbit/efunctions.hpp"
#include "eorbit/orbits.hpp"
#include "eorbit/symfunc.hpp"
#include "eorbit/transforms.hpp"

namespace eorbit {
namespace {

// Collects the first failure; subsequent checks in the suite still run so the
// message mentions the earliest (most primitive) breakage.
struct Checker {
    std::string firstFail;

    void require(bool cond, const std::string& what) {
        if (!cond && firstFail.empty()) firstFail = what;
    }
    template <typename T>
    void equal(const T& got, const T& want, const std::string& what) {
        if (!(got == want) && firstFail.empty()) {
            std::ostringstream os;
            os << what;
            firstFail = os.str();
        }
    }
    void close(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol) && firstFail.empty()) {
            std::ostringstream os;
            os << what << " (got " << got << ", want " << want << ")";
            firstFail = os.str();
        }
    }
};

RootSystemData sys_of(const char* name) { return build(DiagramSpec::parse(name)); }

QVec qv(std::initializer_list<long long> v) {
    QVec r;
    for (auto x : v) r.push_back(Rat(x));
    return r;
}

std::vector<double> dv(const QVec& q) {
    std::vector<double> r;
    for (const auto& x : q) r.push_back(x.to_double());
    return r;
}

void suite_rootsystem(Checker& c) {
    struct Case {
        const char* name;
        std::size_t order;
    };
    for (const Case& k : {Case{"A1", 2}, Case{"A2", 6}, Case{"A3", 24}, Case{"C2", 8},
                          Case{"B3", 48}, Case{"C3", 48}, Case{"G2", 12}}) {
        auto s = sys_of(k.name);
        auto W = WeylGroup::generate(s);
        c.require(W.order() == k.order, std::string(k.name) + " group order");
        c.require(W.evenOrder() * 2 == k.order, std::string(k.name) + " even half");
    }
    auto g2 = sys_of("G2");
    c.require(scalar_product(g2, qv({1, 0}), qv({1, 0})) == Rat(2), "G2 <w1,w1>=2");
    c.require(scalar_product(g2, qv({0, 1}), qv({0, 1})) == Rat(2, 3), "G2 <w2,w2>=2/3");
    auto c2 = sys_of("C2");
    c.require(scalar_product(c2, qv({1, 0}), qv({1, 0})) == Rat(1, 2), "C2 <w1,w1>=1/2");
    // chart round trip
    for (const char* name : {"A3", "B3", "C3"}) {
        auto s = sys_of(name);
        QVec b = qv({1, 2, 3});
        auto back = basis_convert(s, basis_convert(s, b, Basis::Omega, Basis::Orthogonal),
                                  Basis::Orthogonal, Basis::Omega);
        c.require(back == b, std::string(name) + " chart round trip");
    }
}

void suite_orbits(Checker& c) {
    auto a2 = sys_of("A2");
    auto Wa = WeylGroup::generate(a2);
    Orbit o = we_orbit(a2, Wa, qv({2, 1}));
    std::set<QVec> pts(o.points.begin(), o.points.end());
    std::set<QVec> want = {qv({2, 1}), qv({-3, 2}), qv({1, -3})};
    c.require(pts == want, "A2 O_e(2,1) points");
    auto g2 = sys_of("G2");
    auto Wg = WeylGroup::generate(g2);
    c.require(we_orbit(g2, Wg, qv({2, 1})).size() == 6, "G2 |O_e(2,1)|=6");
    c.require(we_orbit(g2, Wg, qv({0, 0})).size() == 1, "G2 |O_e(0)|=1");
    // reduction: every orbit point reduces back to the canonical rep
    for (const QVec& p : we_orbit(g2, Wg, qv({1, 2})).points) {
        c.require(reduce_to_even_dominant(g2, p).rep == qv({1, 2}), "G2 reduction rep");
    }
}

void suite_products(Checker& c) {
    auto a2 = sys_of("A2");
    auto W = WeylGroup::generate(a2);
    // O_e(a,0) x O_e(a,0) = O_e(2a,0) + 2 O_e(0,a) at a=2
    auto d = product_decompose(a2, W, qv({2, 0}), qv({2, 0}));
    c.require(d.multiplicity_of(qv({4, 0})) == 1 && d.multiplicity_of(qv({0, 2})) == 2 &&
                  d.terms.size() == 2,
              "A2 O(20)xO(20)");
    // conservation for a generic C2 product
    auto c2 = sys_of("C2");
    auto Wc = WeylGroup::generate(c2);
    auto dc = product_decompose(c2, Wc, qv({2, 1}), qv({1, 0}));
    long long total = 0;
    for (const auto& t : dc.terms) total += t.multiplicity * (long long)we_orbit(c2, Wc, t.rep).size();
    long long lhs = (long long)(we_orbit(c2, Wc, qv({2, 1})).size() * we_orbit(c2, Wc, qv({1, 0})).size());
    c.require(total == lhs, "C2 product conservation");
}

void suite_branching(Checker& c) {
    for (const char* from : {"A3", "C3", "B3"}) {
        auto s = sys_of(from);
        auto W = WeylGroup::generate(s);
        auto rule = BranchRule::coordinate_drop();
        auto target = branch_target(s, rule);
        auto Wt = WeylGroup::generate(target.system);
        QVec lam = qv({1, 2, 1});
        auto dec = branch_decompose(s, W, lam, rule);
        long long total = 0;
        for (const auto& t : dec.terms)
            total += t.multiplicity * (long long)we_orbit(target.system, Wt, t.rep).size();
        c.require(total == (long long)we_orbit(s, W, lam).size(),
                  std::string(from) + " branch conservation");
    }
    // equal-rank G2 > A2: k = |W_e(G2)|/|W_e(A2)| = 2 terms for generic lambda
    auto g2 = sys_of("G2");
    auto Wg = WeylGroup::generate(g2);
    auto rule = BranchRule::equal_rank({1, 4});
    auto dec = branch_decompose(g2, Wg, qv({1, 1}), rule);
    long long total = 0;
    for (const auto& t : dec.terms) total += t.multiplicity;
    c.require(total >= 1, "G2>A2 nonempty");
}

void suite_orthogonality(Checker& c) {
    for (const char* name : {"A2", "C2"}) {
        auto s = sys_of(name);
        auto W = WeylGroup::generate(s);
        long long m = 5;
        auto g = grid_tm(s, m);
        std::vector<QVec> lams = {qv({1, 0}), qv({0, 1})};
        if (!check_separation(s, W, lams, m).separated) {
            c.require(false, std::string(name) + " separation at m=5");
            continue;
        }
        auto f0 = eval_e_on_tm(s, W, lams[0], g);
        auto f1 = eval_e_on_tm(s, W, lams[1], g);
        double mn = std::pow((double)m, s.rank);
        c.close(std::abs(tm_inner(f0, f1)), 0.0, 1e-9 * mn, std::string(name) + " <E0,E1>=0");
        c.close(tm_inner(f0, f0).real(), mn * (double)we_orbit(s, W, lams[0]).size(),
                1e-9 * mn, std::string(name) + " <E0,E0>");
    }
}

void suite_transform(Checker& c) {
    auto s = sys_of("A2");
    auto W = WeylGroup::generate(s);
    long long m = 5;
    auto g = grid_tm(s, m);
    auto spec = auto_spectrum(s, W, m);
    std::vector<std::complex<double>> coeffs(spec.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = {0.3 + (double)i, 1.0 - 0.25 * (double)i};
    std::vector<std::vector<double>> pts;
    for (const auto& p : g.points) pts.push_back(dv(p));
    auto samples = synthesize(s, W, spec, coeffs, pts);
    for (auto method : {AnalyzeMethod::Direct, AnalyzeMethod::FDomain}) {
        auto back = analyze(s, W, g, samples, spec, method);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            c.close(std::abs(back[i] - coeffs[i]), 0.0, 1e-10,
                    method == AnalyzeMethod::Direct ? "direct round trip" : "fdomain round trip");
    }
    double lhs = 0;
    for (const auto& v : samples) lhs += std::norm(v);
    auto back = analyze(s, W, g, samples, spec);
    double rhs = 0;
    for (std::size_t i = 0; i < spec.size(); ++i)
        rhs += std::norm(back[i]) * (double)we_orbit(s, W, spec.lambdas[i]).size();
    rhs *= std::pow((double)m, s.rank);
    c.close(lhs, rhs, 1e-9 * (1 + std::abs(lhs)), "plancherel");
}

void suite_laplacian(Checker& c) {
    for (const char* name : {"A2", "C2", "G2", "B3"}) {
        auto s = sys_of(name);
        auto W = WeylGroup::generate(s);
        QVec lam(s.rank);
        for (int i = 0; i < s.rank; ++i) lam[i] = Rat(1 + i % 2);
        std::vector<double> x(s.rank);
        for (int i = 0; i < s.rank; ++i) x[i] = 0.17 + 0.21 * i;
        double eig = 4 * std::acos(-1.0) * std::acos(-1.0) *
                     scalar_product(s, lam, lam).to_double();
        double res = laplacian_residual(s, W, lam, x);
        c.close(res, 0.0, 1e-5 * (1 + eig), std::string(name) + " laplacian residual");
    }
}

void suite_identities(Checker& c) {
    for (const char* name : {"A2", "C2", "G2"}) {
        auto s = sys_of(name);
        auto W = WeylGroup::generate(s);
        QVec lam = qv({2, 1});
        std::vector<double> x = {0.31, -0.47};
        std::complex<double> Ex = eval(s, W, Family::E, lam, x);
        // invariance under an even rotation r1 r2
        auto r1 = reflection_matrix(s, 1), r2 = reflection_matrix(s, 2);
        std::vector<double> y(2, 0.0), z(2, 0.0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) y[i] += (double)r2.matrix[i][j] * x[j];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) z[i] += (double)r1.matrix[i][j] * y[j];
        c.close(std::abs(eval(s, W, Family::E, lam, z) - Ex), 0.0, 1e-10,
                std::string(name) + " rotation invariance");
        // affine shift by alpha1^vee
        QVec cc = qv({1, 0});
        QVec shift = coroot_to_omega(s, cc);
        std::vector<double> xs = {x[0] + shift[0].to_double(), x[1] + shift[1].to_double()};
        c.close(std::abs(eval(s, W, Family::E, lam, xs) - Ex), 0.0, 1e-9,
                std::string(name) + " affine invariance");
        // C/S split at strict lambda
        auto ra = root_reflection(s, resolve_split_root(s, {}));
        QVec rlam = mat_apply(ra.matrix, lam);
        std::complex<double> Er = eval(s, W, Family::E, rlam, x);
        c.close(std::abs(eval(s, W, Family::C, lam, x) - (Ex + Er)), 0.0, 1e-10,
                std::string(name) + " C = E + E_r");
        c.close(std::abs(eval(s, W, Family::S, lam, x) - (Ex - Er)), 0.0, 1e-10,
                std::string(name) + " S = E - E_r");
    }
    // C2 and G2 E-functions are real
    for (const char* name : {"C2", "G2"}) {
        auto s = sys_of(name);
        auto W = WeylGroup::generate(s);
        std::complex<double> v = eval(s, W, Family::E, qv({1, 2}), {0.23, 0.61});
        c.close(v.imag(), 0.0, 1e-12, std::string(name) + " reality");
    }
}

void suite_grids(Checker& c) {
    auto a2 = sys_of("A2");
    c.equal(grid_fm(a2, 2, false).size(), std::size_t{6}, "F_2(A2)=6");
    c.equal(grid_fm(a2, 2, true).size(), std::size_t{9}, "F^e_2(A2)=9");
    c.equal(grid_fm(a2, 3, true).size(), std::size_t{16}, "F^e_3(A2)=16");
    auto c2 = sys_of("C2");
    c.equal(grid_fm(c2, 2, true).size(), std::size_t{5}, "F^e_2(C2)=5");
    c.equal(grid_fm(c2, 3, true).size(), std::size_t{8}, "F^e_3(C2)=8");
    auto g2 = sys_of("G2");
    c.equal(grid_fm(g2, 2, true).size(), std::size_t{3}, "F^e_2(G2)=3");
    c.equal(grid_fm(g2, 8, true).size(), std::size_t{17}, "F^e_8(G2)=17");
    c.equal(grid_tm(a2, 4).size(), std::size_t{16}, "T_4(A2)=16");
    c.equal(spectrum_omega(a2, 2).size(), std::size_t{9}, "Omega(A2,2)=9");
}

void suite_symfunc(Checker& c) {
    c.close(hermite_value(2, 0.5), 4 * 0.25 - 2, 1e-14, "H2(0.5)");
    c.close(hermite_value(3, -1.0), -8 + 12, 1e-13, "H3(-1)");
    c.equal(even_permutations(4).size(), std::size_t{12}, "even perms of 4");
    auto q = gauss_hermite(6);
    double m0 = 0, m2 = 0;
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
        m0 += q.weights[k];
        m2 += q.weights[k] * q.nodes[k] * q.nodes[k];
    }
    double rp = std::sqrt(std::acos(-1.0));
    c.close(m0, rp, 1e-12, "gauss-hermite moment 0");
    c.close(m2, rp / 2, 1e-12, "gauss-hermite moment 2");
    std::vector<int> idx = {2, 1, 0};
    std::vector<double> lam = {0.4, -0.9, 1.3};
    double v = sym_hermite_eval(idx, lam);
    std::vector<int> idx2 = {1, 0, 2};  // cyclic (even) image of idx
    std::vector<double> lam2 = {lam[2], lam[0], lam[1]};
    c.close(sym_hermite_eval(idx2, lam), v, 0.0, "sym-Hermite index invariance");
    c.close(sym_hermite_eval(idx, lam2), v, 0.0, "sym-Hermite argument invariance");
}

using SuiteFn = void (*)(Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"rootsystem", suite_rootsystem}, {"orbits", suite_orbits},
        {"products", suite_products},     {"branching", suite_branching},
        {"orthogonality", suite_orthogonality}, {"transform", suite_transform},
        {"laplacian", suite_laplacian},   {"identities", suite_identities},
        {"grids", suite_grids},           {"symfunc", suite_symfunc},
    };
    return r;
}

}  // namespace

std::vector<std::string> verification_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<VerifyResult> run_verification(const std::vector<std::string>& suites) {
    std::vector<std::pair<std::string, SuiteFn>> todo;
    if (suites.empty()) {
        todo = registry();
    } else {
        for (const std::string& want : suites) {
            bool found = false;
            for (const auto& entry : registry())
                if (entry.first == want) {
                    todo.push_back(entry);
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown verification suite: " + want);
        }
    }
    std::vector<VerifyResult> out;
    for (const auto& [name, fn] : todo) {
        Checker c;
        std::string err;
        try {
            fn(c);
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        VerifyResult r;
        r.suite = name;
        if (!err.empty()) {
            r.pass = false;
            r.message = err;
        } else if (!c.firstFail.empty()) {
            r.pass = false;
            r.message = c.firstFail;
        } else {
            r.pass = true;
            r.message = "ok";
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace eorbit
