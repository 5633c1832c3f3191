#include "eorbit/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace eorbit {

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::E: return "E";
        case Series::F: return "F";
        case Series::G: return "G";
        case Series::Explicit: return "explicit";
    }
    return "?";
}

DiagramSpec DiagramSpec::of(Series s, int rank) {
    DiagramSpec d;
    d.series = s;
    d.rank = rank;
    return d;
}

DiagramSpec DiagramSpec::explicit_matrix(IMat m) {
    DiagramSpec d;
    d.series = Series::Explicit;
    d.rank = static_cast<int>(m.size());
    d.cartan = std::move(m);
    return d;
}

DiagramSpec DiagramSpec::parse(const std::string& text) {
    if (text.size() < 2) throw InvalidDiagram("diagram string too short: '" + text + "'");
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    Series s;
    switch (letter) {
        case 'A': s = Series::A; break;
        case 'B': s = Series::B; break;
        case 'C': s = Series::C; break;
        case 'D': s = Series::D; break;
        case 'E': s = Series::E; break;
        case 'F': s = Series::F; break;
        case 'G': s = Series::G; break;
        default: throw InvalidDiagram("unknown series letter in '" + text + "'");
    }
    int rank = 0;
    for (size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidDiagram("malformed rank in '" + text + "'");
        rank = rank * 10 + (text[i] - '0');
    }
    return of(s, rank);
}

namespace {

void validate_series_rank(Series s, int n) {
    bool ok = false;
    switch (s) {
        case Series::A: ok = n >= 1; break;
        case Series::B: ok = n >= 3; break;
        case Series::C: ok = n >= 2; break;
        case Series::D: ok = n >= 4; break;
        case Series::E: ok = n >= 6 && n <= 8; break;
        case Series::F: ok = n == 4; break;
        case Series::G: ok = n == 2; break;
        case Series::Explicit: ok = true; break;
    }
    if (!ok)
        throw InvalidDiagram("rank " + std::to_string(n) + " not valid for series " +
                             series_name(s));
}

// Cartan matrices of the connected series, with the node numbering that the
// rest of the library (orbit tables, orthogonal charts) assumes.
IMat series_cartan(Series s, int n) {
    IMat m = identity_imat(static_cast<size_t>(n));
    for (auto& row : m) for (auto& v : row) v = 0;
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) { m[i][i + 1] = -1; m[i + 1][i] = -1; }
    };
    switch (s) {
        case Series::A:
            chain(n);
            break;
        case Series::B:
            chain(n);
            m[n - 2][n - 1] = -2;  // short last root
            break;
        case Series::C:
            chain(n);
            m[n - 1][n - 2] = -2;  // long last root
            break;
        case Series::D:
            chain(n - 1);
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            break;
        case Series::E:
            // Chain 1-2-3-4-5(-6)(-7) with the branch node attached to node 3.
            chain(n - 1);
            m[2][n - 1] = -1;
            m[n - 1][2] = -1;
            break;
        case Series::F:
            chain(4);
            m[1][2] = -2;
            m[2][1] = -1;
            break;
        case Series::G:
            m[0][1] = -3;
            m[1][0] = -1;
            break;
        case Series::Explicit:
            break;
    }
    return m;
}

void validate_cartan(const IMat& m) {
    size_t n = m.size();
    if (n == 0) throw InvalidDiagram("empty Cartan matrix");
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw InvalidDiagram("Cartan matrix not square");
        if (m[i][i] != 2) throw InvalidDiagram("Cartan diagonal entry != 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0) throw InvalidDiagram("positive off-diagonal Cartan entry");
            if ((m[i][j] == 0) != (m[j][i] == 0))
                throw InvalidDiagram("asymmetric zero pattern in Cartan matrix");
        }
    }
}

// Simple-root norms <a_i,a_i> from the Cartan matrix: within each connected
// component the ratios are fixed by M_ij/M_ji = n_i/n_j, and the long roots
// are normalized to norm 2.
QVec solve_norms(const IMat& m) {
    size_t n = m.size();
    QVec norms(n, Rat(0));
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int c = ncomp++;
        std::vector<size_t> stack{start};
        comp[start] = c;
        norms[start] = Rat(2);
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (i == j || m[i][j] == 0) continue;
                // n_j = n_i * M_ji / M_ij
                Rat nj = norms[i] * Rat(m[j][i]) / Rat(m[i][j]);
                if (comp[j] < 0) {
                    comp[j] = c;
                    norms[j] = nj;
                    stack.push_back(j);
                } else if (norms[j] != nj) {
                    throw InvalidDiagram("inconsistent root lengths in Cartan matrix");
                }
            }
        }
        // Normalize the component so its longest root has norm 2.
        Rat maxn(0);
        for (size_t j = 0; j < n; ++j)
            if (comp[j] == c && norms[j] > maxn) maxn = norms[j];
        for (size_t j = 0; j < n; ++j)
            if (comp[j] == c) norms[j] = norms[j] * Rat(2) / maxn;
    }
    return norms;
}

void check_positive_definite(const QMat& s) {
    // Leading principal minors of a symmetric matrix.
    size_t n = s.size();
    QMat a = s;
    for (size_t col = 0; col < n; ++col) {
        if (!(a[col][col] > Rat(0)))
            throw InvalidDiagram("quadratic form not positive definite (not finite type)");
        for (size_t i = col + 1; i < n; ++i) {
            Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
}

std::vector<IVec> positive_root_closure(const IMat& m) {
    size_t n = m.size();
    // Reflect in α-coordinates: (r_j c)_j = c_j - Σ_k c_k M_kj.
    auto reflect = [&](const IVec& c, size_t j) {
        IVec r = c;
        long long s = 0;
        for (size_t k = 0; k < n; ++k) s += c[k] * m[k][j];
        r[j] = c[j] - s;
        return r;
    };
    std::set<IVec> roots;
    std::vector<IVec> frontier;
    for (size_t i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    const size_t cap = 1000;  // E8 has 120; anything larger is not finite type
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const IVec& c : frontier) {
            for (size_t j = 0; j < n; ++j) {
                IVec r = reflect(c, j);
                bool nonneg = true;
                for (long long v : r) if (v < 0) { nonneg = false; break; }
                if (!nonneg) continue;
                if (roots.insert(r).second) next.push_back(r);
            }
        }
        if (roots.size() > cap)
            throw InvalidDiagram("positive-root closure does not terminate (not finite type)");
        frontier = std::move(next);
    }
    return {roots.begin(), roots.end()};  // std::set iterates in lex order
}

} // namespace

RootSystemData build(const DiagramSpec& spec) {
    validate_series_rank(spec.series, spec.rank);
    RootSystemData sys;
    sys.series = spec.series;
    sys.rank = spec.rank;
    sys.cartan = spec.series == Series::Explicit ? spec.cartan
                                                 : series_cartan(spec.series, spec.rank);
    if (spec.series == Series::Explicit) sys.rank = static_cast<int>(sys.cartan.size());
    validate_cartan(sys.cartan);

    sys.rootNorms = solve_norms(sys.cartan);
    QMat mq = to_qmat(sys.cartan);
    try {
        sys.cartanInverse = mat_inverse(mq);
    } catch (const std::domain_error&) {
        throw InvalidDiagram("Cartan matrix is singular (not finite type)");
    }
    // S = M^{-1} D, D = diag(<a_i,a_i>/2).
    size_t n = static_cast<size_t>(sys.rank);
    sys.quadraticForm = sys.cartanInverse;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            sys.quadraticForm[i][j] *= sys.rootNorms[j] / Rat(2);
    check_positive_definite(sys.quadraticForm);

    sys.positiveRoots = positive_root_closure(sys.cartan);

    // Highest root: maximal height; ties broken lexicographically (ties only
    // occur for reducible diagrams, where a single highest root does not exist).
    long long bestHeight = -1;
    for (size_t i = 0; i < sys.positiveRoots.size(); ++i) {
        long long h = 0;
        for (long long v : sys.positiveRoots[i]) h += v;
        if (h > bestHeight) {
            bestHeight = h;
            sys.highestRootIndex = i;
        }
    }
    sys.highestRootMarks = sys.positiveRoots[sys.highestRootIndex];
    sys.comarks.resize(n);
    for (size_t i = 0; i < n; ++i)
        sys.comarks[i] = Rat(sys.highestRootMarks[i]) * sys.rootNorms[i] / Rat(2);
    return sys;
}

Rat scalar_product(const RootSystemData& sys, const QVec& x, const QVec& y) {
    size_t n = static_cast<size_t>(sys.rank);
    if (x.size() != n || y.size() != n)
        throw RankMismatch("scalar_product: expected rank " + std::to_string(sys.rank));
    Rat s;
    for (size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) s += x[i] * sys.quadraticForm[i][j] * y[j];
    }
    return s;
}

namespace {

// ω -> orthogonal chart, exact.  Chart conventions:
//   A_n: n+1 coordinates with Σx = 0, λ_i = x_i − x_{i+1};
//   B_n: λ_i = x_i − x_{i+1} (i<n), λ_n = 2 x_n;
//   C_n: λ_i = x_i − x_{i+1} (i<n), λ_n = x_n;
//   D_n: λ_i = x_i − x_{i+1} (i≤n−2), λ_{n−1} = x_{n−1}+x_n, λ_n = x_{n−1}−x_n.
QVec omega_to_orth(const RootSystemData& sys, const QVec& b) {
    int n = sys.rank;
    switch (sys.series) {
        case Series::A: {
            QVec x(static_cast<size_t>(n + 1));
            // x_i = Σ_{j>=i} λ_j − (Σ_j j λ_j)/(n+1)
            Rat shift;
            for (int j = 1; j <= n; ++j) shift += Rat(j) * b[static_cast<size_t>(j - 1)];
            shift /= Rat(n + 1);
            Rat tail;
            for (int i = n + 1; i >= 1; --i) {
                if (i <= n) tail += b[static_cast<size_t>(i - 1)];
                x[static_cast<size_t>(i - 1)] = tail - shift;
            }
            return x;
        }
        case Series::B: {
            QVec x(static_cast<size_t>(n));
            Rat tail = b[static_cast<size_t>(n - 1)] / Rat(2);
            for (int i = n; i >= 1; --i) {
                x[static_cast<size_t>(i - 1)] = tail;
                if (i >= 2) tail += b[static_cast<size_t>(i - 2)];
            }
            return x;
        }
        case Series::C: {
            QVec x(static_cast<size_t>(n));
            Rat tail;
            for (int i = n; i >= 1; --i) {
                tail += b[static_cast<size_t>(i - 1)];
                x[static_cast<size_t>(i - 1)] = tail;
            }
            return x;
        }
        case Series::D: {
            QVec x(static_cast<size_t>(n));
            x[static_cast<size_t>(n - 1)] =
                (b[static_cast<size_t>(n - 2)] - b[static_cast<size_t>(n - 1)]) / Rat(2);
            Rat tail = (b[static_cast<size_t>(n - 2)] + b[static_cast<size_t>(n - 1)]) / Rat(2);
            for (int i = n - 1; i >= 1; --i) {
                x[static_cast<size_t>(i - 1)] = tail;
                if (i >= 2) tail += b[static_cast<size_t>(i - 2)];
            }
            return x;
        }
        default:
            throw UnsupportedBasis("orthogonal chart only exists for series A/B/C/D");
    }
}

} // namespace

QVec orthogonal_chart_to_omega(Series family, int rank, const QVec& x) {
    int n = rank;
    QVec b(static_cast<size_t>(n));
    size_t need = family == Series::A ? static_cast<size_t>(n + 1) : static_cast<size_t>(n);
    if (x.size() != need)
        throw RankMismatch("orthogonal chart: expected " + std::to_string(need) +
                           " coordinates");
    switch (family) {
        case Series::A: {
            for (int i = 0; i < n; ++i)
                b[static_cast<size_t>(i)] =
                    x[static_cast<size_t>(i)] - x[static_cast<size_t>(i + 1)];
            return b;
        }
        case Series::B: {
            for (int i = 0; i + 1 < n; ++i)
                b[static_cast<size_t>(i)] =
                    x[static_cast<size_t>(i)] - x[static_cast<size_t>(i + 1)];
            b[static_cast<size_t>(n - 1)] = Rat(2) * x[static_cast<size_t>(n - 1)];
            return b;
        }
        case Series::C: {
            for (int i = 0; i + 1 < n; ++i)
                b[static_cast<size_t>(i)] =
                    x[static_cast<size_t>(i)] - x[static_cast<size_t>(i + 1)];
            b[static_cast<size_t>(n - 1)] = x[static_cast<size_t>(n - 1)];
            return b;
        }
        case Series::D: {
            for (int i = 0; i + 2 < n; ++i)
                b[static_cast<size_t>(i)] =
                    x[static_cast<size_t>(i)] - x[static_cast<size_t>(i + 1)];
            b[static_cast<size_t>(n - 2)] =
                x[static_cast<size_t>(n - 2)] + x[static_cast<size_t>(n - 1)];
            b[static_cast<size_t>(n - 1)] =
                x[static_cast<size_t>(n - 2)] - x[static_cast<size_t>(n - 1)];
            return b;
        }
        default:
            throw UnsupportedBasis("orthogonal chart only exists for series A/B/C/D");
    }
}

QVec coroot_to_omega(const RootSystemData& sys, const QVec& c) {
    // ω-coordinates of α_i^vee form the rows of D^{-1} M (a symmetric matrix).
    size_t n = static_cast<size_t>(sys.rank);
    QVec b(n);
    for (size_t k = 0; k < n; ++k) {
        Rat s;
        for (size_t i = 0; i < n; ++i)
            s += c[i] * Rat(2) / sys.rootNorms[i] * Rat(sys.cartan[i][k]);
        b[k] = s;
    }
    return b;
}

QVec basis_convert(const RootSystemData& sys, const QVec& v, Basis from, Basis to) {
    size_t n = static_cast<size_t>(sys.rank);
    size_t expect = from == Basis::Orthogonal ? static_cast<size_t>(sys.orthogonal_dim()) : n;
    if ((from == Basis::Orthogonal || to == Basis::Orthogonal) && !sys.has_orthogonal_chart())
        throw UnsupportedBasis("orthogonal chart only exists for series A/B/C/D");
    if (v.size() != expect)
        throw RankMismatch("basis_convert: expected " + std::to_string(expect) +
                           " coordinates, got " + std::to_string(v.size()));
    if (from == to) {
        if (from == Basis::Orthogonal && sys.series == Series::A) {
            // Canonicalize the shift: entries are normalized to sum 0.
            Rat mean;
            for (const Rat& r : v) mean += r;
            mean /= Rat(static_cast<long long>(v.size()));
            QVec w = v;
            for (Rat& r : w) r -= mean;
            return w;
        }
        return v;
    }

    // Everything funnels through ω-coordinates.
    QVec b;
    switch (from) {
        case Basis::Omega: b = v; break;
        case Basis::Alpha: {
            // λ^ω = M^T λ^α
            b.assign(n, Rat());
            for (size_t j = 0; j < n; ++j)
                for (size_t i = 0; i < n; ++i) b[j] += Rat(sys.cartan[i][j]) * v[i];
            break;
        }
        case Basis::CorootAlpha: b = coroot_to_omega(sys, v); break;
        case Basis::Orthogonal:
            b = orthogonal_chart_to_omega(sys.series, sys.rank, v);
            break;
    }
    switch (to) {
        case Basis::Omega: return b;
        case Basis::Alpha: {
            // λ^α = (M^T)^{-1} λ^ω = (M^{-1})^T λ^ω
            QVec a(n, Rat());
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) a[i] += sys.cartanInverse[j][i] * b[j];
            return a;
        }
        case Basis::CorootAlpha:
            // c = S b (S = M^{-1} D is the inverse of D^{-1} M)
            return mat_apply(sys.quadraticForm, b);
        case Basis::Orthogonal: return omega_to_orth(sys, b);
    }
    throw UnsupportedBasis("unreachable basis pair");
}

bool diagram_connected(const RootSystemData& sys) {
    size_t n = static_cast<size_t>(sys.rank);
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<size_t> stack{0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t j = 0; j < n; ++j) {
            if (!seen[j] && sys.cartan[i][j] != 0) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

std::vector<double> omega_to_orthogonal(const RootSystemData& sys,
                                        const std::vector<double>& omega) {
    if (!sys.has_orthogonal_chart())
        throw UnsupportedBasis("orthogonal chart only exists for series A/B/C/D");
    int n = sys.rank;
    if (omega.size() != static_cast<size_t>(n))
        throw RankMismatch("omega_to_orthogonal: wrong rank");
    std::vector<double> x;
    switch (sys.series) {
        case Series::A: {
            x.assign(static_cast<size_t>(n + 1), 0.0);
            double shift = 0;
            for (int j = 1; j <= n; ++j) shift += j * omega[static_cast<size_t>(j - 1)];
            shift /= n + 1;
            double tail = 0;
            for (int i = n + 1; i >= 1; --i) {
                if (i <= n) tail += omega[static_cast<size_t>(i - 1)];
                x[static_cast<size_t>(i - 1)] = tail - shift;
            }
            break;
        }
        case Series::B: {
            x.assign(static_cast<size_t>(n), 0.0);
            double tail = omega[static_cast<size_t>(n - 1)] / 2;
            for (int i = n; i >= 1; --i) {
                x[static_cast<size_t>(i - 1)] = tail;
                if (i >= 2) tail += omega[static_cast<size_t>(i - 2)];
            }
            break;
        }
        case Series::C: {
            x.assign(static_cast<size_t>(n), 0.0);
            double tail = 0;
            for (int i = n; i >= 1; --i) {
                tail += omega[static_cast<size_t>(i - 1)];
                x[static_cast<size_t>(i - 1)] = tail;
            }
            break;
        }
        case Series::D: {
            x.assign(static_cast<size_t>(n), 0.0);
            x[static_cast<size_t>(n - 1)] =
                (omega[static_cast<size_t>(n - 2)] - omega[static_cast<size_t>(n - 1)]) / 2;
            double tail =
                (omega[static_cast<size_t>(n - 2)] + omega[static_cast<size_t>(n - 1)]) / 2;
            for (int i = n - 1; i >= 1; --i) {
                x[static_cast<size_t>(i - 1)] = tail;
                if (i >= 2) tail += omega[static_cast<size_t>(i - 2)];
            }
            break;
        }
        default: break;
    }
    return x;
}

} // namespace eorbit
