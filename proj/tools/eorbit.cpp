// eorbit: command-line interface to the even-orbit-function library.
//
// Subcommands: group, orbit, product, branch, eval, grid, dft (analyze /
// synthesize), symfunc, verify.  Exit codes: 0 success, 1 domain error (the
// error name goes to stderr), 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eorbit/efunctions.hpp"
#include "eorbit/orbits.hpp"
#include "eorbit/symfunc.hpp"
#include "eorbit/transforms.hpp"
#include "eorbit/verify.hpp"

using namespace eorbit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------- formatting ----------

std::string f17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string rat_json(const Rat& r) {
    if (r.is_integer()) return r.str();
    return "\"" + r.str() + "\"";
}

std::string qvec_json(const QVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rat_json(v[i]);
    }
    return s + "]";
}

std::string ivec_json(const IVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string imat_json(const IMat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += ivec_json(m[i]);
    }
    return s + "]";
}

std::string qmat_json(const QMat& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += qvec_json(m[i]);
    }
    return s + "]";
}

// ---------- parsing ----------

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

QVec parse_weight(const std::string& text) {
    QVec out;
    for (const std::string& piece : split(text, ',')) {
        try {
            out.push_back(Rat::parse(piece));
        } catch (const std::exception&) {
            throw UsageError("cannot parse rational coordinate '" + piece + "'");
        }
    }
    return out;
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    for (const std::string& piece : split(text, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(piece, &pos));
            if (pos != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw UsageError("cannot parse integer '" + piece + "'");
        }
    }
    return out;
}

std::vector<std::vector<double>> read_csv(const std::string& path, int columns) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        for (const std::string& piece : split(line, ',')) {
            char* end = nullptr;
            double v = std::strtod(piece.c_str(), &end);
            while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
            if (!end || *end != '\0')
                throw UsageError(path + ":" + std::to_string(lineno) +
                                 ": cannot parse number '" + piece + "'");
            row.push_back(v);
        }
        if (columns >= 0 && (int)row.size() != columns)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(columns) + " columns, found " +
                             std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Writes to --out path or stdout.
void emit(const std::string& outPath, const std::string& text) {
    if (outPath.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + outPath + "'");
    out << text;
}

int thread_count() {
    const char* env = std::getenv("EORBIT_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

// coeffs.json: [{"lambda":[...], "re":..., "im":...}, ...]
std::string coeffs_json(const std::vector<Weight>& lambdas,
                        const std::vector<std::complex<double>>& coeffs) {
    std::string s = "[";
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (i) s += ",";
        s += "\n  {\"lambda\":" + qvec_json(lambdas[i]) + ",\"re\":" + f17(coeffs[i].real()) +
             ",\"im\":" + f17(coeffs[i].imag()) + "}";
    }
    return s + "\n]\n";
}

void parse_coeffs_json(const std::string& path, std::vector<Weight>& lambdas,
                       std::vector<std::complex<double>>& coeffs) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError(path + ": invalid JSON: " + e.what());
    }
    if (!j.is_array()) throw UsageError(path + ": expected a JSON array");
    for (const auto& item : j) {
        if (!item.contains("lambda"))
            throw UsageError(path + ": item missing \"lambda\"");
        QVec lam;
        for (const auto& c : item["lambda"]) {
            if (c.is_string())
                lam.push_back(Rat::parse(c.get<std::string>()));
            else
                lam.push_back(Rat(c.get<long long>()));
        }
        lambdas.push_back(std::move(lam));
        double re = item.value("re", 0.0), im = item.value("im", 0.0);
        coeffs.emplace_back(re, im);
    }
}

// Parses --spectrum: "auto" or a JSON file (array of arrays, or coeffs-style
// array of objects with "lambda").
SpectrumSet parse_spectrum(const std::string& arg, const RootSystemData& sys,
                           const WeylGroup& W, long long m) {
    SpectrumSet spec;
    if (arg == "auto") return auto_spectrum(sys, W, m);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open spectrum file '" + arg + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError(arg + ": invalid JSON: " + e.what());
    }
    if (!j.is_array()) throw UsageError(arg + ": expected a JSON array");
    for (const auto& item : j) {
        const nlohmann::json* arr = &item;
        if (item.is_object()) {
            if (!item.contains("lambda")) throw UsageError(arg + ": item missing \"lambda\"");
            arr = &item["lambda"];
        }
        QVec lam;
        for (const auto& c : *arr) {
            if (c.is_string())
                lam.push_back(Rat::parse(c.get<std::string>()));
            else
                lam.push_back(Rat(c.get<long long>()));
        }
        spec.lambdas.push_back(std::move(lam));
    }
    if (spec.lambdas.empty()) throw UsageError(arg + ": empty spectrum");
    return spec;
}

// Checks that CSV sample coordinates follow the grid order.
void check_sample_alignment(const std::vector<std::vector<double>>& rows,
                            const std::vector<Weight>& points, int rank,
                            const std::string& path) {
    if (rows.size() != points.size())
        throw UsageError(path + ": expected " + std::to_string(points.size()) +
                         " sample rows (grid order), found " + std::to_string(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int k = 0; k < rank; ++k) {
            double want = points[i][(std::size_t)k].to_double();
            if (std::abs(rows[i][(std::size_t)k] - want) > 1e-9)
                throw UsageError(path + ": row " + std::to_string(i + 1) +
                                 " coordinates do not match the grid point (expected " +
                                 f17(want) + " in column " + std::to_string(k + 1) + ")");
        }
    }
}

// ---------- subcommand bodies ----------

int cmd_group(const std::string& diagram, const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    std::vector<IVec> posroots = sys.positiveRoots;
    std::ostringstream os;
    os << "{\n";
    os << "  \"cartan\":" << imat_json(sys.cartan) << ",\n";
    os << "  \"comarks\":" << qvec_json(sys.comarks) << ",\n";
    os << "  \"diagram\":\"" << diagram << "\",\n";
    os << "  \"even_order\":" << W.evenOrder() << ",\n";
    os << "  \"marks\":" << ivec_json(sys.highestRootMarks) << ",\n";
    os << "  \"order\":" << W.order() << ",\n";
    os << "  \"positive_roots\":" << imat_json(posroots) << ",\n";
    os << "  \"quadratic_form\":" << qmat_json(sys.quadraticForm) << ",\n";
    os << "  \"rank\":" << sys.rank << ",\n";
    os << "  \"root_norms\":" << qvec_json(sys.rootNorms) << "\n";
    os << "}\n";
    emit(outPath, os.str());
    return 0;
}

int cmd_orbit(const std::string& diagram, const std::string& lambdaText, bool even,
              const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    QVec lam = parse_weight(lambdaText);
    std::ostringstream os;
    if (even) {
        Orbit o = we_orbit(sys, W, lam);
        os << "{\n  \"kind\":\"" << (o.kind == OrbitKind::FirstType ? "first" : "second")
           << "\",\n  \"points\":[";
        for (std::size_t i = 0; i < o.points.size(); ++i)
            os << (i ? "," : "") << "\n    " << qvec_json(o.points[i]);
        os << "\n  ],\n  \"rep\":" << qvec_json(o.rep) << ",\n  \"size\":" << o.size()
           << ",\n  \"stabilizer\":" << o.stabilizerOrder << "\n}\n";
    } else {
        auto pts = w_orbit_points(sys, W, lam);
        os << "{\n  \"points\":[";
        for (std::size_t i = 0; i < pts.size(); ++i)
            os << (i ? "," : "") << "\n    " << qvec_json(pts[i]);
        os << "\n  ],\n  \"size\":" << pts.size() << "\n}\n";
    }
    emit(outPath, os.str());
    return 0;
}

std::string decomposition_json(const OrbitDecomposition& dec) {
    std::ostringstream os;
    os << "{\"terms\":[";
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        if (i) os << ",";
        os << "\n  {\"rep\":" << qvec_json(dec.terms[i].rep)
           << ",\"mult\":" << dec.terms[i].multiplicity << "}";
    }
    os << "\n]}\n";
    return os.str();
}

int cmd_product(const std::string& diagram, const std::string& lamText,
                const std::string& muText, const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    auto dec = product_decompose(sys, W, parse_weight(lamText), parse_weight(muText));
    emit(outPath, decomposition_json(dec));
    return 0;
}

int cmd_branch(const std::string& diagram, const std::string& lamText,
               const std::string& rootsText, const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    BranchRule rule = BranchRule::coordinate_drop();
    if (!rootsText.empty()) {
        std::vector<std::size_t> idx;
        for (int v : parse_ints(rootsText)) {
            if (v < 0) throw UsageError("--roots indices must be nonnegative");
            idx.push_back((std::size_t)v);
        }
        rule = BranchRule::equal_rank(idx);
    }
    auto target = branch_target(sys, rule);
    auto dec = branch_decompose(sys, W, parse_weight(lamText), rule);
    std::ostringstream os;
    os << "{\n  \"target_cartan\":" << imat_json(target.system.cartan)
       << ",\n  \"target_rank\":" << target.system.rank << ",\n  \"terms\":[";
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        if (i) os << ",";
        os << "\n    {\"rep\":" << qvec_json(dec.terms[i].rep)
           << ",\"mult\":" << dec.terms[i].multiplicity << "}";
    }
    os << "\n  ]\n}\n";
    emit(outPath, os.str());
    return 0;
}

int cmd_eval(const std::string& diagram, const std::string& familyText,
             const std::string& lamText, const std::string& pointsPath,
             const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    Family fam = family_parse(familyText);
    QVec lam = parse_weight(lamText);
    auto rows = read_csv(pointsPath, sys.rank);
    std::ostringstream os;
    for (const auto& row : rows) {
        std::complex<double> v = eval(sys, W, fam, lam, row);
        for (double c : row) os << f17(c) << ",";
        os << f17(v.real()) << "," << f17(v.imag()) << "\n";
    }
    emit(outPath, os.str());
    return 0;
}

int cmd_grid(const std::string& diagram, long long M, long long m, bool even, bool csv,
             const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    std::vector<Weight> points;
    std::ostringstream os;
    if (M > 0) {
        auto g = grid_fm(sys, M, even);
        points = g.points;
        if (!csv) os << "{\n  \"M\":" << M << ",\n  \"even\":" << (even ? "true" : "false");
    } else {
        if (even) throw UsageError("--even applies to --M grids only");
        auto g = grid_tm(sys, m);
        points = g.points;
        if (!csv) os << "{\n  \"m\":" << m;
    }
    if (csv) {
        for (const auto& p : points) {
            for (std::size_t k = 0; k < p.size(); ++k)
                os << (k ? "," : "") << f17(p[k].to_double());
            os << "\n";
        }
    } else {
        os << ",\n  \"points\":[";
        for (std::size_t i = 0; i < points.size(); ++i)
            os << (i ? "," : "") << "\n    " << qvec_json(points[i]);
        os << "\n  ],\n  \"size\":" << points.size() << "\n}\n";
    }
    emit(outPath, os.str());
    return 0;
}

int cmd_dft_analyze(const std::string& diagram, long long m, long long M,
                    const std::string& samplesPath, const std::string& spectrumArg,
                    const std::string& methodArg, const std::string& sampling,
                    const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    if (sampling == "fm-square") {
        if (M <= 0) throw UsageError("--sampling fm-square requires --M");
        auto g = grid_fm(sys, M, true);
        auto rows = read_csv(samplesPath, sys.rank + 2);
        check_sample_alignment(rows, g.points, sys.rank, samplesPath);
        std::vector<std::complex<double>> samples;
        for (const auto& r : rows)
            samples.emplace_back(r[(std::size_t)sys.rank], r[(std::size_t)sys.rank + 1]);
        auto res = fm_square_analyze(sys, W, M, samples);
        if (res.rankDeficient())
            std::fprintf(stderr,
                         "warning: sampling matrix rank %lld < %lld columns; "
                         "returning the least-squares solution\n",
                         res.rank, res.cols);
        emit(outPath, coeffs_json(res.spectrum.lambdas, res.coeffs));
        return 0;
    }
    if (sampling != "tm") throw UsageError("unknown --sampling '" + sampling + "'");
    if (m <= 0) throw UsageError("dft analyze requires --m");
    auto grid = grid_tm(sys, m);
    auto rows = read_csv(samplesPath, sys.rank + 2);
    check_sample_alignment(rows, grid.points, sys.rank, samplesPath);
    std::vector<std::complex<double>> samples;
    for (const auto& r : rows)
        samples.emplace_back(r[(std::size_t)sys.rank], r[(std::size_t)sys.rank + 1]);
    SpectrumSet spec = parse_spectrum(spectrumArg, sys, W, m);
    AnalyzeMethod method = AnalyzeMethod::Direct;
    if (methodArg == "fdomain")
        method = AnalyzeMethod::FDomain;
    else if (methodArg != "direct")
        throw UsageError("unknown --method '" + methodArg + "'");
    auto coeffs = analyze(sys, W, grid, samples, spec, method, {}, thread_count());
    emit(outPath, coeffs_json(spec.lambdas, coeffs));
    return 0;
}

int cmd_dft_synthesize(const std::string& diagram, const std::string& coeffsPath,
                       const std::string& pointsPath, const std::string& outPath) {
    auto sys = build(DiagramSpec::parse(diagram));
    auto W = WeylGroup::generate(sys);
    std::vector<Weight> lambdas;
    std::vector<std::complex<double>> coeffs;
    parse_coeffs_json(coeffsPath, lambdas, coeffs);
    SpectrumSet spec;
    spec.lambdas = lambdas;
    auto pts = read_csv(pointsPath, sys.rank);
    auto values = synthesize(sys, W, spec, coeffs, pts);
    std::ostringstream os;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (double c : pts[i]) os << f17(c) << ",";
        os << f17(values[i].real()) << "," << f17(values[i].imag()) << "\n";
    }
    emit(outPath, os.str());
    return 0;
}

int cmd_symfunc(const std::string& mText, int n, const std::string& pointsPath,
                const std::string& outPath) {
    std::vector<int> m = parse_ints(mText);
    if (n > 0 && (int)m.size() != n)
        throw UsageError("--n does not match the length of --m");
    for (int v : m)
        if (v < 0) throw UsageError("--m entries must be nonnegative");
    auto rows = read_csv(pointsPath, (int)m.size());
    std::ostringstream os;
    for (const auto& row : rows) {
        double v = sym_hermite_eval(m, row);
        for (double c : row) os << f17(c) << ",";
        os << f17(v) << "\n";
    }
    emit(outPath, os.str());
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites) {
    auto results = run_verification(suites);
    bool allPass = true;
    std::printf("%-15s %-6s %s\n", "suite", "result", "detail");
    for (const auto& r : results) {
        std::printf("%-15s %-6s %s\n", r.suite.c_str(), r.pass ? "PASS" : "FAIL",
                    r.message.c_str());
        if (!r.pass) allPass = false;
    }
    return allPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"even Weyl-group orbits, E-orbit functions, and their transforms"};
    app.require_subcommand(1);

    std::string diagram, lambdaText, muText, familyText, pointsPath, samplesPath;
    std::string coeffsPath, outPath, rootsText, spectrumArg = "auto";
    std::string methodArg = "direct", sampling = "tm", mIndexText;
    long long M = 0, mres = 0;
    int nOpt = 0;
    bool even = false, csv = false;
    std::vector<std::string> suites;

    auto* gGroup = app.add_subcommand("group", "print diagram/group data as JSON");
    gGroup->add_option("diagram", diagram)->required();
    gGroup->add_option("--out", outPath);

    auto* gOrbit = app.add_subcommand("orbit", "orbit points of a weight");
    gOrbit->add_option("diagram", diagram)->required();
    gOrbit->add_option("lambda", lambdaText)->required();
    gOrbit->add_flag("--even", even, "even-subgroup orbit (with rep/kind/stabilizer)");
    gOrbit->add_option("--out", outPath);

    auto* gProduct = app.add_subcommand("product", "decompose a product of even orbits");
    gProduct->add_option("diagram", diagram)->required();
    gProduct->add_option("lambda", lambdaText)->required();
    gProduct->add_option("mu", muText)->required();
    gProduct->add_option("--out", outPath);

    auto* gBranch = app.add_subcommand("branch", "restrict an even orbit to a subsystem");
    gBranch->add_option("diagram", diagram)->required();
    gBranch->add_option("lambda", lambdaText)->required();
    gBranch->add_option("--roots", rootsText,
                        "equal-rank rule: positive-root indices (default: coordinate drop)");
    gBranch->add_option("--out", outPath);

    auto* gEval = app.add_subcommand("eval", "evaluate an orbit function on points");
    gEval->add_option("diagram", diagram)->required();
    gEval->add_option("family", familyText, "E, E-hat, C, C-hat, or S")->required();
    gEval->add_option("lambda", lambdaText)->required();
    gEval->add_option("--points", pointsPath, "CSV of omega coordinates")->required();
    gEval->add_option("--out", outPath);

    auto* gGrid = app.add_subcommand("grid", "fundamental-region or torus grids");
    gGrid->add_option("diagram", diagram)->required();
    gGrid->add_option("--M", M, "F_M grid resolution");
    gGrid->add_option("--m", mres, "T_m torus grid resolution");
    gGrid->add_flag("--even", even, "even grid F^e_M");
    gGrid->add_flag("--csv", csv, "emit CSV of floating coordinates");
    gGrid->add_flag("--json", "emit JSON (the default)");
    gGrid->add_option("--out", outPath);

    auto* gDft = app.add_subcommand("dft", "finite E-orbit function transform");
    gDft->require_subcommand(1);
    auto* gAnalyze = gDft->add_subcommand("analyze", "samples -> coefficients");
    gAnalyze->add_option("diagram", diagram)->required();
    gAnalyze->add_option("--m", mres, "torus resolution");
    gAnalyze->add_option("--M", M, "F^e_M resolution (fm-square sampling)");
    gAnalyze->add_option("--samples", samplesPath, "CSV: omega coordinates, re, im")
        ->required();
    gAnalyze->add_option("--spectrum", spectrumArg, "'auto' or a JSON file of weights");
    gAnalyze->add_option("--method", methodArg, "direct | fdomain");
    gAnalyze->add_option("--sampling", sampling, "tm | fm-square");
    gAnalyze->add_option("--out", outPath);
    auto* gSynth = gDft->add_subcommand("synthesize", "coefficients -> samples");
    gSynth->add_option("diagram", diagram)->required();
    gSynth->add_option("--coeffs", coeffsPath, "coeffs.json")->required();
    gSynth->add_option("--points", pointsPath, "CSV of omega coordinates")->required();
    gSynth->add_option("--out", outPath);

    auto* gSym = app.add_subcommand("symfunc", "symmetrized function families");
    gSym->require_subcommand(1);
    auto* gHermite = gSym->add_subcommand("hermite", "symmetrized Hermite values");
    gHermite->add_option("--m", mIndexText, "multi-index, e.g. 2,1,0")->required();
    gHermite->add_option("--n", nOpt, "dimension (checked against --m)");
    gHermite->add_option("--points", pointsPath, "CSV of evaluation points")->required();
    gHermite->add_option("--out", outPath);

    auto* gVerify = app.add_subcommand("verify", "run built-in verification suites");
    gVerify->add_option("--suite", suites, "suite name (repeatable; default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gGroup->parsed()) return cmd_group(diagram, outPath);
        if (gOrbit->parsed()) return cmd_orbit(diagram, lambdaText, even, outPath);
        if (gProduct->parsed()) return cmd_product(diagram, lambdaText, muText, outPath);
        if (gBranch->parsed()) return cmd_branch(diagram, lambdaText, rootsText, outPath);
        if (gEval->parsed())
            return cmd_eval(diagram, familyText, lambdaText, pointsPath, outPath);
        if (gGrid->parsed()) {
            if ((M > 0) == (mres > 0))
                throw UsageError("grid requires exactly one of --M or --m");
            return cmd_grid(diagram, M, mres, even, csv, outPath);
        }
        if (gAnalyze->parsed())
            return cmd_dft_analyze(diagram, mres, M, samplesPath, spectrumArg, methodArg,
                                   sampling, outPath);
        if (gSynth->parsed())
            return cmd_dft_synthesize(diagram, coeffsPath, pointsPath, outPath);
        if (gHermite->parsed()) return cmd_symfunc(mIndexText, nOpt, pointsPath, outPath);
        if (gVerify->parsed()) return cmd_verify(suites);
        std::fprintf(stderr, "no subcommand selected\n");
        return 2;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
