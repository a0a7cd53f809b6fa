#include "ncclark/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ncclark/error.hpp"
#include "ncclark/freealg.hpp"
#include "ncclark/gleason.hpp"
#include "ncclark/gns.hpp"
#include "ncclark/hbspace.hpp"
#include "ncclark/linalg.hpp"
#include "ncclark/multiindex.hpp"
#include "ncclark/series.hpp"
#include "ncclark/states.hpp"

namespace ncclark {

namespace {

void le(CriterionResult& r, std::string label, double measured, double bound) {
    r.checks.push_back({std::move(label), measured <= bound, measured, bound, "<="});
}

void ge(CriterionResult& r, std::string label, double measured, double bound) {
    r.checks.push_back({std::move(label), measured >= bound, measured, bound, ">="});
}

void eq(CriterionResult& r, std::string label, double measured, double target) {
    r.checks.push_back({std::move(label), measured == target, measured, target, "=="});
}

void verdict(CriterionResult& r, std::string label, bool ok) {
    r.checks.push_back({std::move(label), ok, 0.0, 0.0, "verdict"});
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

std::vector<Complex> cuntzZeta2() { return {{0.6, 0.0}, {0.0, 0.8}}; }
// 0.6^2 + 0.48^2 + 0.64^2 = 1 exactly.
std::vector<Complex> cuntzZeta3() { return {{0.6, 0.0}, {0.48, 0.0}, {0.0, 0.64}}; }

Multiplier oneVarZ(int N) {
    std::vector<Complex> c{{0.0, 0.0}, {1.0, 0.0}};
    return makeOneVarMultiplier(c, N);
}

// The builtins whose measured distance^2 at degree 5 clears the 1e-6
// quasi-extremality gate; the gate itself is re-measured inside each
// criterion that uses this set.
struct QeEntry {
    std::string name;
    Multiplier b;
};

std::vector<QeEntry> quasiExtremeSet(int degree) {
    std::vector<QeEntry> out;
    out.push_back({"coordinate b=z1 (d=2)", makeCoordinateMultiplier(2, degree)});
    out.push_back({"cuntz <z,zeta> (d=2)", makeCuntzMultiplier(cuntzZeta2(), degree)});
    out.push_back({"cuntz <z,zeta> (d=3)", makeCuntzMultiplier(cuntzZeta3(), degree)});
    out.push_back({"one-var b=z (d=1)", oneVarZ(degree)});
    return out;
}

CriterionResult criterion1() {
    CriterionResult r{1, "symmetrized products match the Fock-space oracle", false, {}, {}};
    const double tol = 1e-12;
    const int maxLen = 6;
    const int deg = 3;
    for (int d : {2, 3}) {
        FockTruncation fock = fockBuild(d, maxLen);
        auto basis = basisFor(d, deg);
        // L^(n) truncates exactly on columns of length <= maxLen - deg; rows
        // are unconstrained since missing long words pair to zero.
        const auto safeCols = static_cast<Eigen::Index>(fockBuild(d, maxLen - deg).size());
        double worst = 0.0;
        if (d == 2) {
            std::vector<Eigen::MatrixXcd> E(basis->size());
            for (std::size_t i = 0; i < basis->size(); ++i) {
                SymElement s(d);
                s.addPlus(basis->at(i), 1.0);
                E[i] = fockEvaluate(s, fock);
            }
            for (std::size_t i = 0; i < basis->size(); ++i)
                for (std::size_t j = 0; j < basis->size(); ++j) {
                    Eigen::MatrixXcd P = fockEvaluate(symProduct(basis->at(i), basis->at(j)), fock);
                    Eigen::MatrixXcd D = E[i].adjoint() * E[j] - P;
                    worst = std::max(worst, D.leftCols(safeCols).cwiseAbs().maxCoeff());
                }
        } else {
            std::vector<Eigen::SparseMatrix<Complex>> E(basis->size());
            for (std::size_t i = 0; i < basis->size(); ++i) {
                SymElement s(d);
                s.addPlus(basis->at(i), 1.0);
                E[i] = fockEvaluateSparse(s, fock);
            }
            for (std::size_t i = 0; i < basis->size(); ++i)
                for (std::size_t j = 0; j < basis->size(); ++j) {
                    Eigen::SparseMatrix<Complex> P =
                        fockEvaluateSparse(symProduct(basis->at(i), basis->at(j)), fock);
                    Eigen::SparseMatrix<Complex> prod = (E[i].adjoint() * E[j]).pruned();
                    Eigen::SparseMatrix<Complex> D = prod - P;
                    for (Eigen::Index col = 0; col < safeCols; ++col)
                        for (Eigen::SparseMatrix<Complex>::InnerIterator it(D, col); it; ++it)
                            worst = std::max(worst, std::abs(it.value()));
                }
        }
        le(r, "d=" + std::to_string(d) + " worst entry deviation, |n|,|m| <= 3, words <= 6",
           worst, tol);
    }
    return r;
}

CriterionResult criterion2() {
    CriterionResult r{2, "Gram positivity across the builtin states", false, {}, {}};
    const double floorTol = -1e-8;
    const int muDeg = 12; // moments for GNS degrees up to 6

    struct Entry {
        std::string name;
        MomentState mu;
    };
    std::vector<Entry> entries;
    entries.push_back({"vacuum (d=2)", vacuumState(2, muDeg)});

    std::mt19937_64 rng(2026);
    auto unit = [&rng] { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
    auto randomSphere = [&](int d) {
        std::vector<Complex> v(d);
        double nn = 0.0;
        do {
            nn = 0.0;
            for (auto& c : v) {
                c = Complex(unit(), unit());
                nn += std::norm(c);
            }
        } while (nn < 1e-4);
        const double s = 1.0 / std::sqrt(nn);
        for (auto& c : v) c *= s;
        return v;
    };
    for (int k = 0; k < 3; ++k) {
        const int d = (k == 2) ? 3 : 2;
        Multiplier b = makeCuntzMultiplier(randomSphere(d), muDeg);
        entries.push_back({"cuntz random zeta #" + std::to_string(k + 1) +
                               " (d=" + std::to_string(d) + ")",
                           acState(b, 1.0, muDeg)});
    }
    entries.push_back({"two-point (d=2)", acState(makeTwoPointMultiplier(muDeg), 1.0, muDeg)});
    entries.push_back({"one-var b=z (d=1)", acState(oneVarZ(muDeg), 1.0, muDeg)});
    entries.push_back({"product-nonextreme (d=2)",
                       acState(makeProductMultiplier({{0.0, 0.5}, {0.0, 0.5}}, muDeg), 1.0, muDeg)});

    for (const auto& e : entries) {
        double worst = std::numeric_limits<double>::infinity();
        for (int N = 1; N <= 6; ++N)
            worst = std::min(worst, minEigHermitian(buildGnsSpace(e.mu, N).gram));
        ge(r, "Gram min eigenvalue over N=1..6, " + e.name, worst, floorTol);
    }
    return r;
}

CriterionResult criterion3() {
    CriterionResult r{3, "quasi-extremality distances of the named examples", false, {}, {}};

    { // vacuum: [I] is orthogonal to every [L^(n)], so the distance stays 1.
        auto curve = quasiExtremeCurve(vacuumState(2, 12), 6);
        bool exact = std::all_of(curve.begin(), curve.end(), [](double v) { return v == 1.0; });
        r.checks.push_back({"vacuum distance^2 == 1 exactly at N=1..6", exact, curve.back(), 1.0, "=="});
    }

    { // cuntz: the degree-one projection already reproduces [I].
        MomentState mu = acState(makeCuntzMultiplier(cuntzZeta2(), 2), 1.0, 2);
        le(r, "cuntz (d=2) distance^2 at N=1", quasiExtremeDistance(buildGnsSpace(mu, 1)), 1e-10);
    }

    MomentState muTp = acState(makeTwoPointMultiplier(12), 1.0, 12);
    {
        double dist = quasiExtremeDistance(buildGnsSpace(muTp, 3));
        le(r, "two-point distance^2 at N=3", dist, 1e-8);
        r.notes.push_back("two-point distance^2 at N=3 measured " + fmt(dist) +
                          "; the curve decreases like 1/N and does not reach the 1e-8 bound");
    }

    { // witness polynomial p = 6^{-1/2} (sum_{|n|=1} - sum_{|n|=2} + sum_{|n|=3}) L^(n)
        auto b3 = basisFor(2, 3);
        SymElement p(2);
        const double s = 1.0 / std::sqrt(6.0);
        const double sign[4] = {0.0, s, -s, s};
        for (int k = 1; k <= 3; ++k)
            for (std::size_t i = b3->degreeBegin(k); i < b3->degreeEnd(k); ++i)
                p.addPlus(b3->at(i), sign[k]);
        const Complex mp = momentApply(muTp, p);
        const Complex mpp = momentApply(muTp, symElementProduct(p, p));
        const double w2 = muTp.total().real() - 2.0 * mp.real() + mpp.real();
        le(r, "two-point witness ||[I] - [p(L)]||^2", w2, 1e-8);
        r.notes.push_back("witness value measured " + fmt(w2) +
                          " = 2 - 2/sqrt(6); the witness has unit norm, so the gap to [I] is genuine");
    }

    { // product-nonextreme: distance stays bounded away from zero.
        MomentState mu = acState(makeProductMultiplier({{0.0, 0.5}, {0.0, 0.5}}, 12), 1.0, 12);
        auto curve = quasiExtremeCurve(mu, 6);
        ge(r, "product-nonextreme min distance^2 over N=1..6",
           *std::min_element(curve.begin(), curve.end()), 0.01);
        double worstRise = 0.0;
        for (std::size_t k = 1; k < curve.size(); ++k)
            worstRise = std::max(worstRise, curve[k] - curve[k - 1]);
        le(r, "product-nonextreme curve nonincreasing (max rise)", worstRise, 1e-12);
        std::string cs = "product-nonextreme distance^2 curve:";
        for (double v : curve) cs += " " + fmt(v);
        r.notes.push_back(cs);
    }
    return r;
}

CriterionResult criterion4() {
    CriterionResult r{4, "backward-shift coisometry for quasi-extreme states", false, {}, {}};
    const int N = 5;
    const int muDeg = 2 * N;

    for (const auto& e : quasiExtremeSet(muDeg)) {
        GnsTuple t = buildGnsTuple(buildGnsSpace(acState(e.b, 1.0, muDeg), N));
        le(r, e.name + " quasi-extremality gate distance^2 at N=5", t.distance2, 1e-6);
        le(r, e.name + " coisometry defect at N=5", coisometryDefect(t), 1e-6);
    }
    {
        GnsTuple t = buildGnsTuple(buildGnsSpace(vacuumState(2, muDeg), N));
        ge(r, "vacuum coisometry defect (non-quasi-extreme control)", coisometryDefect(t), 0.1);
    }
    {
        double dist =
            quasiExtremeDistance(buildGnsSpace(acState(makeTwoPointMultiplier(muDeg), 1.0, muDeg), N));
        r.notes.push_back("two-point excluded from the quasi-extreme set: distance^2 at N=5 is " +
                          fmt(dist));
    }
    return r;
}

CriterionResult criterion5() {
    CriterionResult r{5, "vector-state identity of the GNS tuple", false, {}, {}};
    const int N = 5;
    const int muDeg = 2 * N;

    for (const auto& e : quasiExtremeSet(muDeg)) {
        MomentState mu = acState(e.b, 1.0, muDeg);
        GnsTuple t = buildGnsTuple(buildGnsSpace(mu, N));
        double worst = 0.0;
        for (std::size_t i = 0; i < t.basis->degreeEnd(4); ++i) {
            const MultiIndex& n = t.basis->at(i);
            worst = std::max(worst, std::abs(gnsVectorState(t, n) - mu.at(n)));
        }
        le(r, e.name + " max |<S^(n)[I],[I]> - mu(L^(n))| over |n| <= 4", worst, 1e-6);
    }
    return r;
}

CriterionResult criterion6() {
    CriterionResult r{6, "word extension consistency and row isometry", false, {}, {}};
    const int maxLen = 5;
    const int muDeg = 2 * maxLen;

    for (const auto& e : quasiExtremeSet(muDeg)) {
        MomentState mu = acState(e.b, 1.0, muDeg);
        WordState nu = extendToWords(mu, maxLen);
        double worst = 0.0;
        auto basis = basisFor(mu.d, 4);
        for (std::size_t i = 0; i < basis->size(); ++i) {
            const MultiIndex& n = basis->at(i);
            Complex sum = 0.0;
            for (const Word& w : wordsWithLetterCount(n)) sum += nu.at(w);
            worst = std::max(worst, std::abs(sum - mu.at(n)));
        }
        le(r, e.name + " max |sum_{words of count n} nu - mu| over |n| <= 4", worst, 1e-8);

        ExtendedGns ext = buildExtendedGns(nu);
        eq(r, e.name + " row-isometry mismatch on length <= 4", rowIsometryMismatch(ext), 0.0);
        if (e.name.find("cuntz") != std::string::npos)
            r.notes.push_back(e.name + " word-level cuntz defect (informational): " +
                              fmt(cuntzDefect(ext)));
    }
    return r;
}

CriterionResult criterion7() {
    CriterionResult r{7, "Fantappie transform unitarity on kernel samples", false, {}, {}};
    const double cap = 0.5;
    const int deg = 2 * tailDegreeFor(cap);

    struct Entry {
        std::string name;
        Multiplier b;
    };
    std::vector<Entry> entries;
    entries.push_back({"zero (d=2)", makeZeroMultiplier(2, deg)});
    entries.push_back({"coordinate b=z1 (d=2)", makeCoordinateMultiplier(2, deg)});
    entries.push_back({"cuntz <z,zeta> (d=2)", makeCuntzMultiplier(cuntzZeta2(), deg)});
    entries.push_back({"two-point (d=2)", makeTwoPointMultiplier(deg)});

    for (const auto& e : entries) {
        TransformContext ctx = makeTransformContext(e.b, 1.0, cap);
        KernelSample s = makeKernelSample(e.b, 10, cap);
        UnitarityReport rep = unitarityCheck(ctx, s.points);
        le(r, e.name + " Gram mismatch, 10 points, radius 0.5", rep.maxAbsError, 1e-6);
    }
    return r;
}

struct GleasonEntry {
    std::string name;
    GleasonData g;
};

// The quasi-extreme set carried through the Gleason construction. d = 3 runs
// at a reduced radius cap so the tail degree (and the moment range behind it)
// stays tractable.
std::vector<GleasonEntry> gleasonSet() {
    std::vector<GleasonEntry> out;
    GleasonOptions opts;
    const int deg2 = 2 * tailDegreeFor(opts.radiusCap);
    out.push_back({"coordinate b=z1 (d=2)", computeBj(makeCoordinateMultiplier(2, deg2), opts)});
    out.push_back({"cuntz <z,zeta> (d=2)", computeBj(makeCuntzMultiplier(cuntzZeta2(), deg2), opts)});
    out.push_back({"one-var b=z (d=1)", computeBj(oneVarZ(deg2), opts)});

    GleasonOptions o3;
    o3.radiusCap = 0.35;
    o3.sampleRadius = 0.3;
    o3.sampleCount = 8;
    const int deg3 = 2 * tailDegreeFor(o3.radiusCap);
    out.push_back({"cuntz <z,zeta> (d=3)", computeBj(makeCuntzMultiplier(cuntzZeta3(), deg3), o3)});
    return out;
}

CriterionResult criterion8() {
    CriterionResult r{8, "Gleason solution identities", false, {}, {}};
    for (const auto& e : gleasonSet()) {
        le(r, e.name + " residual |b(z) - b(0) - sum z_j b_j(z)|", gleasonResidual(e.g), 1e-6);
        const double target = 1.0 - std::norm(e.g.b0);
        le(r, e.name + " |sum ||b_j||^2 - (1 - |b(0)|^2)|",
           std::abs(e.g.sumNormSq - target), 1e-6);
        ge(r, e.name + " contractivity min eig of I - k0(x)k0 - sum X_j* X_j",
           contractivityDefect(e.g), -1e-7);
    }
    return r;
}

CriterionResult criterion9() {
    CriterionResult r{9, "Clark intertwining across unimodular alpha", false, {}, {}};
    const Complex alphas[3] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}};
    const char* alphaName[3] = {"alpha=1", "alpha=i", "alpha=-1"};
    for (const auto& e : gleasonSet()) {
        for (int k = 0; k < 3; ++k) {
            ClarkCheck ck = clarkPerturbAndIntertwine(e.g, alphas[k]);
            le(r, e.name + " intertwining residual, " + alphaName[k], ck.intertwineResidual, 1e-6);
            if (e.g.b.d() == 1)
                le(r, e.name + " Gram isometry defect, " + alphaName[k], ck.isometryDefect, 1e-7);
        }
    }
    return r;
}

CriterionResult criterion10() {
    CriterionResult r{10, "boundary eigenvalue at a distinguished sphere point", false, {}, {}};
    GleasonOptions opts;
    GleasonData g = computeBj(makeCoordinateMultiplier(2, 2 * tailDegreeFor(opts.radiusCap)), opts);

    EigenCheck e1 = eigenCheck(g, 1.0, BallPoint{{1.0, 0.0}, {0.0, 0.0}});
    verdict(r, "zeta=e1, alpha=1: " + e1.verdict, e1.predicted);
    le(r, "zeta=e1 |angular derivative - 1|", std::abs(e1.L - 1.0), 1e-6);
    le(r, "zeta=e1 |kernel norm^2 - angular derivative|", std::abs(e1.normSq - e1.L), 1e-6);
    le(r, "zeta=e1 eigen-equation residual", e1.residual, 1e-8);

    EigenCheck e2 = eigenCheck(g, 1.0, BallPoint{{0.0, 0.0}, {1.0, 0.0}});
    verdict(r, "zeta=e2, alpha=1: " + e2.verdict,
            !e2.predicted && e2.verdict == "no eigenvalue predicted");
    return r;
}

CriterionResult criterion11() {
    CriterionResult r{11, "disintegration quadrature over unimodular alpha", false, {}, {}};
    const int nodes = 64;
    const int deg = 40;

    struct Entry {
        std::string name;
        Multiplier b;
        BallPoint z;
    };
    std::vector<Entry> entries;
    entries.push_back({"zero (d=2)", makeZeroMultiplier(2, deg), {{0.2, 0.0}, {-0.1, 0.0}}});
    entries.push_back(
        {"coordinate b=z1 (d=2)", makeCoordinateMultiplier(2, deg), {{0.3, 0.0}, {0.25, 0.0}}});
    entries.push_back(
        {"cuntz <z,zeta> (d=2)", makeCuntzMultiplier(cuntzZeta2(), deg), {{0.35, 0.0}, {0.0, 0.2}}});
    entries.push_back({"two-point (d=2)", makeTwoPointMultiplier(deg), {{0.32, 0.0}, {0.32, 0.0}}});
    std::vector<Complex> oneVarC{{0.3, 0.0}, {0.0, 0.0}, {0.4, 0.0}};
    entries.push_back({"one-var 0.3+0.4z^2 (d=1)", makeOneVarMultiplier(oneVarC, deg), {{0.45, 0.0}}});
    entries.push_back({"product-nonextreme (d=2)",
                       makeProductMultiplier({{0.0, 0.5}, {0.0, 0.5}}, deg),
                       {{0.3, 0.0}, {-0.3, 0.0}}});

    for (const auto& e : entries) {
        DisintegrationReport rep = disintegrationCheck(e.b, e.z, nodes);
        le(r, e.name + " |alpha-average - 1|, 64 nodes", rep.error, 1e-8);
    }
    r.notes.push_back("64 trapezoid nodes used everywhere (bound allows up to 512)");
    return r;
}

CriterionResult criterion12() {
    CriterionResult r{12, "resolvent formula for kernel functions", false, {}, {}};
    {
        // Vacuum is not quasi-extreme, so its Gleason solution (identically
        // zero) enters through the explicit path and the constant fast path.
        Multiplier b = makeZeroMultiplier(2, 8);
        std::vector<TruncatedSeries> bj{tsZero(2, 8), tsZero(2, 8)};
        GleasonData g = computeBjExplicit(b, std::move(bj), {});
        ResolventCheck rc = resolventKernelCheck(g, BallPoint{{0.3, 0.0}, {-0.2, 0.0}});
        le(r, "zero (d=2), z=(0.3,-0.2), constant fast path", rc.error, 1e-6);
    }
    GleasonOptions opts;
    const int deg2 = 2 * tailDegreeFor(opts.radiusCap);
    {
        GleasonData g = computeBj(makeCoordinateMultiplier(2, deg2), opts);
        ResolventCheck rc = resolventKernelCheck(g, BallPoint{{0.3, 0.0}, {0.3, 0.0}});
        le(r, "coordinate (d=2), z=(0.3,0.3)", rc.error, 1e-6);
        ResolventCheck rc2 = resolventKernelCheck(g, BallPoint{{0.45, 0.0}, {0.3, 0.0}});
        le(r, "coordinate (d=2), z=(0.45,0.3)", rc2.error, 1e-6);
    }
    {
        GleasonData g = computeBj(makeCuntzMultiplier(cuntzZeta2(), deg2), opts);
        ResolventCheck rc = resolventKernelCheck(g, BallPoint{{0.3, 0.0}, {0.3, 0.0}});
        le(r, "cuntz (d=2), z=(0.3,0.3)", rc.error, 1e-6);
    }
    {
        GleasonData g = computeBj(oneVarZ(deg2), opts);
        ResolventCheck rc = resolventKernelCheck(g, BallPoint{{0.5, 0.0}});
        le(r, "one-var b=z (d=1), z=0.5", rc.error, 1e-6);
    }
    return r;
}

} // namespace

CriterionResult runCriterion(int id) {
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = criterion1(); break;
            case 2: r = criterion2(); break;
            case 3: r = criterion3(); break;
            case 4: r = criterion4(); break;
            case 5: r = criterion5(); break;
            case 6: r = criterion6(); break;
            case 7: r = criterion7(); break;
            case 8: r = criterion8(); break;
            case 9: r = criterion9(); break;
            case 10: r = criterion10(); break;
            case 11: r = criterion11(); break;
            case 12: r = criterion12(); break;
            default: throwDomain("criterion id must be 1..12, got " + std::to_string(id));
        }
    } catch (const std::exception& ex) {
        r.id = id;
        if (r.title.empty()) r.title = "criterion " + std::to_string(id);
        r.pass = false;
        r.notes.push_back(std::string("aborted by exception: ") + ex.what());
        return r;
    }
    r.pass = !r.checks.empty() &&
             std::all_of(r.checks.begin(), r.checks.end(), [](const CheckLine& c) { return c.pass; });
    return r;
}

std::vector<CriterionResult> runAcceptanceSuite() {
    std::vector<CriterionResult> out;
    out.reserve(12);
    for (int id = 1; id <= 12; ++id) out.push_back(runCriterion(id));
    return out;
}

std::string formatCriterion(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ");
    os << (r.id < 10 ? "0" : "") << r.id << " " << r.title << "\n";
    for (const auto& c : r.checks) {
        os << "  " << (c.pass ? "  ok   " : "  BAD  ") << c.label;
        if (c.comparator != "verdict")
            os << ": " << fmt(c.measured) << " " << c.comparator << " " << fmt(c.bound);
        os << "\n";
    }
    for (const auto& n : r.notes) os << "         note: " << n << "\n";
    return os.str();
}

} // namespace ncclark
