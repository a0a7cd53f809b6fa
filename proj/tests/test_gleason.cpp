#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ncclark/error.hpp"
#include "ncclark/gleason.hpp"
#include "ncclark/series.hpp"

using namespace ncclark;

namespace {

// Default options need the multiplier series out to twice the tail degree of
// the 0.6 radius cap.
Multiplier longBuiltin(const std::string& spec) { return makeBuiltin(spec, 0, 92); }

} // namespace

TEST_SUITE("gleason") {

TEST_CASE("coordinate multiplier solves with constant directions") {
    GleasonData g = computeBj(longBuiltin("coordinate"));
    CHECK(g.quasiExtreme);
    CHECK(gleasonResidual(g) <= 1e-10);
    REQUIRE(g.bj.size() == 2);
    CHECK(std::abs(g.bj[0].constantTerm() - Complex{1.0, 0.0}) <= 1e-8);
    for (std::size_t i = 1; i < g.bj[0].coeffs.size(); ++i)
        CHECK(std::abs(g.bj[0].coeffs[i]) <= 1e-8);
    for (std::size_t i = 0; i < g.bj[1].coeffs.size(); ++i)
        CHECK(std::abs(g.bj[1].coeffs[i]) <= 1e-8);
    CHECK(std::abs(g.sumNormSq - 1.0) <= 1e-8); // = 1 - |b(0)|^2
}

TEST_CASE("linear multipliers solve with their conjugated components") {
    std::vector<Complex> zeta{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
    GleasonData g = computeBj(makeCuntzMultiplier(zeta, 92));
    for (int j = 0; j < 2; ++j) {
        CHECK(std::abs(g.bj[static_cast<std::size_t>(j)].constantTerm() -
                       std::conj(zeta[static_cast<std::size_t>(j)])) <= 1e-8);
        for (std::size_t i = 1; i < g.bj[static_cast<std::size_t>(j)].coeffs.size(); ++i)
            CHECK(std::abs(g.bj[static_cast<std::size_t>(j)].coeffs[i]) <= 1e-8);
    }
    CHECK(std::abs(g.sumNormSq - 1.0) <= 1e-8);
    CHECK(contractivityDefect(g) >= -1e-7);
}

TEST_CASE("the norm identity and contractivity hold for the coordinate solution") {
    GleasonData g = computeBj(longBuiltin("coordinate"));
    CHECK(std::abs(g.sumNormSq - (1.0 - std::norm(g.b0))) <= 1e-8);
    CHECK(contractivityDefect(g) >= -1e-7);
}

TEST_CASE("states far from quasi-extreme are refused") {
    CHECK_THROWS_AS(computeBj(longBuiltin("two-point")), Error);
}

TEST_CASE("explicit solutions bypass the moment side") {
    GleasonOptions opts;
    std::vector<TruncatedSeries> bj{tsConstant(1, 8, 0.5)};
    GleasonData g = computeBjExplicit(makeBuiltin("one-var:0,0.5", 0, 92), bj, opts);
    CHECK_FALSE(g.hasMuSide);
    CHECK(gleasonResidual(g) <= 1e-12);
    CHECK_THROWS_AS(contractivityDefect(g), Error); // needs the moment-side Gram
}

TEST_CASE("the residual detects perturbed solutions") {
    Multiplier b = longBuiltin("cuntz:0.6,0.8");
    GleasonData honest = computeBj(b);
    std::vector<TruncatedSeries> wrong = honest.bj;
    wrong[0] = tsAdd(wrong[0], tsConstant(wrong[0].d, wrong[0].N, 1e-3));
    GleasonData perturbed = computeBjExplicit(b, wrong, honest.options);
    CHECK(gleasonResidual(honest) <= 1e-10);
    CHECK(gleasonResidual(perturbed) > 1e-6);
}

TEST_CASE("kernel actions of the tuple and its adjoint are dual") {
    GleasonData g = computeBj(longBuiltin("cuntz:0.6,0.8i"));
    const auto& pts = g.sample.points;
    for (int j = 1; j <= 2; ++j)
        for (std::size_t a = 0; a < pts.size(); ++a) {
            Eigen::VectorXcd lhs = applyXOnKernel(g, j, pts[a]);
            for (std::size_t k = 0; k < pts.size(); ++k) {
                Eigen::VectorXcd ek = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(pts.size()));
                ek(static_cast<Eigen::Index>(k)) = 1.0;
                Complex rhs = std::conj(applyXStar(g, j, ek, pts[a]));
                CHECK(std::abs(lhs(static_cast<Eigen::Index>(k)) - rhs) <= 1e-10);
            }
        }
}

TEST_CASE("rank-one perturbations intertwine through the rotation") {
    GleasonData g = computeBj(longBuiltin("cuntz:0.6,0.8"));
    for (Complex alpha : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}}) {
        ClarkCheck ck = clarkPerturbAndIntertwine(g, alpha);
        CHECK(ck.intertwineResidual <= 1e-8);
    }
}

TEST_CASE("one-variable perturbations are isometric on the kernel Gram") {
    GleasonData g = computeBj(makeBuiltin("cuntz:1", 0, 92));
    for (Complex alpha : {Complex{1, 0}, Complex{0, 1}}) {
        ClarkCheck ck = clarkPerturbAndIntertwine(g, alpha);
        CHECK(ck.intertwineResidual <= 1e-8);
        CHECK(ck.isometryDefect <= 1e-7);
    }
}

TEST_CASE("boundary eigenvalue appears exactly where the symbol peaks") {
    GleasonData g = computeBj(longBuiltin("coordinate"));
    EigenCheck hit = eigenCheck(g, Complex{1.0, 0.0}, {Complex{1, 0}, Complex{0, 0}});
    CHECK(hit.predicted);
    CHECK(std::abs(hit.L - 1.0) <= 1e-6);
    CHECK(std::abs(hit.normSq - hit.L) <= 1e-6);
    CHECK(hit.residual <= 1e-8);

    EigenCheck miss = eigenCheck(g, Complex{1.0, 0.0}, {Complex{0, 0}, Complex{1, 0}});
    CHECK_FALSE(miss.predicted);
    CHECK(miss.verdict == "no eigenvalue predicted");
}

TEST_CASE("linear symbols attain their boundary value at the defining point") {
    std::vector<Complex> zeta{Complex{0.6, 0.0}, Complex{0.8, 0.0}};
    GleasonData g = computeBj(makeCuntzMultiplier(zeta, 92));
    EigenCheck ec = eigenCheck(g, Complex{1.0, 0.0}, zeta);
    CHECK(ec.predicted);
    CHECK(std::abs(ec.L - 1.0) <= 1e-6);
    CHECK(ec.residual <= 1e-8);
}

TEST_CASE("kernels satisfy the resolvent formula") {
    GleasonData g = computeBj(longBuiltin("coordinate"));
    ResolventCheck ck = resolventKernelCheck(g, {Complex{0.3, 0.0}, Complex{0.3, 0.0}});
    CHECK(ck.error <= 1e-6);
    CHECK(ck.degree > 0);
}

TEST_CASE("constant multipliers short-circuit the resolvent formula") {
    GleasonOptions opts;
    std::vector<TruncatedSeries> bj{tsZero(2, 8), tsZero(2, 8)};
    GleasonData g = computeBjExplicit(makeZeroMultiplier(2, 92), bj, opts);
    ResolventCheck ck = resolventKernelCheck(g, {Complex{0.2, 0.1}, Complex{0.0, -0.3}});
    CHECK(ck.degree == 0);
    CHECK(ck.error <= 1e-10);
}

} // TEST_SUITE
