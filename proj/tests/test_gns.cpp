#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ncclark/error.hpp"
#include "ncclark/gns.hpp"
#include "ncclark/linalg.hpp"
#include "ncclark/states.hpp"

using namespace ncclark;

TEST_SUITE("gns") {

TEST_CASE("Gram matrices of genuine states are positive") {
    for (const char* spec : {"zero", "coordinate", "cuntz:0.6,0.8", "two-point",
                             "product-nonextreme"}) {
        BuiltinState st = builtinState(spec, 0, 8);
        GnsSpace space = buildGnsSpace(st.state, 4);
        CHECK(minEigHermitian(space.gram) >= -1e-10);
    }
}

TEST_CASE("Gram entries obey Cauchy-Schwarz") {
    BuiltinState st = builtinState("two-point", 0, 8);
    GnsSpace space = buildGnsSpace(st.state, 4);
    for (Eigen::Index i = 0; i < space.gram.rows(); ++i)
        for (Eigen::Index j = 0; j < space.gram.cols(); ++j)
            CHECK(std::norm(space.gram(i, j)) <=
                  space.gram(i, i).real() * space.gram(j, j).real() + 1e-12);
}

TEST_CASE("building demands twice the working degree in moments") {
    BuiltinState st = builtinState("coordinate", 0, 6);
    CHECK_THROWS_AS(buildGnsSpace(st.state, 4), Error);
    CHECK_NOTHROW(buildGnsSpace(st.state, 3));
}

// Frozen reference values for the two-point distance curve. The first three
// are exact dyadic rationals; the rest were measured once and pinned.
TEST_CASE("two-point distance curve matches the pinned values") {
    BuiltinState st = builtinState("two-point", 0, 16);
    std::vector<double> curve = quasiExtremeCurve(st.state, 8);
    const std::vector<double> pinned{0.5,        0.25,       0.1875,     0.15432099,
                                     0.13242213, 0.11643602, 0.10408123, 0.09417631};
    REQUIRE(curve.size() == pinned.size());
    for (std::size_t k = 0; k < curve.size(); ++k)
        CHECK(curve[k] == doctest::Approx(pinned[k]).epsilon(1e-6));
    for (std::size_t k = 1; k < curve.size(); ++k) CHECK(curve[k] <= curve[k - 1] + 1e-12);
}

TEST_CASE("product state distance curve starts at the pinned plateau") {
    BuiltinState st = builtinState("product-nonextreme", 0, 4);
    std::vector<double> curve = quasiExtremeCurve(st.state, 2);
    CHECK(curve[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(curve[1] == doctest::Approx(0.96875).epsilon(1e-9));
}

TEST_CASE("quasi-extreme states sit at distance zero") {
    for (const char* spec : {"coordinate", "cuntz:0.6,0.8", "cuntz:1"}) {
        BuiltinState st = builtinState(spec, 0, 10);
        CHECK(quasiExtremeDistance(buildGnsSpace(st.state, 5)) <= 1e-10);
    }
}

TEST_CASE("the backward tuple is a row contraction") {
    for (const char* spec : {"coordinate", "cuntz:0.6,0.8", "two-point"}) {
        BuiltinState st = builtinState(spec, 0, 8);
        GnsTuple tuple = buildGnsTuple(buildGnsSpace(st.state, 4));
        CHECK(rowContractionNorm(tuple) <= 1.0 + 1e-8);
    }
}

TEST_CASE("quasi-extreme tuples are coisometric below the truncation edge") {
    for (const char* spec : {"coordinate", "cuntz:0.6,0.8"}) {
        BuiltinState st = builtinState(spec, 0, 8);
        CHECK(coisometryDefect(buildGnsTuple(buildGnsSpace(st.state, 4))) <= 1e-8);
    }
    BuiltinState d3 = builtinState("cuntz:0.6,0.48,0.64i", 0, 8);
    CHECK(coisometryDefect(buildGnsTuple(buildGnsSpace(d3.state, 4))) <= 1e-8);
}

TEST_CASE("backward matrices have the prescribed shift structure") {
    BuiltinState st = builtinState("cuntz:0.6,0.8", 0, 6);
    GnsTuple tuple = buildGnsTuple(buildGnsSpace(st.state, 3));
    const auto& basis = *tuple.basis;
    for (int j = 0; j < 2; ++j) {
        const Eigen::MatrixXcd& A = tuple.backward[static_cast<std::size_t>(j)];
        for (std::size_t col = 1; col < basis.size(); ++col) {
            MultiIndex m = basis.at(col);
            Eigen::Index c = static_cast<Eigen::Index>(col) - 1;
            if (m[static_cast<std::size_t>(j)] == 0) {
                CHECK(A.col(c).cwiseAbs().maxCoeff() == 0.0);
            } else if (totalDegree(m) == 1) {
                CHECK((A.col(c) - tuple.c).cwiseAbs().maxCoeff() == 0.0);
            } else {
                MultiIndex target = m;
                target[static_cast<std::size_t>(j)] -= 1;
                Eigen::Index row = static_cast<Eigen::Index>(basis.indexOf(target)) - 1;
                CHECK(A(row, c) == Complex{1.0, 0.0});
                CHECK(A.col(c).cwiseAbs().sum() == 1.0);
            }
        }
    }
}

TEST_CASE("the vector state of the tuple reproduces the moments") {
    BuiltinState st = builtinState("cuntz:0.6,0.8i", 0, 10);
    GnsTuple tuple = buildGnsTuple(buildGnsSpace(st.state, 5));
    for (std::size_t i = 0; i < tuple.basis->degreeEnd(4); ++i) {
        const MultiIndex& n = tuple.basis->at(i);
        CHECK(std::abs(gnsVectorState(tuple, n) - st.state.at(n)) <= 1e-10);
    }
}

TEST_CASE("the vector state refuses far-from-quasi-extreme tuples") {
    BuiltinState st = builtinState("two-point", 0, 8);
    GnsTuple tuple = buildGnsTuple(buildGnsSpace(st.state, 4));
    CHECK_THROWS_AS((void)gnsVectorState(tuple, MultiIndex{1, 0}), Error);
}

TEST_CASE("word-level concatenation operators are exactly row-isometric") {
    for (const char* spec : {"coordinate", "cuntz:0.6,0.8"}) {
        BuiltinState st = builtinState(spec, 0, 8);
        ExtendedGns ext = buildExtendedGns(extendToWords(st.state, 4));
        CHECK(rowIsometryMismatch(ext) == 0.0);
    }
}

TEST_CASE("point states fill the whole range; the vacuum misses it entirely") {
    BuiltinState d2 = builtinState("cuntz:0.6,0.8", 0, 8);
    CHECK(cuntzDefect(buildExtendedGns(extendToWords(d2.state, 4))) <= 1e-8);
    BuiltinState d3 = builtinState("cuntz:0.6,0.48,0.64i", 0, 8);
    CHECK(cuntzDefect(buildExtendedGns(extendToWords(d3.state, 4))) <= 1e-8);

    // vacuum word state: nu(I) = 1, everything else 0; [I] is orthogonal to
    // every concatenation, so the defect saturates at 1
    WordState vac;
    vac.words = fockBuild(2, 4);
    vac.values.assign(vac.words.size(), Complex{});
    vac.values[0] = Complex{1.0, 0.0};
    vac.provenance = "vacuum";
    CHECK(cuntzDefect(buildExtendedGns(vac)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("extension of the coordinate state charges only the first-letter powers") {
    BuiltinState st = builtinState("coordinate", 0, 8);
    WordState nu = extendToWords(st.state, 4);
    CHECK(std::abs(nu.at(Word{1, 1, 1}) - Complex{1.0, 0.0}) <= 1e-10);
    CHECK(std::abs(nu.at(Word{1, 2, 1})) <= 1e-10);
    CHECK(std::abs(nu.at(Word{2})) <= 1e-10);
}

} // TEST_SUITE
