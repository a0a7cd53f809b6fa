#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ncclark/error.hpp"
#include "ncclark/series.hpp"

using namespace ncclark;

namespace {

TruncatedSeries randomSeries(int d, int N, std::uint64_t seed, double scale,
                             Complex constant) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TruncatedSeries s(d, N);
    for (std::size_t i = 1; i < s.coeffs.size(); ++i)
        s.coeffs[i] = scale * Complex{u(rng), u(rng)};
    s.coeffs[0] = constant;
    return s;
}

double maxCoeffDiff(const TruncatedSeries& a, const TruncatedSeries& b) {
    REQUIRE(a.d == b.d);
    REQUIRE(a.N == b.N);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        worst = std::max(worst, std::abs(a.coeffs[i] - b.coeffs[i]));
    return worst;
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("multiplication convolves coefficients") {
    // (1 + 2 z1)(3 z2 - z1 z2) = 3 z2 + 5 z1 z2 - 2 z1^2 z2
    TruncatedSeries a(2, 3), b(2, 3);
    a.set(MultiIndex{0, 0}, 1.0);
    a.set(MultiIndex{1, 0}, 2.0);
    b.set(MultiIndex{0, 1}, 3.0);
    b.set(MultiIndex{1, 1}, -1.0);
    TruncatedSeries p = tsMul(a, b);
    CHECK(p.at(MultiIndex{0, 1}) == Complex{3.0, 0.0});
    CHECK(p.at(MultiIndex{1, 1}) == Complex{5.0, 0.0});
    CHECK(p.at(MultiIndex{2, 1}) == Complex{-2.0, 0.0});
    CHECK(p.at(MultiIndex{0, 0}) == Complex{});
    CHECK(maxCoeffDiff(tsMul(a, b), tsMul(b, a)) == 0.0);
}

TEST_CASE("reciprocal inverts up to the truncation degree") {
    TruncatedSeries a = randomSeries(2, 6, 11, 0.3, Complex{1.3, -0.2});
    TruncatedSeries prod = tsMul(a, tsReciprocal(a));
    TruncatedSeries one = tsConstant(2, 6, 1.0);
    CHECK(maxCoeffDiff(prod, one) <= 1e-12);
    CHECK_THROWS_AS(tsReciprocal(tsZero(2, 4)), Error);
}

TEST_CASE("Cayley transform round trips") {
    TruncatedSeries b = randomSeries(2, 8, 7, 0.1, Complex{0.2, 0.1});
    TruncatedSeries f = cayleyHerglotz(b, Complex{1.0, 0.0});
    CHECK(maxCoeffDiff(inverseCayley(f), b) <= 1e-12);
}

TEST_CASE("rotated Cayley transform matches its definition") {
    Complex alpha{0.0, 1.0};
    TruncatedSeries b = randomSeries(2, 6, 13, 0.15, Complex{0.1, -0.2});
    TruncatedSeries f = cayleyHerglotz(b, alpha);
    TruncatedSeries ab = tsScale(b, std::conj(alpha));
    TruncatedSeries numer = tsAdd(tsConstant(2, 6, 1.0), ab);
    TruncatedSeries denom = tsAdd(tsConstant(2, 6, 1.0), ab, 1.0, -1.0);
    CHECK(maxCoeffDiff(f, tsMul(numer, tsReciprocal(denom))) <= 1e-13);
}

TEST_CASE("evaluation sums the truncated monomials") {
    TruncatedSeries s(2, 2);
    s.set(MultiIndex{0, 0}, 1.0);
    s.set(MultiIndex{1, 0}, 2.0);
    s.set(MultiIndex{1, 1}, Complex{0.0, 1.0});
    std::vector<Complex> z{Complex{0.5, 0.0}, Complex{0.0, 0.25}};
    // 1 + 2(0.5) + i(0.5)(0.25i) = 2 - 0.125
    CHECK(std::abs(tsEvaluate(s, z) - Complex{1.875, 0.0}) <= 1e-15);
}

TEST_CASE("resize pads up and truncates down") {
    TruncatedSeries s(2, 3);
    s.set(MultiIndex{2, 1}, 4.0);
    TruncatedSeries up = tsResize(s, 5);
    CHECK(up.N == 5);
    CHECK(up.at(MultiIndex{2, 1}) == Complex{4.0, 0.0});
    TruncatedSeries down = tsResize(s, 2);
    CHECK(down.N == 2);
    CHECK(down.at(MultiIndex{2, 1}) == Complex{}); // out of range reads zero
}

TEST_CASE("tail majorant sums absolute coefficients by degree") {
    TruncatedSeries s(1, 3);
    s.set(MultiIndex{0}, 5.0);
    s.set(MultiIndex{1}, Complex{0.0, -2.0});
    s.set(MultiIndex{3}, 1.0);
    CHECK(tsTailL1(s, 1) == doctest::Approx(3.0));
    CHECK(tsTailL1(s, 2) == doctest::Approx(1.0));
    CHECK(tsTailL1(s, 4) == 0.0);
}

TEST_CASE("two-point multiplier matches its rational closed form") {
    // b = (z1 + z2 - 2 z1 z2) / (2 - z1 - z2)
    const int N = 10;
    TruncatedSeries z1 = tsCoordinate(2, N, 1);
    TruncatedSeries z2 = tsCoordinate(2, N, 2);
    TruncatedSeries numer = tsAdd(tsAdd(z1, z2), tsMul(z1, z2), 1.0, -2.0);
    TruncatedSeries denom = tsAdd(tsConstant(2, N, 2.0), tsAdd(z1, z2), 1.0, -1.0);
    TruncatedSeries expected = tsMul(numer, tsReciprocal(denom));
    CHECK(maxCoeffDiff(makeTwoPointMultiplier(N).series, expected) <= 1e-13);
}

TEST_CASE("linear multiplier carries the conjugated direction") {
    std::vector<Complex> zeta{Complex{0.6, 0.0}, Complex{0.0, 0.8}};
    Multiplier b = makeCuntzMultiplier(zeta, 4);
    CHECK(b.series.at(MultiIndex{1, 0}) == Complex{0.6, 0.0});
    CHECK(b.series.at(MultiIndex{0, 1}) == Complex{0.0, -0.8});
    CHECK(b.series.at(MultiIndex{2, 0}) == Complex{});
    std::vector<Complex> offSphere{Complex{0.5, 0.0}, Complex{0.5, 0.0}};
    CHECK_THROWS_AS(makeCuntzMultiplier(offSphere, 4), Error);
}

TEST_CASE("product multiplier multiplies one-variable factors") {
    std::vector<std::vector<Complex>> factors{{Complex{}, Complex{0.5, 0.0}},
                                              {Complex{}, Complex{0.5, 0.0}}};
    Multiplier b = makeProductMultiplier(factors, 4);
    CHECK(b.d() == 2);
    CHECK(b.series.at(MultiIndex{1, 1}) == Complex{0.25, 0.0});
    CHECK(b.series.at(MultiIndex{1, 0}) == Complex{});
    CHECK(b.series.at(MultiIndex{2, 2}) == Complex{});
}

TEST_CASE("builtin parser covers the grammar and rejects strays") {
    CHECK(makeBuiltin("zero", 3, 2).series.maxNonzeroDegree() == -1);
    CHECK(makeBuiltin("coordinate", 0, 3).d() == 2);
    CHECK(makeBuiltin("cuntz:1", 0, 3).d() == 1);
    CHECK(makeBuiltin("two-point", 0, 3).d() == 2);
    CHECK(makeBuiltin("one-var:0,0.5", 0, 3).d() == 1);
    CHECK(makeBuiltin("product-nonextreme", 0, 3).d() == 2);
    CHECK_THROWS_AS(makeBuiltin("atoms:1@1", 0, 3), Error);
    CHECK_THROWS_AS(makeBuiltin("nosuch", 0, 3), Error);
    CHECK_THROWS_AS(makeBuiltin("two-point", 3, 3), Error); // fixed dimension
}

TEST_CASE("complex literals parse all sign and unit forms") {
    CHECK(parseComplexLiteral("1") == Complex{1.0, 0.0});
    CHECK(parseComplexLiteral("-0.3") == Complex{-0.3, 0.0});
    CHECK(parseComplexLiteral("0.5i") == Complex{0.0, 0.5});
    CHECK(parseComplexLiteral("i") == Complex{0.0, 1.0});
    CHECK(parseComplexLiteral("-i") == Complex{0.0, -1.0});
    CHECK(parseComplexLiteral("0.3-0.4i") == Complex{0.3, -0.4});
    CHECK(parseComplexLiteral("1e-2i") == Complex{0.0, 0.01});
    CHECK_THROWS_AS(parseComplexLiteral("fish"), Error);

    auto list = parseComplexList("1,-i,0.5");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == Complex{0.0, -1.0});
}

TEST_CASE("multiplier construction rejects |b(0)| >= 1") {
    std::vector<Complex> big{Complex{1.5, 0.0}};
    CHECK_THROWS_AS(makeOneVarMultiplier(big, 3), Error);
}

} // TEST_SUITE
