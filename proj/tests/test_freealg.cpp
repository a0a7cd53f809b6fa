#include <doctest.h>

#include <complex>

#include <Eigen/Dense>

#include "ncclark/error.hpp"
#include "ncclark/freealg.hpp"
#include "ncclark/multiindex.hpp"

using namespace ncclark;

namespace {

Complex plusCoeff(const SymElement& p, const MultiIndex& n) {
    auto it = p.plus.find(n);
    return it == p.plus.end() ? Complex{} : it->second;
}

Complex minusCoeff(const SymElement& p, const MultiIndex& n) {
    auto it = p.minus.find(n);
    return it == p.minus.end() ? Complex{} : it->second;
}

} // namespace

TEST_SUITE("freealg") {

TEST_CASE("letter count maps words to multi-indices") {
    CHECK(letterCount(Word{1, 2, 1}, 2) == MultiIndex{2, 1});
    CHECK(letterCount(Word{}, 3) == MultiIndex{0, 0, 0});
    CHECK_THROWS_AS(letterCount(Word{1, 3}, 2), Error);
    CHECK_THROWS_AS(letterCount(Word{0}, 2), Error);
}

TEST_CASE("word enumeration is lexicographic and complete") {
    auto words = wordsWithLetterCount(MultiIndex{1, 1});
    REQUIRE(words.size() == 2);
    CHECK(words[0] == Word{1, 2});
    CHECK(words[1] == Word{2, 1});
    CHECK(wordsWithLetterCount(MultiIndex{0, 0}) == std::vector<Word>{Word{}});
}

TEST_CASE("product reduction: the four rule cases") {
    // equal indices collapse to a multiple of the identity
    SymElement p = symProduct(MultiIndex{1, 1}, MultiIndex{1, 1});
    CHECK(plusCoeff(p, MultiIndex{0, 0}) == Complex{2.0, 0.0});
    CHECK(p.plus.size() == 1);
    CHECK(p.minus.empty());

    // n <= m leaves an analytic remainder weighted by the orbit of n
    p = symProduct(MultiIndex{1, 0}, MultiIndex{2, 1});
    CHECK(plusCoeff(p, MultiIndex{1, 1}) == Complex{1.0, 0.0});
    p = symProduct(MultiIndex{1, 1}, MultiIndex{2, 2});
    CHECK(plusCoeff(p, MultiIndex{1, 1}) == Complex{2.0, 0.0});

    // m <= n leaves an adjoint remainder weighted by the orbit of m
    p = symProduct(MultiIndex{2, 1}, MultiIndex{1, 0});
    CHECK(minusCoeff(p, MultiIndex{1, 1}) == Complex{1.0, 0.0});
    CHECK(p.plus.empty());

    // incomparable indices annihilate
    p = symProduct(MultiIndex{2, 0}, MultiIndex{0, 2});
    CHECK(p.plus.empty());
    CHECK(p.minus.empty());
}

// Independent check of the reduction rule: evaluate both sides as matrices
// on the truncated Fock space and compare entrywise. A column of length
// <= maxLen - |n| is mapped exactly by L^(n), so deviations on those columns
// are genuine errors, not truncation effects.
TEST_CASE("product reduction matches the Fock-space oracle") {
    const double tol = 1e-12;
    for (int d : {2, 3}) {
        const int maxLen = 5;
        const int deg = 2;
        FockTruncation fock = fockBuild(d, maxLen);
        MonomialBasis basis(d, deg);
        const auto safeCols = static_cast<Eigen::Index>(fockBuild(d, maxLen - deg).size());

        std::vector<Eigen::MatrixXcd> E(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            SymElement s(d);
            s.addPlus(basis.at(i), 1.0);
            E[i] = fockEvaluate(s, fock);
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Eigen::MatrixXcd P = fockEvaluate(symProduct(basis.at(i), basis.at(j)), fock);
                Eigen::MatrixXcd D = E[i].adjoint() * E[j] - P;
                worst = std::max(worst, D.leftCols(safeCols).cwiseAbs().maxCoeff());
            }
        CHECK(worst <= tol);
    }
}

TEST_CASE("dense and sparse Fock evaluations agree") {
    FockTruncation fock = fockBuild(2, 4);
    SymElement p(2);
    p.addPlus(MultiIndex{1, 1}, Complex{0.5, -0.25});
    p.addMinus(MultiIndex{0, 2}, Complex{0.0, 1.0});
    Eigen::MatrixXcd dense = fockEvaluate(p, fock);
    Eigen::MatrixXcd sparse = fockEvaluateSparse(p, fock);
    CHECK((dense - sparse).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("creation sums act by concatenation on the vacuum") {
    FockTruncation fock = fockBuild(2, 3);
    SymElement p(2);
    p.addPlus(MultiIndex{1, 1}, 1.0);
    Eigen::MatrixXcd m = fockEvaluate(p, fock);
    // column of the vacuum holds one unit per word with that letter count
    CHECK(m(static_cast<Eigen::Index>(fock.rank(Word{1, 2})), 0) == Complex{1.0, 0.0});
    CHECK(m(static_cast<Eigen::Index>(fock.rank(Word{2, 1})), 0) == Complex{1.0, 0.0});
    CHECK(m.col(0).cwiseAbs().sum() == 2.0);
}

TEST_CASE("word basis is length-major with exact rank arithmetic") {
    FockTruncation fock = fockBuild(3, 4);
    CHECK(fock.size() == 1 + 3 + 9 + 27 + 81);
    for (std::size_t i = 0; i < fock.size(); ++i)
        CHECK(fock.rank(fock.basis[i]) == i);
    for (std::size_t i = 0; i + 1 < fock.size(); ++i)
        CHECK(fock.basis[i].size() <= fock.basis[i + 1].size());
}

TEST_CASE("element product is conjugate-linear in the left factor") {
    SymElement p(2), q(2);
    p.addPlus(MultiIndex{1, 0}, Complex{0.0, 2.0});
    q.addPlus(MultiIndex{1, 1}, Complex{3.0, 0.0});
    SymElement r = symElementProduct(p, q);
    // (2i L^(1,0))* (3 L^(1,1)) = -6i L^(0,1)
    CHECK(plusCoeff(r, MultiIndex{0, 1}) == Complex{0.0, -6.0});
}

TEST_CASE("element product rejects adjoint parts") {
    SymElement p(2), q(2);
    p.addMinus(MultiIndex{1, 0}, 1.0);
    q.addPlus(MultiIndex{0, 0}, 1.0);
    CHECK_THROWS_AS(symElementProduct(p, q), Error);
}

TEST_CASE("adjoint swaps the analytic and adjoint parts") {
    SymElement p(2);
    p.addPlus(MultiIndex{0, 0}, Complex{1.0, 1.0});
    p.addPlus(MultiIndex{2, 0}, Complex{0.5, 0.0});
    p.addMinus(MultiIndex{1, 1}, Complex{0.0, -3.0});
    SymElement a = p.adjoint();
    CHECK(plusCoeff(a, MultiIndex{0, 0}) == Complex{1.0, -1.0});
    CHECK(minusCoeff(a, MultiIndex{2, 0}) == Complex{0.5, 0.0});
    CHECK(plusCoeff(a, MultiIndex{1, 1}) == Complex{0.0, 3.0});
    SymElement back = a.adjoint();
    CHECK(back.plus == p.plus);
    CHECK(back.minus == p.minus);
}

TEST_CASE("normalize drops small coefficients") {
    SymElement p(2);
    p.addPlus(MultiIndex{1, 0}, 1e-18);
    p.addPlus(MultiIndex{0, 1}, 1.0);
    p.normalize(1e-15);
    CHECK(p.plus.size() == 1);
    CHECK(p.maxAnalyticDegree() == 1);
}

TEST_CASE("vacuum moment reads the identity coefficient") {
    SymElement p(2);
    p.addPlus(MultiIndex{0, 0}, Complex{0.25, -1.0});
    p.addPlus(MultiIndex{1, 0}, 7.0);
    p.addMinus(MultiIndex{0, 1}, 3.0);
    CHECK(vacuumMoment(p) == Complex{0.25, -1.0});
}

} // TEST_SUITE
