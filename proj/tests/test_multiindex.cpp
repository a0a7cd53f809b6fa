#include <doctest.h>

#include "ncclark/error.hpp"
#include "ncclark/freealg.hpp"
#include "ncclark/multiindex.hpp"

using namespace ncclark;

TEST_SUITE("multiindex") {

TEST_CASE("graded enumeration is degree-major and complete") {
    MonomialBasis basis(2, 3);
    CHECK(basis.size() == monomialCount(2, 3));
    CHECK(basis.size() == 10); // C(5, 2)
    CHECK(basis.at(0) == MultiIndex{0, 0});

    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        CHECK(totalDegree(basis.at(i)) <= totalDegree(basis.at(i + 1)));

    for (int k = 0; k <= 3; ++k) {
        for (std::size_t i = basis.degreeBegin(k); i < basis.degreeEnd(k); ++i)
            CHECK(totalDegree(basis.at(i)) == k);
        // each degree block has C(k + d - 1, d - 1) indices
        CHECK(basis.degreeEnd(k) - basis.degreeBegin(k) == static_cast<std::size_t>(k + 1));
    }
    CHECK(basis.degreeEnd(3) == basis.size());
}

TEST_CASE("lookup round trips and rejects absent indices") {
    MonomialBasis basis(3, 4);
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(basis.indexOf(basis.at(i)) == i);

    CHECK(basis.find(MultiIndex{5, 0, 0}) == -1);  // degree too high
    CHECK(basis.find(MultiIndex{1, 1}) == -1);     // wrong dimension
    CHECK_THROWS_AS((void)basis.indexOf(MultiIndex{5, 0, 0}), Error);
}

TEST_CASE("orbit size is the multinomial coefficient") {
    CHECK(orbitSize(MultiIndex{0, 0}) == 1);
    CHECK(orbitSize(MultiIndex{1, 0}) == 1);
    CHECK(orbitSize(MultiIndex{1, 1}) == 2);
    CHECK(orbitSize(MultiIndex{2, 1}) == 3);
    CHECK(orbitSize(MultiIndex{2, 2}) == 6);
    CHECK(orbitSize(MultiIndex{3, 2}) == 10);
    CHECK(orbitSize(MultiIndex{1, 1, 1}) == 6);
}

TEST_CASE("orbit size counts the words with that letter count") {
    for (int d : {2, 3}) {
        MonomialBasis basis(d, 4);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const MultiIndex& n = basis.at(i);
            CHECK(wordsWithLetterCount(n).size() == orbitSize(n));
        }
    }
}

TEST_CASE("componentwise order and difference") {
    CHECK(componentwiseLEQ(MultiIndex{1, 0}, MultiIndex{2, 1}));
    CHECK_FALSE(componentwiseLEQ(MultiIndex{2, 0}, MultiIndex{1, 3}));
    CHECK(indexDiff(MultiIndex{3, 2}, MultiIndex{1, 2}) == MultiIndex{2, 0});
    CHECK_THROWS_AS(indexDiff(MultiIndex{1, 2}, MultiIndex{2, 0}), Error);
}

TEST_CASE("shared bases are memoized") {
    auto a = basisFor(2, 6);
    auto b = basisFor(2, 6);
    CHECK(a.get() == b.get());
    CHECK(basisFor(3, 6).get() != a.get());
}

TEST_CASE("monomial count matches the binomial formula") {
    CHECK(monomialCount(3, 4) == 35); // C(7, 3)
    CHECK(monomialCount(1, 9) == 10);
    CHECK(monomialCount(2, 0) == 1);
}

} // TEST_SUITE
