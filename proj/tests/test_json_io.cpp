#include <doctest.h>

#include <complex>
#include <cstdio>
#include <string>

#include <Eigen/Dense>

#include "ncclark/freealg.hpp"
#include "ncclark/json_io.hpp"
#include "ncclark/series.hpp"
#include "ncclark/states.hpp"

using namespace ncclark;

TEST_SUITE("json_io") {

TEST_CASE("series round trip keeps every coefficient") {
    TruncatedSeries s(2, 3);
    s.set(MultiIndex{0, 0}, Complex{0.25, -1.0});
    s.set(MultiIndex{2, 1}, Complex{0.0, 3.5});
    TruncatedSeries back = seriesFromJson(toJson(s));
    CHECK(back.d == 2);
    CHECK(back.N == 3);
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) CHECK(back.coeffs[i] == s.coeffs[i]);
}

TEST_CASE("moment state round trip keeps values and provenance") {
    BuiltinState st = builtinState("cuntz:0.6,0.8i", 0, 4);
    MomentState back = momentStateFromJson(toJson(st.state));
    CHECK(back.provenance == st.state.provenance);
    for (std::size_t i = 0; i < st.state.moments.size(); ++i)
        CHECK(back.moments[i] == st.state.moments[i]);
}

TEST_CASE("word state round trip keeps the word table") {
    BuiltinState st = builtinState("cuntz:0.6,0.8", 0, 8);
    WordState nu = extendToWords(st.state, 3);
    WordState back = wordStateFromJson(toJson(nu));
    CHECK(back.words.d == nu.words.d);
    CHECK(back.words.maxLen == nu.words.maxLen);
    for (std::size_t i = 0; i < nu.values.size(); ++i) CHECK(back.values[i] == nu.values[i]);
}

TEST_CASE("operator system elements round trip both parts") {
    SymElement p(2);
    p.addPlus(MultiIndex{0, 0}, Complex{1.0, 0.5});
    p.addPlus(MultiIndex{1, 1}, Complex{-2.0, 0.0});
    p.addMinus(MultiIndex{0, 2}, Complex{0.0, 1.0});
    SymElement back = symElementFromJson(toJson(p));
    CHECK(back.d == 2);
    CHECK(back.plus == p.plus);
    CHECK(back.minus == p.minus);
}

TEST_CASE("matrices round trip entrywise") {
    Eigen::MatrixXcd m(2, 3);
    m << Complex{1, 2}, Complex{0, 0}, Complex{-1, 0.5},
         Complex{3, 0}, Complex{0, -4}, Complex{2.5, 2.5};
    Eigen::MatrixXcd back = matrixFromJson(matrixToJson(m));
    CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("csv rendering interleaves real and imaginary columns") {
    Eigen::MatrixXcd m(1, 2);
    m << Complex{1, -2}, Complex{0.5, 0};
    CHECK(matrixToCsv(m) == "1,-2,0.5,0\n");
}

TEST_CASE("reports declare the conventions they depend on") {
    Json rep = reportSkeleton("demo");
    CHECK(rep["schemaVersion"] == 1);
    CHECK(rep["check"] == "demo");
    for (const char* key : {"symmetrizedMonomial", "resolventPowers", "moments", "gram",
                            "monomialOrder", "wordOrder"})
        CHECK(rep["conventions"].contains(key));
    CHECK_FALSE(rep.contains("timestamp")); // reports must be bit-reproducible
}

TEST_CASE("file round trip through the json helpers") {
    std::string path = "/tmp/ncclark_test_jsonio.json";
    Json j;
    j["x"] = 1.5;
    j["y"] = "text";
    writeJsonFile(path, j);
    Json back = readJsonFile(path);
    CHECK(back == j);
    std::remove(path.c_str());
}

} // TEST_SUITE
