#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ncclark/json_io.hpp"

using ncclark::Json;
using ncclark::cli::runArgs;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/ncclark_cli_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("quasi-extremality verdict for the zero multiplier") {
    TempFile f("qe.json");
    int rc = runArgs({"quasiextreme", "--builtin", "zero", "--N", "4", "--output", f.path});
    CHECK(rc == 0);
    Json rep = ncclark::readJsonFile(f.path);
    CHECK(rep["verdict"] == "not quasi-extreme at degree 4");
    for (double v : rep["curve"]) CHECK(v == 1.0);
}

TEST_CASE("single-state suite passes for a state that fails the gate") {
    TempFile f("suite.json");
    int rc = runArgs({"suite", "--builtin", "two-point", "--N", "5", "--output", f.path});
    CHECK(rc == 0);
    Json rep = ncclark::readJsonFile(f.path);
    CHECK(rep["quasiExtreme"] == false);
    CHECK(rep["pass"] == true);
    CHECK(rep["notes"].size() > 0);
}

TEST_CASE("boundary checks exit by verdict") {
    TempFile f("bd.json");
    CHECK(runArgs({"boundary", "--builtin", "coordinate", "--zeta", "1,0", "--alpha", "1",
                   "--output", f.path}) == 0);
    Json hit = ncclark::readJsonFile(f.path);
    CHECK(hit["results"][0]["verdict"] == "eigenvalue predicted");
    CHECK(hit["results"][0]["angularDerivative"] == 1.0);

    CHECK(runArgs({"boundary", "--builtin", "coordinate", "--zeta", "0,1", "--output",
                   f.path}) == 2);
    Json miss = ncclark::readJsonFile(f.path);
    CHECK(miss["results"][0]["verdict"] == "no eigenvalue predicted");
}

TEST_CASE("failures and errors exit one") {
    CHECK(runArgs({"gram", "--builtin", "nosuch", "--N", "3"}) == 1);
    CHECK(runArgs({"extend", "--builtin", "two-point", "--maxLen", "4"}) == 1);
    CHECK(runArgs({"clark", "--builtin", "coordinate", "--alpha", "i"}) == 1);
    CHECK(runArgs({"definitely-not-a-subcommand"}) == 1);
    CHECK(runArgs({"disintegrate", "--builtin", "zero"}) == 1); // --z is required
}

TEST_CASE("reports are bit-identical across runs") {
    TempFile a("det_a.json");
    TempFile b("det_b.json");
    CHECK(runArgs({"gns", "--builtin", "cuntz:0.6,0.8", "--N", "4", "--output", a.path}) == 0);
    CHECK(runArgs({"gns", "--builtin", "cuntz:0.6,0.8", "--N", "4", "--output", b.path}) == 0);
    std::string ta = slurp(a.path);
    CHECK(ta == slurp(b.path));
    CHECK(ta.find("timestamp") == std::string::npos);
}

TEST_CASE("moment reports feed back as input files") {
    TempFile rep("mom.json");
    TempFile state("state.json");
    CHECK(runArgs({"moments", "--builtin", "two-point", "--N", "8", "--output", rep.path}) == 0);
    ncclark::writeJsonFile(state.path, ncclark::readJsonFile(rep.path)["state"]);
    TempFile gram("gram2.json");
    CHECK(runArgs({"gram", "--input", state.path, "--N", "4", "--output", gram.path}) == 0);
    TempFile qe("qe2.json");
    CHECK(runArgs({"quasiextreme", "--input", state.path, "--N", "4", "--output", qe.path}) == 0);
    Json curve = ncclark::readJsonFile(qe.path);
    CHECK(curve["curve"][2].get<double>() == doctest::Approx(0.1875).epsilon(1e-12));
}

TEST_CASE("series files feed the transform commands") {
    TempFile series("series.json");
    TempFile rep("fant.json");
    Json j = ncclark::toJson(ncclark::makeBuiltin("cuntz:0.6,0.8", 0, 70).series);
    ncclark::writeJsonFile(series.path, j);
    CHECK(runArgs({"fantappie", "--input", series.path, "--count", "4", "--output",
                   rep.path}) == 0);
    Json out = ncclark::readJsonFile(rep.path);
    CHECK(out["pass"] == true);
    CHECK(out["config"]["radiusCap"] == 0.5);
}

TEST_CASE("csv is available exactly where matrices and curves live") {
    TempFile f("gram.csv");
    CHECK(runArgs({"gram", "--builtin", "coordinate", "--N", "2", "--format", "csv",
                   "--output", f.path}) == 0);
    std::string text = slurp(f.path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6); // one row per class
    CHECK(runArgs({"gns", "--builtin", "coordinate", "--N", "3", "--format", "csv"}) == 1);
}

TEST_CASE("the oracle subcommand honors its flags") {
    TempFile f("oracle.json");
    CHECK(runArgs({"oracle", "--d", "2", "--degree", "2", "--maxLen", "4", "--output",
                   f.path}) == 0);
    Json rep = ncclark::readJsonFile(f.path);
    CHECK(rep["checks"][0]["measured"] == 0.0);
    CHECK(runArgs({"oracle", "--degree", "4", "--maxLen", "3"}) == 1); // cap must exceed degree
}

} // TEST_SUITE
