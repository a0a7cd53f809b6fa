#include <cstdio>
#include <cstdlib>

#include "ncclark/acceptance.hpp"

// Runs one acceptance criterion and exits 0 iff it passed. Measured values
// are printed for every check, pass or fail.
int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <criterion 1..12>\n", argv[0]);
        return 2;
    }
    int id = std::atoi(argv[1]);
    if (id < 1 || id > 12) {
        std::fprintf(stderr, "criterion id must lie in 1..12, got '%s'\n", argv[1]);
        return 2;
    }
    ncclark::CriterionResult r = ncclark::runCriterion(id);
    std::fputs(ncclark::formatCriterion(r).c_str(), stdout);
    return r.pass ? 0 : 1;
}
