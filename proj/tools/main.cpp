#include "cli.hpp"

int main(int argc, char** argv) { return ncclark::cli::runMain(argc, argv); }
