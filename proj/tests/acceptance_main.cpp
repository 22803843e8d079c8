// Acceptance gate: runs the full verification suite (one line per criterion)
// and exits nonzero if any criterion fails.
#include <cstring>
#include <iostream>

#include "halasz/suite.hpp"

int main(int argc, char** argv) {
    halasz::SuiteOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--artifact-dir") == 0 && i + 1 < argc)
            opts.artifact_dir = argv[++i];
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--threads-main") == 0 && i + 1 < argc)
            opts.threads_main = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    }
    halasz::SuiteResult res = halasz::run_acceptance(opts, std::cout);
    return res.all_pass ? 0 : 1;
}
