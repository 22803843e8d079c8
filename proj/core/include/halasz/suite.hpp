#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace halasz {

// The full verification suite: every numbered criterion runs at its pinned
// tolerance and prints one pass/fail line. Determinism is checked by
// recomputing the whole verdict set at one worker thread and comparing the
// serialized JSON byte for byte against the main run.
struct SuiteOptions {
    unsigned threads_main = 8;
    uint64_t seed = 20260809;
    std::string artifact_dir; // empty = no files written
};

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    std::string verdicts_jsonl;     // main run (threads_main workers)
    std::string verdicts_jsonl_alt; // single-worker rerun
    bool all_pass = false;
};

SuiteResult run_acceptance(const SuiteOptions& opts, std::ostream& log);

} // namespace halasz
