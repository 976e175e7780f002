#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lahbell/report.hpp"

namespace lahbell {

// One named identity check over fixed parameters.
struct CheckTask {
    std::string name;
    std::function<CheckReport()> run;
};

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Sweep-limit overrides; -1 leaves the suite's own default in place, and
// overrides are clamped to the configured caps. quick shrinks every
// default so a full run stays fast.
struct SuiteBounds {
    int n_max = -1;
    int m_max = -1;
    int r_max = -1;
    int order = -1;
    bool quick = false;
};

// Valid suite names: defining, spivey, spivey-r, spivey-lambda, weyl, gf,
// oracle, all. Throws std::invalid_argument on anything else.
std::vector<CheckTask> build_suite(const std::string& suite, const SuiteBounds& bounds);

// Runs tasks across `jobs` workers; results come back in task order
// regardless of completion order. A task that throws is reported as a
// failure carrying the exception text.
std::vector<CheckResult> run_tasks(const std::vector<CheckTask>& tasks, int jobs);

}  // namespace lahbell
