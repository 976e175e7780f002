#pragma once

#include <string>

namespace lahbell {

// Outcome of one identity check. When ok is false, detail names the first
// counterexample (parameters plus the two disagreeing values).
struct CheckReport {
    bool ok = true;
    std::string detail;

    static CheckReport pass() { return {}; }
    static CheckReport fail(std::string what) { return {false, std::move(what)}; }
};

}  // namespace lahbell
