#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cylkit {

using AtomId = uint32_t;

// Thrown when an enumeration or search would exceed its declared budget.
// The message carries the offending estimate so callers can report it.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed inputs (bad JSON, unknown atom names, index out of range, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
    uint64_t max_atoms = 2'000'000;
    uint64_t max_positions = 4'000'000;
    uint64_t max_candidates = 50'000'000;

    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("CYLKIT_BUDGET")) {
            uint64_t v = std::strtoull(s, nullptr, 10);
            if (v > 0) {
                b.max_atoms = v;
                b.max_positions = v;
                b.max_candidates = v;
            }
        }
        return b;
    }
};

inline void check_budget(uint64_t estimate, uint64_t limit, const std::string& what) {
    if (estimate > limit)
        throw BudgetError(what + ": estimate " + std::to_string(estimate) +
                          " exceeds budget " + std::to_string(limit));
}

}  // namespace cylkit
