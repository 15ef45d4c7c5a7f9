#include "cylkit/generators.hpp"

namespace cylkit {

uint64_t kappa(uint64_t x, uint64_t y) {
    uint64_t v = 0;
    for (uint64_t t = 0; t < y; ++t) {
        if (x != 0 && v > (UINT64_MAX - 1) / x)
            throw BudgetError("kappa(" + std::to_string(x) + "," + std::to_string(y) + ") overflows");
        v = 1 + x * v;
    }
    return v;
}

uint64_t psi(uint64_t n, uint64_t r) {
    uint64_t m = (n - 1) * r;
    return kappa(m, m) + 1;
}

AtomStructure maddux(uint32_t k) {
    if (k < 1) throw InputError("maddux: k >= 1 required");
    std::vector<std::string> names{"Id"};
    for (uint32_t i = 0; i < k; ++i) names.push_back("a" + std::to_string(i));
    AtomStructure s = AtomStructure::relation_algebra(names);
    AtomSet id(s.atom_count());
    id.insert(0);
    s.set_identity(id);
    std::vector<std::array<AtomId, 3>> forbidden;
    for (AtomId a = 1; a <= k; ++a) forbidden.push_back({a, a, a});
    s.set_consistent_from_forbidden(forbidden);
    return s;
}

AtomStructure example_ra(uint32_t trunc, bool symmetric_indices) {
    if (trunc < 1) throw InputError("example_ra: truncation bound >= 1 required");
    std::vector<std::string> names{"Id"};
    const char* colours[3] = {"r", "y", "b"};
    for (int c = 0; c < 3; ++c)
        for (uint32_t i = 0; i < trunc; ++i)
            names.push_back(std::string(colours[c]) + std::to_string(i));
    AtomStructure s = AtomStructure::relation_algebra(names);
    AtomSet id(s.atom_count());
    id.insert(0);
    s.set_identity(id);
    auto atom = [&](int c, uint32_t i) -> AtomId { return 1 + c * trunc + i; };
    std::vector<std::array<AtomId, 3>> forbidden;
    for (int c = 0; c < 3; ++c)
        for (uint32_t i = 0; i < trunc; ++i)
            for (uint32_t j = 0; j < trunc; ++j) {
                if (!symmetric_indices && i > j) continue;
                forbidden.push_back({atom(c, i), atom(c, i), atom(c, j)});
            }
    s.set_consistent_from_forbidden(forbidden);
    return s;
}

}  // namespace cylkit
