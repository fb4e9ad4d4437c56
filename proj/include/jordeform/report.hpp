#pragma once

#include <string>
#include <vector>

namespace jordeform {

// One verified identity. A failing record keeps the rendered residual so an
// exact mismatch can be located instead of just counted.
struct CheckRecord {
    std::string suite;
    std::string identity;
    std::string anchor;
    bool pass = false;
    long residual_terms = 0;
    long millis = 0;
    std::string residual;
};

using Report = std::vector<CheckRecord>;

inline bool all_pass(const Report& r) {
    for (const auto& rec : r)
        if (!rec.pass) return false;
    return true;
}

inline void append(Report& into, Report more) {
    for (auto& rec : more) into.push_back(std::move(rec));
}

} // namespace jordeform
