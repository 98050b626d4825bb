#include "weakhopf/report.hpp"

#include <algorithm>

namespace wha {

void CheckReport::sort_witnesses() {
    std::sort(witnesses.begin(), witnesses.end());
    for (auto& s : subs) s.sort_witnesses();
}

std::string CheckReport::summary() const {
    std::string line = name + ": ";
    if (passed()) {
        line += "pass";
    } else {
        line += "FAIL";
        std::uint64_t total = failure_count;
        for (const auto& s : subs) {
            if (!s.informational) total += s.failure_count;
        }
        if (total > 0) line += " (" + std::to_string(total) + " failing entries)";
    }
    return line;
}

}  // namespace wha
