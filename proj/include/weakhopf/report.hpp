#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weakhopf/sparse_tensor.hpp"

namespace wha {

struct Witness {
    Index index;
    Scalar expected;
    Scalar actual;

    bool operator<(const Witness& o) const { return index < o.index; }
};

/// Result of a named check. A failing report always carries at least one
/// witness pinpointing a basis multi-index where the two sides differ; the
/// stored list is capped, failure_count keeps the true total.
struct CheckReport {
    static constexpr std::size_t kWitnessCap = 16;

    std::string name;
    bool informational = false;
    std::vector<Witness> witnesses;
    std::uint64_t failure_count = 0;
    std::vector<std::string> notes;
    std::vector<CheckReport> subs;

    explicit CheckReport(std::string n = "", bool info = false)
        : name(std::move(n)), informational(info) {}

    bool passed() const {
        if (failure_count != 0) return false;
        for (const auto& s : subs) {
            if (!s.informational && !s.passed()) return false;
        }
        return true;
    }

    void add_failure(Index idx, Scalar expected, Scalar actual) {
        ++failure_count;
        if (witnesses.size() < kWitnessCap) {
            witnesses.push_back(Witness{std::move(idx), std::move(expected), std::move(actual)});
        }
    }

    void sort_witnesses();
    void merge_sub(CheckReport sub) { subs.push_back(std::move(sub)); }
    std::string summary() const;  // one line: "name: pass|FAIL (k failures)"
};

}  // namespace wha
