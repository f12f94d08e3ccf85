#pragma once

#include <string>
#include <vector>

namespace crossalg {

// Report-valued validation result: empty failure list means the checked
// invariants hold.
struct Report {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string message) { failures.push_back(std::move(message)); }
    void merge(const Report& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

}  // namespace crossalg
