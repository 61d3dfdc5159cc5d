#ifndef TSW_REPORT_HPP
#define TSW_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tsw
{

enum class Status { pass, fail, excluded };

std::string to_string(Status s);

// Outcome of one identity instantiated at one test vector.
struct CheckResult {
    std::string relation;
    std::vector<int> nodes;
    std::vector<int> modes;
    std::string vector;
    Status status = Status::pass;
    // Numeric pre-screen verdict; empty when the pre-screen did not run.
    std::optional<Status> numeric;
    // Present iff status == fail (or the entry is excluded, with the reason).
    std::optional<std::string> residual;
};

struct Report {
    std::string suite;
    // Ordered so that serialization is deterministic.
    std::map<std::string, nlohmann::json> params;
    std::vector<CheckResult> results;

    void add(CheckResult r) { results.push_back(std::move(r)); }
    void append(const Report &other);

    std::size_t count(Status s) const;
    bool all_passed() const { return count(Status::fail) == 0; }

    nlohmann::json to_json() const;
    // One line per relation id: "<relation>: <pass>/<total> pass".
    std::string summary() const;
};

} // namespace tsw

#endif
