#pragma once

// Verification reports: each identity check yields a Report listing exact
// violations (indices plus both sides as exact strings). A theorem check
// passing means an empty violation list.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace catbert {

struct Violation {
    std::vector<long> indices;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string identity;
    nlohmann::json params;  // {"p":..,"q":..,"a":..} or scan-specific fields
    long size = 0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // errata / informational remarks

    bool ok() const { return violations.empty(); }

    void add_violation(std::vector<long> indices, std::string lhs, std::string rhs) {
        violations.push_back({std::move(indices), std::move(lhs), std::move(rhs)});
    }

    nlohmann::json to_json() const {
        nlohmann::json v = nlohmann::json::array();
        for (const auto& x : violations)
            v.push_back({{"indices", x.indices}, {"lhs", x.lhs}, {"rhs", x.rhs}});
        nlohmann::json j = {
            {"identity", identity}, {"params", params}, {"size", size}, {"violations", v}};
        if (!notes.empty()) j["notes"] = notes;
        return j;
    }
};

}  // namespace catbert
