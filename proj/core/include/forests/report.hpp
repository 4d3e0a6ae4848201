#ifndef FORESTS_REPORT_HPP
#define FORESTS_REPORT_HPP

#include <string>
#include <vector>

#include "forests/rational.hpp"

namespace forests {

// One verified identity or bound, with both sides kept exact.
struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add_equal(const std::string& name, const Rat& lhs, const Rat& rhs) {
        checks.push_back({name, to_string(lhs), to_string(rhs), lhs == rhs});
    }

    void add_leq(const std::string& name, const Rat& lhs, const Rat& rhs) {
        checks.push_back({name, to_string(lhs), to_string(rhs), lhs <= rhs});
    }

    void add_geq(const std::string& name, const Rat& lhs, const Rat& rhs) {
        checks.push_back({name, to_string(lhs), to_string(rhs), lhs >= rhs});
    }

    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

}  // namespace forests

#endif
