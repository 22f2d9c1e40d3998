#pragma once

#include "homcat/linalg.hpp"

#include <functional>
#include <string>
#include <vector>

namespace homcat {

struct Failure {
    std::string axiom;
    std::vector<Index> witness;  // basis indices of the failing tuple
    Vec lhs, rhs;
};

struct CheckReport {
    std::vector<Failure> failures;
    bool passed() const { return failures.empty(); }
    bool failed(const std::string& axiom) const;
    std::size_t count(const std::string& axiom) const;
    void merge(const CheckReport& o) { failures.insert(failures.end(), o.failures.begin(), o.failures.end()); }
    void fail(std::string axiom, std::vector<Index> witness, Vec lhs = {}, Vec rhs = {}) {
        failures.push_back({std::move(axiom), std::move(witness), std::move(lhs), std::move(rhs)});
    }
    // Records a failure when lhs != rhs.
    void expect(const std::string& axiom, std::vector<Index> witness, const Vec& lhs, const Vec& rhs) {
        if (lhs != rhs) fail(axiom, std::move(witness), lhs, rhs);
    }
};

// Evaluates body(i, report) for every i in [0, n), possibly in parallel,
// and concatenates the per-index reports in index order.
CheckReport check_each(std::size_t n, const std::function<void(Index, CheckReport&)>& body);

}  // namespace homcat
