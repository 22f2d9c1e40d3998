#include "homcat/report.hpp"

#include "homcat/parallel.hpp"

#include <algorithm>

namespace homcat {

bool CheckReport::failed(const std::string& axiom) const { return count(axiom) > 0; }

std::size_t CheckReport::count(const std::string& axiom) const {
    return static_cast<std::size_t>(
        std::count_if(failures.begin(), failures.end(), [&](const Failure& f) { return f.axiom == axiom; }));
}

CheckReport check_each(std::size_t n, const std::function<void(Index, CheckReport&)>& body) {
    std::vector<CheckReport> parts(n);
    parallel_for(n, [&](std::size_t i) { body(static_cast<Index>(i), parts[i]); });
    CheckReport all;
    for (auto& p : parts) all.merge(p);
    return all;
}

}  // namespace homcat
