#include <algorithm>
#include <iostream>
#include <thread>

#include "intersector/acceptance.hpp"

int main() {
    intersector::AcceptanceOptions opts;
    opts.threads = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
    auto outcomes = intersector::run_acceptance(std::cout, opts);
    const bool ok = std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << '\n';
    return ok ? 0 : 1;
}
