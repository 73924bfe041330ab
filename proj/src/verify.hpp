#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "csoracle.hpp"
#include "knots.hpp"

namespace tki {

// Coprime pairs 1 <= n < m <= max_range.
std::vector<TorusKnot> coprime_pairs(int max_range);

struct VerifyOptions {
    int max_range = 6;
    std::set<std::string> checks;  // subset of {relation, symmetry, a1, olga, oracle}
    int threads = 0;               // 0 = hardware concurrency
    int N = 0;                     // oracle context; 0 = default contexts
    long long K = 0;
    double tol = 1e-8;
};

struct CheckResult {
    std::string name;
    int cases = 0;
    std::vector<TorusKnot> failures;
    bool pass() const { return failures.empty(); }
};

std::vector<CheckResult> run_verify(const VerifyOptions& opt);
std::string verify_report_json(const VerifyOptions& opt, const std::vector<CheckResult>& results);

// JSON array of InvariantResult over all coprime pairs in range.
std::string table_json(int max_range, InvariantKind kind, int threads);

// Bounded worker pool over [0, count); f(i) must be thread-safe.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& f);

}  // namespace tki
