#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "slr/oracles.hpp"

namespace slr {

struct BenchRecord {
    StrictPartition lambda, mu, nu;
    std::uint64_t coefficient = 0;
    double rule_ms = 0;
    std::uint64_t rule_nodes = 0;
    std::uint64_t rule_terminals = 0;
    bool oracle_ran = false;
    bool oracle_budget_exceeded = false;
    double oracle_ms = 0;
    std::uint64_t oracle_fillings = 0;
    std::uint64_t oracle_nodes = 0;
    long long oracle_coefficient = 0;
    std::string bound;  // |shSYT(λ)| * 2^(|λ|-1)

    nlohmann::json to_json() const {
        nlohmann::json j = {{"lambda", lambda.str()},
                            {"mu", mu.str()},
                            {"nu", nu.str()},
                            {"coefficient", coefficient},
                            {"rule_ms", rule_ms},
                            {"rule_nodes", rule_nodes},
                            {"rule_terminals", rule_terminals},
                            {"bound", bound}};
        if (oracle_ran) {
            j["oracle_ms"] = oracle_ms;
            j["oracle_fillings"] = oracle_fillings;
            j["oracle_nodes"] = oracle_nodes;
            j["oracle_coefficient"] = oracle_coefficient;
            j["oracle_budget_exceeded"] = oracle_budget_exceeded;
        } else {
            j["oracle"] = "skipped";
        }
        return j;
    }
};

// Staircase λ = (k, ..., 1), μ = (|λ|, ..., 1), ν = μ + (1, ..., 1).
inline std::tuple<StrictPartition, StrictPartition, StrictPartition> staircase_shift(int k) {
    std::vector<int> l, m, n;
    for (int i = k; i >= 1; --i) l.push_back(i);
    const int size = k * (k + 1) / 2;
    for (int i = size; i >= 1; --i) {
        m.push_back(i);
        n.push_back(i + 1);
    }
    return {StrictPartition(l), StrictPartition(m), StrictPartition(n)};
}

inline BenchRecord bench_compare(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                                 bool run_oracle = true, std::optional<double> oracle_budget_ms = std::nullopt) {
    using clock = std::chrono::steady_clock;
    BenchRecord rec;
    rec.lambda = lambda;
    rec.mu = mu;
    rec.nu = nu;
    auto t0 = clock::now();
    EnumerationStats st;
    rec.coefficient = enumerate_constructed(lambda, mu, nu, &st).size();
    rec.rule_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    rec.rule_nodes = st.nodes - 1;  // placements only, the empty root is not counted
    rec.rule_terminals = st.terminals;
    boost::multiprecision::cpp_int bound = count_standard_shifted(lambda);
    if (lambda.size() > 0) bound <<= lambda.size() - 1;
    rec.bound = bound.str();
    if (run_oracle && lambda.size() + mu.size() == nu.size() && nu.contains(mu)) {
        rec.oracle_ran = true;
        const Tableau target = standard_by_rows(lambda);
        t0 = clock::now();
        rec.oracle_nodes = -1 + for_each_standard_skew(nu, mu, [&](const SkewFilling& f) {
            ++rec.oracle_fillings;
            if (rectify(f) == target) ++rec.oracle_coefficient;
            if (oracle_budget_ms &&
                std::chrono::duration<double, std::milli>(clock::now() - t0).count() > *oracle_budget_ms) {
                rec.oracle_budget_exceeded = true;
                return false;
            }
            return true;
        });
        rec.oracle_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    }
    return rec;
}

}  // namespace slr
