#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "irc/ld_model.hpp"
#include "irc/rational.hpp"

namespace irc {

// Inclusive level ranges plus the check selection for one verification run.
struct SweepSpec {
    int nd_min = 0, nd_max = 8;
    int nc_min = 0, nc_max = 8;
    int nr_min = 0, nr_max = 8;
    int ns_min = 0, ns_max = 8;
    bool require_nc_lt_ns = true;  // scope filter of the stronger-source regime
    std::vector<std::string> checks = {"sandwich", "tables", "simulate", "optimize"};
    int workers = 0;       // 0 = hardware concurrency
    int sim_blocks = 10;   // n for the simulate check
    std::vector<uint64_t> sim_seeds = {1, 2, 3};
};

struct CheckReport {
    std::string name;
    long long tuples = 0;
    std::vector<std::string> failures;  // diagnostics, one line per failing tuple
};

struct VerifyReport {
    long long grid_size = 0;
    std::vector<CheckReport> checks;
    long long elapsed_ms = 0;

    bool ok() const {
        for (auto& c : checks)
            if (!c.failures.empty()) return false;
        return true;
    }
    std::string to_json() const;
};

std::vector<LdParams> sweep_tuples(const SweepSpec& spec);

// Runs the selected checks over the grid, distributing tuples over a worker
// pool. Every check is exact; failures carry the tuple and the mismatch.
VerifyReport run_verify(const SweepSpec& spec);

// GDoF sandwich on the rational grid with step 1/den: alpha in [0, a_max],
// alpha != 1, beta in [0, b_max], gamma in (alpha, g_max]. Returns failures.
std::vector<std::string> gdof_sandwich_sweep(int den, int a_max_num, int b_max_num,
                                             int g_max_num, long long* count = nullptr);

}  // namespace irc
