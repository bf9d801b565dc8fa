// Acceptance suite: one exact check per criterion, one pass/fail line each.
// Exit code equals the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "irc/capacity.hpp"
#include "irc/gaussian.hpp"
#include "irc/gdof.hpp"
#include "irc/rate_opt.hpp"
#include "irc/schemes.hpp"
#include "irc/simulate.hpp"
#include "irc/verify.hpp"

using namespace irc;

namespace {

struct Criterion {
    std::string name;
    double budget_s;  // hard wall-clock budget
    std::function<bool(std::string&)> run;
};

bool crit_ld_sandwich(std::string& detail) {
    long long tuples = 0, bad = 0;
    for (int nd = 0; nd <= 8; ++nd)
        for (int nr = 0; nr <= 8; ++nr)
            for (int nc = 0; nc <= 8; ++nc)
                for (int ns = nc + 1; ns <= 8; ++ns) {
                    LdParams p{nd, nc, nr, ns};
                    ++tuples;
                    long long cap = ld_sum_capacity(p);
                    if (ld_upper_bounds(p).binding_value != Rational(cap) ||
                        scheme_sum_rate(p) != cap)
                        ++bad;
                }
    detail = std::to_string(tuples) + " tuples, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

bool crit_tables(std::string& detail) {
    // >= 3 in-regime tuples per table column, found by classification
    std::map<std::string, std::vector<LdParams>> per_column;
    for (int L = 1; L <= 12; ++L)
        for (int nd = 0; nd <= L; ++nd)
            for (int nc = 0; nc <= L; ++nc)
                for (int nr = 0; nr <= L; ++nr)
                    for (int ns = nc + 1; ns <= L; ++ns) {
                        if (std::max(std::max(nd, nc), std::max(nr, ns)) != L) continue;
                        LdParams p{nd, nc, nr, ns};
                        SchemeChoice ch = classify_regime(p);
                        auto& v = per_column[ch.table + "#" + std::to_string(ch.column)];
                        if (v.size() < 3) v.push_back(p);
                    }
    long long cols = 0, checked = 0, bad = 0;
    std::string first;
    for (const SchemeChoice& ch : all_table_columns()) {
        ++cols;
        auto it = per_column.find(ch.table + "#" + std::to_string(ch.column));
        if (it == per_column.end() || it->second.size() < 3) {
            ++bad;
            if (first.empty()) first = ch.table + " column under-instantiated";
            continue;
        }
        for (const LdParams& p : it->second) {
            ++checked;
            SchemeChoice actual = classify_regime(p);
            RateAllocation a = allocate(actual, p);
            auto viols = check_allocation(compile_constraints(actual.scheme, p), a);
            Rational rate = actual.scheme == SchemeId::II ? a.user_rate()
                                                          : Rational(2) * a.user_rate();
            long long prop = scheme_sum_rate(actual, p);
            long long cap = ld_sum_capacity(p);
            if (!viols.empty() || rate != Rational(prop) || prop != cap) {
                ++bad;
                if (first.empty())
                    first = p.str() + " " + actual.str() +
                            (viols.empty() ? " rate mismatch" : " [" + viols[0] + "]");
            }
        }
    }
    detail = std::to_string(cols) + " columns, " + std::to_string(checked) +
             " instantiations, " + std::to_string(bad) + " failures";
    if (!first.empty()) detail += " (" + first + ")";
    return bad == 0;
}

bool crit_optimizer(std::string& detail) {
    SweepSpec spec;
    spec.nd_max = spec.nc_max = spec.nr_max = spec.ns_max = 6;
    spec.checks = {"optimize"};
    VerifyReport rep = run_verify(spec);
    detail = std::to_string(rep.grid_size) + " tuples, " +
             std::to_string(rep.checks[0].failures.size()) + " failures";
    if (!rep.checks[0].failures.empty()) detail += " (" + rep.checks[0].failures[0] + ")";
    return rep.ok();
}

bool crit_simulate(std::string& detail) {
    SweepSpec spec;
    spec.nd_max = spec.nc_max = spec.nr_max = spec.ns_max = 6;
    spec.checks = {"simulate"};
    spec.sim_blocks = 10;
    spec.sim_seeds = {1, 2, 3};
    VerifyReport rep = run_verify(spec);
    detail = std::to_string(rep.grid_size) + " tuples x 3 seeds, " +
             std::to_string(rep.checks[0].failures.size()) + " failures";
    if (!rep.checks[0].failures.empty()) detail += " (" + rep.checks[0].failures[0] + ")";
    return rep.ok();
}

bool crit_gdof_sandwich(std::string& detail) {
    long long count = 0;
    auto fails = gdof_sandwich_sweep(12, 36, 36, 48, &count);
    detail = std::to_string(count) + " grid points, " + std::to_string(fails.size()) +
             " mismatches";
    if (!fails.empty()) detail += " (" + fails[0] + ")";
    return fails.empty();
}

bool crit_scaling_bridge(std::string& detail) {
    std::mt19937_64 rng(2024);
    long long done = 0, bad = 0;
    while (done < 200) {
        int ka = int(rng() % 37), kb = int(rng() % 37), kg = int(rng() % 49);
        if (ka == 12 || kg <= ka) continue;
        GdofParams g{Rational(ka, 12), Rational(kb, 12), Rational(kg, 12)};
        long long N = lcm_ll(lcm_ll(g.alpha.den(), g.beta.den()), g.gamma.den());
        auto r1 = gdof_achievable_check(g, N);
        auto r2 = gdof_achievable_check(g, 2 * N);
        if (!r1.equal || !r2.equal) ++bad;
        ++done;
    }
    detail = "200 sampled triples at N and 2N, " + std::to_string(bad) + " mismatches";
    return bad == 0;
}

bool crit_figure_features(std::string& detail) {
    int bad = 0;
    // (a) non-monotone in alpha within strong interference, (beta,gamma) = (2,3)
    GdofParams a1{Rational(3, 2), Rational(2), Rational(3)};
    GdofParams a2{Rational(2), Rational(2), Rational(3)};
    if (!(gdof(a1) == Rational(7, 2) && gdof(a2) == Rational(3) && gdof(a1) > gdof(a2)))
        ++bad;
    // (b) no relay benefit for alpha <= 1 - gamma at (0.1, 0.7)
    for (int k = 0; k <= 18; ++k) {
        GdofParams g{Rational(k, 60), Rational(1, 10), Rational(7, 10)};
        if (gdof(g) != gdof_ic(g.alpha)) ++bad;
    }
    // (c) strict relay gain and slope -1 on (0, 2/3) at (0.7, 0.7)
    for (int k = 1; k < 40; ++k) {
        GdofParams g{Rational(k, 60), Rational(7, 10), Rational(7, 10)};
        if (!(gdof(g) > gdof_ic(g.alpha))) ++bad;
        if (gdof(g) != Rational(2) - g.alpha) ++bad;
    }
    // (d) the relay never hurts on the gamma > alpha grid
    for (int ka = 0; ka <= 36; ++ka)
        for (int kb = 0; kb <= 36; ++kb)
            for (int kg = ka + 1; kg <= 48; ++kg) {
                GdofParams g{Rational(ka, 12), Rational(kb, 12), Rational(kg, 12)};
                if (gdof(g) < gdof_ic(g.alpha)) ++bad;
            }
    detail = std::to_string(bad) + " feature violations";
    return bad == 0;
}

bool crit_subchannels(std::string& detail) {
    SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, 20), 1, 1, 1, 0.25, 5);
    bool ok = plan.N_s == 4 && plan.R_s == 1.0 && plan.R_s_exact &&
              *plan.R_s_exact == Rational(1) && plan.usable;
    SubchannelPlan low = plan_subchannels(std::ldexp(1.0, 20), 1, 1, 1, 0.25, 16);
    ok = ok && !low.usable;
    detail = ok ? "N_s and R_s exact, small delta flagged" : "ledger mismatch";
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> crits = {
        {"LD sandwich (levels <= 8, n_c < n_s): bounds = capacity = scheme rate", 1.0,
         crit_ld_sandwich},
        {"table goldens: every column on >= 3 tuples, zero violations, exact rate", 30.0,
         crit_tables},
        {"independent optimizer oracle = table rate = capacity (levels <= 6)", 600.0,
         crit_optimizer},
        {"bit-level decode round-trip (levels <= 6, n = 10, 3 seeds)", 300.0,
         crit_simulate},
        {"GDoF sandwich on the twelfth-step rational grid", 60.0, crit_gdof_sandwich},
        {"scaling bridge at N = lcm of denominators and 2N (200 samples)", 60.0,
         crit_scaling_bridge},
        {"figure features: non-monotone alpha, relay-gain regions, slope -1", 1.0,
         crit_figure_features},
        {"sub-channel ledger: exact counts, R_s = 1 bit, delta <= 4 flagged", 1.0,
         crit_subchannels},
    };
    int failures = 0;
    for (size_t i = 0; i < crits.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = crits[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (secs > crits[i].budget_s) {
            ok = false;
            detail += " [over time budget]";
        }
        std::printf("%s  [%zu] %s: %s (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL",
                    i + 1, crits[i].name.c_str(), detail.c_str(), secs, crits[i].budget_s);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
