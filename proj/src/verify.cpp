#include "irc/verify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "irc/capacity.hpp"
#include "irc/gdof.hpp"
#include "irc/rate_opt.hpp"
#include "irc/schemes.hpp"
#include "irc/simulate.hpp"

namespace irc {

std::vector<LdParams> sweep_tuples(const SweepSpec& s) {
    std::vector<LdParams> out;
    for (int nd = s.nd_min; nd <= s.nd_max; ++nd)
        for (int nc = s.nc_min; nc <= s.nc_max; ++nc)
            for (int nr = s.nr_min; nr <= s.nr_max; ++nr)
                for (int ns = s.ns_min; ns <= s.ns_max; ++ns) {
                    if (s.require_nc_lt_ns && !(nc < ns)) continue;
                    out.push_back({nd, nc, nr, ns});
                }
    return out;
}

namespace {

// checks one tuple; appends diagnostics on failure
void check_tuple(const std::string& check, const LdParams& p, const SweepSpec& spec,
                 std::vector<std::string>& fails) {
    std::ostringstream diag;
    try {
        if (check == "sandwich") {
            const long long cap = ld_sum_capacity(p);
            const BoundSet bs = ld_upper_bounds(p);
            const SchemeChoice ch = classify_regime(p);
            const long long rate = scheme_sum_rate(ch, p);
            if (bs.binding_value != Rational(cap) || rate != cap) {
                diag << p.str() << " capacity=" << cap << " binding=" << bs.binding << "="
                     << bs.binding_value.str() << " scheme=" << ch.str() << " rate=" << rate;
                fails.push_back(diag.str());
            }
        } else if (check == "tables") {
            const SchemeChoice ch = classify_regime(p);
            const RateAllocation a = allocate(ch, p);
            const long long cap = ld_sum_capacity(p);
            Rational tbl = (ch.scheme == SchemeId::II)
                               ? a.user_rate()
                               : Rational(2) * a.user_rate();
            auto viols = check_allocation(compile_constraints(ch.scheme, p), a);
            if (!viols.empty() || tbl != Rational(cap)) {
                diag << p.str() << " " << ch.str() << " table_rate=" << tbl.str()
                     << " capacity=" << cap;
                for (auto& v : viols) diag << " [" << v << "]";
                fails.push_back(diag.str());
            }
        } else if (check == "optimize") {
            const SchemeChoice ch = classify_regime(p);
            const OptResult r = optimize_best(p);
            const long long cap = ld_sum_capacity(p);
            const RateAllocation a = allocate(ch, p);
            Rational tbl = (ch.scheme == SchemeId::II)
                               ? a.user_rate()
                               : Rational(2) * a.user_rate();
            // the maximizer itself must pass the declarative constraint set
            bool argmax_ok = true;
            if (ch.scheme == SchemeId::WI3a || ch.scheme == SchemeId::WI3b) {
                argmax_ok =
                    check_allocation(compile_constraints(SchemeId::WI3a, p), r.argmax)
                        .empty() ||
                    check_allocation(compile_constraints(SchemeId::WI3b, p), r.argmax)
                        .empty();
            } else {
                argmax_ok =
                    check_allocation(compile_constraints(ch.scheme, p), r.argmax).empty();
            }
            if (r.best != Rational(cap) || r.best != tbl || !argmax_ok) {
                diag << p.str() << " optimum=" << r.best.str() << " capacity=" << cap
                     << " table=" << tbl.str() << (argmax_ok ? "" : " argmax-infeasible");
                fails.push_back(diag.str());
            }
        } else if (check == "simulate") {
            const SchemeChoice ch = classify_regime(p);
            const RateAllocation a = allocate(ch, p);
            const long long cap = ld_sum_capacity(p);
            for (uint64_t seed : spec.sim_seeds) {
                auto [tr, out] = simulate(ch, p, a, spec.sim_blocks, seed);
                const long long want =
                    static_cast<long long>(spec.sim_blocks - 1) * cap * a.scale;
                if (!out.success || out.delivered_total() != want) {
                    diag << p.str() << " " << ch.str() << " seed=" << seed;
                    if (!out.success && out.violated_step) {
                        diag << " failed at k=" << out.violated_step->channel_use << " step="
                             << out.violated_step->step << " expected="
                             << out.violated_step->expected << " observed="
                             << out.violated_step->observed;
                    } else {
                        diag << " delivered=" << out.delivered_total() << " want=" << want;
                    }
                    fails.push_back(diag.str());
                    break;
                }
            }
        }
    } catch (const std::exception& e) {
        fails.push_back(p.str() + " " + check + " threw: " + e.what());
    }
}

}  // namespace

VerifyReport run_verify(const SweepSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<LdParams> tuples = sweep_tuples(spec);
    VerifyReport rep;
    rep.grid_size = static_cast<long long>(tuples.size());

    int workers = spec.workers > 0 ? spec.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    for (const auto& check : spec.checks) {
        CheckReport cr;
        cr.name = check;
        cr.tuples = rep.grid_size;
        std::atomic<size_t> next{0};
        std::mutex mu;
        auto worker = [&]() {
            std::vector<std::string> local;
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tuples.size()) break;
                check_tuple(check, tuples[i], spec, local);
            }
            std::lock_guard<std::mutex> lock(mu);
            cr.failures.insert(cr.failures.end(), local.begin(), local.end());
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        rep.checks.push_back(std::move(cr));
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::string VerifyReport::to_json() const {
    std::ostringstream os;
    os << "{\"grid_size\":" << grid_size << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        if (i) os << ',';
        os << "{\"name\":\"" << checks[i].name << "\",\"failures\":[";
        for (size_t j = 0; j < checks[i].failures.size(); ++j) {
            if (j) os << ',';
            std::string esc;
            for (char c : checks[i].failures[j]) {
                if (c == '"' || c == '\\') esc.push_back('\\');
                esc.push_back(c);
            }
            os << '"' << esc << '"';
        }
        os << "]}";
    }
    os << "],\"elapsed_ms\":" << elapsed_ms << "}";
    return os.str();
}

std::vector<std::string> gdof_sandwich_sweep(int den, int a_max_num, int b_max_num,
                                             int g_max_num, long long* count) {
    std::vector<std::string> fails;
    long long n = 0;
    for (int ka = 0; ka <= a_max_num; ++ka) {
        if (ka == den) continue;  // alpha != 1
        for (int kb = 0; kb <= b_max_num; ++kb) {
            for (int kg = ka + 1; kg <= g_max_num; ++kg) {
                GdofParams g{Rational(ka, den), Rational(kb, den), Rational(kg, den)};
                ++n;
                Rational d = gdof(g);
                BoundSet bs = gdof_upper_bounds(g);
                if (bs.binding_value != d) {
                    fails.push_back("alpha=" + g.alpha.str() + " beta=" + g.beta.str() +
                                    " gamma=" + g.gamma.str() + " gdof=" + d.str() +
                                    " binding=" + bs.binding + "=" + bs.binding_value.str());
                    if (fails.size() > 20) {
                        if (count) *count = n;
                        return fails;
                    }
                }
            }
        }
    }
    if (count) *count = n;
    return fails;
}

}  // namespace irc
