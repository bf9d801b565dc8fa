// Command-line front end: single-point queries, verification sweeps, GDoF
// curve emission and reproducible scheme simulations. Human-readable reports
// go to stderr, machine-readable CSV/JSON to stdout.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "irc/capacity.hpp"
#include "irc/curve.hpp"
#include "irc/gaussian.hpp"
#include "irc/gdof.hpp"
#include "irc/rate_opt.hpp"
#include "irc/schemes.hpp"
#include "irc/simulate.hpp"
#include "irc/verify.hpp"

using namespace irc;

namespace {

std::string bounds_json(const BoundSet& bs) {
    std::string s = "[";
    for (size_t i = 0; i < bs.entries.size(); ++i) {
        const auto& e = bs.entries[i];
        if (i) s += ",";
        s += "{\"label\":\"" + e.label + "\",\"value\":\"" + e.value.str() +
             "\",\"applicable\":" + (e.applicable ? "true" : "false") + "}";
    }
    return s + "]";
}

void print_bounds_table(std::ostream& os, const BoundSet& bs) {
    for (const auto& e : bs.entries) {
        os << "  bound " << e.label << " = " << e.value.str()
           << (e.applicable ? "" : "   (not applicable)")
           << (e.applicable && e.label == bs.binding ? "   <- binding" : "") << "\n";
    }
}

int cmd_capacity(const LdParams& p, bool bounds_only) {
    const BoundSet bs = ld_upper_bounds(p);
    std::cerr << "channel " << p.str() << "\n";
    print_bounds_table(std::cerr, bs);
    std::string scheme = "-";
    long long cap = ld_sum_capacity(p);
    if (p.n_c < p.n_s) {
        SchemeChoice ch = classify_regime(p);
        scheme = ch.str();
        std::cerr << "scheme: " << scheme << "\n";
    }
    std::cerr << "sum capacity: " << cap << "\n";
    if (bounds_only) {
        std::cout << "{\"bounds\":" << bounds_json(bs) << ",\"binding\":\"" << bs.binding
                  << "\"}\n";
    } else {
        std::cout << "{\"capacity\":" << cap << ",\"binding\":\"" << bs.binding
                  << "\",\"scheme\":\"" << scheme << "\",\"bounds\":" << bounds_json(bs)
                  << "}\n";
    }
    return 0;
}

int cmd_gdof(const GdofParams& g) {
    Rational d = gdof(g);
    Rational ic = gdof_ic(g.alpha);
    BoundSet bs = gdof_upper_bounds(g);
    std::cerr << "alpha=" << g.alpha.str() << " beta=" << g.beta.str()
              << " gamma=" << g.gamma.str() << "\n";
    print_bounds_table(std::cerr, bs);
    std::cerr << "gdof: " << d.str() << "   (plain interference channel: " << ic.str()
              << ")\n";
    std::cout << "{\"gdof\":\"" << d.str() << "\",\"ic\":\"" << ic.str()
              << "\",\"binding\":\"" << bs.binding << "\",\"bounds\":" << bounds_json(bs)
              << "}\n";
    return 0;
}

int cmd_simulate(const LdParams& p, const std::string& scheme_arg, int n, uint64_t seed,
                 const std::string& trace_path) {
    SchemeChoice ch = classify_regime(p);
    if (!scheme_arg.empty()) {
        auto want = scheme_from_string(scheme_arg);
        if (!want) {
            std::cerr << "unknown scheme '" << scheme_arg << "'\n";
            return 2;
        }
        bool same = *want == ch.scheme ||
                    (*want == SchemeId::WI3a && ch.scheme == SchemeId::WI3b);
        if (!same) {
            std::cerr << "scheme " << scheme_arg << " not applicable to " << p.str()
                      << " (expected " << to_string(ch.scheme) << ")\n";
            return 2;
        }
    }
    RateAllocation a = allocate(ch, p);
    std::cerr << "scheme " << ch.str() << ", scale " << a.scale << "\n";
    for (auto& [k, v] : a.rates)
        if (!(v == Rational(0))) std::cerr << "  rate " << k << " = " << v.str() << "\n";
    for (auto& [k, v] : a.paddings)
        if (!(v == Rational(0))) std::cerr << "  padding " << k << " = " << v.str() << "\n";
    auto [tr, out] = simulate(ch, p, a, n, seed);
    if (!trace_path.empty()) {
        std::ofstream f(trace_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << trace_path << "\n";
            return 3;
        }
        f << tr.dump();
    }
    long long cap = ld_sum_capacity(p);
    if (out.success) {
        Rational rate = achieved_rate(out, n);
        std::cerr << "success: delivered " << out.delivered_total() << " bits over " << n
                  << " uses (scale " << out.scale << ")\n";
        std::cerr << "achieved " << rate.str() << " bits/use, asymptotic "
                  << scheme_sum_rate(ch, p) << "\n";
        std::cout << "{\"success\":true,\"delivered\":" << out.delivered_total()
                  << ",\"achieved\":\"" << rate.str() << "\",\"asymptotic\":" << cap
                  << ",\"scale\":" << out.scale << "}\n";
        return 0;
    }
    std::cerr << "decode failure";
    if (out.violated_step)
        std::cerr << " at k=" << out.violated_step->channel_use << " step "
                  << out.violated_step->step << ": expected " << out.violated_step->expected
                  << ", observed " << out.violated_step->observed;
    std::cerr << "\n";
    std::cout << "{\"success\":false}\n";
    return 1;
}

int cmd_subchannels(double P, double hd, double hc, double hr, double hs, int N) {
    SubchannelPlan plan = plan_subchannels(P, hd, hc, hr, hs, N);
    std::cerr << "delta = " << plan.delta << (plan.usable ? "" : "   (unusable: delta <= 4)")
              << "\n"
              << "N_d=" << plan.N_d << " N_c=" << plan.N_c << " N_r=" << plan.N_r
              << " N_s=" << plan.N_s << "\n"
              << "R_s = " << plan.R_s << " bits"
              << (plan.R_s_exact ? " (exact " + plan.R_s_exact->str() + ")" : "") << "\n";
    if (plan.alignment_l)
        std::cerr << "cross-link ladder alignment at l = " << *plan.alignment_l << "\n";
    std::cout << "{\"delta\":" << plan.delta << ",\"usable\":"
              << (plan.usable ? "true" : "false") << ",\"N_d\":" << plan.N_d
              << ",\"N_c\":" << plan.N_c << ",\"N_r\":" << plan.N_r
              << ",\"N_s\":" << plan.N_s << ",\"R_s\":" << plan.R_s << "}\n";
    return 0;
}

int cmd_golden(const std::string& dir) {
    const std::pair<const char*, const char*> configs[] = {
        {"1/10", "7/10"}, {"2/5", "7/10"}, {"7/10", "7/10"}, {"3/2", "7/10"},
        {"1/5", "3"},     {"3/2", "3"},   {"2", "3"},        {"6", "3"},
    };
    for (auto& [b, g] : configs) {
        CurveSpec spec;
        spec.beta = parse_rational(b);
        spec.gamma = parse_rational(g);
        spec.alpha_min = Rational(0);
        spec.alpha_max = spec.gamma > Rational(1) ? Rational(4) : Rational(2);
        spec.step = Rational(1, 20);
        char name[128];
        std::snprintf(name, sizeof name, "curve_beta_%s_gamma_%s.csv", b, g);
        for (char* c = name; *c; ++c)
            if (*c == '/') *c = '-';
        std::ofstream f(dir + "/" + name, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << dir << "/" << name << "\n";
            return 3;
        }
        write_curve_csv(f, spec);
        std::cerr << "wrote " << dir << "/" << name << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact desk-scale laboratory for the symmetric LD interference relay "
                 "channel"};
    app.require_subcommand(1);

    LdParams p;
    auto add_levels = [&](CLI::App* c) {
        c->add_option("--nd", p.n_d, "desired-link level")->required();
        c->add_option("--nc", p.n_c, "cross-link level")->required();
        c->add_option("--nr", p.n_r, "relay-destination level")->required();
        c->add_option("--ns", p.n_s, "source-relay level")->required();
    };

    auto* cap = app.add_subcommand("capacity", "sum capacity, bounds and scheme");
    add_levels(cap);

    auto* bnd = app.add_subcommand("bounds", "upper bounds only");
    add_levels(bnd);

    std::string alpha_s, beta_s, gamma_s;
    auto* gd = app.add_subcommand("gdof", "GDoF at one exponent triple");
    gd->add_option("--alpha", alpha_s)->required();
    gd->add_option("--beta", beta_s)->required();
    gd->add_option("--gamma", gamma_s)->required();

    std::string amin_s = "0", amax_s = "3", step_s = "1/20", out_path;
    bool no_ic = false;
    auto* cv = app.add_subcommand("curve", "GDoF-vs-alpha CSV");
    cv->add_option("--beta", beta_s)->required();
    cv->add_option("--gamma", gamma_s)->required();
    cv->add_option("--alpha-min", amin_s);
    cv->add_option("--alpha-max", amax_s);
    cv->add_option("--step", step_s);
    cv->add_flag("--no-ic", no_ic);
    cv->add_option("--out", out_path, "write CSV here instead of stdout");

    SweepSpec spec;
    int max_level = 8;
    std::string checks_csv = "sandwich,tables,simulate";
    auto* vf = app.add_subcommand("verify", "exhaustive verification sweep");
    vf->add_option("--max", max_level, "inclusive upper level for all four links");
    vf->add_option("--checks", checks_csv, "subset of sandwich,tables,simulate,optimize");
    vf->add_option("--workers", spec.workers);
    vf->add_option("--blocks", spec.sim_blocks);

    std::string scheme_arg, trace_path;
    int sim_n = 10;
    uint64_t seed = 1;
    auto* sm = app.add_subcommand("simulate", "bit-level scheme simulation");
    add_levels(sm);
    sm->add_option("--scheme", scheme_arg, "WI1|WI2|WI3a|WI3b|SI|II (default: classify)");
    sm->add_option("-n,--blocks", sim_n);
    sm->add_option("--seed", seed);
    sm->add_option("--dump-trace", trace_path);

    double P = 0, hd = 1, hc = 1, hr = 1, hs = 1;
    int subN = 1;
    auto* sc = app.add_subcommand("subchannels", "Gaussian sub-channel ledger");
    sc->add_option("--power", P)->required();
    sc->add_option("--hd", hd);
    sc->add_option("--hc", hc);
    sc->add_option("--hr", hr);
    sc->add_option("--hs", hs);
    sc->add_option("-N,--count", subN)->required();

    std::string golden_dir;
    auto* gl = app.add_subcommand("golden", "regenerate golden curve CSVs");
    gl->add_option("--out-dir", golden_dir)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cap->parsed()) return cmd_capacity(p, false);
        if (bnd->parsed()) return cmd_capacity(p, true);
        if (gd->parsed())
            return cmd_gdof({parse_rational(alpha_s), parse_rational(beta_s),
                             parse_rational(gamma_s)});
        if (cv->parsed()) {
            CurveSpec c;
            c.beta = parse_rational(beta_s);
            c.gamma = parse_rational(gamma_s);
            c.alpha_min = parse_rational(amin_s);
            c.alpha_max = parse_rational(amax_s);
            c.step = parse_rational(step_s);
            c.include_ic = !no_ic;
            if (out_path.empty()) {
                write_curve_csv(std::cout, c);
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) {
                    std::cerr << "cannot open " << out_path << "\n";
                    return 3;
                }
                write_curve_csv(f, c);
            }
            return 0;
        }
        if (vf->parsed()) {
            spec.nd_max = spec.nc_max = spec.nr_max = spec.ns_max = max_level;
            spec.checks.clear();
            std::string cur;
            for (char ch : checks_csv + ",") {
                if (ch == ',') {
                    if (!cur.empty()) spec.checks.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(ch);
                }
            }
            VerifyReport rep = run_verify(spec);
            for (auto& c : rep.checks) {
                std::cerr << c.name << ": " << c.tuples << " tuples, "
                          << c.failures.size() << " failures\n";
                for (size_t i = 0; i < c.failures.size() && i < 10; ++i)
                    std::cerr << "  " << c.failures[i] << "\n";
            }
            std::cerr << "elapsed " << rep.elapsed_ms << " ms\n";
            std::cout << rep.to_json() << "\n";
            return rep.ok() ? 0 : 1;
        }
        if (sm->parsed()) return cmd_simulate(p, scheme_arg, sim_n, seed, trace_path);
        if (sc->parsed()) return cmd_subchannels(P, hd, hc, hr, hs, subN);
        if (gl->parsed()) return cmd_golden(golden_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
