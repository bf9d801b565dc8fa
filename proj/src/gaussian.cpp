#include "irc/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "irc/capacity.hpp"

namespace irc {

namespace {

// exponent e with x == 2^e, when x is an exact power of two
std::optional<long long> pow2_exponent(double x) {
    if (!(x > 0) || !std::isfinite(x)) return std::nullopt;
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
    if (m != 0.5) return std::nullopt;
    return e - 1;
}

}  // namespace

SubchannelPlan plan_subchannels(double P, double h_d, double h_c, double h_r, double h_s,
                                int N) {
    if (N < 1) throw std::invalid_argument("plan_subchannels: N must be >= 1");
    if (!(P > 0) || !(h_d > 0) || !(h_c > 0) || !(h_r > 0) || !(h_s > 0))
        throw std::invalid_argument("plan_subchannels: P and gains must be positive");
    const double hd2 = h_d * h_d, hc2 = h_c * h_c, hr2 = h_r * h_r, hs2 = h_s * h_s;
    const double hmin2 = std::min(std::min(hd2, hc2), std::min(hr2, hs2));
    if (!(P * hmin2 > 1.0))
        throw std::invalid_argument("plan_subchannels: interference-limited condition "
                                    "P*min(h^2) > 1 violated");

    SubchannelPlan plan;
    plan.P = P;
    plan.h_d = h_d;
    plan.h_c = h_c;
    plan.h_r = h_r;
    plan.h_s = h_s;
    plan.N = N;
    plan.delta = std::pow(P, 1.0 / N);

    auto eP = pow2_exponent(P);
    auto ed = pow2_exponent(hd2), ec = pow2_exponent(hc2);
    auto er = pow2_exponent(hr2), es = pow2_exponent(hs2);
    plan.exact = eP && ed && ec && er && es && *eP > 0;

    auto count = [&](double h2, std::optional<long long> eh) -> long long {
        if (plan.exact) {
            // N_x = floor(N * (eP + eh) / eP) exactly
            long long num = N * (*eP + *eh);
            long long q = num / *eP;
            if (num % *eP != 0 && num < 0) --q;
            return q;
        }
        return static_cast<long long>(std::floor(std::log2(P * h2) / (std::log2(P) / N)));
    };
    plan.N_d = count(hd2, ed);
    plan.N_c = count(hc2, ec);
    plan.N_r = count(hr2, er);
    plan.N_s = count(hs2, es);

    if (plan.exact) {
        // R_s = (1/2) log2(delta/4) = (eP/N - 2)/2
        plan.R_s_exact = Rational(*eP - 2LL * N, 2LL * N);
        plan.R_s = plan.R_s_exact->to_double();
        // alignment: P*hc^2 == hd^2 * delta^l  <=>  l = N*(eP + ec - ed)/eP
        long long num = N * (*eP + *ec - *ed);
        if (num % *eP == 0) plan.alignment_l = num / *eP;
    } else {
        plan.R_s = 0.5 * std::log2(plan.delta / 4.0);
    }
    plan.usable = plan.R_s > 0.0;
    return plan;
}

Rational gdof_limit(long long k_d, long long k_c, long long k_r, long long k_s,
                    const GdofParams& g) {
    g.validate();
    return Rational(k_d) + Rational(k_c) * g.alpha + Rational(k_r) * g.beta +
           Rational(k_s) * g.gamma;
}

ScalingCheck gdof_achievable_check(const GdofParams& g, long long N) {
    g.validate();
    if (N < 1) throw std::invalid_argument("gdof_achievable_check: N must be >= 1");
    if (N % g.alpha.den() != 0 || N % g.beta.den() != 0 || N % g.gamma.den() != 0)
        throw std::invalid_argument(
            "gdof_achievable_check: N must be a multiple of the exponent denominators");
    ScalingCheck out;
    out.ld_capacity = ld_sum_capacity(scale_to_ld(g, N));
    out.n_times_gdof = Rational(N) * gdof(g);
    out.equal = Rational(out.ld_capacity) == out.n_times_gdof;
    return out;
}

}  // namespace irc
