#pragma once

#include <optional>

#include "irc/gdof.hpp"
#include "irc/rational.hpp"

namespace irc {

// Ledger of the sub-channel decomposition of a Gaussian instance.
struct SubchannelPlan {
    double P = 0;
    double h_d = 0, h_c = 0, h_r = 0, h_s = 0;
    int N = 0;

    double delta = 0;           // P^(1/N)
    long long N_d = 0, N_c = 0, N_r = 0, N_s = 0;
    double R_s = 0;             // bits per sub-channel, (1/2) log2(delta/4)
    bool usable = true;         // false when delta <= 4 (R_s <= 0)

    // exact values when P and the squared gains are powers of two
    bool exact = false;
    std::optional<Rational> R_s_exact;

    // whether an integer l with P*h_c^2 == h_d^2 * delta^l exists (alignment
    // of the cross link on the sub-channel ladder); only known when exact
    std::optional<long long> alignment_l;
};

// Derives all sub-channel counts. Requires the interference-limited condition
// P * min(h^2) > 1; N >= 1. Floors of logs are re-derived in exact integer
// arithmetic whenever P and all squared gains are powers of two.
SubchannelPlan plan_subchannels(double P, double h_d, double h_c, double h_r, double h_s,
                                int N);

// k_d + k_c*alpha + k_r*beta + k_s*gamma
Rational gdof_limit(long long k_d, long long k_c, long long k_r, long long k_s,
                    const GdofParams& g);

struct ScalingCheck {
    long long ld_capacity = 0;  // sum capacity at scale N
    Rational n_times_gdof;      // N * gdof(g)
    bool equal = false;
};

// Exact comparison of the integer-scaled capacity against N * gdof(g).
// N must be a multiple of the three denominators.
ScalingCheck gdof_achievable_check(const GdofParams& g, long long N);

}  // namespace irc
