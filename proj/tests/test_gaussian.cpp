#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "irc/gaussian.hpp"

using namespace irc;

TEST_CASE("sub-channel ledger") {
    // P = 2^20, h_s^2 = 2^-4 (h_s = 2^-2), N = 5 -> delta = 2^4, N_s = 4, R_s = 1
    SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, 20), 1, 1, 1, 0.25, 5);
    CHECK(plan.exact);
    CHECK(plan.N_d == 5);
    CHECK(plan.N_c == 5);
    CHECK(plan.N_r == 5);
    CHECK(plan.N_s == 4);
    CHECK(plan.R_s == 1.0);
    REQUIRE(plan.R_s_exact.has_value());
    CHECK(*plan.R_s_exact == Rational(1));
    CHECK(plan.usable);
}

TEST_CASE("unit gains fill all sub-channels") {
    SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, 12), 1, 1, 1, 1, 7);
    CHECK(plan.N_d == 7);
    CHECK(plan.N_s == 7);
}

TEST_CASE("small delta is flagged") {
    SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, 20), 1, 1, 1, 0.25, 16);
    CHECK_FALSE(plan.usable);
    CHECK(plan.R_s < 0.0);
}

TEST_CASE("interference-limited precondition") {
    CHECK_THROWS_AS(plan_subchannels(4.0, 0.25, 1, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(plan_subchannels(16.0, 1, 1, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("sub-channel counts are monotone") {
    double P = std::ldexp(1.0, 24);
    long long prev = -1;
    for (int e = -6; e <= 0; ++e) {
        SubchannelPlan plan = plan_subchannels(P, 1, 1, 1, std::ldexp(1.0, e), 6);
        CHECK(plan.N_s >= prev);
        prev = plan.N_s;
    }
    // and in P
    prev = -1;
    for (int e = 10; e <= 30; e += 5) {
        SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, e), 1, 1, 1, 0.25, 5);
        CHECK(plan.N_s >= prev);
        prev = plan.N_s;
    }
}

TEST_CASE("N * R_s identity") {
    // N * R_s = (1/2) log2(P / 4^N) exactly on power-of-two inputs
    for (int a = 12; a <= 40; a += 7)
        for (int N = 2; N <= 5; ++N) {
            SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, a), 1, 1, 1, 1, N);
            REQUIRE(plan.R_s_exact.has_value());
            CHECK(Rational(N) * *plan.R_s_exact == Rational(a - 2 * N, 2));
        }
}

TEST_CASE("alignment ladder report") {
    // P*h_c^2 = h_d^2 * delta^l solvable: P=2^20, h_c=1, h_d=1, N=5 -> l = 5
    SubchannelPlan plan = plan_subchannels(std::ldexp(1.0, 20), 1, 1, 1, 0.5, 5);
    REQUIRE(plan.alignment_l.has_value());
    CHECK(*plan.alignment_l == 5);
    // misaligned case: exponent not a multiple of delta's
    SubchannelPlan plan2 = plan_subchannels(std::ldexp(1.0, 20), 1, 0.5, 1, 1, 8);
    CHECK_FALSE(plan2.alignment_l.has_value());
}
