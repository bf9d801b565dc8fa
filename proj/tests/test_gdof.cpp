#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irc/gaussian.hpp"
#include "irc/gdof.hpp"

using namespace irc;

namespace {
GdofParams g3(long long an, long long ad, long long bn, long long bd, long long cn,
              long long cd) {
    return {Rational(an, ad), Rational(bn, bd), Rational(cn, cd)};
}
}  // namespace

TEST_CASE("gdof closed form") {
    // six terms at (1/2, 1/10, 7/10): {2, 3/2, 8/5, 7/5, 2, 6/5}
    CHECK(gdof(g3(1, 2, 1, 10, 7, 10)) == Rational(6, 5));
    CHECK(gdof(g3(1, 1, 2, 1, 3, 1)) == Rational(2));      // alpha == 1 branch
    CHECK(gdof(g3(3, 2, 2, 1, 3, 1)) == Rational(7, 2));
    CHECK(gdof(g3(2, 1, 2, 1, 3, 1)) == Rational(3));      // decreases with alpha
}

TEST_CASE("gdof on the weaker source-relay side") {
    // gamma <= alpha with alpha != 1: substituted 6-term form, terms
    // {4, 2, 2, 2, 4, 3} at (3/2, 2, 1/2)
    CHECK(gdof(g3(3, 2, 2, 1, 1, 2)) == Rational(2));
    // no relay observation at all
    CHECK(gdof(g3(1, 2, 1, 1, 0, 1)) == gdof_ic(Rational(1, 2)));
    // equal links dominate both sides of the seam
    CHECK(gdof(g3(1, 1, 2, 1, 1, 2)) == Rational(1));
    CHECK(gdof(g3(1, 1, 2, 1, 3, 2)) == Rational(3, 2));
}

TEST_CASE("interference channel gdof") {
    CHECK(gdof_ic(Rational(0)) == Rational(2));
    CHECK(gdof_ic(Rational(1)) == Rational(1));
    CHECK(gdof_ic(Rational(1, 2)) == Rational(1));
    CHECK(gdof_ic(Rational(2, 3)) == Rational(4, 3));
    CHECK(gdof_ic(Rational(3, 2)) == Rational(3, 2));
    CHECK(gdof_ic(Rational(5, 2)) == Rational(2));
}

TEST_CASE("gdof upper bounds") {
    BoundSet b1 = gdof_upper_bounds(g3(3, 2, 2, 1, 3, 1));
    CHECK(b1.find("31")->value == Rational(7, 2));
    CHECK(b1.binding_value == Rational(7, 2));  // "30" ties "31" here
    CHECK(b1.find("29")->applicable == false);
    CHECK(b1.find("34")->applicable == false);

    BoundSet b2 = gdof_upper_bounds(g3(1, 2, 1, 10, 7, 10));
    CHECK(b2.find("34")->applicable == true);
    CHECK(b2.find("34")->value == Rational(6, 5));
    CHECK(b2.binding_value == Rational(6, 5));
}

TEST_CASE("absent relay reduces to the plain interference channel") {
    for (int k = 0; k <= 36; ++k) {
        GdofParams g{Rational(k, 12), Rational(0), Rational(0)};
        CHECK(gdof(g) == gdof_ic(g.alpha));
    }
}

TEST_CASE("relay never hurts, sampled grid") {
    for (int ka = 0; ka <= 24; ++ka)
        for (int kb = 0; kb <= 24; kb += 3)
            for (int kg = ka + 1; kg <= 30; kg += 3) {
                GdofParams g{Rational(ka, 12), Rational(kb, 12), Rational(kg, 12)};
                CHECK(gdof(g) >= gdof_ic(g.alpha));
            }
}

TEST_CASE("scale_to_ld") {
    CHECK(scale_to_ld(g3(1, 1, 1, 1, 1, 1), 5) == LdParams{5, 5, 5, 5});
    CHECK(scale_to_ld(g3(1, 2, 1, 10, 7, 10), 10) == LdParams{10, 5, 1, 7});
    // exact scaling matches N * gdof at a denominator multiple
    GdofParams g = g3(1, 2, 1, 10, 7, 10);
    CHECK(Rational(ld_sum_capacity(scale_to_ld(g, 10))) == Rational(10) * gdof(g));
}

TEST_CASE("scaling bridge checks") {
    auto r1 = gdof_achievable_check(g3(1, 2, 1, 10, 7, 10), 10);
    CHECK(r1.ld_capacity == 12);
    CHECK(r1.n_times_gdof == Rational(12));
    CHECK(r1.equal);
    auto r2 = gdof_achievable_check(g3(2, 1, 2, 1, 3, 1), 1);
    CHECK(r2.ld_capacity == 3);
    CHECK(r2.equal);
    auto r3 = gdof_achievable_check(g3(2, 1, 2, 1, 3, 1), 2);
    CHECK(r3.ld_capacity == 6);
    CHECK(r3.equal);
    auto r4 = gdof_achievable_check(g3(1, 1, 1, 1, 1, 1), 7);
    CHECK(r4.ld_capacity == 7);
    CHECK(r4.equal);
    CHECK_THROWS_AS(gdof_achievable_check(g3(1, 2, 1, 10, 7, 10), 5),
                    std::invalid_argument);
}

TEST_CASE("gdof limit is the linear combination") {
    GdofParams g = g3(1, 2, 1, 10, 7, 10);
    CHECK(gdof_limit(1, 0, 0, 0, g) == Rational(1));
    CHECK(gdof_limit(1, 0, 0, 1, g) == Rational(1) + g.gamma);
    CHECK(gdof_limit(0, -1, 1, 1, g) == Rational(3, 10));
}
