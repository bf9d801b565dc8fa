#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irc/capacity.hpp"

using namespace irc;

TEST_CASE("sum capacity, stronger source-relay side") {
    CHECK(ld_sum_capacity({3, 3, 5, 4}) == 4);  // n_c == n_d branch
    // six terms at (4,2,3,5): {8, 7, 9, 12, 9, 10}
    CHECK(ld_sum_capacity({4, 2, 3, 5}) == 7);
    // relay off: matches the plain interference channel value 2*max{nd-nc, nc}
    CHECK(ld_sum_capacity({2, 1, 0, 3}) == 2);
    CHECK(2 * std::max(2 - 1, 1) == 2);
}

TEST_CASE("sum capacity, weaker source-relay side") {
    // term-by-term: (2,2,2,2) -> {4,4,2,4,4,4} and (3,2,0,1) -> {6,6,4,5,4,4}
    CHECK(ld_sum_capacity({2, 2, 2, 2}) == 2);
    CHECK(ld_sum_capacity({3, 2, 0, 1}) == 4);
}

TEST_CASE("upper bounds and binding") {
    BoundSet b1 = ld_upper_bounds({4, 2, 3, 5});
    CHECK(b1.find("18")->value == Rational(9));
    CHECK(b1.find("23")->value == Rational(7));
    CHECK(b1.find("16")->applicable == false);
    CHECK(b1.binding == "23");
    CHECK(b1.binding_value == Rational(7));

    BoundSet b2 = ld_upper_bounds({3, 3, 5, 4});
    CHECK(b2.find("16")->applicable == true);
    CHECK(b2.find("16")->value == Rational(4));
    CHECK(b2.binding == "16");

    // bound 21 is the unconditional replacement 2*max{nc, nr + (nd-nc)^+}
    BoundSet b3 = ld_upper_bounds({2, 5, 1, 6});
    CHECK(b3.find("21")->value == Rational(2 * std::max(5, 1 + 0)));
}

TEST_CASE("sandwich on the stronger-source region") {
    for (int nd = 0; nd <= 6; ++nd)
        for (int nc = 0; nc <= 6; ++nc)
            for (int nr = 0; nr <= 6; ++nr)
                for (int ns = nc + 1; ns <= 6; ++ns) {
                    LdParams p{nd, nc, nr, ns};
                    CHECK(ld_upper_bounds(p).binding_value == Rational(ld_sum_capacity(p)));
                }
}

TEST_CASE("discontinuity at n_c == n_d") {
    // nd=4, nr=ns=6: capacity jumps by more than one bit across n_c = n_d
    long long below = ld_sum_capacity({4, 3, 6, 6});
    long long at = ld_sum_capacity({4, 4, 6, 6});
    long long above = ld_sum_capacity({4, 5, 6, 6});
    CHECK(below == 9);
    CHECK(at == 6);
    CHECK(above == 7);
    CHECK(below - at > 1);
}

TEST_CASE("monotone in n_s on the sweep grid") {
    for (int nd = 0; nd <= 6; ++nd)
        for (int nc = 0; nc <= 6; ++nc)
            for (int nr = 0; nr <= 6; ++nr) {
                long long prev = -1;
                for (int ns = 0; ns <= 8; ++ns) {
                    long long c = ld_sum_capacity({nd, nc, nr, ns});
                    CHECK(c >= prev);
                    prev = c;
                }
            }
}
