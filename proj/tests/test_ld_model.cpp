#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "irc/ld_model.hpp"

using namespace irc;

namespace {

// Independent oracle: apply the q x q down-shift matrix literally.
BitWord shift_by_matrix(const BitWord& v, int s) {
    const int q = v.size();
    // build S^s entrywise: (S^s)[i][j] = 1 iff i == j + s
    BitWord out(q);
    for (int i = 0; i < q; ++i) {
        int acc = 0;
        for (int j = 0; j < q; ++j)
            if (i == j + s) acc ^= v[j];
        out[i] = static_cast<uint8_t>(acc);
    }
    return out;
}

BitWord random_word(int q, std::mt19937_64& rng) {
    BitWord w(q);
    for (int i = 0; i < q; ++i) w[i] = rng() & 1;
    return w;
}

}  // namespace

TEST_CASE("shift_down basics") {
    BitWord v{1, 0, 1, 1};
    CHECK(shift_down(v, 0) == v);
    CHECK(shift_down(v, 4) == BitWord{0, 0, 0, 0});
    CHECK(shift_down(v, 9) == BitWord{0, 0, 0, 0});
    CHECK(shift_down(v, 2) == BitWord{0, 0, 1, 0});
    // oracle agreement on random words
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int q = 1 + int(rng() % 9);
        int s = int(rng() % (q + 3));
        BitWord w = random_word(q, rng);
        CHECK(shift_down(w, s) == shift_by_matrix(w, s));
    }
}

TEST_CASE("shift composition") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        int q = 1 + int(rng() % 8);
        BitWord w = random_word(q, rng);
        int s = int(rng() % 5), t = int(rng() % 5);
        CHECK(shift_down(shift_down(w, s), t) == shift_down(w, s + t));
    }
}

TEST_CASE("relay_output") {
    LdParams p{2, 1, 1, 2};  // q = 2
    BitWord a{1, 0}, b{1, 0};
    CHECK(relay_output(p, a, b).all_zero());  // x1 == x2 cancels

    LdParams off{3, 1, 2, 0};
    CHECK(relay_output(off, BitWord{1, 1, 1}, BitWord{0, 1, 0}).all_zero());  // link absent

    LdParams p3{2, 1, 1, 2};
    (void)p3;
    LdParams ex{3, 1, 1, 2};  // q = 3, n_s = 2
    CHECK(relay_output(ex, BitWord{1, 1, 0}, BitWord{0, 1, 1}) == BitWord{0, 1, 0});

    CHECK_THROWS_AS(relay_output(ex, BitWord{1, 1}, BitWord{0, 1, 1}), std::invalid_argument);
}

TEST_CASE("rx_output") {
    // symmetric cancellation at n_c == n_d
    LdParams s{2, 2, 1, 3};
    BitWord x{1, 0, 1};
    CHECK(rx_output(s, 1, x, x, BitWord(3)).all_zero());
    CHECK(rx_output(s, 2, x, x, BitWord(3)).all_zero());

    // interference-free point-to-point when n_c == 0 and the relay is silent
    LdParams p2p{2, 0, 1, 3};
    BitWord a{1, 1, 0}, b{0, 1, 1};
    CHECK(rx_output(p2p, 1, a, b, BitWord(3)) == shift_down(a, 1));

    // direct evaluation of the receive map (hand-applied shift matrices)
    LdParams ex{3, 1, 2, 1};
    BitWord x1{1, 0, 1}, x2{1, 1, 0}, xr{0, 1, 0};
    BitWord want = shift_by_matrix(x1, 0) ^ shift_by_matrix(x2, 2) ^ shift_by_matrix(xr, 1);
    CHECK(rx_output(ex, 1, x1, x2, xr) == want);
    CHECK(want == BitWord{1, 0, 1});

    CHECK_THROWS_AS(rx_output(ex, 3, x1, x2, xr), std::invalid_argument);
    CHECK_THROWS_AS(rx_output(ex, 1, BitWord{1}, x2, xr), std::invalid_argument);
}

TEST_CASE("linearity and symmetry") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
        LdParams p{int(rng() % 5), int(rng() % 5), int(rng() % 5), int(rng() % 5)};
        int q = p.q();
        if (q == 0) continue;
        BitWord a = random_word(q, rng), a2 = random_word(q, rng);
        BitWord b = random_word(q, rng), b2 = random_word(q, rng);
        BitWord c = random_word(q, rng), c2 = random_word(q, rng);
        for (int j : {1, 2}) {
            CHECK(rx_output(p, j, a ^ a2, b ^ b2, c ^ c2) ==
                  (rx_output(p, j, a, b, c) ^ rx_output(p, j, a2, b2, c2)));
        }
        CHECK(relay_output(p, a ^ a2, b ^ b2) ==
              (relay_output(p, a, b) ^ relay_output(p, a2, b2)));
        // swapping the transmitters swaps the receivers and fixes the relay
        CHECK(rx_output(p, 1, b, a, c) == rx_output(p, 2, a, b, c));
        CHECK(relay_output(p, b, a) == relay_output(p, a, b));
    }
}

TEST_CASE("q = 0 gives empty words") {
    LdParams z{0, 0, 0, 0};
    BitWord e(0);
    CHECK(relay_output(z, e, e).size() == 0);
    CHECK(rx_output(z, 1, e, e, e).size() == 0);
}

TEST_CASE("regime classifier is total and exclusive") {
    for (int nd = 0; nd <= 4; ++nd)
        for (int nc = 0; nc <= 4; ++nc)
            for (int nr = 0; nr <= 4; ++nr)
                for (int ns = 0; ns <= 4; ++ns) {
                    LdParams p{nd, nc, nr, ns};
                    Regime r = regime_of(p);
                    int matches = 0;
                    if (ns <= nc) matches += (r == Regime::WeakerSource);
                    if (nc < ns && nc < nd) matches += (r == Regime::StrongerWI);
                    if (nc < ns && nd < nc) matches += (r == Regime::StrongerSI);
                    if (nc < ns && nc == nd) matches += (r == Regime::StrongerII);
                    CHECK(matches == 1);
                }
}
