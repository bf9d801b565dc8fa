#include "irc/gdof.hpp"

#include <algorithm>

namespace irc {

namespace {

Rational rmax3(const Rational& a, const Rational& b, const Rational& c) {
    return rat_max(a, rat_max(b, c));
}

Rational min6(Rational t1, Rational t2, Rational t3, Rational t4, Rational t5, Rational t6) {
    return rat_min(rat_min(rat_min(t1, t2), rat_min(t3, t4)), rat_min(t5, t6));
}

}  // namespace

Rational gdof(const GdofParams& g) {
    g.validate();
    const Rational one(1);
    const Rational &a = g.alpha, &b = g.beta, &c = g.gamma;
    // alpha == 1 first, for every gamma (same precedence as in the LD sum
    // capacity: the equal-links expression caps both sides of the seam)
    if (a == one) return rat_max(one, rat_min(b, c));
    if (c > a) {
        return min6(Rational(2) * rat_max(one, b),
                    rmax3(one, a, b) + rat_max(one, a) - rat_pos(a - rat_pos(c - rat_max(one, a))),
                    b + Rational(2) * rat_max(one, a) - a,
                    Rational(2) * rmax3(c, b + c - a, one - a),
                    rat_max(one, a) + rat_max(one, c),
                    Rational(2) * rat_max(a, b + rat_pos(one - a)));
    }
    // gamma <= alpha: weaker-source expression at (1, alpha, beta, gamma)
    return min6(Rational(2) * rat_max(one, b),
                Rational(2) * rat_max(one, c),
                rmax3(one, a, b) + rat_max(one, a) - a,
                Rational(2) * rat_max(one, a) - a + c,
                Rational(2) * rmax3(a, b, one - a),
                Rational(2) * rat_max(a, one + c - a));
}

Rational gdof_ic(const Rational& alpha) {
    if (alpha < Rational(0)) throw std::invalid_argument("alpha must be non-negative");
    const Rational two(2);
    if (alpha <= Rational(1))
        return rat_min(rat_max(two - two * alpha, two * alpha), two - alpha);
    return rat_min(alpha, two);
}

BoundSet gdof_upper_bounds(const GdofParams& g) {
    g.validate();
    const Rational one(1), two(2);
    const Rational &a = g.alpha, &b = g.beta, &c = g.gamma;
    BoundSet bs;
    bs.entries = {
        {"29", rat_max(one, rat_min(b, c)), a == one},
        {"30", rmax3(one, a, b) + rat_max(one, a), true},
        {"31", b + two * rat_max(one, a) - a, true},
        {"32", rat_max(one, a) + rat_max(one, c), true},
        {"33", two * rmax3(a, b, one - rat_max(a, c)) + two * rat_pos(c - a), true},
        {"34", two * rat_max(a, b + one - a), b <= a && a <= one},
        {"35", two * rat_max(one, b), true},
        {"36", rmax3(one, b, a) + rat_max(one, a) - a + rat_pos(c - rat_max(one, a)), true},
    };
    bool first = true;
    for (auto& e : bs.entries) {
        if (!e.applicable) continue;
        if (first || e.value < bs.binding_value) {
            bs.binding = e.label;
            bs.binding_value = e.value;
            first = false;
        }
    }
    return bs;
}

LdParams scale_to_ld(const GdofParams& g, long long N) {
    g.validate();
    if (N < 1) throw std::invalid_argument("scale_to_ld: N must be >= 1");
    auto fl = [N](const Rational& x) {
        return static_cast<int>((x * Rational(N)).floor());
    };
    return LdParams{static_cast<int>(N), fl(g.alpha), fl(g.beta), fl(g.gamma)};
}

}  // namespace irc
