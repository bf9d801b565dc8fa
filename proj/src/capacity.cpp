#include "irc/capacity.hpp"

#include <algorithm>
#include <cassert>

namespace irc {

namespace {

long long pos(long long x) { return x > 0 ? x : 0; }

long long max3(long long a, long long b, long long c) { return std::max(a, std::max(b, c)); }

// 6-term min for the weaker source-relay channel regime (n_s <= n_c)
long long cap_weaker_source(long long nd, long long nc, long long nr, long long ns) {
    long long t1 = 2 * std::max(nd, nr);
    long long t2 = 2 * std::max(nd, ns);
    long long t3 = max3(nd, nc, nr) + std::max(nd, nc) - nc;
    long long t4 = 2 * std::max(nd, nc) - nc + ns;
    long long t5 = 2 * max3(nc, nr, nd - nc);
    long long t6 = 2 * std::max(nc, nd + ns - nc);
    return std::min({t1, t2, t3, t4, t5, t6});
}

// 6-term min for the stronger source-relay channel regime (n_s > n_c, n_c != n_d)
long long cap_stronger_source(long long nd, long long nc, long long nr, long long ns) {
    long long t1 = 2 * std::max(nd, nr);
    long long t2 = max3(nd, nc, nr) + std::max(nd, nc) - pos(nc - pos(ns - std::max(nd, nc)));
    long long t3 = nr + 2 * std::max(nd, nc) - nc;
    long long t4 = 2 * max3(ns, nr + ns - nc, nd - nc);
    long long t5 = std::max(nd, nc) + std::max(nd, ns);
    long long t6 = 2 * std::max(nc, nr + pos(nd - nc));
    return std::min({t1, t2, t3, t4, t5, t6});
}

}  // namespace

long long ld_sum_capacity(const LdParams& p) {
    p.validate();
    long long nd = p.n_d, nc = p.n_c, nr = p.n_r, ns = p.n_s;
    // The n_c == n_d expression takes precedence for every n_s: on that line
    // both receivers observe functions of the same sum process, which caps the
    // sum rate at max{n_d, min{n_r, n_s}} regardless of how strong the
    // source-relay link is. The weaker-source 6-term form overshoots there
    // (it exceeds the cut-set value when n_r > n_d = n_c >= n_s), and the
    // capacity would otherwise fail to be monotone in n_s.
    if (nc == nd) return std::max(nd, std::min(nr, ns));
    if (ns <= nc) return cap_weaker_source(nd, nc, nr, ns);
    return cap_stronger_source(nd, nc, nr, ns);
}

BoundSet ld_upper_bounds(const LdParams& p) {
    p.validate();
    long long nd = p.n_d, nc = p.n_c, nr = p.n_r, ns = p.n_s;
    BoundSet bs;
    bs.entries = {
        {"16", Rational(std::max(nd, std::min(nr, ns))), nc == nd},
        {"17", Rational(max3(nd, nc, nr) + std::max(nd, nc)), true},
        {"18", Rational(nr + 2 * std::max(nd, nc) - nc), true},
        {"19", Rational(std::max(nd, nc) + std::max(nd, ns)), true},
        {"20", Rational(2 * max3(nc, nr, nd - std::max(nc, ns)) + 2 * pos(ns - nc)), true},
        {"21", Rational(2 * std::max(nc, nr + pos(nd - nc))), true},
        {"22", Rational(2 * std::max(nd, nr)), true},
        {"23", Rational(max3(nd, nr, nc) + std::max(nd, nc) - nc + pos(ns - std::max(nd, nc))),
         true},
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

}  // namespace irc
