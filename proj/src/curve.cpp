#include "irc/curve.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "irc/gdof.hpp"

namespace irc {

namespace {

std::string fmt12(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
    return buf;
}

}  // namespace

void write_curve_csv(std::ostream& os, const CurveSpec& spec) {
    if (!(spec.step > Rational(0))) throw std::invalid_argument("curve: step must be > 0");
    os << "alpha,d_irc,d_ic,binding\n";
    for (Rational a = spec.alpha_min; a <= spec.alpha_max; a += spec.step) {
        GdofParams g{a, spec.beta, spec.gamma};
        Rational d = gdof(g);
        BoundSet bs = gdof_upper_bounds(g);
        os << fmt12(a) << ',' << fmt12(d) << ',';
        if (spec.include_ic) os << fmt12(gdof_ic(a));
        os << ',' << bs.binding << '\n';
    }
}

}  // namespace irc
