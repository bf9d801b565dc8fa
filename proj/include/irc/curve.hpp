#pragma once

#include <iosfwd>

#include "irc/rational.hpp"

namespace irc {

// One GDoF-vs-alpha curve: fixed (beta, gamma), alpha sweeping a rational grid.
struct CurveSpec {
    Rational beta, gamma;
    Rational alpha_min = Rational(0);
    Rational alpha_max = Rational(3);
    Rational step = Rational(1, 20);
    bool include_ic = true;
};

// CSV with header "alpha,d_irc,d_ic,binding", one row per grid point,
// 12-significant-digit decimal rendering, LF line endings.
void write_curve_csv(std::ostream& os, const CurveSpec& spec);

}  // namespace irc
