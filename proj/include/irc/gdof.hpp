#pragma once

#include "irc/capacity.hpp"
#include "irc/ld_model.hpp"
#include "irc/rational.hpp"

namespace irc {

// Normalized channel exponents: alpha = m_c/m_d, beta = m_r/m_d, gamma = m_s/m_d.
struct GdofParams {
    Rational alpha, beta, gamma;

    void validate() const {
        if (alpha < Rational(0) || beta < Rational(0) || gamma < Rational(0))
            throw std::invalid_argument("GDoF exponents must be non-negative");
    }

    friend bool operator==(const GdofParams&, const GdofParams&) = default;
};

// GDoF of the symmetric IRC. Total over all non-negative (alpha, beta, gamma);
// the gamma <= alpha side evaluates the weaker-source capacity expression
// under the substitution (n_d, n_c, n_r, n_s) -> (1, alpha, beta, gamma).
Rational gdof(const GdofParams& g);

// GDoF of the plain interference channel (no relay).
Rational gdof_ic(const Rational& alpha);

// All eight GDoF upper bounds; "29" applies only at alpha == 1 and "34" only
// when beta <= alpha <= 1.
BoundSet gdof_upper_bounds(const GdofParams& g);

// Integer LD instance (N, floor(alpha N), floor(beta N), floor(gamma N)).
LdParams scale_to_ld(const GdofParams& g, long long N);

}  // namespace irc
