#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "irc/ld_model.hpp"
#include "irc/rational.hpp"
#include "irc/schemes.hpp"

namespace irc {

using Assignment = std::map<std::string, Rational>;

// One linear (in)equality with an activation guard, evaluated on the merged
// map of free and derived values.
struct Constraint {
    std::string tag;                                // names the violated condition
    std::function<bool(const Assignment&)> active;  // guard
    std::function<bool(const Assignment&)> holds;
};

struct ConstraintSet {
    SchemeId scheme;
    LdParams p;
    std::vector<std::string> variables;  // free variables (search space)
    std::vector<Constraint> constraints;
    // pinned/derived values (relay paddings, common-rate relations)
    std::function<Assignment(const Assignment&)> derive;
    std::function<Rational(const Assignment&)> objective;  // sum rate
};

// Faithful transcription of a scheme's feasibility conditions. For WI3 the
// branch is chosen by the scheme id (WI3a: no cn3 layer; WI3b: no cn1/p1).
ConstraintSet compile_constraints(SchemeId scheme, const LdParams& p);

// Violated constraint tags (empty iff feasible). Unknown labels throw.
std::vector<std::string> check_allocation(const ConstraintSet& cs, const Assignment& a);
std::vector<std::string> check_allocation(const ConstraintSet& cs, const RateAllocation& a);

struct OptResult {
    Rational best = Rational(0);
    Assignment argmax;  // lexicographically first maximizer
};

// Exhaustive search over half-integer assignments (integer search on the
// doubled instance). Infeasible systems return the all-zero allocation.
OptResult optimize(SchemeId scheme, const LdParams& p);

// Best over every scheme applicable to p (WI3 explores both branches).
OptResult optimize_best(const LdParams& p);

}  // namespace irc
