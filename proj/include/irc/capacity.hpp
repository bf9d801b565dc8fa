#pragma once

#include <string>
#include <vector>

#include "irc/ld_model.hpp"
#include "irc/rational.hpp"

namespace irc {

// One evaluated upper bound. Labels are the fixed identifiers "16".."23";
// "16" applies only when n_c == n_d, "21" is the unconditional replacement
// 2*max{n_c, n_r + (n_d - n_c)^+}.
struct BoundEntry {
    std::string label;
    Rational value;
    bool applicable = true;
};

struct BoundSet {
    std::vector<BoundEntry> entries;
    std::string binding;   // label of the minimum applicable entry
    Rational binding_value;

    const BoundEntry* find(const std::string& label) const {
        for (auto& e : entries)
            if (e.label == label) return &e;
        return nullptr;
    }
};

// Exact sum-capacity of the LD-IRC, total over all parameter tuples.
long long ld_sum_capacity(const LdParams& p);

// All eight upper bounds with applicability and the binding (minimum) one.
BoundSet ld_upper_bounds(const LdParams& p);

}  // namespace irc
