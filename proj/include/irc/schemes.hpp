#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irc/ld_model.hpp"
#include "irc/rational.hpp"

namespace irc {

enum class SchemeId { WI1, WI2, WI3a, WI3b, SI, II };

std::string to_string(SchemeId s);
std::optional<SchemeId> scheme_from_string(const std::string& s);

// Scheme plus the sub-regime (allocation table and column) covering a tuple.
struct SchemeChoice {
    SchemeId scheme;
    std::string table;  // "WI1", "WI2-rs", "WI2-sr", "WI3-1", "WI3-2", "WI3-3a",
                        // "WI3-3b", "SI-hi", "SI-lo", "II"
    int column = 0;

    std::string str() const {
        return to_string(scheme) + "/" + table + "#" + std::to_string(column);
    }
};

// Total on n_c < n_s; throws std::domain_error otherwise.
SchemeChoice classify_regime(const LdParams& p);

// Per-signal-class rate allocation for one scheme instance. Exact rates are
// kept as rationals; `scale` is the super-symbol factor that makes every
// physical length integral (all closed forms are homogeneous of degree 1).
struct RateAllocation {
    SchemeChoice choice;
    int scale = 1;
    std::map<std::string, Rational> rates;     // info bits per user per channel use
    std::map<std::string, Rational> paddings;  // l1, l1u, l1d, lcm1 as applicable

    Rational rate(const std::string& k) const {
        auto it = rates.find(k);
        return it == rates.end() ? Rational(0) : it->second;
    }
    Rational padding(const std::string& k) const {
        auto it = paddings.find(k);
        return it == paddings.end() ? Rational(0) : it->second;
    }
    // physical (scaled, integer) values
    long long phys_rate(const std::string& k) const;
    long long phys_padding(const std::string& k) const;

    // per-user sum of information rates (unscaled)
    Rational user_rate() const;
};

// Table-column allocation for `choice` on p. Requires classify_regime(p) to
// produce the same table; throws std::domain_error for a regime mismatch.
RateAllocation allocate(const SchemeChoice& choice, const LdParams& p);
inline RateAllocation allocate(const LdParams& p) { return allocate(classify_regime(p), p); }

// Closed-form achievable sum-rate of the matching sub-regime.
long long scheme_sum_rate(const SchemeChoice& choice, const LdParams& p);
inline long long scheme_sum_rate(const LdParams& p) {
    return scheme_sum_rate(classify_regime(p), p);
}

// One stacked-vector segment. `time_offset` is 0 for fresh signals and -1 for
// block-Markov repeats; `pos` is the top row of the segment.
struct Segment {
    std::string label;
    int pos = 0;
    int len = 0;
    int time_offset = 0;
};

struct SchemeLayouts {
    int q = 0;  // scaled word length
    std::vector<Segment> tx1, tx2, relay;
};

// Ordered segment lists totaling q per transmit vector, plus the relay layout
// with its alignment paddings. Throws std::length_error on overflow.
SchemeLayouts build_layouts(const RateAllocation& a, const LdParams& p);

// Signal-class names in deterministic (message-drawing) order for a scheme.
std::vector<std::string> scheme_classes(SchemeId s);

// Enumerate every allocation-table column id (for golden tests / docs).
std::vector<SchemeChoice> all_table_columns();

}  // namespace irc
