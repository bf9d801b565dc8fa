#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "irc/ld_model.hpp"
#include "irc/rational.hpp"
#include "irc/schemes.hpp"

namespace irc {

// First decode step whose output disagreed with the injected bits.
struct ViolatedStep {
    int channel_use = 0;
    std::string step;
    std::string expected;
    std::string observed;
};

struct SimOutcome {
    bool success = false;
    long long delivered_bits[2] = {0, 0};  // per user, in scaled bits
    long long delivered_total() const { return delivered_bits[0] + delivered_bits[1]; }
    int scale = 1;
    std::optional<ViolatedStep> violated_step;
};

// Message-bit key: (user, class, channel use)
using LedgerKey = std::tuple<int, std::string, int>;

struct TransmissionTrace {
    int n = 0;        // block count
    int q = 0;        // scaled word length
    int scale = 1;    // super-symbol factor
    LdParams params;  // scaled channel
    // index 1..n (slot 0 unused)
    std::vector<BitWord> x1, x2, xr, yr, y1, y2;
    std::map<LedgerKey, std::vector<uint8_t>> injected;
    std::map<LedgerKey, std::vector<uint8_t>> recovered;

    // one line per channel use: k, x1, x2, xr, y1, y2, yr (top level first)
    std::string dump() const;
};

// Runs the forward pass (encoders + relay with one-slot delay) and both
// receivers' backward decoders. Decoding never peeks at the injected bits;
// the outcome compares recovered against injected per ledger entry.
std::pair<TransmissionTrace, SimOutcome> simulate(const SchemeChoice& choice,
                                                  const LdParams& p,
                                                  const RateAllocation& alloc, int n,
                                                  uint64_t seed);

// delivered bits per original channel use (exact); throws on failed outcomes
Rational achieved_rate(const SimOutcome& outcome, int n);

// Recomputes xr[1..n] from prefixes of yr only; true iff identical to the
// trace (causality witness).
bool relay_is_causal(const SchemeChoice& choice, const RateAllocation& alloc,
                     const TransmissionTrace& trace);

}  // namespace irc
