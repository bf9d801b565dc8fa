#pragma once

#include <cstdint>
#include <vector>

namespace irc {

// Joint linear code for the pair of common signals that both receivers decode
// from one window. Both users encode R information bits into a slot of L
// levels with the same generator G; a receiver observing the two words at a
// relative down-shift of sigma levels solves [G | S^sigma G] on the window.
// Feasible iff R <= min(L/2, L - sigma).
class PairCode {
public:
    PairCode() = default;
    // Builds a generator (deterministic for given geometry). Throws
    // std::domain_error when the geometry admits none.
    static PairCode build(int L, int R, int sigma);

    int L() const { return L_; }
    int R() const { return R_; }
    int sigma() const { return sigma_; }

    // word of length L from R info bits
    std::vector<uint8_t> encode(const std::vector<uint8_t>& info) const;

    // window = L rows containing (word_a at shift 0) xor (word_b at shift sigma,
    // rows below the window dropped); recovers (a, b)
    std::pair<std::vector<uint8_t>, std::vector<uint8_t>> decode(
        const std::vector<uint8_t>& window) const;

private:
    int L_ = 0, R_ = 0, sigma_ = 0;
    std::vector<uint64_t> cols_;      // generator columns, bit i = row i
    std::vector<uint64_t> solve_;     // precomputed elimination (pivot row -> (vec, tag))
    std::vector<uint64_t> solve_tag_;
    std::vector<int> solve_pivot_;
};

}  // namespace irc
