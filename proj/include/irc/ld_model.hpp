#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace irc {

// Channel strengths of the symmetric LD interference relay channel.
// A level of 0 means the corresponding link is absent.
struct LdParams {
    int n_d = 0;  // desired (direct) link
    int n_c = 0;  // cross (interference) link
    int n_r = 0;  // relay -> destination link
    int n_s = 0;  // source -> relay link

    int q() const { return std::max(std::max(n_d, n_c), std::max(n_r, n_s)); }

    LdParams scaled(int m) const { return {n_d * m, n_c * m, n_r * m, n_s * m}; }

    friend bool operator==(const LdParams&, const LdParams&) = default;

    void validate() const {
        if (n_d < 0 || n_c < 0 || n_r < 0 || n_s < 0)
            throw std::invalid_argument("channel levels must be non-negative");
    }

    std::string str() const {
        return "(" + std::to_string(n_d) + "," + std::to_string(n_c) + "," +
               std::to_string(n_r) + "," + std::to_string(n_s) + ")";
    }
};

// The four interference regimes. Exactly one holds for any LdParams.
enum class Regime {
    WeakerSource,   // n_s <= n_c
    StrongerWI,     // n_c < n_s, n_c < n_d
    StrongerSI,     // n_c < n_s, n_d < n_c
    StrongerII,     // n_c < n_s, n_c == n_d
};

inline Regime regime_of(const LdParams& p) {
    if (p.n_s <= p.n_c) return Regime::WeakerSource;
    if (p.n_c < p.n_d) return Regime::StrongerWI;
    if (p.n_d < p.n_c) return Regime::StrongerSI;
    return Regime::StrongerII;
}

// Binary column vector of length q; index 0 is the top-most level.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(int q) : bits_(q, 0) {}
    BitWord(std::initializer_list<int> init) {
        bits_.reserve(init.size());
        for (int b : init) bits_.push_back(static_cast<uint8_t>(b & 1));
    }

    int size() const { return static_cast<int>(bits_.size()); }
    uint8_t operator[](int i) const { return bits_[i]; }
    uint8_t& operator[](int i) { return bits_[i]; }

    BitWord& operator^=(const BitWord& o) {
        if (o.size() != size()) throw std::invalid_argument("BitWord length mismatch");
        for (int i = 0; i < size(); ++i) bits_[i] ^= o.bits_[i];
        return *this;
    }
    friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }

    friend bool operator==(const BitWord&, const BitWord&) = default;

    bool all_zero() const {
        for (auto b : bits_) if (b) return false;
        return true;
    }

    // xor `src` into rows starting at `at`; rows outside [0, q) are dropped
    void xor_at(const std::vector<uint8_t>& src, int at) {
        for (size_t i = 0; i < src.size(); ++i) {
            int j = at + static_cast<int>(i);
            if (j >= 0 && j < size()) bits_[j] ^= src[i];
        }
    }

    std::string str() const {  // top level first
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    const std::vector<uint8_t>& raw() const { return bits_; }

private:
    std::vector<uint8_t> bits_;
};

// result[i] = v[i-s] for i >= s, 0 otherwise; s >= q annihilates the word.
BitWord shift_down(const BitWord& v, int s);

// y_r = S^{q-n_s} x1 + S^{q-n_s} x2
BitWord relay_output(const LdParams& p, const BitWord& x1, const BitWord& x2);

// y_j = S^{q-n_d} x_j + S^{q-n_c} x_l + S^{q-n_r} x_r,  l != j
BitWord rx_output(const LdParams& p, int j, const BitWord& x1, const BitWord& x2,
                  const BitWord& xr);

}  // namespace irc
