#include "irc/pair_code.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

namespace irc {

namespace {

uint64_t shift_mask(uint64_t v, int sigma, int L) {
    uint64_t out = 0;
    for (int i = 0; v; ++i, v >>= 1)
        if ((v & 1) && i + sigma < L) out |= uint64_t(1) << (i + sigma);
    return out;
}

struct Basis {
    std::unordered_map<int, uint64_t> piv;

    bool add(uint64_t v) {
        while (v) {
            int p = 63 - __builtin_clzll(v);
            auto it = piv.find(p);
            if (it == piv.end()) {
                piv.emplace(p, v);
                return true;
            }
            v ^= it->second;
        }
        return false;
    }
};

}  // namespace

PairCode PairCode::build(int L, int R, int sigma) {
    PairCode pc;
    pc.L_ = L;
    pc.R_ = R;
    pc.sigma_ = sigma;
    if (R == 0) return pc;
    if (L > 62) throw std::domain_error("pair code: slot too long");
    if (sigma <= 0 || 2 * R > L || R > L - sigma)
        throw std::domain_error("pair code geometry infeasible");

    Basis basis;
    auto try_cand = [&](uint64_t c) {
        Basis snap = basis;
        if (basis.add(c) && basis.add(shift_mask(c, sigma, L))) return true;
        basis = snap;
        return false;
    };

    // units, then two-bit columns, then seeded random fallback
    for (int i = 0; i < L && (int)pc.cols_.size() < R; ++i)
        if (try_cand(uint64_t(1) << i)) pc.cols_.push_back(uint64_t(1) << i);
    for (int i = 0; i < L && (int)pc.cols_.size() < R; ++i)
        for (int j = i + 1; j < L && (int)pc.cols_.size() < R; ++j) {
            uint64_t c = (uint64_t(1) << i) | (uint64_t(1) << j);
            if (try_cand(c)) pc.cols_.push_back(c);
        }
    if ((int)pc.cols_.size() < R) {
        std::mt19937_64 rng(0xC0DE5EEDULL ^ (uint64_t(L) << 16) ^ (uint64_t(sigma) << 8) ^ R);
        for (int it = 0; it < 4000 && (int)pc.cols_.size() < R; ++it) {
            uint64_t c = rng() & ((uint64_t(1) << L) - 1);
            if (c && try_cand(c)) pc.cols_.push_back(c);
        }
    }
    if ((int)pc.cols_.size() < R) throw std::domain_error("pair code construction failed");

    // precompute elimination of [G | S^sigma G] with tags for back-solving
    pc.solve_.assign(L, 0);
    pc.solve_tag_.assign(L, 0);
    pc.solve_pivot_.assign(L, 0);
    std::unordered_map<int, std::pair<uint64_t, uint64_t>> piv;
    for (int j = 0; j < 2 * R; ++j) {
        uint64_t v = j < R ? pc.cols_[j] : shift_mask(pc.cols_[j - R], sigma, L);
        uint64_t t = uint64_t(1) << j;
        while (v) {
            int p = 63 - __builtin_clzll(v);
            auto it = piv.find(p);
            if (it == piv.end()) {
                piv.emplace(p, std::make_pair(v, t));
                break;
            }
            v ^= it->second.first;
            t ^= it->second.second;
        }
        if (!v) throw std::domain_error("pair code singular");
    }
    int idx = 0;
    for (auto& [p, vt] : piv) {
        pc.solve_[idx] = vt.first;
        pc.solve_tag_[idx] = vt.second;
        pc.solve_pivot_[idx] = p;
        ++idx;
    }
    pc.solve_.resize(idx);
    pc.solve_tag_.resize(idx);
    pc.solve_pivot_.resize(idx);
    return pc;
}

std::vector<uint8_t> PairCode::encode(const std::vector<uint8_t>& info) const {
    std::vector<uint8_t> w(L_, 0);
    for (int j = 0; j < R_; ++j) {
        if (!info[j]) continue;
        uint64_t c = cols_[j];
        for (int i = 0; c; ++i, c >>= 1)
            if (c & 1) w[i] ^= 1;
    }
    return w;
}

std::pair<std::vector<uint8_t>, std::vector<uint8_t>> PairCode::decode(
    const std::vector<uint8_t>& window) const {
    uint64_t y = 0;
    for (int i = 0; i < L_; ++i)
        if (window[i]) y |= uint64_t(1) << i;
    uint64_t tag = 0;
    while (y) {
        int p = 63 - __builtin_clzll(y);
        bool found = false;
        for (size_t i = 0; i < solve_pivot_.size(); ++i) {
            if (solve_pivot_[i] == p) {
                y ^= solve_[i];
                tag ^= solve_tag_[i];
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("pair code: inconsistent window");
    }
    std::vector<uint8_t> a(R_), b(R_);
    for (int j = 0; j < R_; ++j) {
        a[j] = (tag >> j) & 1;
        b[j] = (tag >> (R_ + j)) & 1;
    }
    return {a, b};
}

}  // namespace irc
