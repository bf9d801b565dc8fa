#include "irc/simulate.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "irc/pair_code.hpp"

namespace irc {

namespace {

using Bits = std::vector<uint8_t>;

long long ipos(long long x) { return x > 0 ? x : 0; }

// All physical segment positions of one scheme instance, on the scaled channel.
struct Geometry {
    // scaled channel and allocation values
    LdParams p;
    int q = 0;
    // tx offsets (rows within the transmit word)
    std::map<std::string, int> tx;   // class/padding label -> top row
    std::map<std::string, int> len;  // physical lengths per label
    // relay segment top rows and forwarded prefix lengths
    std::map<std::string, int> rtx;
    std::map<std::string, int> rlen;
};

int geti(const RateAllocation& a, const std::string& k) {
    return static_cast<int>(a.phys_rate(k));
}
int getp(const RateAllocation& a, const std::string& k) {
    return static_cast<int>(a.phys_padding(k));
}

Geometry make_geometry(const SchemeChoice& ch, const LdParams& p0, const RateAllocation& a) {
    Geometry g;
    g.p = p0.scaled(a.scale);
    g.q = g.p.q();
    const int nd = g.p.n_d, nc = g.p.n_c, nr = g.p.n_r;
    auto& T = g.tx;
    auto& L = g.len;
    int o = 0;
    auto place = [&](const std::string& lbl, int ln) {
        T[lbl] = o;
        L[lbl] = ln;
        o += ln;
    };
    switch (ch.scheme) {
        case SchemeId::II: {
            place("cm", geti(a, "cm"));
            place("df", geti(a, "df"));
            g.rtx["df"] = 0;
            g.rlen["df"] = L["df"];
            break;
        }
        case SchemeId::WI1: {
            const int Rdf1 = geti(a, "df1"), Rdf2 = geti(a, "df2");
            const int Rcn = geti(a, "cn1") + geti(a, "cn2");
            o = getp(a, "l1");
            T["l1"] = 0;
            L["l1"] = o;
            T["cn1-prev"] = o;            // overlays the df1 slot
            place("df1", 2 * Rdf1);
            place("cn2-prev", geti(a, "cn2"));
            place("cf", geti(a, "cf"));
            place("p", geti(a, "p"));
            place("cn1", geti(a, "cn1"));
            place("cn2", geti(a, "cn2"));
            place("df2", 2 * Rdf2);
            const int blk = geti(a, "cf") + 2 * Rdf1 + 2 * Rdf2;
            g.rtx["cf"] = 0;
            g.rlen["cf"] = geti(a, "cf");
            g.rtx["df1"] = geti(a, "cf");
            g.rlen["df1"] = 2 * Rdf1;
            g.rtx["df2"] = geti(a, "cf") + 2 * Rdf1;
            g.rlen["df2"] = 2 * Rdf2;
            if (Rcn > 0) {
                const int cn_at = nr - nc + getp(a, "l1");
                const int vis = static_cast<int>(
                    std::min<long long>(Rcn, ipos(nc - getp(a, "l1"))));
                g.rtx["cn1"] = cn_at;
                g.rlen["cn1"] = std::min(geti(a, "cn1"), vis);
                g.rtx["cn2"] = cn_at + geti(a, "cn1");
                g.rlen["cn2"] = vis - g.rlen["cn1"];
                if (cn_at < blk)
                    throw std::length_error("relay layout overflow (cn vs cf/df block)");
            }
            break;
        }
        case SchemeId::WI2: {
            const int Rcm = geti(a, "cm"), Rcn = geti(a, "cn"), Rcf = geti(a, "cf");
            place("cm", 2 * Rcm);
            place("cn-prev", Rcn);
            place("cf", Rcf);
            place("l1", getp(a, "l1"));
            place("p1", geti(a, "p1"));
            place("cn", Rcn);
            place("p2", geti(a, "p2"));
            const int l4 = ipos(Rcf - Rcn);
            const int l6 = std::min<long long>(Rcn, ipos(nc - 2 * Rcm));
            const int l5 = nr - nc + 2 * Rcm;
            int l2, l3;
            if (l4 > 0) {
                l2 = ipos(nr - nd + 2 * Rcm + Rcn + Rcf);
                l3 = geti(a, "p1");
            } else if (Rcf - l4 > 0) {
                l2 = ipos(nr - nd + 2 * Rcm + Rcn + Rcf + getp(a, "l1") + geti(a, "p1"));
                l3 = 0;
            } else {
                l2 = nr;
                l3 = 0;
            }
            g.rtx["cf1"] = l2;
            g.rlen["cf1"] = l4;
            g.rtx["cf2"] = l2 + l4 + l3;
            g.rlen["cf2"] = Rcf - l4;
            g.rtx["cn"] = l5;
            g.rlen["cn"] = l6;
            if (l5 < 0) throw std::length_error("relay layout overflow (l5 < 0)");
            break;
        }
        case SchemeId::WI3a:
        case SchemeId::WI3b: {
            place("cm1", getp(a, "lcm1"));
            place("cm2", geti(a, "cm2"));
            place("cn1-prev", geti(a, "cn1"));
            place("cn2-prev", geti(a, "cn2"));
            place("p1", geti(a, "p1"));
            place("l1u", getp(a, "l1u"));
            place("cn1", geti(a, "cn1"));
            place("l1d", getp(a, "l1d"));
            place("cn3-prev", geti(a, "cn3"));
            place("p2", geti(a, "p2"));
            place("cn2", geti(a, "cn2"));
            place("cn3", geti(a, "cn3"));
            const int Rcn1 = geti(a, "cn1"), Rcn2 = geti(a, "cn2"), Rcn3 = geti(a, "cn3");
            const int ncp = static_cast<int>(ipos(nc - getp(a, "lcm1")));
            int l2;
            if (Rcn1 + Rcn2 > 0)
                l2 = nr - ncp + geti(a, "cm2");
            else if (Rcn3 > 0)
                l2 = nr - Rcn3;
            else
                l2 = nr;
            const int l3 = (Rcn3 > 0 && Rcn2 > 0) ? getp(a, "l1") : 0;
            if (l2 < 0) throw std::length_error("relay layout overflow (l2 < 0)");
            g.rtx["cn1"] = l2;
            g.rlen["cn1"] = std::min<long long>(Rcn1, ipos(ncp - geti(a, "cm2")));
            g.rtx["cn2"] = l2 + Rcn1;
            g.rlen["cn2"] = std::min<long long>(
                Rcn2, ipos(ncp - geti(a, "cm2") - Rcn1));
            g.rtx["cn3"] = l2 + Rcn1 + Rcn2 + l3;
            g.rlen["cn3"] = Rcn3;
            break;
        }
        case SchemeId::SI: {
            const int Rdf1 = geti(a, "df1"), Rdf2 = geti(a, "df2");
            place("cm1", getp(a, "lcm1"));
            place("cm2", geti(a, "cm2"));
            place("cf1", geti(a, "cf1"));
            place("l1", getp(a, "l1"));
            place("cf2", geti(a, "cf2"));
            T["cn1-prev"] = o;  // overlays the df1 slot
            place("df1", 2 * Rdf1);
            place("cn2-prev", geti(a, "cn2"));
            place("df2", 2 * Rdf2);
            place("cn1", geti(a, "cn1"));
            place("cn2", geti(a, "cn2"));
            const int ncp = nc - getp(a, "lcm1");
            const int l2 = static_cast<int>(
                ipos(nr - (ncp - getp(a, "l1") + geti(a, "cf2") + 2 * Rdf1 + 2 * Rdf2)));
            const int T_cn = getp(a, "lcm1") + geti(a, "cm2") + geti(a, "cf1") +
                             getp(a, "l1") + geti(a, "cf2");
            g.rtx["df1"] = l2;
            g.rlen["df1"] = 2 * Rdf1;
            g.rtx["df2"] = l2 + 2 * Rdf1;
            g.rlen["df2"] = 2 * Rdf2;
            g.rtx["cf1"] = l2 + 2 * Rdf1 + 2 * Rdf2;
            g.rlen["cf1"] = geti(a, "cf1");
            g.rtx["cf2"] = l2 + 2 * Rdf1 + 2 * Rdf2 + geti(a, "cf1");
            g.rlen["cf2"] = geti(a, "cf2");
            if (geti(a, "cn1") + geti(a, "cn2") > 0) {
                const int cn_at = nr - nc + T_cn;
                if (cn_at < g.rtx["cf2"] + g.rlen["cf2"])
                    throw std::length_error("relay layout overflow (cn alignment)");
                g.rtx["cn1"] = cn_at;
                g.rlen["cn1"] = geti(a, "cn1");
                g.rtx["cn2"] = cn_at + geti(a, "cn1");
                g.rlen["cn2"] = geti(a, "cn2");
            }
            break;
        }
    }
    if (o > g.q) throw std::length_error("transmit layout overflow");
    for (auto& [k, at] : g.rtx)
        if (at + g.rlen[k] > g.p.n_r && g.rlen[k] > 0)
            throw std::length_error("relay layout overflow (" + k + ")");
    return g;
}

// physical information-bit length per class per channel use
std::map<std::string, int> class_bit_lengths(const SchemeChoice& ch, const RateAllocation& a) {
    std::map<std::string, int> m;
    for (auto& cls : scheme_classes(ch.scheme)) m[cls] = geti(a, cls);
    return m;
}

struct Messages {
    // bits[user][cls][k], k in 0..n (0 and n all-zero)
    std::map<std::string, std::vector<Bits>> bits[2];
};

Messages draw_messages(const SchemeChoice& ch, const RateAllocation& a, int n,
                       uint64_t seed) {
    Messages msg;
    std::mt19937_64 rng(seed);
    auto lens = class_bit_lengths(ch, a);
    const int users = ch.scheme == SchemeId::II ? 1 : 2;
    for (int u = 0; u < users; ++u) {
        for (auto& cls : scheme_classes(ch.scheme)) {
            auto& v = msg.bits[u][cls];
            v.assign(n + 1, Bits(lens[cls], 0));
            for (int k = 1; k <= n - 1; ++k)
                for (int i = 0; i < lens[cls]; ++i) v[k][i] = rng() & 1;
        }
    }
    if (users == 1) {
        for (auto& cls : scheme_classes(ch.scheme))
            msg.bits[1][cls].assign(n + 1, Bits(lens[cls], 0));
    }
    return msg;
}

// Mutable received word with bounds-safe reads/cancels.
struct RxWord {
    Bits w;
    explicit RxWord(const BitWord& y) : w(y.raw()) {}

    uint8_t at(int i) const { return (i >= 0 && i < (int)w.size()) ? w[i] : 0; }
    void flip(int i) {
        if (i >= 0 && i < (int)w.size()) w[i] ^= 1;
    }
    void cancel(const Bits& b, int pos) {
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i]) flip(pos + static_cast<int>(i));
    }
    Bits read(int pos, int len) const {
        Bits out(len);
        for (int i = 0; i < len; ++i) out[i] = at(pos + i);
        return out;
    }
    Bits read_cancel(int pos, int len) {
        Bits out = read(pos, len);
        cancel(out, pos);
        return out;
    }
    // successive decode of `len` bits at `pos` whose first `echo_len` bits
    // repeat at `echo_pos` (echo_pos > pos)
    Bits echoed(int pos, int len, int echo_pos, int echo_len) {
        Bits out(len);
        for (int t = 0; t < len; ++t) {
            uint8_t b = at(pos + t);
            out[t] = b;
            if (b) {
                flip(pos + t);
                if (t < echo_len) flip(echo_pos + t);
            }
        }
        return out;
    }
};

Bits xor_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

// relay decoded-sums store: (cls, k) -> bits
using SumStore = std::map<std::pair<std::string, int>, Bits>;

class RelayMachine {
public:
    RelayMachine(const SchemeChoice& ch, const Geometry& g,
                 const std::map<std::string, int>& lens)
        : ch_(ch), g_(g), lens_(lens) {}

    // consume y_r[k]
    void observe(int k, const BitWord& yr) {
        const int q = g_.q, ns = g_.p.n_s;
        // residual in transmit-row coordinates; rows >= ns are invisible
        Bits res(ns, 0);
        for (int r = 0; r < ns && q - ns + r < q; ++r) res[r] = yr[q - ns + r];
        auto read = [&](int at, int ln) {
            Bits out(ln, 0);
            for (int i = 0; i < ln; ++i)
                if (at + i < ns) out[i] = res[at + i];
            return out;
        };
        auto cancel = [&](const Bits& b, int at) {
            for (size_t i = 0; i < b.size(); ++i)
                if (b[i] && at + (int)i < ns) res[at + i] ^= 1;
        };
        auto prev = [&](const std::string& cls, int ln) {
            auto it = st_.find({cls, k - 1});
            return it == st_.end() ? Bits(ln, 0) : it->second;
        };
        const auto& T = g_.tx;
        switch (ch_.scheme) {
            case SchemeId::II:
                if (lens_.at("df")) st_[{"df", k}] = read(T.at("df"), lens_.at("df"));
                break;
            case SchemeId::WI1: {
                const int Rdf1 = lens_.at("df1"), Rdf2 = lens_.at("df2");
                cancel(prev("cn1", 2 * Rdf1), T.at("cn1-prev"));
                if (Rdf1) st_[{"df1", k}] = read(T.at("df1"), 2 * Rdf1);
                cancel(prev("cn2", lens_.at("cn2")), T.at("cn2-prev"));
                if (lens_.at("cf")) st_[{"cf", k}] = read(T.at("cf"), lens_.at("cf"));
                if (lens_.at("cn1")) st_[{"cn1", k}] = read(T.at("cn1"), lens_.at("cn1"));
                if (lens_.at("cn2")) st_[{"cn2", k}] = read(T.at("cn2"), lens_.at("cn2"));
                if (Rdf2) st_[{"df2", k}] = read(T.at("df2"), 2 * Rdf2);
                break;
            }
            case SchemeId::WI2: {
                cancel(prev("cn", lens_.at("cn")), T.at("cn-prev"));
                if (lens_.at("cf")) {
                    Bits cf = read(T.at("cf"), lens_.at("cf"));
                    const int l4 = g_.rlen.at("cf1");
                    st_[{"cf1", k}] = Bits(cf.begin(), cf.begin() + l4);
                    st_[{"cf2", k}] = Bits(cf.begin() + l4, cf.end());
                }
                if (lens_.at("cn")) st_[{"cn", k}] = read(T.at("cn"), lens_.at("cn"));
                break;
            }
            case SchemeId::WI3a:
            case SchemeId::WI3b: {
                cancel(prev("cn1", lens_.at("cn1")), T.at("cn1-prev"));
                cancel(prev("cn2", lens_.at("cn2")), T.at("cn2-prev"));
                cancel(prev("cn3", lens_.at("cn3")), T.at("cn3-prev"));
                if (lens_.at("cn1")) st_[{"cn1", k}] = read(T.at("cn1"), lens_.at("cn1"));
                if (lens_.at("cn2")) st_[{"cn2", k}] = read(T.at("cn2"), lens_.at("cn2"));
                if (lens_.at("cn3")) st_[{"cn3", k}] = read(T.at("cn3"), lens_.at("cn3"));
                break;
            }
            case SchemeId::SI: {
                const int Rdf1 = lens_.at("df1"), Rdf2 = lens_.at("df2");
                if (lens_.at("cf1")) st_[{"cf1", k}] = read(T.at("cf1"), lens_.at("cf1"));
                if (lens_.at("cf2")) st_[{"cf2", k}] = read(T.at("cf2"), lens_.at("cf2"));
                cancel(prev("cn1", lens_.at("cn1")), T.at("cn1-prev"));
                if (Rdf1) st_[{"df1", k}] = read(T.at("df1"), 2 * Rdf1);
                cancel(prev("cn2", lens_.at("cn2")), T.at("cn2-prev"));
                if (Rdf2) st_[{"df2", k}] = read(T.at("df2"), 2 * Rdf2);
                if (lens_.at("cn1")) st_[{"cn1", k}] = read(T.at("cn1"), lens_.at("cn1"));
                if (lens_.at("cn2")) st_[{"cn2", k}] = read(T.at("cn2"), lens_.at("cn2"));
                break;
            }
        }
    }

    // x_r[k] built from sums decoded at use k-1 (zero word for k == 1)
    BitWord transmit(int k) const {
        BitWord w(g_.q);
        if (k == 1) return w;
        for (auto& [cls, at] : g_.rtx) {
            int ln = g_.rlen.at(cls);
            if (ln <= 0) continue;
            auto it = st_.find({cls, k - 1});
            if (it == st_.end()) continue;
            Bits b(it->second.begin(), it->second.begin() + ln);  // top prefix
            w.xor_at(b, at);
        }
        return w;
    }

private:
    SchemeChoice ch_;
    const Geometry& g_;
    std::map<std::string, int> lens_;
    SumStore st_;
};

// Receiver-side knowledge collected during backward decoding.
struct RxKnow {
    // (cls, user, k) -> bits for per-user signals; (cls, k) for relay sums
    std::map<std::tuple<std::string, int, int>, Bits> user;
    std::map<std::pair<std::string, int>, Bits> sums;
};

class Simulator {
public:
    Simulator(const SchemeChoice& ch, const LdParams& p, const RateAllocation& a, int n,
              uint64_t seed)
        : ch_(ch), alloc_(a), n_(n), geo_(make_geometry(ch, p, a)),
          lens_(class_bit_lengths(ch, a)) {
        msg_ = draw_messages(ch, a, n, seed);
        if (ch.scheme == SchemeId::WI2 && lens_.at("cm") > 0) {
            code_ = PairCode::build(2 * lens_.at("cm"), lens_.at("cm"),
                                    std::abs(geo_.p.n_d - geo_.p.n_c));
        } else if ((ch.scheme == SchemeId::WI3a || ch.scheme == SchemeId::WI3b ||
                    ch.scheme == SchemeId::SI) &&
                   lens_.at("cm1") > 0) {
            code_ = PairCode::build(getp(a, "lcm1") * 1, lens_.at("cm1"),
                                    std::abs(geo_.p.n_d - geo_.p.n_c));
        }
    }

    std::pair<TransmissionTrace, SimOutcome> run();

    BitWord tx_word(int u, int k) const;
    const Geometry& geometry() const { return geo_; }
    const std::map<std::string, int>& lens() const { return lens_; }

private:
    void backward(int j, TransmissionTrace& tr);
    void bk_ii(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr);
    void bk_wi1(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr);
    void bk_wi2(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr);
    void bk_wi3(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr);
    void bk_si(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr);

    void rec_put(TransmissionTrace& tr, int me, const std::string& cls, int k,
                 const Bits& bits, const std::string& step) {
        if (k < 1 || k > n_ - 1) return;
        tr.recovered[{me, cls, k}] = bits;
        if (!err_ && bits != msg_.bits[me].at(cls)[k]) {
            err_ = ViolatedStep{k, step, bits_str(msg_.bits[me].at(cls)[k]), bits_str(bits)};
        }
    }

    static std::string bits_str(const Bits& b) {
        std::string s;
        for (auto x : b) s.push_back(x ? '1' : '0');
        return s;
    }

    SchemeChoice ch_;
    RateAllocation alloc_;
    int n_;
    Geometry geo_;
    std::map<std::string, int> lens_;
    Messages msg_;
    PairCode code_;
    std::optional<ViolatedStep> err_;
};

BitWord Simulator::tx_word(int u, int k) const {
    const auto& T = geo_.tx;
    BitWord w(geo_.q);
    auto put = [&](const Bits& b, int at) { w.xor_at(b, at); };
    auto M = [&](const std::string& cls, int t) -> const Bits& {
        return msg_.bits[u].at(cls)[t];
    };
    switch (ch_.scheme) {
        case SchemeId::II:
            if (u == 1) return w;
            put(M("cm", k), T.at("cm"));
            put(M("df", k), T.at("df"));
            return w;
        case SchemeId::WI1: {
            const int Rdf1 = lens_.at("df1"), Rdf2 = lens_.at("df2");
            put(M("cn1", k - 1), T.at("cn1-prev"));
            put(M("df1", k), T.at("df1") + (u == 0 ? 0 : Rdf1));
            put(M("cn2", k - 1), T.at("cn2-prev"));
            put(M("cf", k), T.at("cf"));
            put(M("p", k), T.at("p"));
            put(M("cn1", k), T.at("cn1"));
            put(M("cn2", k), T.at("cn2"));
            put(M("df2", k), T.at("df2") + (u == 0 ? 0 : Rdf2));
            return w;
        }
        case SchemeId::WI2:
            if (lens_.at("cm")) put(code_.encode(M("cm", k)), T.at("cm"));
            put(M("cn", k - 1), T.at("cn-prev"));
            put(M("cf", k), T.at("cf"));
            put(M("p1", k), T.at("p1"));
            put(M("cn", k), T.at("cn"));
            put(M("p2", k), T.at("p2"));
            return w;
        case SchemeId::WI3a:
        case SchemeId::WI3b:
            if (lens_.at("cm1")) put(code_.encode(M("cm1", k)), T.at("cm1"));
            put(M("cm2", k), T.at("cm2"));
            put(M("cn1", k - 1), T.at("cn1-prev"));
            put(M("cn2", k - 1), T.at("cn2-prev"));
            put(M("p1", k), T.at("p1"));
            put(M("cn1", k), T.at("cn1"));
            put(M("cn3", k - 1), T.at("cn3-prev"));
            put(M("p2", k), T.at("p2"));
            put(M("cn2", k), T.at("cn2"));
            put(M("cn3", k), T.at("cn3"));
            return w;
        case SchemeId::SI: {
            const int Rdf1 = lens_.at("df1"), Rdf2 = lens_.at("df2");
            if (lens_.at("cm1")) put(code_.encode(M("cm1", k)), T.at("cm1"));
            put(M("cm2", k), T.at("cm2"));
            put(M("cf1", k), T.at("cf1"));
            put(M("cf2", k), T.at("cf2"));
            put(M("cn1", k - 1), T.at("cn1-prev"));
            put(M("df1", k), T.at("df1") + (u == 0 ? 0 : Rdf1));
            put(M("cn2", k - 1), T.at("cn2-prev"));
            put(M("df2", k), T.at("df2") + (u == 0 ? 0 : Rdf2));
            put(M("cn1", k), T.at("cn1"));
            put(M("cn2", k), T.at("cn2"));
            return w;
        }
    }
    return w;
}

std::pair<TransmissionTrace, SimOutcome> Simulator::run() {
    TransmissionTrace tr;
    tr.n = n_;
    tr.q = geo_.q;
    tr.scale = alloc_.scale;
    tr.params = geo_.p;
    tr.x1.assign(n_ + 1, BitWord(geo_.q));
    tr.x2.assign(n_ + 1, BitWord(geo_.q));
    tr.xr.assign(n_ + 1, BitWord(geo_.q));
    tr.yr.assign(n_ + 1, BitWord(geo_.q));
    tr.y1.assign(n_ + 1, BitWord(geo_.q));
    tr.y2.assign(n_ + 1, BitWord(geo_.q));

    const int users = ch_.scheme == SchemeId::II ? 1 : 2;
    for (int u = 0; u < users; ++u)
        for (auto& cls : scheme_classes(ch_.scheme))
            for (int k = 1; k <= n_ - 1; ++k)
                tr.injected[{u, cls, k}] = msg_.bits[u].at(cls)[k];

    RelayMachine relay(ch_, geo_, lens_);
    for (int k = 1; k <= n_; ++k) {
        tr.x1[k] = tx_word(0, k);
        tr.x2[k] = tx_word(1, k);
        tr.xr[k] = relay.transmit(k);
        tr.yr[k] = relay_output(geo_.p, tr.x1[k], tr.x2[k]);
        tr.y1[k] = rx_output(geo_.p, 1, tr.x1[k], tr.x2[k], tr.xr[k]);
        tr.y2[k] = rx_output(geo_.p, 2, tr.x1[k], tr.x2[k], tr.xr[k]);
        relay.observe(k, tr.yr[k]);
    }

    for (int j = 0; j < users; ++j) backward(j, tr);

    SimOutcome out;
    out.scale = alloc_.scale;
    bool all_ok = !err_.has_value();
    for (int u = 0; u < users && all_ok; ++u) {
        for (auto& cls : scheme_classes(ch_.scheme)) {
            if (lens_.at(cls) == 0) continue;
            for (int k = 1; k <= n_ - 1 && all_ok; ++k) {
                auto it = tr.recovered.find({u, cls, k});
                if (it == tr.recovered.end() || it->second != msg_.bits[u].at(cls)[k]) {
                    all_ok = false;
                    if (!err_)
                        err_ = ViolatedStep{k, "ledger:" + cls,
                                            bits_str(msg_.bits[u].at(cls)[k]),
                                            it == tr.recovered.end() ? "<missing>"
                                                                     : bits_str(it->second)};
                }
            }
        }
    }
    out.success = all_ok;
    out.violated_step = err_;
    if (all_ok) {
        long long per_use[2] = {0, 0};
        for (int u = 0; u < users; ++u)
            for (auto& cls : scheme_classes(ch_.scheme)) per_use[u] += lens_.at(cls);
        out.delivered_bits[0] = per_use[0] * (n_ - 1);
        out.delivered_bits[1] = per_use[1] * (n_ - 1);
    }
    return {tr, out};
}

void Simulator::backward(int j, TransmissionTrace& tr) {
    RxKnow know;
    for (int k = n_; k >= 1; --k) {
        if (err_) return;
        RxWord rx(j == 0 ? tr.y1[k] : tr.y2[k]);
        switch (ch_.scheme) {
            case SchemeId::II: bk_ii(j, k, rx, know, tr); break;
            case SchemeId::WI1: bk_wi1(j, k, rx, know, tr); break;
            case SchemeId::WI2: bk_wi2(j, k, rx, know, tr); break;
            case SchemeId::WI3a:
            case SchemeId::WI3b: bk_wi3(j, k, rx, know, tr); break;
            case SchemeId::SI: bk_si(j, k, rx, know, tr); break;
        }
    }
}

void Simulator::bk_ii(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr) {
    const int q = geo_.q, od = q - geo_.p.n_d, orr = q - geo_.p.n_r;
    const int Rdf = lens_.at("df"), Rcm = lens_.at("cm");
    if (Rdf && k >= 2) {
        Bits df = rx.read_cancel(orr, Rdf);
        rec_put(tr, 0, "df", k - 1, df, "rx:df");
    }
    if (Rcm && k <= n_ - 1) {
        Bits cm = rx.read_cancel(od + geo_.tx.at("cm"), Rcm);
        rec_put(tr, 0, "cm", k, cm, "rx:cm");
    }
}

void Simulator::bk_wi1(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr) {
    const auto& T = geo_.tx;
    const int q = geo_.q;
    const int od = q - geo_.p.n_d, oc = q - geo_.p.n_c, orr = q - geo_.p.n_r;
    const int me = j, ot = 1 - j;
    const int Rdf1 = lens_.at("df1"), Rdf2 = lens_.at("df2");
    const int Rcn1 = lens_.at("cn1"), Rcn2 = lens_.at("cn2"), Rcn = Rcn1 + Rcn2;
    const int Rcf = lens_.at("cf"), Rp = lens_.at("p");

    // cancel signals known from future steps: df slots [k], own cn[k]
    if (k <= n_ - 1) {
        for (int u : {me, ot}) {
            const int off = (u == me) ? od : oc;
            if (Rdf1) {
                auto it = know.user.find({"df1", u, k});
                if (it != know.user.end())
                    rx.cancel(it->second, off + T.at("df1") + (u == 0 ? 0 : Rdf1));
            }
            if (Rdf2) {
                auto it = know.user.find({"df2", u, k});
                if (it != know.user.end())
                    rx.cancel(it->second, off + T.at("df2") + (u == 0 ? 0 : Rdf2));
            }
        }
        if (Rcn) {
            auto i1 = know.user.find({"cn1", me, k});
            auto i2 = know.user.find({"cn2", me, k});
            if (i1 != know.user.end()) rx.cancel(i1->second, od + T.at("cn1"));
            if (i2 != know.user.end()) rx.cancel(i2->second, od + T.at("cn2"));
        }
    }
    // relay block: cf sum and df slots for time k-1
    if (k >= 2) {
        if (Rcf) know.sums[{"cf", k - 1}] = rx.read_cancel(orr + geo_.rtx.at("cf"), Rcf);
        if (Rdf1) {
            Bits slot = rx.read_cancel(orr + geo_.rtx.at("df1"), 2 * Rdf1);
            know.user[{"df1", 0, k - 1}] = Bits(slot.begin(), slot.begin() + Rdf1);
            know.user[{"df1", 1, k - 1}] = Bits(slot.begin() + Rdf1, slot.end());
            rec_put(tr, me, "df1", k - 1, know.user[{"df1", me, k - 1}], "rx:df1");
        }
        if (Rdf2) {
            Bits slot = rx.read_cancel(orr + geo_.rtx.at("df2"), 2 * Rdf2);
            know.user[{"df2", 0, k - 1}] = Bits(slot.begin(), slot.begin() + Rdf2);
            know.user[{"df2", 1, k - 1}] = Bits(slot.begin() + Rdf2, slot.end());
            rec_put(tr, me, "df2", k - 1, know.user[{"df2", me, k - 1}], "rx:df2");
        }
    }
    // cn[k-1]: direct copy with the neutralized aggregate as echo
    if (Rcn && k >= 2) {
        const int echo_len = (geo_.rlen.count("cn1") ? geo_.rlen.at("cn1") : 0) +
                             (geo_.rlen.count("cn2") ? geo_.rlen.at("cn2") : 0);
        Bits cn = rx.echoed(od + T.at("cn1-prev"), Rcn, oc + T.at("cn1-prev"), echo_len);
        Bits c1(cn.begin(), cn.begin() + Rcn1), c2(cn.begin() + Rcn1, cn.end());
        rec_put(tr, me, "cn1", k - 1, c1, "rx:cn1");
        rec_put(tr, me, "cn2", k - 1, c2, "rx:cn2");
        know.user[{"cn1", me, k - 1}] = c1;
        know.user[{"cn2", me, k - 1}] = c2;
    }
    // cf[k]: cancel the known sum on the interference image, then echo-decode
    if (Rcf && k <= n_ - 1) {
        const Bits& sumk = know.sums.at({"cf", k});
        const int vis = std::clamp(q - (oc + T.at("cf")), 0, Rcf);
        rx.cancel(Bits(sumk.begin(), sumk.begin() + vis), oc + T.at("cf"));
        Bits cf = rx.echoed(od + T.at("cf"), Rcf, oc + T.at("cf"), vis);
        rec_put(tr, me, "cf", k, cf, "rx:cf");
    }
    // private
    if (Rp && k <= n_ - 1) rec_put(tr, me, "p", k, rx.read_cancel(od + T.at("p"), Rp), "rx:p");
}

void Simulator::bk_wi2(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr) {
    const auto& T = geo_.tx;
    const int q = geo_.q;
    const int od = q - geo_.p.n_d, oc = q - geo_.p.n_c, orr = q - geo_.p.n_r;
    const int me = j;
    const int Rcm = lens_.at("cm"), Rcn = lens_.at("cn"), Rcf = lens_.at("cf");
    const int Rp1 = lens_.at("p1"), Rp2 = lens_.at("p2");
    const int l4 = geo_.rlen.at("cf1");
    const int l6 = geo_.rlen.at("cn");

    // 1. joint decode of the common pair on the window
    if (Rcm && k <= n_ - 1) {
        Bits win = rx.read(od + T.at("cm"), 2 * Rcm);
        auto [a_me, a_ot] = code_.decode(win);
        rec_put(tr, me, "cm", k, a_me, "rx:cm");
        rx.cancel(code_.encode(a_me), od + T.at("cm"));
        rx.cancel(code_.encode(a_ot), oc + T.at("cm"));
    }
    // 2. cancel own cn[k]
    if (Rcn && k <= n_ - 1) {
        auto it = know.user.find({"cn", me, k});
        if (it != know.user.end()) rx.cancel(it->second, od + T.at("cn"));
    }
    // 3. cn[k-1] echoed against the neutralized aggregate
    if (Rcn && k >= 2) {
        Bits cn = rx.echoed(od + T.at("cn-prev"), Rcn, oc + T.at("cn-prev"), l6);
        rec_put(tr, me, "cn", k - 1, cn, "rx:cn");
        know.user[{"cn", me, k - 1}] = cn;
    }
    // 4. cf[k] with the known sum cancelled on the visible interference image
    if (Rcf && k <= n_ - 1) {
        const Bits& sumk = know.sums.at({"cf", k});
        const int vis = std::clamp(q - (oc + T.at("cf")), 0, Rcf);
        rx.cancel(Bits(sumk.begin(), sumk.begin() + vis), oc + T.at("cf"));
        Bits cf = rx.echoed(od + T.at("cf"), Rcf, oc + T.at("cf"), vis);
        rec_put(tr, me, "cf", k, cf, "rx:cf");
    }
    // 5. relay cf part 1 (inside the l1 gap)
    Bits cf1_prev;
    if (Rcf && k >= 2 && l4 > 0) cf1_prev = rx.read_cancel(orr + geo_.rtx.at("cf1"), l4);
    // 6. p1
    if (Rp1 && k <= n_ - 1)
        rec_put(tr, me, "p1", k, rx.read_cancel(od + T.at("p1"), Rp1), "rx:p1");
    // 7. cancel own cn[k] image? (already done) then relay cf part 2
    if (Rcf && k >= 2) {
        Bits cf2_prev;
        if (Rcf - l4 > 0) cf2_prev = rx.read_cancel(orr + geo_.rtx.at("cf2"), Rcf - l4);
        Bits sum = cf1_prev;
        sum.insert(sum.end(), cf2_prev.begin(), cf2_prev.end());
        know.sums[{"cf", k - 1}] = sum;
    }
    // 8. p2
    if (Rp2 && k <= n_ - 1)
        rec_put(tr, me, "p2", k, rx.read_cancel(od + T.at("p2"), Rp2), "rx:p2");
}

void Simulator::bk_wi3(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr) {
    const auto& T = geo_.tx;
    const int q = geo_.q;
    const int od = q - geo_.p.n_d, oc = q - geo_.p.n_c;
    const int me = j, ot = 1 - j;
    const int Rcm1 = lens_.at("cm1"), Rcm2 = lens_.at("cm2");
    const int Rcn1 = lens_.at("cn1"), Rcn2 = lens_.at("cn2"), Rcn3 = lens_.at("cn3");
    const int Rp1 = lens_.at("p1"), Rp2 = lens_.at("p2");

    // 1. joint decode of the cm1 pair
    if (Rcm1 && k <= n_ - 1) {
        Bits win = rx.read(od + T.at("cm1"), getp(alloc_, "lcm1"));
        auto [a_me, a_ot] = code_.decode(win);
        rec_put(tr, me, "cm1", k, a_me, "rx:cm1");
        rx.cancel(code_.encode(a_me), od + T.at("cm1"));
        rx.cancel(code_.encode(a_ot), oc + T.at("cm1"));
    }
    // 2. cancel own fresh cn copies
    if (k <= n_ - 1) {
        for (const char* cls : {"cn1", "cn2", "cn3"}) {
            auto it = know.user.find({cls, me, k});
            if (it != know.user.end() && !it->second.empty())
                rx.cancel(it->second, od + T.at(cls));
        }
    }
    // 3. top desired block: cm2[k], cn1[k-1], cn2[k-1], p1[k]
    if (Rcm2 && k <= n_ - 1)
        rec_put(tr, me, "cm2", k, rx.read_cancel(od + T.at("cm2"), Rcm2), "rx:cm2");
    Bits c1, c2;
    if (Rcn1 && k >= 2) {
        c1 = rx.read_cancel(od + T.at("cn1-prev"), Rcn1);
        rec_put(tr, me, "cn1", k - 1, c1, "rx:cn1");
        know.user[{"cn1", me, k - 1}] = c1;
    }
    if (Rcn2 && k >= 2) {
        c2 = rx.read_cancel(od + T.at("cn2-prev"), Rcn2);
        rec_put(tr, me, "cn2", k - 1, c2, "rx:cn2");
        know.user[{"cn2", me, k - 1}] = c2;
    }
    if (Rp1 && k <= n_ - 1)
        rec_put(tr, me, "p1", k, rx.read_cancel(od + T.at("p1"), Rp1), "rx:p1");
    // 4. cancel the neutralized cn1/cn2 aggregate (content = own cn[k-1])
    if ((Rcn1 || Rcn2) && k >= 2) {
        Bits agg = c1;
        agg.insert(agg.end(), c2.begin(), c2.end());
        rx.cancel(agg, oc + T.at("cn1-prev"));
    }
    // 5. decode (and cancel) the other user's cm2 from the interference rows
    if (Rcm2 && k <= n_ - 1) {
        Bits b = rx.read_cancel(oc + T.at("cm2"), Rcm2);
        if (!err_ && b != msg_.bits[ot].at("cm2")[k])
            err_ = ViolatedStep{k, "rx:cm2-other", bits_str(msg_.bits[ot].at("cm2")[k]),
                                bits_str(b)};
    }
    // 6. cn3[k-1] echoed against its neutralized aggregate
    if (Rcn3 && k >= 2) {
        const int echo_vis = std::clamp(q - (oc + T.at("cn3-prev")), 0, Rcn3);
        Bits b = rx.echoed(od + T.at("cn3-prev"), Rcn3, oc + T.at("cn3-prev"), echo_vis);
        rec_put(tr, me, "cn3", k - 1, b, "rx:cn3");
        know.user[{"cn3", me, k - 1}] = b;
    }
    // 7. p2
    if (Rp2 && k <= n_ - 1)
        rec_put(tr, me, "p2", k, rx.read_cancel(od + T.at("p2"), Rp2), "rx:p2");
}

void Simulator::bk_si(int j, int k, RxWord& rx, RxKnow& know, TransmissionTrace& tr) {
    const auto& T = geo_.tx;
    const int q = geo_.q;
    const int od = q - geo_.p.n_d, oc = q - geo_.p.n_c, orr = q - geo_.p.n_r;
    const int me = j, ot = 1 - j;
    const int Rcm1 = lens_.at("cm1"), Rcm2 = lens_.at("cm2");
    const int Rcf1 = lens_.at("cf1"), Rcf2 = lens_.at("cf2");
    const int Rdf1 = lens_.at("df1"), Rdf2 = lens_.at("df2");
    const int Rcn1 = lens_.at("cn1"), Rcn2 = lens_.at("cn2");

    // 0. cancel known-from-future: df slots [k], own fresh cn copies
    if (k <= n_ - 1) {
        for (int u : {me, ot}) {
            const int off = (u == me) ? od : oc;
            if (Rdf1) {
                auto it = know.user.find({"df1", u, k});
                if (it != know.user.end())
                    rx.cancel(it->second, off + T.at("df1") + (u == 0 ? 0 : Rdf1));
            }
            if (Rdf2) {
                auto it = know.user.find({"df2", u, k});
                if (it != know.user.end())
                    rx.cancel(it->second, off + T.at("df2") + (u == 0 ? 0 : Rdf2));
            }
        }
        for (const char* cls : {"cn1", "cn2"}) {
            auto it = know.user.find({cls, me, k});
            if (it != know.user.end() && !it->second.empty())
                rx.cancel(it->second, od + T.at(cls));
        }
    }
    // 1. joint decode of the cm1 pair; interference frame is on top here
    if (Rcm1 && k <= n_ - 1) {
        Bits win = rx.read(oc + T.at("cm1"), getp(alloc_, "lcm1"));
        auto [a_ot, a_me] = code_.decode(win);
        rec_put(tr, me, "cm1", k, a_me, "rx:cm1");
        rx.cancel(code_.encode(a_me), od + T.at("cm1"));
        rx.cancel(code_.encode(a_ot), oc + T.at("cm1"));
    }
    // 2. other's cm2 and cf1 from the interference rows; reconstruct own cf1
    if (k <= n_ - 1) {
        if (Rcm2) {
            Bits b = rx.read_cancel(oc + T.at("cm2"), Rcm2);
            if (!err_ && b != msg_.bits[ot].at("cm2")[k])
                err_ = ViolatedStep{k, "rx:cm2-other", bits_str(msg_.bits[ot].at("cm2")[k]),
                                    bits_str(b)};
        }
        if (Rcf1) {
            Bits b = rx.read_cancel(oc + T.at("cf1"), Rcf1);
            Bits mine = xor_bits(b, know.sums.at({"cf1", k}));
            rec_put(tr, me, "cf1", k, mine, "rx:cf1");
            rx.cancel(mine, od + T.at("cf1"));
        }
    }
    // 3. relay block for time k-1
    if (k >= 2) {
        if (Rdf1) {
            Bits slot = rx.read_cancel(orr + geo_.rtx.at("df1"), 2 * Rdf1);
            know.user[{"df1", 0, k - 1}] = Bits(slot.begin(), slot.begin() + Rdf1);
            know.user[{"df1", 1, k - 1}] = Bits(slot.begin() + Rdf1, slot.end());
            rec_put(tr, me, "df1", k - 1, know.user[{"df1", me, k - 1}], "rx:df1");
        }
        if (Rdf2) {
            Bits slot = rx.read_cancel(orr + geo_.rtx.at("df2"), 2 * Rdf2);
            know.user[{"df2", 0, k - 1}] = Bits(slot.begin(), slot.begin() + Rdf2);
            know.user[{"df2", 1, k - 1}] = Bits(slot.begin() + Rdf2, slot.end());
            rec_put(tr, me, "df2", k - 1, know.user[{"df2", me, k - 1}], "rx:df2");
        }
        if (Rcf1) know.sums[{"cf1", k - 1}] = rx.read_cancel(orr + geo_.rtx.at("cf1"), Rcf1);
        if (Rcf2) know.sums[{"cf2", k - 1}] = rx.read_cancel(orr + geo_.rtx.at("cf2"), Rcf2);
    }
    // 4. own cm2
    if (Rcm2 && k <= n_ - 1)
        rec_put(tr, me, "cm2", k, rx.read_cancel(od + T.at("cm2"), Rcm2), "rx:cm2");
    // 5. other's cf2 successively, reconstructing own bits via the known sum
    if (Rcf2 && k <= n_ - 1) {
        const Bits& s = know.sums.at({"cf2", k});
        Bits mine(Rcf2);
        for (int t = 0; t < Rcf2; ++t) {
            uint8_t b = rx.at(oc + T.at("cf2") + t);
            rx.flip(oc + T.at("cf2") + t);
            mine[t] = b ^ s[t];
            if (mine[t]) rx.flip(od + T.at("cf2") + t);
        }
        rec_put(tr, me, "cf2", k, mine, "rx:cf2");
    }
    // 6. the aligned cn aggregate carries own cn[k-1]; own direct copy is the echo
    if ((Rcn1 || Rcn2) && k >= 2) {
        Bits cn = rx.echoed(oc + T.at("cn1-prev"), Rcn1 + Rcn2, od + T.at("cn1-prev"),
                            Rcn1 + Rcn2);
        Bits c1(cn.begin(), cn.begin() + Rcn1), c2(cn.begin() + Rcn1, cn.end());
        rec_put(tr, me, "cn1", k - 1, c1, "rx:cn1");
        rec_put(tr, me, "cn2", k - 1, c2, "rx:cn2");
        know.user[{"cn1", me, k - 1}] = c1;
        know.user[{"cn2", me, k - 1}] = c2;
    }
}

}  // namespace

std::string TransmissionTrace::dump() const {
    std::ostringstream os;
    for (int k = 1; k <= n; ++k) {
        os << k << ' ' << x1[k].str() << ' ' << x2[k].str() << ' ' << xr[k].str() << ' '
           << y1[k].str() << ' ' << y2[k].str() << ' ' << yr[k].str() << '\n';
    }
    return os.str();
}

std::pair<TransmissionTrace, SimOutcome> simulate(const SchemeChoice& choice,
                                                  const LdParams& p,
                                                  const RateAllocation& alloc, int n,
                                                  uint64_t seed) {
    if (n < 3) throw std::invalid_argument("simulate: need at least 3 channel uses");
    Simulator sim(choice, p, alloc, n, seed);
    return sim.run();
}

Rational achieved_rate(const SimOutcome& outcome, int n) {
    if (!outcome.success)
        throw std::logic_error("achieved_rate undefined on failed outcomes");
    return Rational(outcome.delivered_total(), static_cast<long long>(n) * outcome.scale);
}

bool relay_is_causal(const SchemeChoice& choice, const RateAllocation& alloc,
                     const TransmissionTrace& trace) {
    // replay the relay on truncated histories y_r[1..k-1] and compare x_r[k]
    Geometry g = make_geometry(choice, LdParams{trace.params.n_d / trace.scale,
                                                trace.params.n_c / trace.scale,
                                                trace.params.n_r / trace.scale,
                                                trace.params.n_s / trace.scale},
                               alloc);
    auto lens = class_bit_lengths(choice, alloc);
    for (int k = 1; k <= trace.n; ++k) {
        RelayMachine m(choice, g, lens);
        for (int t = 1; t < k; ++t) m.observe(t, trace.yr[t]);
        if (!(m.transmit(k) == trace.xr[k])) return false;
    }
    return true;
}

SchemeLayouts build_layouts(const RateAllocation& a, const LdParams& p) {
    Geometry g = make_geometry(a.choice, p, a);
    SchemeLayouts out;
    out.q = g.q;
    // order tx segments by position; label padding gaps explicitly
    std::vector<Segment> segs;
    for (auto& [lbl, pos] : g.tx) {
        int len = g.len.count(lbl) ? g.len.at(lbl) : 0;
        if (lbl == "cn1-prev" && (a.choice.scheme == SchemeId::WI1 ||
                                  a.choice.scheme == SchemeId::SI))
            len = static_cast<int>(2 * a.phys_rate("df1"));  // overlays the df1 slot
        if (len == 0) continue;
        int off = lbl.size() > 5 && lbl.substr(lbl.size() - 5) == "-prev" ? -1 : 0;
        segs.push_back({lbl, pos, len, off});
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) {
        return x.pos != y.pos ? x.pos < y.pos : x.label < y.label;
    });
    // trailing zero filler
    int end = 0;
    for (auto& s : segs)
        if (s.label != "cn1-prev") end = std::max(end, s.pos + s.len);
    if (end < g.q) segs.push_back({"zero:s", end, g.q - end, 0});
    out.tx1 = segs;
    out.tx2 = segs;
    std::vector<Segment> rl;
    for (auto& [lbl, pos] : g.rtx) {
        int len = g.rlen.at(lbl);
        if (len > 0) rl.push_back({"sum:" + lbl, pos, len, -1});
    }
    std::sort(rl.begin(), rl.end(), [](const Segment& x, const Segment& y) {
        return x.pos != y.pos ? x.pos < y.pos : x.label < y.label;
    });
    out.relay = rl;
    return out;
}

}  // namespace irc
