#include "irc/schemes.hpp"

#include <algorithm>
#include <stdexcept>

namespace irc {

namespace {

using R = Rational;

R rmin(const R& a, const R& b) { return rat_min(a, b); }
R rmax(const R& a, const R& b) { return rat_max(a, b); }
long long ipos(long long x) { return x > 0 ? x : 0; }
long long imax3(long long a, long long b, long long c) { return std::max(a, std::max(b, c)); }

}  // namespace

std::string to_string(SchemeId s) {
    switch (s) {
        case SchemeId::WI1: return "WI1";
        case SchemeId::WI2: return "WI2";
        case SchemeId::WI3a: return "WI3a";
        case SchemeId::WI3b: return "WI3b";
        case SchemeId::SI: return "SI";
        case SchemeId::II: return "II";
    }
    return "?";
}

std::optional<SchemeId> scheme_from_string(const std::string& s) {
    if (s == "WI1") return SchemeId::WI1;
    if (s == "WI2") return SchemeId::WI2;
    if (s == "WI3a") return SchemeId::WI3a;
    if (s == "WI3b") return SchemeId::WI3b;
    if (s == "WI3") return SchemeId::WI3a;  // branch refined by allocate()
    if (s == "SI") return SchemeId::SI;
    if (s == "II") return SchemeId::II;
    return std::nullopt;
}

namespace {

// Sub-regime selection. Columns are tested in listed order; the first match
// wins on boundary ties.
SchemeChoice pick_column(const LdParams& p) {
    const long long nd = p.n_d, nc = p.n_c, nr = p.n_r, ns = p.n_s;
    if (nc == nd) return {SchemeId::II, "II", 0};
    if (nd < nc) {
        if (nd <= nr) {
            if (nc <= nr) {
                if (std::max(2 * nc, nr) <= ns) return {SchemeId::SI, "SI-1", 0};
                if (std::max(nr, ns) <= 2 * nc) return {SchemeId::SI, "SI-1", 1};
                if (std::max(ns, 2 * nc) <= nr) return {SchemeId::SI, "SI-1", 2};
                throw std::domain_error("no matching SI-1 column for " + p.str());
            }
            if (2 * nr <= ns) return {SchemeId::SI, "SI-1", 3};
            return {SchemeId::SI, "SI-1", 4};
        }
        if (2 * nd <= std::min(ns, nr + nc)) return {SchemeId::SI, "SI-2", 0};
        if (ns <= std::min(nr + nc, 2 * nd)) return {SchemeId::SI, "SI-2", 1};
        if (nr + nc <= std::min(ns, 2 * nd)) return {SchemeId::SI, "SI-2", 2};
        throw std::domain_error("no matching SI-2 column for " + p.str());
    }
    // weak interference
    if (nd <= ns && ns <= nr) return {SchemeId::WI1, "WI1", 0};
    if (ns <= nd && nd <= nr) return {SchemeId::WI1, "WI1", 1};
    if (nd <= nr && nr <= ns) return {SchemeId::WI1, "WI1", 2};
    if (nc <= nr && nr <= nd && nd <= ns) return {SchemeId::WI1, "WI1", 3};
    if (nc <= ns && ns <= nr && nr <= nd) {
        if (nr + ns <= nd) return {SchemeId::WI2, "WI2-a", 0};
        if (2 * (nr + ns) <= 2 * nd + nc) return {SchemeId::WI2, "WI2-a", 1};
        if (2 * nd < std::min(2 * (nr + ns) - nc, 3 * nc)) return {SchemeId::WI2, "WI2-a", 2};
        if (3 * nc <= 2 * nd && 2 * nd < 2 * (nr + ns) - nc) return {SchemeId::WI2, "WI2-a", 3};
        throw std::domain_error("no matching WI2-a column for " + p.str());
    }
    if (nc <= nr && nr <= ns && 2 * ns <= 2 * nd - nc) {
        if (nr + ns <= nd) return {SchemeId::WI2, "WI2-b", 0};
        if (2 * (nr + ns) <= 2 * nd + nc) return {SchemeId::WI2, "WI2-b", 1};
        return {SchemeId::WI2, "WI2-b", 2};
    }
    // WI-3 (scheme id refined to a/b branch by allocate)
    if (nr <= nc && nd <= ns) {
        if (nr + nd - nc > nc) {
            if (ns + nc <= nd + 2 * nr)
                return {SchemeId::WI3a, "WI3-1", 3 * nc <= ns + nd ? 0 : 1};
            return {SchemeId::WI3a, "WI3-1", nd <= 2 * nc ? 2 : 3};
        }
        if (ns < std::min(nr + nd, 3 * nc - nd)) return {SchemeId::WI3a, "WI3-2", 0};
        if (3 * nc <= std::min(ns + nd, 2 * nd + nr)) return {SchemeId::WI3a, "WI3-2", 1};
        if (2 * nd <= std::min(2 * (ns - nr), 3 * nc - nr)) return {SchemeId::WI3a, "WI3-2", 2};
        throw std::domain_error("no matching WI3-2 column for " + p.str());
    }
    if (nr <= nc && nc <= ns && ns <= nd) {
        if (nc <= nr + nd - nc || ns <= nd - nc) {
            if (ns <= nd - nc) return {SchemeId::WI3a, "WI3-3a", 0};
            if (2 * (nd - ns) <= nc && nc <= 2 * nr)
                return {SchemeId::WI3a, "WI3-3a", 2 * nd <= 3 * nc ? 1 : 2};
            if (2 * ns <= 2 * nd - nc && ns <= nr + nd - nc)
                return {SchemeId::WI3a, "WI3-3a", 3};
            if (std::max(nr + nd - ns, 2 * nr) <= nc) return {SchemeId::WI3a, "WI3-3a", 4};
            throw std::domain_error("no matching WI3-3a column for " + p.str());
        }
        return {SchemeId::WI3a, "WI3-3b", 2 * nd <= 3 * nc ? 0 : 1};
    }
    if (nc <= nr && nr <= ns && ns <= nd && 2 * nd <= 2 * ns + nc)
        return {SchemeId::WI3a, "WI3-3b", 2 * nd <= 3 * nc ? 2 : 3};
    throw std::domain_error("no scheme covers " + p.str());
}

void fill_wi3_common(RateAllocation& a, const LdParams& p) {
    const R lcm1 = a.padding("lcm1");
    a.rates["cm1"] = rmin(lcm1 / R(2), rat_pos(R(p.n_c) - R(p.n_d) + lcm1));
    a.paddings["l1"] = a.padding("l1u") + a.padding("l1d");
}

RateAllocation table_values(const SchemeChoice& ch, const LdParams& p) {
    const long long nd = p.n_d, nc = p.n_c, nr = p.n_r, ns = p.n_s;
    const R h(1, 2);
    RateAllocation a;
    a.choice = ch;
    auto& rt = a.rates;
    auto& pd = a.paddings;

    if (ch.table == "II") {
        rt["cm"] = R(nd);
        rt["df"] = R(std::min(ipos(ns - nd), ipos(nr - nd)));
        return a;
    }
    if (ch.table == "WI1") {
        switch (ch.column) {
            case 0:
                pd["l1"] = R(0);
                rt["p"] = R(nd - nc);
                rt["df2"] = h * R(ipos(ns - nd - nc));
                rt["cf"] = R(ipos(ipos(nc + nd - ns) - 2 * ipos(nd + nc - nr)));
                rt["cn"] = h * (R(ns) - rt["cf"] - rt["p"] - R(2) * rt["df2"]);
                rt["df1"] = h * rmin(rt["cn"], R(nr - nd) - rt["cf"] - R(2) * rt["df2"]);
                break;
            case 1:
                rt["cn"] = rt["df1"] = rt["df2"] = R(0);
                rt["cf"] = h * R(std::min(2 * nc, nr - nd + nc));
                pd["l1"] = rat_pos(rt["cf"] - R(nr - nd));
                rt["p"] = R(nd - nc);
                break;
            case 2:
                pd["l1"] = R(0);
                rt["cn"] = h * R(std::min(2 * nc, std::max(ns + nc - nr, 2 * ns - 2 * nd)));
                rt["df1"] = h * R(ipos(nr - nd - std::abs(ns - nd - nc)));
                rt["df2"] = h * R(std::min(ipos(ns - nd - nc), nr - nd));
                rt["cf"] = R(std::min(ipos(nd + nc - ns), nr - nd));
                rt["p"] = R(nd - nc);
                break;
            default:
                pd["l1"] = R(0);
                rt["cn"] = h * R(std::min(2 * nc, ns + nc - nd));
                rt["df1"] = rt["df2"] = rt["cf"] = R(0);
                rt["p"] = R(nd - nc);
                break;
        }
        // split the cn layer into the slot-overlay part and the remainder
        rt["cn1"] = R(2) * rt["df1"];
        rt["cn2"] = rt["cn"] - rt["cn1"];
        rt.erase("cn");
        return a;
    }
    if (ch.table == "WI2-a") {
        switch (ch.column) {
            case 0:
                rt["cm"] = rt["cn"] = rt["cf"] = rt["p1"] = R(0);
                rt["p2"] = R(nd - nc);
                break;
            case 1:
                rt["cm"] = R(0);
                rt["cn"] = R(ns - std::max(nc, nd - nr));
                rt["cf"] = R(nr - nd + ns);
                rt["p1"] = R(std::max(nc, nd - nr) - nc);
                rt["p2"] = R(nd - ns);
                break;
            case 2:
                rt["cm"] = h * R(nc);
                rt["cn"] = rt["cf"] = R(0);
                rt["p1"] = R(ns - nc);
                rt["p2"] = R(nd - ns);
                break;
            default:
                rt["cm"] = R(0);
                rt["cn"] = R(ns - nc) - rat_pos(R(ns) - R(3) * h * R(nc));
                rt["cf"] = h * R(nc);
                rt["p1"] = rat_pos(R(ns) - R(3) * h * R(nc));
                rt["p2"] = R(nd - ns);
                break;
        }
    } else if (ch.table == "WI2-b") {
        switch (ch.column) {
            case 0:
                rt["cm"] = rt["cn"] = rt["cf"] = rt["p1"] = R(0);
                rt["p2"] = R(nd - nc);
                break;
            case 1: {
                const R t(std::max<long long>(0, 2 * ns - 2 * nc + nr - nd));
                rt["cm"] = R(0);
                rt["cn"] = R(ns - nc) - t;
                rt["cf"] = R(nr - nd + ns);
                rt["p1"] = t;
                rt["p2"] = R(nd - ns);
                break;
            }
            default:
                rt["cm"] = R(0);
                rt["cn"] = R(ns - nc) - rat_pos(R(ns) - R(3) * h * R(nc));
                rt["cf"] = h * R(nc);
                rt["p1"] = rat_pos(R(ns) - R(3) * h * R(nc));
                rt["p2"] = R(nd - ns);
                break;
        }
    }
    if (ch.table == "WI2-a" || ch.table == "WI2-b") {
        pd["l1"] = R(nd) - R(2) * rt["cm"] - R(2) * rt["cn"] - rt["cf"] - rt["p1"] - rt["p2"];
        return a;
    }

    if (ch.table == "WI3-1") {
        switch (ch.column) {
            case 0:
                pd["lcm1"] = R(0);
                rt["cm2"] = h * R(nc + nd - ns);
                rt["cn1"] = h * rmin(R(ipos(3 * nd - 3 * nc - ns)), R(2) * rt["cm2"]);
                rt["cn2"] = rmin(rat_pos(R(nd - nc) - rt["cm2"] - rt["cn1"]), R(ns - nd));
                rt["p1"] = R(ipos(nd - 2 * nc));
                rt["cn3"] = R(ns - nd) - rt["cn2"];
                rt["p2"] = rmin(R(nc) - rt["cm2"] - rt["cn3"],
                                R(nd - nc) - rt["p1"] - rt["cn1"]);
                break;
            case 1:
                pd["lcm1"] = R(nc + nd - ns);
                rt["cm2"] = rt["cn1"] = R(0);
                rt["cn2"] = R(std::min(nd - nc, ns - nd));
                rt["p1"] = R(ipos(2 * nd - nc - ns));
                rt["cn3"] = R(ipos(nc + ns - 2 * nd));
                rt["p2"] = rmin(R(nc) - rt["cm2"] - rt["cn3"],
                                R(nd - nc) - rt["p1"] - rt["cn1"]);
                break;
            case 2:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(nc - nr);
                rt["cn1"] = R(ipos(nr - 2 * nc + 2 * nd - ns));
                rt["cn2"] = R(std::min(ns - nd, nd - 2 * nc + nr));
                rt["p1"] = R(0);
                rt["cn3"] = R(ipos(nc - nd + nr));
                rt["p2"] = R(std::min(nd - nc, nr));
                break;
            default:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(nc - nr);
                rt["cn1"] = R(std::min(nr, nc - nr));
                rt["cn2"] = R(ipos(2 * nr - nc));
                rt["p1"] = R(nd - 2 * nc);
                rt["cn3"] = R(0);
                rt["p2"] = R(nr);
                break;
        }
        pd["l1u"] = rt["cm2"] - rt["cn1"];
        pd["l1d"] = R(0);
        fill_wi3_common(a, p);
        return a;
    }
    if (ch.table == "WI3-2") {
        switch (ch.column) {
            case 0:
                pd["lcm1"] = R(nc + nd - ns);
                rt["cm2"] = rt["cn1"] = R(0);
                rt["cn2"] = R(std::min(nd - nc, ns - nd));
                rt["p1"] = R(ipos(2 * nd - nc - ns));
                rt["cn3"] = R(ipos(nc + ns - 2 * nd));
                rt["p2"] = rmin(R(nc) - rt["cm2"] - rt["cn3"],
                                R(nd - nc) - rt["p1"] - rt["cn1"]);
                break;
            case 1:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(nd - nc);
                rt["cn1"] = rt["cn2"] = rt["p1"] = R(0);
                rt["cn3"] = R(ipos(3 * nc - 2 * nd));
                rt["p2"] = R(2 * nc - nd) - rt["cn3"];
                break;
            default:
                pd["lcm1"] = R(nc - nr);
                rt["cm2"] = rt["cn1"] = R(0);
                rt["cn2"] = R(nr - ipos(nc + nr - nd));
                rt["p1"] = R(ipos(nd - nr - nc));
                rt["cn3"] = R(ipos(nc + nr - nd));
                rt["p2"] = R(nd - nc) - rt["p1"];
                break;
        }
        pd["l1u"] = rt["cm2"] - rt["cn1"];
        pd["l1d"] = R(0);
        fill_wi3_common(a, p);
        return a;
    }
    if (ch.table == "WI3-3a") {
        rt["cn2"] = rt["cn3"] = R(0);
        switch (ch.column) {
            case 0:
                pd["lcm1"] = R(0);
                rt["cm2"] = rt["cn1"] = rt["p1"] = R(0);
                rt["p2"] = R(nd - nc);
                pd["l1u"] = R(0);
                pd["l1d"] = R(nc);
                fill_wi3_common(a, p);
                return a;
            case 1:
                // all-common column: the l1 split is irrelevant, keep it zero
                pd["lcm1"] = R(nc);
                rt["cm2"] = rt["cn1"] = R(0);
                rt["p1"] = R(nd - nc);
                rt["p2"] = R(0);
                pd["l1u"] = pd["l1d"] = R(0);
                fill_wi3_common(a, p);
                return a;
            case 2:
                pd["lcm1"] = R(0);
                rt["cm2"] = h * R(nc);
                rt["p1"] = R(ipos(nd - 2 * nc));
                rt["cn1"] = R(nd) - R(3) * h * R(nc) - rt["p1"];
                rt["p2"] = h * R(nc);
                break;
            case 3:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(nd - ns);
                rt["cn1"] = R(std::min(ns - nc, nc + ns - nd));
                rt["p1"] = R(ipos(nd - 2 * nc));
                rt["p2"] = R(nc + ns - nd);
                break;
            default:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(nc - nr);
                rt["cn1"] = R(nr) - R(ipos(2 * nc - nd));
                rt["p1"] = R(ipos(nd - 2 * nc));
                rt["p2"] = R(nr);
                break;
        }
        pd["l1u"] = R(ipos(2 * nc - nd));
        pd["l1d"] = rt["cm2"] - rt["cn1"] - pd["l1u"];
        fill_wi3_common(a, p);
        return a;
    }
    if (ch.table == "WI3-3b") {
        rt["cn2"] = rt["cn3"] = R(0);
        switch (ch.column) {
            case 0:
                pd["lcm1"] = R(nc);
                rt["cm2"] = rt["cn1"] = R(0);
                rt["p1"] = R(nd - nc);
                rt["p2"] = R(0);
                pd["l1u"] = rt["cm2"] - rt["cn1"];
                pd["l1d"] = R(0);
                break;
            case 1:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(2 * nc - nd);
                rt["cn1"] = R(0);
                rt["p1"] = R(0);
                rt["p2"] = R(nd - nc);
                pd["l1u"] = R(nd - nc);
                pd["l1d"] = R(0);
                break;
            case 2:
                pd["lcm1"] = R(nc);
                rt["cm2"] = rt["cn1"] = R(0);
                rt["p1"] = R(nd - nc);
                rt["p2"] = R(0);
                pd["l1u"] = R(0);
                pd["l1d"] = rt["cm2"] - rt["cn1"] - pd["l1u"];
                break;
            default:
                pd["lcm1"] = R(0);
                rt["cm2"] = h * R(nc);
                rt["cn1"] = rmin(R(nd) - R(3) * h * R(nc), h * R(nc));
                rt["p1"] = R(ipos(nd - 2 * nc));
                rt["p2"] = h * R(nc);
                pd["l1u"] = R(ipos(2 * nc - nd));
                pd["l1d"] = rt["cm2"] - rt["cn1"] - pd["l1u"];
                break;
        }
        fill_wi3_common(a, p);
        return a;
    }
    if (ch.table == "SI-1") {
        switch (ch.column) {
            case 0:
                pd["lcm1"] = R(0);
                rt["cm2"] = rt["cf1"] = rt["cf2"] = R(0);
                rt["df1"] = h * R(std::min(nr - nc, nc));
                rt["df2"] = h * R(ipos(nr - 2 * nc));
                pd["l1"] = R(0);
                rt["cn2"] = R(ipos(2 * nc - nr));
                break;
            case 1:
                pd["lcm1"] = R(0);
                rt["cm2"] = rt["cf1"] = R(0);
                rt["cf2"] = rmin(h * R(nr + nc - ns), R(2 * nc - ns));
                rt["df1"] = h * R(ipos(nr + ns - 3 * nc));
                rt["df2"] = R(0);
                pd["l1"] = h * R(ipos(3 * nc - nr - ns));
                rt["cn2"] = R(ns - nc) - R(2) * rt["df1"];
                break;
            case 2:
                pd["lcm1"] = R(0);
                rt["cm2"] = rt["cf1"] = R(0);
                rt["cf2"] = R(ipos(2 * nc - ns));
                rt["df1"] = rmin(h * R(ns - nc), h * R(nc));
                rt["df2"] = h * R(ipos(ns - 2 * nc));
                pd["l1"] = R(0);
                rt["cn2"] = R(0);
                break;
            case 3:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(0);
                rt["cf1"] = R(ipos(nr - ns + nc));
                rt["cf2"] = rt["df1"] = rt["df2"] = R(0);
                pd["l1"] = R(nc - nr);
                rt["cn2"] = R(std::min(nr, ns - nc));
                break;
            default:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(0);
                rt["cf1"] = R(nc - nr);
                rt["cf2"] = R(nr) - h * R(ns);
                rt["df1"] = rt["df2"] = R(0);
                pd["l1"] = R(nc) - h * R(ns);
                rt["cn2"] = R(ns - nc);
                break;
        }
    } else if (ch.table == "SI-2") {
        switch (ch.column) {
            case 0:
                pd["lcm1"] = R(0);
                rt["cm2"] = R(nd - std::min(nr, ns - nc));
                rt["cf1"] = rt["cf2"] = rt["df1"] = rt["df2"] = R(0);
                pd["l1"] = R(nc - nd);
                rt["cn2"] = R(std::min(nr, ns - nc));
                break;
            case 1:
                pd["lcm1"] = R(2 * nc - ns);
                rt["cm2"] = rt["cf1"] = rt["cf2"] = rt["df1"] = rt["df2"] = R(0);
                pd["l1"] = R(0);
                rt["cn2"] = R(ns - nc);
                break;
            default:
                pd["lcm1"] = R(nc - nr);
                rt["cm2"] = rt["cf1"] = rt["cf2"] = rt["df1"] = rt["df2"] = R(0);
                pd["l1"] = R(0);
                rt["cn2"] = R(nr);
                break;
        }
    }
    if (ch.table == "SI-1" || ch.table == "SI-2") {
        rt["cn1"] = R(2) * rt["df1"];
        const R lcm1 = pd["lcm1"];
        rt["cm1"] = rmin(lcm1 / R(2), rat_pos(R(nd) - R(nc) + lcm1));
        return a;
    }
    throw std::domain_error("unknown table " + ch.table);
}

int compute_scale(const RateAllocation& a) {
    long long m = 1;
    for (auto& [k, v] : a.rates) m = lcm_ll(m, v.den());
    for (auto& [k, v] : a.paddings) m = lcm_ll(m, v.den());
    return static_cast<int>(m);
}

}  // namespace

SchemeChoice classify_regime(const LdParams& p) {
    p.validate();
    if (p.n_s <= p.n_c)
        throw std::domain_error("classify_regime: requires n_c < n_s, got " + p.str());
    SchemeChoice ch = pick_column(p);
    if (ch.scheme == SchemeId::WI3a) {
        // branch b exactly when a cn3 layer is present
        RateAllocation a = table_values(ch, p);
        if (a.rate("cn3") > Rational(0)) ch.scheme = SchemeId::WI3b;
    }
    return ch;
}

RateAllocation allocate(const SchemeChoice& choice, const LdParams& p) {
    SchemeChoice actual = classify_regime(p);
    if (actual.table != choice.table || actual.column != choice.column)
        throw std::domain_error("allocate: " + p.str() + " lies in " + actual.str() +
                                ", not " + choice.table + "#" +
                                std::to_string(choice.column));
    RateAllocation a = table_values(actual, p);
    a.choice = actual;
    a.scale = compute_scale(a);
    return a;
}

long long RateAllocation::phys_rate(const std::string& k) const {
    Rational v = rate(k) * Rational(scale);
    if (!v.is_integer()) throw std::logic_error("non-integral physical rate " + k);
    return v.num();
}

long long RateAllocation::phys_padding(const std::string& k) const {
    Rational v = padding(k) * Rational(scale);
    if (!v.is_integer()) throw std::logic_error("non-integral physical padding " + k);
    return v.num();
}

Rational RateAllocation::user_rate() const {
    Rational s(0);
    for (auto& [k, v] : rates) s += v;
    return s;
}

long long scheme_sum_rate(const SchemeChoice& ch, const LdParams& p) {
    const long long nd = p.n_d, nc = p.n_c, nr = p.n_r, ns = p.n_s;
    if (ch.table == "II") return std::max(nd, std::min(nr, ns));
    if (ch.table == "WI1") {
        switch (ch.column) {
            case 0: return std::min(ns + nd, nr + ns - nc);
            case 1: return std::min(2 * nd, nr + nd - nc);
            case 2: return std::min(nr + nd, nr + ns - nc);
            default: return std::min(2 * nd, ns + nd - nc);
        }
    }
    if (ch.table == "WI2-a" || ch.table == "WI2-b")
        return std::min(2 * nd - nc, 2 * std::max(nr + ns - nc, nd - nc));
    if (ch.table == "WI3-1" || ch.table == "WI3-2")
        return std::min({ns + nd - nc, 2 * nd + nr - nc,
                         2 * std::max(nc, nr + nd - nc)});
    if (ch.table == "WI3-3a" || (ch.table == "WI3-3b" && ch.column < 2))
        return std::min({2 * nd - nc, 2 * std::max(ns, nd - nc),
                         2 * std::max(nc, nr + nd - nc)});
    if (ch.table == "WI3-3b")
        return std::min(2 * nd - nc, 2 * std::max(nr + ns - nc, nd - nc));
    if (ch.table == "SI-1" || ch.table == "SI-2")
        return std::min({2 * std::max(nd, nr), std::max(nr, nc) + (ns - nc),
                         ns + nc, nc + nr});
    throw std::domain_error("unknown table " + ch.table);
}

std::vector<std::string> scheme_classes(SchemeId s) {
    switch (s) {
        case SchemeId::II: return {"cm", "df"};
        case SchemeId::WI1: return {"cn1", "cn2", "df1", "df2", "cf", "p"};
        case SchemeId::WI2: return {"cm", "cn", "cf", "p1", "p2"};
        case SchemeId::WI3a:
        case SchemeId::WI3b: return {"cm1", "cm2", "cn1", "cn2", "cn3", "p1", "p2"};
        case SchemeId::SI: return {"cm1", "cm2", "cf1", "cf2", "df1", "df2", "cn1", "cn2"};
    }
    return {};
}

std::vector<SchemeChoice> all_table_columns() {
    std::vector<SchemeChoice> out;
    auto add = [&](SchemeId s, const std::string& t, int n) {
        for (int c = 0; c < n; ++c) out.push_back({s, t, c});
    };
    add(SchemeId::WI1, "WI1", 4);
    add(SchemeId::WI2, "WI2-a", 4);
    add(SchemeId::WI2, "WI2-b", 3);
    add(SchemeId::WI3a, "WI3-1", 4);
    add(SchemeId::WI3a, "WI3-2", 3);
    add(SchemeId::WI3a, "WI3-3a", 5);
    add(SchemeId::WI3a, "WI3-3b", 4);
    add(SchemeId::SI, "SI-1", 5);
    add(SchemeId::SI, "SI-2", 3);
    add(SchemeId::II, "II", 1);
    return out;
}

}  // namespace irc
