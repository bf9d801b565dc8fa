#include "irc/rate_opt.hpp"

#include <algorithm>
#include <stdexcept>

namespace irc {

namespace {

using R = Rational;

R get(const Assignment& a, const std::string& k) {
    auto it = a.find(k);
    return it == a.end() ? R(0) : it->second;
}

long long ipos(long long x) { return x > 0 ? x : 0; }

// ---------- derived (pinned) values ----------

Assignment derive_wi1(const LdParams& p, const Assignment& a) {
    Assignment d;
    if (get(a, "cn") > R(0)) {
        d["l2"] = R(p.n_r - p.n_c) + get(a, "l1") -
                  (get(a, "cf") + R(2) * get(a, "df1") + R(2) * get(a, "df2"));
    } else {
        d["l2"] = R(0);
    }
    return d;
}

Assignment derive_wi2(const LdParams& p, const Assignment& a) {
    Assignment d;
    const R Rcm = get(a, "cm"), Rcn = get(a, "cn"), Rcf = get(a, "cf");
    d["l4"] = rat_pos(Rcf - Rcn);
    const R Rcf1 = d["l4"], Rcf2 = Rcf - Rcf1;
    d["cf1"] = Rcf1;
    d["cf2"] = Rcf2;
    d["l6"] = rat_min(Rcn, rat_pos(R(p.n_c) - R(2) * Rcm));
    d["l5"] = R(p.n_r) - R(p.n_c) + R(2) * Rcm;
    if (Rcf1 > R(0)) {
        d["l2"] = rat_pos(R(p.n_r - p.n_d) + R(2) * Rcm + Rcn + Rcf);
        d["l3"] = get(a, "p1");
    } else if (Rcf2 > R(0)) {
        d["l2"] = rat_pos(R(p.n_r - p.n_d) + R(2) * Rcm + Rcn + Rcf + get(a, "l1") +
                          get(a, "p1"));
        d["l3"] = R(0);
    } else {
        d["l2"] = R(p.n_r);
        d["l3"] = R(0);
    }
    return d;
}

Assignment derive_wi3(const LdParams& p, const Assignment& a) {
    Assignment d;
    const R lcm1 = get(a, "lcm1");
    const R ncp = rat_pos(R(p.n_c) - lcm1);
    d["cm1"] = rat_min(lcm1 / R(2), rat_pos(R(p.n_c - p.n_d) + lcm1));
    d["l1"] = get(a, "l1u") + get(a, "l1d");
    if (get(a, "cn1") > R(0) || get(a, "cn2") > R(0))
        d["l2"] = R(p.n_r) - ncp + get(a, "cm2");
    else if (get(a, "cn3") > R(0))
        d["l2"] = R(p.n_r) - get(a, "cn3");
    else
        d["l2"] = R(p.n_r);
    d["l3"] = (get(a, "cn3") > R(0) && get(a, "cn2") > R(0)) ? d["l1"] : R(0);
    return d;
}

Assignment derive_si(const LdParams& p, const Assignment& a) {
    Assignment d;
    const R lcm1 = get(a, "lcm1");
    d["cm1"] = rat_min(lcm1 / R(2), rat_pos(R(p.n_d - p.n_c) + lcm1));
    d["cn1"] = R(2) * get(a, "df1");
    const R ncp = R(p.n_c) - lcm1;
    const R blk = R(2) * get(a, "df1") + R(2) * get(a, "df2") + get(a, "cf1") + get(a, "cf2");
    d["l2"] = rat_pos(R(p.n_r) - (ncp - get(a, "l1") + get(a, "cf2") +
                                  R(2) * get(a, "df1") + R(2) * get(a, "df2")));
    const R T_cn = lcm1 + get(a, "cm2") + get(a, "cf1") + get(a, "l1") + get(a, "cf2");
    if (d["cn1"] + get(a, "cn2") > R(0))
        d["l3"] = (R(p.n_r - p.n_c) + T_cn) - d["l2"] - blk;
    else
        d["l3"] = R(0);
    return d;
}

void add(std::vector<Constraint>& v, std::string tag,
         std::function<bool(const Assignment&)> holds) {
    v.push_back({std::move(tag), [](const Assignment&) { return true; }, std::move(holds)});
}

void add_if(std::vector<Constraint>& v, std::string tag,
            std::function<bool(const Assignment&)> active,
            std::function<bool(const Assignment&)> holds) {
    v.push_back({std::move(tag), std::move(active), std::move(holds)});
}

}  // namespace

ConstraintSet compile_constraints(SchemeId scheme, const LdParams& p) {
    ConstraintSet cs;
    cs.scheme = scheme;
    cs.p = p;
    const R nd(p.n_d), nc(p.n_c), nr(p.n_r), ns(p.n_s), q(p.q());
    auto& C = cs.constraints;

    auto nonneg = [](const Assignment& a) {
        for (auto& [k, v] : a)
            if (v < R(0)) return false;
        return true;
    };
    add(C, "nonneg: all lengths and paddings >= 0", nonneg);

    switch (scheme) {
        case SchemeId::II:
            cs.variables = {};
            cs.derive = [p](const Assignment&) {
                Assignment d;
                d["cm"] = R(p.n_d);
                d["df"] = R(std::min(ipos(p.n_s - p.n_d), ipos(p.n_r - p.n_d)));
                return d;
            };
            add(C, "common fills the direct link: cm == nd",
                [nd](const Assignment& a) { return get(a, "cm") == nd; });
            add(C, "relayed part: df == min((ns-nd)+, (nr-nd)+)", [p](const Assignment& a) {
                return get(a, "df") ==
                       R(std::min(ipos(p.n_s - p.n_d), ipos(p.n_r - p.n_d)));
            });
            cs.objective = [](const Assignment& a) { return get(a, "cm") + get(a, "df"); };
            return cs;

        case SchemeId::WI1:
            cs.variables = {"cn", "df1", "df2", "cf", "p", "l1"};
            cs.derive = [p](const Assignment& a) { return derive_wi1(p, a); };
            add(C, "df1 inside cn slot: 2*df1 <= cn",
                [](const Assignment& a) { return R(2) * get(a, "df1") <= get(a, "cn"); });
            add(C, "tx fit: 2*cn + cf + p + 2*df2 + l1 <= q", [q](const Assignment& a) {
                return R(2) * get(a, "cn") + get(a, "cf") + get(a, "p") +
                           R(2) * get(a, "df2") + get(a, "l1") <= q;
            });
            add_if(C, "relay decode: l1 + cf + p + 2(cn + df2) <= ns",
                   [](const Assignment& a) {
                       return rat_max(get(a, "cn"), get(a, "df2")) > R(0);
                   },
                   [ns](const Assignment& a) {
                       return get(a, "l1") + get(a, "cf") + get(a, "p") +
                                  R(2) * (get(a, "cn") + get(a, "df2")) <= ns;
                   });
            add_if(C, "relay decode: l1 + cf <= ns",
                   [](const Assignment& a) {
                       return rat_max(get(a, "cn"), get(a, "df2")) == R(0);
                   },
                   [ns](const Assignment& a) { return get(a, "l1") + get(a, "cf") <= ns; });
            add(C, "relay block above desired: cf + 2(df1 + df2) <= (nr - nd + l1)+",
                [p](const Assignment& a) {
                    return get(a, "cf") + R(2) * (get(a, "df1") + get(a, "df2")) <=
                           rat_pos(R(p.n_r - p.n_d) + get(a, "l1"));
                });
            add_if(C, "cn neutralization reach: nc - l1 <= nr",
                   [](const Assignment& a) { return get(a, "cn") > R(0); },
                   [p](const Assignment& a) {
                       return R(p.n_c) - get(a, "l1") <= R(p.n_r);
                   });
            add(C, "private below interference: p <= nd - nc",
                [p](const Assignment& a) { return get(a, "p") <= R(p.n_d - p.n_c); });
            add(C, "rx fit: l1 + cn + cf + p + (cn + 2*df2 - (ns-nd)+)+ <= nd",
                [p](const Assignment& a) {
                    return get(a, "l1") + get(a, "cn") + get(a, "cf") + get(a, "p") +
                               rat_pos(get(a, "cn") + R(2) * get(a, "df2") -
                                       R(ipos(p.n_s - p.n_d))) <= R(p.n_d);
                });
            cs.objective = [](const Assignment& a) {
                return R(2) * (get(a, "cn") + get(a, "df1") + get(a, "df2") + get(a, "cf") +
                               get(a, "p"));
            };
            return cs;

        case SchemeId::WI2: {
            cs.variables = {"cm", "cn", "cf", "p1", "p2", "l1"};
            cs.derive = [p](const Assignment& a) { return derive_wi2(p, a); };
            add(C, "tx fit: 2*cm + 2*cn + cf + l1 + p1 + p2 <= nd", [nd](const Assignment& a) {
                return R(2) * get(a, "cm") + R(2) * get(a, "cn") + get(a, "cf") +
                           get(a, "l1") + get(a, "p1") + get(a, "p2") <= nd;
            });
            add(C, "relay decode: 2*cm + 2*cn + cf + l1 + p1 <= ns", [ns](const Assignment& a) {
                return R(2) * get(a, "cm") + R(2) * get(a, "cn") + get(a, "cf") +
                           get(a, "l1") + get(a, "p1") <= ns;
            });
            add(C, "relay cf fits: l2 + cf + l3 <= nr", [nr](const Assignment& a) {
                return get(a, "l2") + get(a, "cf") + get(a, "l3") <= nr;
            });
            add(C, "relay cn fits: l5 + l6 <= nr", [nr](const Assignment& a) {
                return get(a, "l5") + get(a, "l6") <= nr;
            });
            add_if(C, "relay below common: nr - l2 <= nd - 2*cm",
                   [](const Assignment& a) { return get(a, "cf") > R(0); },
                   [p](const Assignment& a) {
                       return R(p.n_r) - get(a, "l2") <= R(p.n_d) - R(2) * get(a, "cm");
                   });
            add_if(C, "relay below cn/cf block: nr - l2 <= nd - 2*cm - cn - cf",
                   [](const Assignment& a) { return get(a, "cf") > R(0); },
                   [p](const Assignment& a) {
                       return R(p.n_r) - get(a, "l2") <=
                              R(p.n_d) - R(2) * get(a, "cm") - get(a, "cn") - get(a, "cf");
                   });
            add(C, "common inside cross link: 2*cm <= nc",
                [nc](const Assignment& a) { return R(2) * get(a, "cm") <= nc; });
            add(C, "interference exhausted: nc - 2*cm - cn - cf - l1 <= 0",
                [nc](const Assignment& a) {
                    return nc - R(2) * get(a, "cm") - get(a, "cn") - get(a, "cf") -
                               get(a, "l1") <= R(0);
                });
            add(C, "gap holds relay cf1: l1 >= l4",
                [](const Assignment& a) { return get(a, "l1") >= get(a, "l4"); });
            // placement of the relay CF parts at the receiver (implicit in the
            // construction; the clamped l2 must still land in a clean zone)
            add_if(C, "relay cf1 inside the l1 gap",
                   [](const Assignment& a) { return get(a, "cf1") > R(0); },
                   [p](const Assignment& a) {
                       const R B = R(2) * get(a, "cm") + get(a, "cn") + get(a, "cf");
                       const R s1 = R(p.n_d - p.n_r) + get(a, "l2");
                       return B <= s1 && s1 + get(a, "l4") <= B + get(a, "l1");
                   });
            add_if(C, "relay cf2 inside the cancelled cn span",
                   [](const Assignment& a) { return get(a, "cf2") > R(0); },
                   [p](const Assignment& a) {
                       const R cnF = R(2) * get(a, "cm") + get(a, "cn") + get(a, "cf") +
                                     get(a, "l1") + get(a, "p1");
                       const R s2 = R(p.n_d - p.n_r) + get(a, "l2") + get(a, "l4") +
                                    get(a, "l3");
                       return cnF <= s2 && s2 + get(a, "cf2") <= cnF + get(a, "cn");
                   });
            cs.objective = [nc, nd](const Assignment& a) {
                return R(2) * (rat_min(get(a, "cm"),
                                       rat_pos(nc - nd + R(2) * get(a, "cm"))) +
                               get(a, "cn") + get(a, "cf") + get(a, "p1") + get(a, "p2"));
            };
            return cs;
        }

        case SchemeId::WI3a:
        case SchemeId::WI3b: {
            const bool branch_a = scheme == SchemeId::WI3a;
            cs.variables = branch_a
                               ? std::vector<std::string>{"lcm1", "cm2", "cn1", "cn2",
                                                          "p1", "p2", "l1u", "l1d"}
                               : std::vector<std::string>{"lcm1", "cm2", "cn2", "cn3",
                                                          "p2", "l1u", "l1d"};
            cs.derive = [p](const Assignment& a) { return derive_wi3(p, a); };
            auto stack = [](const Assignment& a) {
                return get(a, "lcm1") + get(a, "cm2") + R(2) * get(a, "cn1") +
                       R(2) * get(a, "cn2") + R(2) * get(a, "cn3") + get(a, "p1") +
                       get(a, "p2") + get(a, "l1");
            };
            add(C, "tx fit: full stack <= q",
                [q, stack](const Assignment& a) { return stack(a) <= q; });
            add_if(C, "relay decode (cn2/cn3 present): full stack <= ns",
                   [](const Assignment& a) {
                       return get(a, "cn2") > R(0) || get(a, "cn3") > R(0);
                   },
                   [ns, stack](const Assignment& a) { return stack(a) <= ns; });
            add_if(C, "relay decode (only cn1): lcm1 + cm2 + 2*cn1 + p1 + l1u <= ns",
                   [](const Assignment& a) {
                       return get(a, "cn2") == R(0) && get(a, "cn3") == R(0) &&
                              get(a, "cn1") > R(0);
                   },
                   [ns](const Assignment& a) {
                       return get(a, "lcm1") + get(a, "cm2") + R(2) * get(a, "cn1") +
                                  get(a, "p1") + get(a, "l1u") <= ns;
                   });
            add(C, "relay fits: cn1 + cn2 + cn3 + l2 + l3 <= nr", [nr](const Assignment& a) {
                return get(a, "cn1") + get(a, "cn2") + get(a, "cn3") + get(a, "l2") +
                           get(a, "l3") <= nr;
            });
            add_if(C, "relay below common: nr - l2 <= nd - lcm1",
                   [](const Assignment& a) { return get(a, "lcm1") > R(0); },
                   [p](const Assignment& a) {
                       return R(p.n_r) - get(a, "l2") <= R(p.n_d) - get(a, "lcm1");
                   });
            auto ndp = [nd](const Assignment& a) { return nd - get(a, "lcm1"); };
            auto ncp = [nc](const Assignment& a) { return rat_pos(nc - get(a, "lcm1")); };
            auto nrp = [nr](const Assignment& a) { return nr - get(a, "l2"); };
            if (branch_a) {
                add(C, "no cn3 layer in this branch",
                    [](const Assignment& a) { return get(a, "cn3") == R(0); });
                add(C, "rx fit: lcm1 + cm2 + 2*cn1 + cn2 + p1 + l1 + p2 <= nd",
                    [nd](const Assignment& a) {
                        return get(a, "lcm1") + get(a, "cm2") + R(2) * get(a, "cn1") +
                                   get(a, "cn2") + get(a, "p1") + get(a, "l1") +
                                   get(a, "p2") <= nd;
                    });
                add(C, "top block above interference: cm2 + cn1 + cn2 + p1 <= nd' - nc'",
                    [ndp, ncp](const Assignment& a) {
                        return get(a, "cm2") + get(a, "cn1") + get(a, "cn2") +
                                   get(a, "p1") <= ndp(a) - ncp(a);
                    });
                add(C, "top block above relay: cm2 + cn1 + cn2 + p1 <= nd' - nr'",
                    [ndp, nrp](const Assignment& a) {
                        return get(a, "cm2") + get(a, "cn1") + get(a, "cn2") +
                                   get(a, "p1") <= ndp(a) - nrp(a);
                    });
                add_if(C, "other common decodable: nd' - cm2 - 2cn1 - cn2 - p1 - l1 <= nc' - cm2",
                       [](const Assignment& a) { return get(a, "cm2") > R(0); },
                       [ndp, ncp](const Assignment& a) {
                           return ndp(a) - get(a, "cm2") - R(2) * get(a, "cn1") -
                                      get(a, "cn2") - get(a, "p1") - get(a, "l1") <=
                                  ncp(a) - get(a, "cm2");
                       });
                add_if(C, "interference exhausted above p2 (p1 > 0)",
                       [](const Assignment& a) { return get(a, "p1") > R(0); },
                       [ncp](const Assignment& a) {
                           return ncp(a) - get(a, "cm2") - get(a, "cn1") - get(a, "cn2") ==
                                  R(0);
                       });
                add_if(C, "fresh cn1 copy below the noise floor (p1 == 0)",
                       [](const Assignment& a) {
                           return get(a, "p1") == R(0) && get(a, "cn1") > R(0);
                       },
                       [ncp](const Assignment& a) {
                           return ncp(a) - get(a, "cm2") - get(a, "cn1") - get(a, "cn2") -
                                      get(a, "l1u") <= R(0);
                       });
                add_if(C, "private p2 below the noise floor (p1 == 0, no cn1)",
                       [](const Assignment& a) {
                           return get(a, "p1") == R(0) && get(a, "cn1") == R(0);
                       },
                       [ncp](const Assignment& a) {
                           return ncp(a) - get(a, "cm2") - get(a, "cn2") - get(a, "l1") <=
                                  R(0);
                       });
            } else {
                add(C, "no cn1/p1 layers in this branch", [](const Assignment& a) {
                    return get(a, "cn1") == R(0) && get(a, "p1") == R(0);
                });
                add(C, "rx fit: lcm1 + cm2 + cn2 + l1 + cn3 + p2 <= nd",
                    [nd](const Assignment& a) {
                        return get(a, "lcm1") + get(a, "cm2") + get(a, "cn2") +
                                   get(a, "l1") + get(a, "cn3") + get(a, "p2") <= nd;
                    });
                add(C, "top block above interference: cm2 + cn2 <= nd' - nc'",
                    [ndp, ncp](const Assignment& a) {
                        return get(a, "cm2") + get(a, "cn2") <= ndp(a) - ncp(a);
                    });
                add(C, "top block above relay: cm2 + cn2 <= nd' - nr'",
                    [ndp, nrp](const Assignment& a) {
                        return get(a, "cm2") + get(a, "cn2") <= ndp(a) - nrp(a);
                    });
                add_if(C, "other common decodable: nd' - cm2 - cn2 - l1 <= nc' - cm2",
                       [](const Assignment& a) { return get(a, "cm2") > R(0); },
                       [ndp, ncp](const Assignment& a) {
                           return ndp(a) - get(a, "cm2") - get(a, "cn2") - get(a, "l1") <=
                                  ncp(a) - get(a, "cm2");
                       });
                add_if(C, "cn2 aggregate aligned: nr' == nc' - cm2",
                       [](const Assignment& a) { return get(a, "cn2") > R(0); },
                       [ncp, nrp](const Assignment& a) {
                           return nrp(a) == ncp(a) - get(a, "cm2");
                       });
                add_if(C, "cn3 aggregate aligned: nr' == cn3",
                       [](const Assignment& a) {
                           return get(a, "cn2") == R(0) && get(a, "cn3") > R(0);
                       },
                       [nrp](const Assignment& a) { return nrp(a) == get(a, "cn3"); });
                add(C, "private below interference: p2 <= nd' - nc'",
                    [ndp, ncp](const Assignment& a) {
                        return get(a, "p2") <= ndp(a) - ncp(a);
                    });
                add_if(C, "layers below cn3 under the noise floor (bottom-aligned)",
                       [](const Assignment& a) {
                           return get(a, "cn2") == R(0) && get(a, "cn3") > R(0);
                       },
                       [ncp](const Assignment& a) {
                           return ncp(a) - get(a, "cm2") - get(a, "l1") - get(a, "cn3") ==
                                  R(0);
                       });
                add_if(C, "layers below cn3 under the noise floor",
                       [](const Assignment& a) {
                           return get(a, "cn2") > R(0) || get(a, "cn3") == R(0);
                       },
                       [ncp](const Assignment& a) {
                           return ncp(a) - get(a, "cm2") - get(a, "cn2") - get(a, "l1") -
                                      get(a, "cn3") <= R(0);
                       });
            }
            cs.objective = [](const Assignment& a) {
                return R(2) * (get(a, "cm1") + get(a, "cm2") + get(a, "cn1") +
                               get(a, "cn2") + get(a, "cn3") + get(a, "p1") + get(a, "p2"));
            };
            return cs;
        }

        case SchemeId::SI: {
            cs.variables = {"lcm1", "cm2", "cf1", "cf2", "df1", "df2", "cn2", "l1"};
            cs.derive = [p](const Assignment& a) { return derive_si(p, a); };
            auto ndp = [nd](const Assignment& a) { return rat_pos(nd - get(a, "lcm1")); };
            auto ncp = [nc](const Assignment& a) { return nc - get(a, "lcm1"); };
            auto nrp = [nr](const Assignment& a) { return nr - get(a, "l2"); };
            auto blk = [](const Assignment& a) {
                return R(2) * get(a, "df1") + R(2) * get(a, "df2") + get(a, "cf1") +
                       get(a, "cf2");
            };
            auto leftover = [ncp](const Assignment& a) {
                return ncp(a) - get(a, "cm2") - get(a, "cf1") - get(a, "l1");
            };
            add(C, "tx fit: lcm1 + cm2 + cf1 + cf2 + 2cn1 + 2cn2 + 2df2 + l1 <= q",
                [q](const Assignment& a) {
                    return get(a, "lcm1") + get(a, "cm2") + get(a, "cf1") + get(a, "cf2") +
                               R(2) * get(a, "cn1") + R(2) * get(a, "cn2") +
                               R(2) * get(a, "df2") + get(a, "l1") <= q;
                });
            add(C, "relay decode: lcm1 + cm2 + cf1 + l1 + cf2 + 2cn1 + 2cn2 + 2df2 <= ns",
                [ns](const Assignment& a) {
                    return get(a, "lcm1") + get(a, "cm2") + get(a, "cf1") + get(a, "l1") +
                               get(a, "cf2") + R(2) * get(a, "cn1") +
                               R(2) * get(a, "cn2") + R(2) * get(a, "df2") <= ns;
                });
            add_if(C, "relay below common: nr - l2 <= nc - lcm1",
                   [](const Assignment& a) { return get(a, "lcm1") > R(0); },
                   [p](const Assignment& a) {
                       return R(p.n_r) - get(a, "l2") <= R(p.n_c) - get(a, "lcm1");
                   });
            add(C, "cm2/cf1 above relay: cm2 + cf1 <= (nc' - nr')+",
                [ncp, nrp](const Assignment& a) {
                    return get(a, "cm2") + get(a, "cf1") <= rat_pos(ncp(a) - nrp(a));
                });
            add(C, "cm2/cf1 above own image: cm2 + cf1 <= nc' - nd'",
                [ncp, ndp](const Assignment& a) {
                    return get(a, "cm2") + get(a, "cf1") <= ncp(a) - ndp(a);
                });
            add_if(C, "relay block above desired: block <= (nr' - nd')+",
                   [](const Assignment& a) { return get(a, "cm2") > R(0); },
                   [nrp, ndp, blk](const Assignment& a) {
                       return blk(a) <= rat_pos(nrp(a) - ndp(a));
                   });
            add(C, "relay block above leftover interference: block <= (nr' - leftover)+",
                [nrp, leftover, blk](const Assignment& a) {
                    return blk(a) <= rat_pos(nrp(a) - leftover(a));
                });
            add(C, "own cm2 decodable: cm2 <= (nd' - leftover)+",
                [ndp, leftover](const Assignment& a) {
                    return get(a, "cm2") <= rat_pos(ndp(a) - leftover(a));
                });
            add(C, "cn block fully observed: leftover - cf2 - cn1 - cn2 >= 0",
                [leftover](const Assignment& a) {
                    return leftover(a) - get(a, "cf2") - get(a, "cn1") - get(a, "cn2") >=
                           R(0);
                });
            add(C, "relay cn fits: cn1 + cn2 <= nr'", [nrp](const Assignment& a) {
                return get(a, "cn1") + get(a, "cn2") <= nrp(a);
            });
            add(C, "next cn below noise floor: leftover - cf2 - cn1 - cn2 - 2*df2 <= 0",
                [leftover](const Assignment& a) {
                    return leftover(a) - get(a, "cf2") - get(a, "cn1") - get(a, "cn2") -
                               R(2) * get(a, "df2") <= R(0);
                });
            cs.objective = [](const Assignment& a) {
                return R(2) * (get(a, "cm1") + get(a, "cm2") + get(a, "cf1") +
                               get(a, "df1") + get(a, "df2") + get(a, "cf2") +
                               get(a, "cn1") + get(a, "cn2"));
            };
            return cs;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

const std::vector<std::string>& known_labels(SchemeId s) {
    static const std::vector<std::string> ii = {"cm", "df"};
    static const std::vector<std::string> wi1 = {"cn",  "cn1", "cn2", "df1", "df2",
                                                 "cf",  "p",   "l1",  "l2"};
    static const std::vector<std::string> wi2 = {"cm", "cn", "cf", "p1", "p2", "l1",
                                                 "l2", "l3", "l4", "l5", "l6",
                                                 "cf1", "cf2"};
    static const std::vector<std::string> wi3 = {"lcm1", "cm1", "cm2", "cn1", "cn2",
                                                 "cn3",  "p1",  "p2",  "l1",  "l1u",
                                                 "l1d",  "l2",  "l3"};
    static const std::vector<std::string> si = {"lcm1", "cm1", "cm2", "cf1", "cf2",
                                                "df1",  "df2", "cn1", "cn2", "l1",
                                                "l2",   "l3"};
    switch (s) {
        case SchemeId::II: return ii;
        case SchemeId::WI1: return wi1;
        case SchemeId::WI2: return wi2;
        case SchemeId::SI: return si;
        default: return wi3;
    }
}

}  // namespace

std::vector<std::string> check_allocation(const ConstraintSet& cs, const Assignment& a0) {
    const auto& known = known_labels(cs.scheme);
    for (auto& [k, v] : a0)
        if (std::find(known.begin(), known.end(), k) == known.end())
            throw std::invalid_argument("check_allocation: unknown variable " + k);
    Assignment a = a0;
    Assignment d = cs.derive(a);
    for (auto& [k, v] : d) a[k] = v;
    std::vector<std::string> out;
    for (auto& c : cs.constraints)
        if (c.active(a) && !c.holds(a)) out.push_back(c.tag);
    return out;
}

std::vector<std::string> check_allocation(const ConstraintSet& cs, const RateAllocation& ra) {
    Assignment a;
    for (auto& [k, v] : ra.rates) a[k] = v;
    for (auto& [k, v] : ra.paddings) a[k] = v;
    if (cs.scheme == SchemeId::WI1) {
        // the table splits the cn layer; the constraint system sees the union
        a["cn"] = ra.rate("cn1") + ra.rate("cn2");
        a.erase("cn1");
        a.erase("cn2");
    }
    return check_allocation(cs, a);
}

namespace {

// ---- fast exhaustive search on the doubled instance (plain integers) ----
// These loops mirror the declarative constraint sets one-to-one; the grid
// acceptance test pins them against each other and against the capacity.

struct Best {
    long long v = -1;
    Assignment arg;
};

void consider(Best& b, long long v, const Assignment& a) {
    if (v > b.v) {
        b.v = v;
        b.arg = a;
    }
}

Best opt_wi1(long long nd, long long nc, long long nr, long long ns) {
    const long long q = std::max({nd, nc, nr, ns});
    Best best;
    for (long long l1 = 0; l1 <= q; ++l1)
        for (long long Rp = 0; Rp <= std::min(nd - nc, q - l1); ++Rp)
            for (long long Rcf = 0; Rcf <= q - l1 - Rp; ++Rcf)
                for (long long Rdf2 = 0; 2 * Rdf2 <= q - l1 - Rp - Rcf; ++Rdf2)
                    for (long long Rcn = 0; 2 * Rcn <= q - l1 - Rp - Rcf - 2 * Rdf2; ++Rcn)
                        for (long long Rdf1 = 0; 2 * Rdf1 <= Rcn; ++Rdf1) {
                            if (std::max(Rcn, Rdf2) > 0) {
                                if (l1 + Rcf + Rp + 2 * (Rcn + Rdf2) > ns) continue;
                            } else {
                                if (l1 + Rcf > ns) continue;
                            }
                            if (Rcf + 2 * (Rdf1 + Rdf2) > ipos(nr - nd + l1)) continue;
                            if (Rcn > 0 && nc - l1 > nr) continue;
                            if (l1 + Rcn + Rcf + Rp + ipos(Rcn + 2 * Rdf2 - ipos(ns - nd)) > nd)
                                continue;
                            long long v = 2 * (Rcn + Rdf1 + Rdf2 + Rcf + Rp);
                            if (v > best.v)
                                consider(best, v,
                                         {{"cn", R(Rcn)},
                                          {"df1", R(Rdf1)},
                                          {"df2", R(Rdf2)},
                                          {"cf", R(Rcf)},
                                          {"p", R(Rp)},
                                          {"l1", R(l1)}});
                        }
    return best;
}

Best opt_wi2(long long nd, long long nc, long long nr, long long ns) {
    Best best;
    for (long long Rcm = 0; 2 * Rcm <= nc; ++Rcm)
        for (long long Rcn = 0; 2 * Rcm + 2 * Rcn <= nd; ++Rcn)
            for (long long Rcf = 0; 2 * Rcm + 2 * Rcn + Rcf <= nd; ++Rcf) {
                const long long l4 = ipos(Rcf - Rcn);
                const long long Rcf1 = l4, Rcf2 = Rcf - l4;
                const long long l6 = std::min(Rcn, ipos(nc - 2 * Rcm));
                const long long l5 = nr - nc + 2 * Rcm;
                for (long long Rp1 = 0; 2 * Rcm + 2 * Rcn + Rcf + Rp1 <= nd; ++Rp1)
                    for (long long Rp2 = 0; 2 * Rcm + 2 * Rcn + Rcf + Rp1 + Rp2 <= nd; ++Rp2)
                        for (long long l1 = 0;
                             2 * Rcm + 2 * Rcn + Rcf + Rp1 + Rp2 + l1 <= nd; ++l1) {
                            long long l2, l3;
                            if (Rcf1 > 0) {
                                l2 = ipos(nr - nd + 2 * Rcm + Rcn + Rcf);
                                l3 = Rp1;
                            } else if (Rcf2 > 0) {
                                l2 = ipos(nr - nd + 2 * Rcm + Rcn + Rcf + l1 + Rp1);
                                l3 = 0;
                            } else {
                                l2 = nr;
                                l3 = 0;
                            }
                            if (l5 < 0) continue;
                            if (2 * Rcm + 2 * Rcn + Rcf + l1 + Rp1 > ns) continue;
                            if (l2 + Rcf + l3 > nr) continue;
                            if (l5 + l6 > nr) continue;
                            if (Rcf > 0) {
                                if (nr - l2 > nd - 2 * Rcm) continue;
                                if (nr - l2 > nd - 2 * Rcm - Rcn - Rcf) continue;
                            }
                            if (nc - 2 * Rcm - Rcn - Rcf - l1 > 0) continue;
                            if (l1 < l4) continue;
                            if (Rcf1 > 0) {
                                const long long B = 2 * Rcm + Rcn + Rcf;
                                const long long s1 = nd - nr + l2;
                                if (!(B <= s1 && s1 + l4 <= B + l1)) continue;
                            }
                            if (Rcf2 > 0) {
                                const long long cnF = 2 * Rcm + Rcn + Rcf + l1 + Rp1;
                                const long long s2 = nd - nr + l2 + l4 + l3;
                                if (!(cnF <= s2 && s2 + Rcf2 <= cnF + Rcn)) continue;
                            }
                            long long common = std::min(Rcm, ipos(nc - nd + 2 * Rcm));
                            long long v = 2 * (common + Rcn + Rcf + Rp1 + Rp2);
                            if (v > best.v)
                                consider(best, v,
                                         {{"cm", R(Rcm)},
                                          {"cn", R(Rcn)},
                                          {"cf", R(Rcf)},
                                          {"p1", R(Rp1)},
                                          {"p2", R(Rp2)},
                                          {"l1", R(l1)}});
                        }
            }
    return best;
}

Best opt_wi3(long long nd, long long nc, long long nr, long long ns, bool branch_a) {
    const long long q = std::max({nd, nc, nr, ns});
    Best best;
    for (long long lcm1 = 0; lcm1 <= std::min(nd, nc); ++lcm1) {
        // doubled instance: lcm1/2 may be a half-integer => track 2*cm1
        const long long cm1x2 = std::min(lcm1, 2 * ipos(nc - nd + lcm1));
        const long long ndp = nd - lcm1;
        const long long ncp = ipos(nc - lcm1);
        for (long long cm2 = 0; lcm1 + cm2 <= nd; ++cm2)
            for (long long cn1 = 0; lcm1 + cm2 + 2 * cn1 <= nd && (branch_a || cn1 == 0);
                 ++cn1)
                for (long long cn2 = 0; lcm1 + cm2 + 2 * cn1 + 2 * cn2 <= q; ++cn2)
                    for (long long cn3 = 0;
                         lcm1 + cm2 + 2 * cn1 + 2 * cn2 + 2 * cn3 <= q &&
                         (!branch_a || cn3 == 0);
                         ++cn3) {
                        const long long used = lcm1 + cm2 + 2 * cn1 + 2 * cn2 + 2 * cn3;
                        for (long long p1 = 0; used + p1 <= q && (branch_a || p1 == 0); ++p1)
                            for (long long p2 = 0; used + p1 + p2 <= q; ++p2)
                                for (long long l1u = 0; used + p1 + p2 + l1u <= q; ++l1u)
                                    for (long long l1d = 0; used + p1 + p2 + l1u + l1d <= q;
                                         ++l1d) {
                                        const long long l1 = l1u + l1d;
                                        long long l2;
                                        if (cn1 > 0 || cn2 > 0)
                                            l2 = nr - ncp + cm2;
                                        else if (cn3 > 0)
                                            l2 = nr - cn3;
                                        else
                                            l2 = nr;
                                        const long long l3 =
                                            (cn3 > 0 && cn2 > 0) ? l1 : 0;
                                        if (l2 < 0) continue;
                                        const long long nrp = nr - l2;
                                        const long long stack = used + p1 + p2 + l1;
                                        if (cn2 > 0 || cn3 > 0) {
                                            if (stack > ns) continue;
                                        } else if (cn1 > 0) {
                                            if (lcm1 + cm2 + 2 * cn1 + p1 + l1u > ns)
                                                continue;
                                        }
                                        if (cn1 + cn2 + cn3 + l2 + l3 > nr) continue;
                                        if (lcm1 > 0 && nr - l2 > nd - lcm1) continue;
                                        if (branch_a) {
                                            if (lcm1 + cm2 + 2 * cn1 + cn2 + p1 + l1 + p2 >
                                                nd)
                                                continue;
                                            if (cm2 + cn1 + cn2 + p1 > ndp - ncp) continue;
                                            if (cm2 + cn1 + cn2 + p1 > ndp - nrp) continue;
                                            if (cm2 > 0 &&
                                                ndp - cm2 - 2 * cn1 - cn2 - p1 - l1 >
                                                    ncp - cm2)
                                                continue;
                                            if (p1 > 0) {
                                                if (ncp - cm2 - cn1 - cn2 != 0) continue;
                                            } else if (cn1 > 0) {
                                                if (ncp - cm2 - cn1 - cn2 - l1u > 0)
                                                    continue;
                                            } else if (ncp - cm2 - cn2 - l1 > 0) {
                                                continue;
                                            }
                                        } else {
                                            if (lcm1 + cm2 + cn2 + l1 + cn3 + p2 > nd)
                                                continue;
                                            if (cm2 + cn2 > ndp - ncp) continue;
                                            if (cm2 + cn2 > ndp - nrp) continue;
                                            if (cm2 > 0 &&
                                                ndp - cm2 - cn2 - l1 > ncp - cm2)
                                                continue;
                                            if (cn2 > 0) {
                                                if (nrp != ncp - cm2) continue;
                                            } else if (cn3 > 0 && nrp != cn3) {
                                                continue;
                                            }
                                            if (p2 > ndp - ncp) continue;
                                            if (cn2 == 0 && cn3 > 0) {
                                                if (ncp - cm2 - l1 - cn3 != 0) continue;
                                            } else if (ncp - cm2 - cn2 - l1 - cn3 > 0) {
                                                continue;
                                            }
                                        }
                                        long long v =
                                            cm1x2 + 2 * (cm2 + cn1 + cn2 + cn3 + p1 + p2);
                                        if (v > best.v)
                                            consider(best, v,
                                                     {{"lcm1", R(lcm1)},
                                                      {"cm2", R(cm2)},
                                                      {"cn1", R(cn1)},
                                                      {"cn2", R(cn2)},
                                                      {"cn3", R(cn3)},
                                                      {"p1", R(p1)},
                                                      {"p2", R(p2)},
                                                      {"l1u", R(l1u)},
                                                      {"l1d", R(l1d)}});
                                    }
                    }
    }
    return best;
}

Best opt_si(long long nd, long long nc, long long nr, long long ns) {
    const long long q = std::max({nd, nc, nr, ns});
    Best best;
    for (long long lcm1 = 0; lcm1 <= nc; ++lcm1) {
        const long long cm1x2 = std::min(lcm1, 2 * ipos(nd - nc + lcm1));
        const long long ndp = ipos(nd - lcm1);
        const long long ncp = nc - lcm1;
        for (long long cm2 = 0; lcm1 + cm2 <= q; ++cm2)
            for (long long cf1 = 0; lcm1 + cm2 + cf1 <= q; ++cf1)
                for (long long cf2 = 0; lcm1 + cm2 + cf1 + cf2 <= q; ++cf2)
                    for (long long df1 = 0; lcm1 + cm2 + cf1 + cf2 + 4 * df1 <= q; ++df1)
                        for (long long df2 = 0;
                             lcm1 + cm2 + cf1 + cf2 + 4 * df1 + 2 * df2 <= q; ++df2)
                            for (long long cn2 = 0; lcm1 + cm2 + cf1 + cf2 + 4 * df1 +
                                                        2 * df2 + 2 * cn2 <= q;
                                 ++cn2)
                                for (long long l1 = 0; lcm1 + cm2 + cf1 + cf2 + 4 * df1 +
                                                           2 * df2 + 2 * cn2 + l1 <= q;
                                     ++l1) {
                                    const long long cn1 = 2 * df1;
                                    if (lcm1 + cm2 + cf1 + l1 + cf2 + 2 * cn1 + 2 * cn2 +
                                            2 * df2 > ns)
                                        continue;
                                    const long long l2 =
                                        ipos(nr - (ncp - l1 + cf2 + 2 * df1 + 2 * df2));
                                    if (lcm1 > 0 && nr - l2 > nc - lcm1) continue;
                                    const long long nrp = nr - l2;
                                    if (cm2 + cf1 > ipos(ncp - nrp)) continue;
                                    if (cm2 + cf1 > ncp - ndp) continue;
                                    const long long blk = 2 * df1 + 2 * df2 + cf1 + cf2;
                                    if (cm2 > 0 && blk > ipos(nrp - ndp)) continue;
                                    const long long leftover = ncp - cm2 - cf1 - l1;
                                    if (blk > ipos(nrp - leftover)) continue;
                                    if (cm2 > ipos(ndp - leftover)) continue;
                                    if (leftover - cf2 - cn1 - cn2 < 0) continue;
                                    if (cn1 + cn2 > nrp) continue;
                                    if (leftover - cf2 - cn1 - cn2 - 2 * df2 > 0) continue;
                                    if (cn1 + cn2 > 0) {
                                        const long long T_cn =
                                            lcm1 + cm2 + cf1 + l1 + cf2;
                                        const long long l3 =
                                            nr - nc + T_cn - l2 - blk;
                                        if (l3 < 0) continue;
                                    }
                                    long long v =
                                        cm1x2 +
                                        2 * (cm2 + cf1 + df1 + df2 + cf2 + cn1 + cn2);
                                    if (v > best.v)
                                        consider(best, v,
                                                 {{"lcm1", R(lcm1)},
                                                  {"cm2", R(cm2)},
                                                  {"cf1", R(cf1)},
                                                  {"cf2", R(cf2)},
                                                  {"df1", R(df1)},
                                                  {"df2", R(df2)},
                                                  {"cn2", R(cn2)},
                                                  {"l1", R(l1)}});
                                }
    }
    return best;
}

}  // namespace

OptResult optimize(SchemeId scheme, const LdParams& p) {
    p.validate();
    OptResult out;
    if (p.q() == 0) return out;
    const long long nd = 2LL * p.n_d, nc = 2LL * p.n_c, nr = 2LL * p.n_r, ns = 2LL * p.n_s;
    Best b;
    switch (scheme) {
        case SchemeId::II:
            out.best = Rational(std::max<long long>(p.n_d, std::min(p.n_r, p.n_s)));
            out.argmax = {{"cm", Rational(p.n_d)},
                          {"df", Rational(std::min(ipos(p.n_s - p.n_d), ipos(p.n_r - p.n_d)))}};
            return out;
        case SchemeId::WI1: b = opt_wi1(nd, nc, nr, ns); break;
        case SchemeId::WI2: b = opt_wi2(nd, nc, nr, ns); break;
        case SchemeId::WI3a: b = opt_wi3(nd, nc, nr, ns, true); break;
        case SchemeId::WI3b: b = opt_wi3(nd, nc, nr, ns, false); break;
        case SchemeId::SI: b = opt_si(nd, nc, nr, ns); break;
    }
    if (b.v < 0) return out;  // infeasible: all-zero allocation, rate 0
    out.best = Rational(b.v, 2);
    for (auto& [k, v] : b.arg) out.argmax[k] = v / Rational(2);
    return out;
}

OptResult optimize_best(const LdParams& p) {
    p.validate();
    if (p.q() == 0) return {};
    SchemeChoice ch = classify_regime(p);
    switch (ch.scheme) {
        case SchemeId::II: return optimize(SchemeId::II, p);
        case SchemeId::SI: return optimize(SchemeId::SI, p);
        case SchemeId::WI1: return optimize(SchemeId::WI1, p);
        case SchemeId::WI2: return optimize(SchemeId::WI2, p);
        default: {
            OptResult a = optimize(SchemeId::WI3a, p);
            OptResult b = optimize(SchemeId::WI3b, p);
            return a.best >= b.best ? a : b;
        }
    }
}

}  // namespace irc
