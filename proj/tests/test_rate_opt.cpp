#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "irc/capacity.hpp"
#include "irc/rate_opt.hpp"

using namespace irc;

TEST_CASE("constraint set shape") {
    ConstraintSet cs = compile_constraints(SchemeId::WI1, {3, 1, 2, 5});
    CHECK(cs.variables.size() == 6);
    // eight constraint families beyond non-negativity
    CHECK(cs.constraints.size() == 9);
}

TEST_CASE("table allocation satisfies its constraints") {
    LdParams p{3, 1, 2, 5};
    RateAllocation a = allocate(p);
    auto v = check_allocation(compile_constraints(a.choice.scheme, p), a);
    CHECK(v.empty());
}

TEST_CASE("perturbed private rate is flagged") {
    LdParams p{3, 1, 2, 5};
    RateAllocation a = allocate(p);
    Assignment asg;
    for (auto& [k, val] : a.rates) asg[k] = val;
    for (auto& [k, val] : a.paddings) asg[k] = val;
    // merge the two cn layers into the single optimizer variable
    asg["cn"] = a.rate("cn1") + a.rate("cn2");
    asg.erase("cn1");
    asg.erase("cn2");
    asg["p"] = Rational(p.n_d - p.n_c + 1);
    auto v = check_allocation(compile_constraints(SchemeId::WI1, p), asg);
    REQUIRE(!v.empty());
    bool found = false;
    for (auto& tag : v)
        if (tag.find("p <= nd - nc") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("all-zero allocation is feasible") {
    LdParams p{3, 1, 2, 5};
    Assignment zero{{"cn", Rational(0)}, {"df1", Rational(0)}, {"df2", Rational(0)},
                    {"cf", Rational(0)}, {"p", Rational(0)},   {"l1", Rational(0)}};
    CHECK(check_allocation(compile_constraints(SchemeId::WI1, p), zero).empty());
}

TEST_CASE("optimizer matches the tables on examples") {
    CHECK(optimize(SchemeId::WI1, {3, 1, 2, 5}).best == Rational(6));
    CHECK(optimize(SchemeId::SI, {1, 2, 5, 4}).best == Rational(6));
    CHECK(optimize_best({0, 0, 0, 0}).best == Rational(0));
    CHECK(optimize(SchemeId::II, {3, 3, 5, 4}).best == Rational(4));
}

TEST_CASE("optimizer equals capacity on a reduced grid") {
    for (int nd = 0; nd <= 4; ++nd)
        for (int nc = 0; nc <= 4; ++nc)
            for (int nr = 0; nr <= 4; ++nr)
                for (int ns = nc + 1; ns <= 4; ++ns) {
                    LdParams p{nd, nc, nr, ns};
                    OptResult r = optimize_best(p);
                    INFO(p.str());
                    CHECK(r.best == Rational(ld_sum_capacity(p)));
                }
}

TEST_CASE("optimizer argmax is feasible per the declarative set") {
    for (LdParams p : {LdParams{3, 1, 2, 5}, LdParams{6, 2, 3, 4}, LdParams{1, 2, 5, 4},
                       LdParams{4, 3, 2, 6}, LdParams{5, 3, 1, 4}}) {
        SchemeChoice ch = classify_regime(p);
        SchemeId s = ch.scheme;
        OptResult r = optimize_best(p);
        if (s == SchemeId::WI3a || s == SchemeId::WI3b) {
            bool ok_a = check_allocation(compile_constraints(SchemeId::WI3a, p), r.argmax)
                            .empty();
            bool ok_b = check_allocation(compile_constraints(SchemeId::WI3b, p), r.argmax)
                            .empty();
            CHECK((ok_a || ok_b));
        } else {
            CHECK(check_allocation(compile_constraints(s, p), r.argmax).empty());
        }
    }
}
