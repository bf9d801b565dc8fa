#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "irc/curve.hpp"
#include "irc/rational.hpp"
#include "irc/verify.hpp"

using namespace irc;

TEST_CASE("curve CSV schema and pinned rows") {
    CurveSpec spec;
    spec.beta = Rational(2);
    spec.gamma = Rational(3);
    spec.alpha_min = Rational(1);
    spec.alpha_max = Rational(3);
    spec.step = Rational(1, 20);
    std::ostringstream os;
    write_curve_csv(os, spec);
    std::string csv = os.str();
    CHECK(csv.rfind("alpha,d_irc,d_ic,binding\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);  // LF only
    CHECK(csv.find("\n1.5,3.5,1.5,") != std::string::npos);
    CHECK(csv.find("\n2,3,2,") != std::string::npos);
    // identical on re-emission
    std::ostringstream os2;
    write_curve_csv(os2, spec);
    CHECK(os2.str() == csv);
}

TEST_CASE("curve with alpha from zero includes the free-interference point") {
    CurveSpec spec;
    spec.beta = Rational(1, 10);
    spec.gamma = Rational(7, 10);
    spec.alpha_min = Rational(0);
    spec.alpha_max = Rational(1, 2);
    spec.step = Rational(1, 10);
    std::ostringstream os;
    write_curve_csv(os, spec);
    CHECK(os.str().find("\n0,2,2,") != std::string::npos);
}

TEST_CASE("slope -1 region for beta = gamma = 0.7") {
    CurveSpec spec;
    spec.beta = Rational(7, 10);
    spec.gamma = Rational(7, 10);
    spec.alpha_min = Rational(1, 20);
    spec.alpha_max = Rational(3, 5);
    spec.step = Rational(1, 20);
    std::ostringstream os;
    write_curve_csv(os, spec);
    // rows are affine in alpha with slope -1: d(a) = 2 - a
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        double a = std::stod(line.substr(0, c1));
        double d = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK(d == doctest::Approx(2.0 - a).epsilon(1e-12));
    }
}

TEST_CASE("verify report JSON shape") {
    SweepSpec s;
    s.nd_max = s.nc_max = s.nr_max = s.ns_max = 2;
    s.checks = {"sandwich"};
    s.workers = 2;
    VerifyReport rep = run_verify(s);
    CHECK(rep.ok());
    std::string j = rep.to_json();
    CHECK(j.find("\"grid_size\":") != std::string::npos);
    CHECK(j.find("\"checks\":[{\"name\":\"sandwich\",\"failures\":[]}]") !=
          std::string::npos);
    CHECK(j.find("\"elapsed_ms\":") != std::string::npos);
}

TEST_CASE("rational parsing on the command-line forms") {
    CHECK(parse_rational("7/10") == Rational(7, 10));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("0.7") == Rational(7, 10));
    CHECK(parse_rational("1.5") == Rational(3, 2));
    CHECK(parse_rational("0.05") == Rational(1, 20));
}
