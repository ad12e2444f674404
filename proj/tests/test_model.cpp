#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galwalks/expr.hpp"
#include "galwalks/model.hpp"

using namespace gw;

namespace {
Model gmod() { return load_model_file(std::string(GW_FIXTURES) + "/gmod.model"); }
Frac F(const std::string& s) { return parse_expr(s, {"X", "Y", "t", "Z", "lambda"}); }
}  // namespace

TEST_CASE("load gmod") {
    Model m = gmod();
    CHECK(m.mx == 1);
    CHECK(m.Mx == 2);
    CHECK(m.my == 1);
    CHECK(m.My == 1);
    CHECK(m.has_small_backward_steps);
    CHECK(!m.is_univariate);
    CHECK(m.step_poly() == F("1/(X*Y) + Y + X/Y + X^2*Y + lambda*X"));
}

TEST_CASE("load errors and flags") {
    CHECK_THROWS(load_model_text(R"({"steps": []})"));
    CHECK_THROWS(load_model_text(R"({"steps": [{"dx": 1, "dy": 0, "w": "0"}]})"));
    CHECK_THROWS(load_model_text(R"({"steps": [{"dx": 1, "dy": 0, "w": "mu"}]})"));
    CHECK_THROWS(load_model_text(R"({"steps": [{"dx": 1, "dy": 0}, {"dx": 1, "dy": 0}]})"));
    Model uni = load_model_text(R"({"steps": [{"dx": 1, "dy": 0}]})");
    CHECK(uni.is_univariate);
    CHECK_THROWS(make_kernel(uni));
    Model up = load_model_text(R"({"steps": [{"dx": 1, "dy": 1}, {"dx": -1, "dy": 0}]})");
    CHECK(up.is_upper_or_lower_diagonal);
}

TEST_CASE("kernel polynomials") {
    Kernel k = make_kernel(gmod());
    CHECK(Frac(k.ktilde) == F("X*Y - t*(1 + X*Y^2 + X^2 + X^3*Y^2 + lambda*X^2*Y)"));
    CHECK(k.dx == 3);
    CHECK(k.dy == 2);
    // K reconstructs S
    Frac shift = F("X*Y");
    CHECK(k.ktilde_exact == shift - F("t") * shift * gmod().step_poly());

    Model small = load_model_text(
        R"({"steps": [{"dx": -1, "dy": 0}, {"dx": 0, "dy": 1}, {"dx": 1, "dy": -1}]})");
    Kernel ks = make_kernel(small);
    CHECK(Frac(ks.ktilde) == F("X*Y - t*(Y + X*Y^2 + X^2)"));

    Model h2 = load_model_file(std::string(GW_FIXTURES) + "/h2.model");
    Kernel kh = make_kernel(h2);
    CHECK(Frac(kh.ktilde) == F("X*Y - t*(Y + 1 + X^3*Y + X^3*Y^2)"));
}

TEST_CASE("functional equation templates") {
    Kernel k = make_kernel(gmod());
    FunctionalEquation fe = functional_equation(k);
    CHECK(fe.eps == 1);
    CHECK(fe.ktilde_x0 == F("-t*(X^2+1)"));
    CHECK(fe.ktilde_0y == F("-t"));
    CHECK(fe.rhs_i == 1);
    CHECK(fe.rhs_j == 1);

    Model no_diag = load_model_text(
        R"({"steps": [{"dx": -1, "dy": 0}, {"dx": 0, "dy": 1}, {"dx": 1, "dy": -1}]})");
    CHECK(functional_equation(make_kernel(no_diag)).eps == 0);

    Model h2 = load_model_file(std::string(GW_FIXTURES) + "/h2.model");
    FunctionalEquation fh = functional_equation(make_kernel(h2));
    CHECK(fh.ktilde_x0 == F("-t"));
    CHECK(fh.ktilde_0y == F("-t*(Y+1)"));

    Model o18 = load_model_file(std::string(GW_FIXTURES) + "/o18.model");
    CHECK_THROWS(functional_equation(make_kernel(o18)));
}

TEST_CASE("genus upper bound") {
    GenusReport g = genus_upper_bound(make_kernel(gmod()));
    CHECK(g.smooth_genus == 2);
    CHECK(g.probe == GenusReport::Smooth);
    Model small = load_model_text(
        R"({"steps": [{"dx": -1, "dy": 0}, {"dx": 0, "dy": 1}, {"dx": 1, "dy": -1}]})");
    CHECK(genus_upper_bound(make_kernel(small)).smooth_genus == 1);
    Model o18 = load_model_file(std::string(GW_FIXTURES) + "/o18.model");
    GenusReport g18 = genus_upper_bound(make_kernel(o18));
    CHECK(g18.dx == 3);
    CHECK(g18.dy == 2);
    CHECK(g18.smooth_genus == 2);
}
