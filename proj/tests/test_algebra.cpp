#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "galwalks/expr.hpp"
#include "galwalks/poly.hpp"
#include "galwalks/series.hpp"
#include "galwalks/upoly.hpp"

using namespace gw;

namespace {

const std::vector<std::string> kVars = {"X", "Y", "t", "Z", "a", "b", "c", "lambda"};

Frac F(const std::string& s) { return parse_expr(s, kVars); }
Poly P(const std::string& s) {
    Frac f = F(s);
    REQUIRE(f.is_poly());
    return f.num();
}

Poly random_poly(std::mt19937_64& rng, const std::vector<int>& vars, int nterms, int maxdeg) {
    std::uniform_int_distribution<int> dc(-9, 9), de(0, maxdeg);
    Poly p;
    for (int i = 0; i < nterms; ++i) {
        Monomial m;
        for (int v : vars) m[v] = uint16_t(de(rng));
        p += Poly::term(m, Rational(dc(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    CHECK(P("(X+Y) + (X-Y)") == P("2*X"));
    CHECK(P("(X*Y - t) * 1") == P("X*Y - t"));
    CHECK(P("(X+1)*(X-1)") == P("X^2-1"));
    CHECK(to_string(P("X^2 - 1")) == "X^2 - 1");
}

TEST_CASE("pseudo divmod") {
    int Zv = VZ;
    auto r = pseudo_divmod(P("X^2-1"), P("X-1"), VX);
    CHECK(r.q == P("X+1"));
    CHECK(r.r.is_zero());
    // reconstruction with scale
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Poly a = random_poly(rng, {VX, Zv}, 5, 4);
        Poly b = random_poly(rng, {VX, Zv}, 3, 2);
        if (b.is_zero() || b.degree(Zv) < 1) continue;
        auto d = pseudo_divmod(a, b, Zv);
        CHECK(d.scale * a == d.q * b + d.r);
        CHECK(d.r.degree(Zv) < b.degree(Zv));
    }
}

TEST_CASE("gcd basics and idempotence") {
    CHECK(poly_gcd(P("X^2-1"), P("X-1")) == P("X-1"));
    Poly p = P("3*X^2*Y - 6*X*Y");
    CHECK(poly_gcd(p, p) == P("X^2*Y - 2*X*Y"));  // primitive-normalized
    CHECK(poly_gcd(Poly(), p) == P("X^2*Y - 2*X*Y"));
    // gcd(K~ of G_lambda, X) = 1: constant term in X is -t
    Poly kt = P("X*Y - t*(1 + X*Y^2 + X^2 + X^3*Y^2 + lambda*X^2*Y)");
    CHECK(poly_gcd(kt, Poly::var(VX)).is_constant());
}

TEST_CASE("gcd of random products") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20; ++i) {
        Poly g = random_poly(rng, {VX, VY}, 3, 2);
        Poly a = random_poly(rng, {VX, VY}, 3, 2);
        Poly b = random_poly(rng, {VX, VY}, 3, 2);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        Poly d = poly_gcd(g * a, g * b);
        auto q = Poly::divide_exact(d, poly_gcd(d, g.primitive()));
        // gcd(ga, gb) is a multiple of primitive g
        CHECK(Poly::divide_exact(d, g.primitive()).has_value());
        (void)q;
    }
}

TEST_CASE("resultant convention and properties") {
    CHECK(resultant(P("Z-a"), P("Z-b"), VZ) == P("b-a"));
    CHECK(resultant(P("Z^2"), P("Z-c"), VZ) == P("c^2"));
    Poly kt = P("X*Y - t*(1 + X*Y^2 + X^2 + X^3*Y^2 + lambda*X^2*Y)");
    Poly ktz = kt.rename([] {
        std::array<int, kMaxVars> r{};
        for (int i = 0; i < kMaxVars; ++i) r[i] = i;
        r[VY] = VZ;
        return r;
    }());
    CHECK(resultant(ktz, P("Z-Y"), VZ) == kt);
    // resultant vanishes iff common factor in var (random products)
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 10; ++i) {
        Poly g = random_poly(rng, {VZ, VX}, 2, 2);
        Poly a = random_poly(rng, {VZ, VX}, 2, 1);
        Poly b = random_poly(rng, {VZ, VX}, 2, 1);
        if (g.degree(VZ) < 1 || a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(g * a, g * b, VZ).is_zero());
        Poly ca = P("Z-1"), cb = P("Z-2");
        CHECK(!resultant(ca, cb, VZ).is_zero());
        ++checked;
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("(Z-1)^2*(Z-2)"), VZ) == P("(Z-1)*(Z-2)"));
    CHECK(squarefree_part(P("Z^4"), VZ) == P("Z"));
    Poly sf = P("(Z-1)*(Z-3)");
    CHECK(squarefree_part(sf, VZ) == sf);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 15; ++i) {
        Poly p = random_poly(rng, {VZ, VX}, 4, 3);
        if (p.degree(VZ) < 1) continue;
        Poly r = squarefree_part(p * p, VZ);
        CHECK(poly_gcd(r, r.derivative(VZ)).is_constant());
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(P("Z^2 + b*Z + c"), VZ) == P("b^2 - 4*c"));
    CHECK(discriminant(P("(Z-a)^2"), VZ).is_zero());
    // worked quadratic with parameters (x -> a, y -> b here)
    Poly p = P("a*b^2*Z^2 + (a^2*b^2 + lambda*a*b + a)*Z - 1");
    Poly expect = P("a*(a^3*b^4 + 2*lambda*a^2*b^3 + lambda^2*a*b^2 + 2*a^2*b^2 + 2*lambda*a*b + 4*b^2 + a)");
    CHECK(discriminant(p, VZ) == expect);
}

TEST_CASE("newton polygon") {
    auto rep = newton_polygon(P("2*t*Y^4 + lambda*t*Y - Y^3 + 2*t"), VY);
    REQUIRE(rep.slopes.size() == 2);
    CHECK(rep.slopes[0].slope == Rational(-1));
    CHECK(rep.slopes[0].mult == 1);
    CHECK(rep.slopes[1].slope == Rational(1, 3));
    CHECK(rep.slopes[1].mult == 3);
    auto r2 = newton_polygon(P("Y - t"), VY);
    REQUIRE(r2.slopes.size() == 1);
    CHECK(r2.slopes[0].slope == Rational(1));
    CHECK(r2.slopes[0].mult == 1);
    auto r3 = newton_polygon(P("Y^2 - t^2"), VY);
    REQUIRE(r3.slopes.size() == 1);
    CHECK(r3.slopes[0].slope == Rational(1));
    CHECK(r3.slopes[0].mult == 2);
    // multiplicities sum to the degree (minus zero roots)
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        Poly p = random_poly(rng, {VY, VT}, 5, 4);
        if (p.is_zero() || p.degree(VY) < 1) continue;
        auto r = newton_polygon(p, VY);
        int total = r.zero_roots;
        for (auto& s : r.slopes) total += s.mult;
        CHECK(total == p.degree(VY));
    }
}

TEST_CASE("fractions reduce and print canonically") {
    Frac f = F("(X^2-1)/(X-1)");
    CHECK(f == F("X+1"));
    Frac g = F("X/2");
    CHECK(to_string(g) == "(X)/(2)");
    CHECK(F(to_string(g)) == g);
    Frac h = F("(3*lambda*t*X^2 - lambda*t - 4*X)/(-4*t*X^2 - 4*t)");
    CHECK(F(to_string(h)) == h);
    CHECK(h.den().lead_coeff() > 0);
}

TEST_CASE("series ops") {
    // (1 - t*S)^{-1} at N=3 is 1 + t*S + t^2*S^2 for S = X+Y
    Frac S = F("X+Y");
    TruncSeries kern = TruncSeries::from_frac(F("1 - t*(X+Y)"), 3);
    TruncSeries inv = kern.inverse();
    CHECK(inv.coeff(0) == Frac(Rational(1)));
    CHECK(inv.coeff(1) == S);
    CHECK(inv.coeff(2) == S * S);
    // s * invert(s) == 1 for random unit series
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        std::vector<Frac> cs;
        std::uniform_int_distribution<int> dc(-4, 4);
        cs.push_back(Frac(Rational(1 + std::abs(dc(rng)))));
        for (int k = 1; k < 6; ++k) cs.push_back(Frac(Rational(dc(rng))) * Frac::var(VX));
        TruncSeries s(0, cs);
        TruncSeries p = s * s.inverse();
        for (int n = 0; n < p.ord(); ++n)
            CHECK(p.coeff(n) == (n == 0 ? Frac(Rational(1)) : Frac()));
    }
    // Laurent expansion of a fraction
    TruncSeries lf = TruncSeries::from_frac(F("(1+t)/(t^2)"), 3);
    CHECK(lf.lead() == -2);
    CHECK(lf.coeff(-2) == Frac(Rational(1)));
    CHECK(lf.coeff(-1) == Frac(Rational(1)));
    CHECK(lf.coeff(0) == Frac());
    // pole-bound bookkeeping is additive under multiplication
    TruncSeries px(0, {F("1/X")});
    TruncSeries pxx(0, {F("1/X^2")});
    CHECK((px * pxx).pole_x() == 3);
}

TEST_CASE("univariate quotient algebra") {
    UPoly m = UPoly::from_poly(P("Z^2 - 3*Z + 2"), VZ);  // roots 1, 2
    UPoly h = UPoly::from_poly(P("Z"), VZ);
    CHECK(m.trace_of(h) == F("3"));
    CHECK(m.norm_of(h) == F("2"));
    UPoly h2 = UPoly::from_poly(P("Z^2"), VZ);
    CHECK(m.trace_of(h2) == F("5"));
    CHECK(m.norm_of(h2) == F("4"));
    // inverse mod
    UPoly inv = h.inverse_mod(m);
    UPoly prod = h.mulmod(inv, m);
    CHECK(prod.deg() == 0);
    CHECK(prod[0] == Frac(Rational(1)));
    // non-monic modulus: roots of 2(Z-1/2)(Z-3) = 2Z^2-7Z+3
    UPoly m2 = UPoly::from_poly(P("2*Z^2 - 7*Z + 3"), VZ);
    CHECK(m2.trace_of(h) == F("7/2"));
    CHECK(m2.norm_of(h) == F("3/2"));
}

TEST_CASE("expression parser errors") {
    CHECK_THROWS(F("X +"));
    CHECK_THROWS(F("mu"));
    CHECK_THROWS(F("X^-2"));
    CHECK(F("-X^2") == -F("X^2"));
    CHECK(F("2^3") == F("8"));
}
