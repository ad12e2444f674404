#ifndef GALWALKS_POLY_HPP
#define GALWALKS_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galwalks/vars.hpp"

namespace gw {

// Sparse multivariate polynomial over the rationals in the global variable
// set. Terms are kept sorted in descending lex order (leading term first),
// zero coefficients are never stored.
class Poly {
public:
    struct Term {
        Monomial m;
        Rational c;
    };

    Poly() = default;
    explicit Poly(const Rational& c) {
        if (c != 0) terms_.push_back({Monomial{}, c});
    }
    explicit Poly(long n) : Poly(Rational(n)) {}

    static Poly var(int v, uint16_t k = 1) {
        Poly p;
        p.terms_.push_back({Monomial::var(v, k), Rational(1)});
        return p;
    }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }
    // constant term as rational; poly must be constant
    const Rational& const_value() const;

    const Monomial& lead_mono() const { return terms_.front().m; }
    const Rational& lead_coeff() const { return terms_.front().c; }

    int degree(int v) const;
    int total_degree() const;
    bool has_var(int v) const;
    // smallest exponent of v across terms
    int valuation(int v) const;

    Poly operator-() const;
    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator*(const Poly& q) const;
    Poly& operator+=(const Poly& q) { return *this = *this + q; }
    Poly& operator-=(const Poly& q) { return *this = *this - q; }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }
    Poly operator*(const Rational& c) const;
    Poly operator/(const Rational& c) const;
    bool operator==(const Poly& q) const;
    bool operator!=(const Poly& q) const { return !(*this == q); }

    Poly derivative(int v) const;

    // coefficients of v^0..v^deg, each a poly free of v
    std::vector<Poly> coeffs_in(int v) const;
    static Poly from_coeffs(int v, const std::vector<Poly>& cs);
    Poly coeff_of(int v, int k) const;

    // substitute v := value (polynomial)
    Poly subst(int v, const Poly& value) const;
    // simultaneous variable renaming: ren[i] = new id for var i (identity by default)
    Poly rename(const std::array<int, kMaxVars>& ren) const;
    // evaluate at rational points for the given vars (all occurrences must be covered)
    Rational eval(const std::vector<std::pair<int, Rational>>& at) const;

    // integer-primitive normalization: returns c with *this == c * primitive,
    // primitive has integer coprime coefficients and positive leading one
    Rational primitive_part();
    Poly primitive() const {
        Poly p = *this;
        p.primitive_part();
        return p;
    }

    std::string str() const;  // canonical text (see expr.cpp)

    // exact division: returns quotient iff divisor divides exactly
    static std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

    static Poly from_map(std::map<Monomial, Rational>&& m);

private:
    std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// pseudo-division in v: scale * a = q*b + r with deg_v r < deg_v b,
// scale = lc_v(b)^k
struct PseudoDiv {
    Poly q, r;
    Poly scale;
};
PseudoDiv pseudo_divmod(const Poly& a, const Poly& b, int v);

// gcd over Q[all vars], normalized integer-primitive with positive leading
// coefficient; gcd(0, b) = normalized b
Poly poly_gcd(const Poly& a, const Poly& b);

// Sylvester determinant with p-rows first (fixed convention)
Poly resultant(const Poly& p, const Poly& q, int v);

// p / gcd(p, dp/dv), v-free content dropped, normalized primitive
Poly squarefree_part(const Poly& p, int v);

// Res(p, p', v) / lc with sign (-1)^(d(d-1)/2)
Poly discriminant(const Poly& p, int v);

// content of p viewed in (Q[others])[vars]: gcd of coefficients over the
// monomials in `vars`
Poly content_in(const Poly& p, const std::vector<int>& vars);

struct NewtonSlope {
    Rational slope;  // t-adic valuation of the roots
    int mult;
};
struct NewtonPolygonReport {
    std::vector<NewtonSlope> slopes;  // sorted by increasing slope
    int zero_roots;                   // multiplicity of the root 0
    int degree;
};
// p viewed as univariate in main_var with Q[t]-coefficients
NewtonPolygonReport newton_polygon(const Poly& p, int main_var);

}  // namespace gw

#endif
