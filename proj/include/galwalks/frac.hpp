#ifndef GALWALKS_FRAC_HPP
#define GALWALKS_FRAC_HPP

#include <string>

#include "galwalks/poly.hpp"

namespace gw {

// Reduced rational fraction num/den over Q[all vars]. Canonical form: num and
// den are coprime with integer coefficients of gcd 1 overall, and den has a
// positive leading coefficient in the global lex order.
class Frac {
public:
    Frac() : num_(), den_(Rational(1)) {}
    explicit Frac(const Rational& c) : num_(c), den_(Rational(1)) {}
    explicit Frac(long n) : num_(Rational(n)), den_(Rational(1)) {}
    explicit Frac(const Poly& p) : num_(p), den_(Rational(1)) { canonicalize_scale(); }
    Frac(const Poly& n, const Poly& d);

    static Frac var(int v) { return Frac(Poly::var(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant() && den_.const_value() == 1; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational const_value() const { return num_.const_value() / den_.const_value(); }
    bool has_var(int v) const { return num_.has_var(v) || den_.has_var(v); }

    Frac operator-() const;
    Frac operator+(const Frac& o) const;
    Frac operator-(const Frac& o) const;
    Frac operator*(const Frac& o) const;
    Frac operator/(const Frac& o) const;
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }
    bool operator==(const Frac& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    Frac inverse() const;
    // substitute v := value for every occurrence in num and den
    Frac subst(int v, const Frac& value) const;
    Frac rename(const std::array<int, kMaxVars>& ren) const;
    Frac derivative(int v) const;
    Rational eval(const std::vector<std::pair<int, Rational>>& at) const;

    // pole order at var = 0: max(0, val_var(den) - val_var(num)); 0 for the
    // zero fraction
    int pole_order(int v) const;

    std::string str() const;

private:
    void canonicalize_scale();
    Poly num_, den_;
};

inline Frac operator*(const Rational& c, const Frac& f) { return Frac(c) * f; }

}  // namespace gw

#endif
