#ifndef GALWALKS_UPOLY_HPP
#define GALWALKS_UPOLY_HPP

#include <vector>

#include "galwalks/frac.hpp"

namespace gw {

// Dense univariate polynomial with Frac coefficients (index = exponent).
// The distinguished variable is implicit; conversions name it explicitly.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Frac> cs) : c_(std::move(cs)) { trim(); }
    static UPoly constant(const Frac& f) { return UPoly(std::vector<Frac>{f}); }

    static UPoly from_poly(const Poly& p, int v);
    static UPoly from_frac_in(const Frac& f, int v);  // den must be v-free
    Poly to_poly(int v) const;  // coefficients must be polynomials
    Frac to_frac(int v) const;

    int deg() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Frac& operator[](int k) const { return c_[size_t(k)]; }
    Frac& operator[](int k) { return c_[size_t(k)]; }
    const std::vector<Frac>& coeffs() const { return c_; }
    const Frac& lc() const { return c_.back(); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Frac& f) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    UPoly monic() const;
    Frac eval(const Frac& x) const;

    // euclidean division by a nonzero divisor over the fraction field
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(UPoly a, UPoly b);  // monic gcd
    UPoly mod(const UPoly& m) const;
    UPoly mulmod(const UPoly& o, const UPoly& m) const;
    // extended gcd: returns g (monic) with u*a + v*b = g
    static UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& u, UPoly& v);
    // inverse of *this modulo m; throws if not coprime
    UPoly inverse_mod(const UPoly& m) const;

    // power sums p_0..p_k of the roots of *this via Newton identities
    std::vector<Frac> power_sums(int k) const;
    // sum of h(root) over the roots of *this (with multiplicity); h reduced mod *this
    Frac trace_of(const UPoly& h) const;
    // product of h(root) over the roots: Res(this, h)/lc(this)^deg(h)
    Frac norm_of(const UPoly& h) const;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

private:
    std::vector<Frac> c_;
};

}  // namespace gw

#endif
