#include "galwalks/upoly.hpp"

#include <functional>
#include <stdexcept>

namespace gw {

UPoly UPoly::from_poly(const Poly& p, int v) {
    auto cs = p.coeffs_in(v);
    std::vector<Frac> fc;
    fc.reserve(cs.size());
    for (auto& c : cs) fc.emplace_back(c);
    return UPoly(std::move(fc));
}

UPoly UPoly::from_frac_in(const Frac& f, int v) {
    if (f.den().has_var(v))
        throw std::logic_error("from_frac_in: denominator involves the main variable");
    auto cs = f.num().coeffs_in(v);
    std::vector<Frac> fc;
    fc.reserve(cs.size());
    for (auto& c : cs) fc.push_back(Frac(c, f.den()));
    return UPoly(std::move(fc));
}

Poly UPoly::to_poly(int v) const {
    Poly r;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_poly() && !(c_[k].den().is_constant()))
            throw std::logic_error("to_poly: coefficient is not polynomial");
        Poly pk = c_[k].num() / c_[k].den().const_value();
        r += pk * Poly::term(Monomial::var(v, uint16_t(k)), 1);
    }
    return r;
}

Frac UPoly::to_frac(int v) const {
    Frac r;
    Frac zv = Frac::var(v);
    for (size_t k = c_.size(); k-- > 0;) r = r * zv + c_[k];
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Frac> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] += o.c_[i];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Frac> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < o.c_.size()) r[i] -= o.c_[i];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Frac> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Frac& f) const {
    std::vector<Frac> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * f;
    return UPoly(std::move(r));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Frac> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Frac(Rational(long(i)));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

Frac UPoly::eval(const Frac& x) const {
    Frac r;
    for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("univariate division by zero");
    r = a;
    q = UPoly();
    Frac inv_lc = b.lc().inverse();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        Frac c = r.lc() * inv_lc;
        std::vector<Frac> qc(size_t(k) + 1);
        qc[size_t(k)] = c;
        UPoly mono(std::move(qc));
        q = q + mono;
        r = r - mono * b;
    }
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UPoly UPoly::mod(const UPoly& m) const {
    UPoly q, r;
    divmod(*this, m, q, r);
    return r;
}

UPoly UPoly::mulmod(const UPoly& o, const UPoly& m) const { return (*this * o).mod(m); }

UPoly UPoly::ext_gcd(const UPoly& a, const UPoly& b, UPoly& u, UPoly& v) {
    UPoly r0 = a, r1 = b;
    UPoly u0 = UPoly::constant(Frac(Rational(1))), u1;
    UPoly v0, v1 = UPoly::constant(Frac(Rational(1)));
    while (!r1.is_zero()) {
        UPoly q, r;
        divmod(r0, r1, q, r);
        UPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) {
        u = UPoly();
        v = UPoly();
        return r0;
    }
    Frac inv = r0.lc().inverse();
    u = u0 * inv;
    v = v0 * inv;
    return r0 * inv;
}

UPoly UPoly::inverse_mod(const UPoly& m) const {
    UPoly u, v;
    UPoly g = ext_gcd(this->mod(m), m, u, v);
    if (g.deg() != 0)
        throw std::domain_error("inverse_mod: element not invertible modulo the modulus");
    return u.mod(m);
}

std::vector<Frac> UPoly::power_sums(int k) const {
    int n = deg();
    if (n < 0) throw std::domain_error("power_sums of zero polynomial");
    UPoly m = monic();
    // e_i = (-1)^i * coeff of Z^(n-i)
    std::vector<Frac> e(size_t(n) + 1);
    e[0] = Frac(Rational(1));
    for (int i = 1; i <= n; ++i) {
        e[size_t(i)] = m[n - i];
        if (i % 2) e[size_t(i)] = -e[size_t(i)];
    }
    std::vector<Frac> p(size_t(k) + 1);
    p[0] = Frac(Rational(n));
    for (int j = 1; j <= k; ++j) {
        Frac s;
        int lim = std::min(j, n);
        for (int i = 1; i < lim; ++i) {
            Frac term = e[size_t(i)] * p[size_t(j - i)];
            s += (i % 2) ? term : -term;
        }
        if (j <= n) {
            Frac term = e[size_t(j)] * Frac(Rational(long(j)));
            s += (j % 2) ? term : -term;
        } else {
            Frac term = e[size_t(n)] * p[size_t(j - n)];
            s += (n % 2) ? term : -term;
        }
        p[size_t(j)] = s;
    }
    return p;
}

Frac UPoly::trace_of(const UPoly& h) const {
    UPoly r = h.mod(*this);
    if (r.is_zero()) return Frac();
    auto p = power_sums(r.deg());
    Frac s;
    for (int k = 0; k <= r.deg(); ++k) s += r[k] * p[size_t(k)];
    return s;
}

Frac UPoly::norm_of(const UPoly& h) const {
    // product of h over the roots of *this: res(this, h) / lc(this)^deg(h)
    // res by euclidean recursion over the coefficient field
    if (deg() < 1) return Frac(Rational(1));
    std::function<Frac(UPoly, UPoly)> res = [&](UPoly a, UPoly b) -> Frac {
        int m = a.deg();
        if (b.is_zero()) {
            if (m == 0) return Frac(Rational(1));
            return Frac();
        }
        int n = b.deg();
        if (n == 0) {
            Frac r(Rational(1));
            for (int i = 0; i < m; ++i) r *= b[0];
            return r;
        }
        UPoly q, rr;
        divmod(a, b, q, rr);
        int dr = rr.is_zero() ? -1 : rr.deg();
        Frac lead(Rational(1));
        int pw = (dr < 0) ? m : (m - dr);
        for (int i = 0; i < pw; ++i) lead *= b.lc();
        if (rr.is_zero()) return (m > 0 && n > 0) ? Frac() : lead;
        Frac sub = res(b, rr);
        Frac sign = ((long(m) * n) % 2) ? Frac(Rational(-1)) : Frac(Rational(1));
        return sign * lead * sub;
    };
    UPoly hm = h.mod(*this);
    // reduction mod *this changes h by a multiple of *this, which does not
    // change the values at the roots
    if (hm.is_zero()) return Frac();
    Frac r = res(*this, hm);
    Frac scale(Rational(1));
    for (int i = 0; i < hm.deg(); ++i) scale *= lc();
    return r / scale;
}

}  // namespace gw
