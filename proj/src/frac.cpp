#include "galwalks/frac.hpp"

#include <stdexcept>

namespace gw {

void Frac::canonicalize_scale() {
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Rational cn = num_.primitive_part();
    Rational cd = den_.primitive_part();
    Rational s = cn / cd;
    // attach p/q with integral p, q > 0
    num_ = num_ * Rational(s.get_num());
    den_ = den_ * Rational(s.get_den());
}

Frac::Frac(const Poly& n, const Poly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("fraction with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *Poly::divide_exact(num_, g);
            den_ = *Poly::divide_exact(den_, g);
        }
    }
    canonicalize_scale();
}

Frac Frac::operator-() const {
    Frac r = *this;
    r.num_ = -r.num_;
    return r;
}

Frac Frac::operator+(const Frac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return Frac(num_ + o.num_, den_);
    return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Frac Frac::operator-(const Frac& o) const { return *this + (-o); }

Frac Frac::operator*(const Frac& o) const {
    if (is_zero() || o.is_zero()) return Frac();
    // cross-reduce to keep the final gcd small
    Frac a(num_, o.den_), b(o.num_, den_);
    Frac r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize_scale();
    return r;
}

Frac Frac::operator/(const Frac& o) const { return *this * o.inverse(); }

Frac Frac::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero fraction");
    Frac r;
    r.num_ = den_;
    r.den_ = num_;
    r.canonicalize_scale();
    return r;
}

Frac Frac::subst(int v, const Frac& value) const {
    if (!has_var(v)) return *this;
    // clear value's denominator against the v-degrees
    int dn = num_.degree(v), dd = den_.degree(v);
    int d = std::max(std::max(dn, dd), 0);
    auto lift = [&](const Poly& p, int deg) {
        // p(v -> vn/vd) * vd^d
        auto cs = p.coeffs_in(v);
        Poly acc;
        Poly pw(Rational(1));
        std::vector<Poly> vd_pows(size_t(d) + 1);
        vd_pows[0] = Poly(Rational(1));
        for (int i = 1; i <= d; ++i) vd_pows[size_t(i)] = vd_pows[size_t(i - 1)] * value.den();
        Poly vn_pow(Rational(1));
        for (size_t k = 0; k < cs.size(); ++k) {
            acc += cs[k] * vn_pow * vd_pows[size_t(d) - k];
            vn_pow *= value.num();
        }
        (void)deg;
        return acc;
    };
    return Frac(lift(num_, dn), lift(den_, dd));
}

Frac Frac::rename(const std::array<int, kMaxVars>& ren) const {
    Frac r;
    r.num_ = num_.rename(ren);
    r.den_ = den_.rename(ren);
    return Frac(r.num_, r.den_);
}

Frac Frac::derivative(int v) const {
    // (n/d)' = (n'd - nd')/d^2
    return Frac(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

Rational Frac::eval(const std::vector<std::pair<int, Rational>>& at) const {
    Rational d = den_.eval(at);
    if (d == 0) throw std::domain_error("fraction evaluation hits a pole");
    return num_.eval(at) / d;
}

int Frac::pole_order(int v) const {
    if (is_zero()) return 0;
    int p = den_.valuation(v) - num_.valuation(v);
    return p > 0 ? p : 0;
}

}  // namespace gw
