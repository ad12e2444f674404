#include "galwalks/series.hpp"

#include <stdexcept>

namespace gw {

void TruncSeries::refresh_pole_bounds() {
    px_ = py_ = 0;
    for (const auto& f : c_) {
        px_ = std::max(px_, f.pole_order(VX));
        py_ = std::max(py_, f.pole_order(VY));
    }
}

void TruncSeries::normalize() {
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++lead_;
    }
}

bool TruncSeries::known_zero() const {
    for (const auto& f : c_)
        if (!f.is_zero()) return false;
    return true;
}

TruncSeries TruncSeries::constant(const Frac& f, int ord) {
    TruncSeries s(0, std::max(ord, 0));
    if (!s.c_.empty()) s.c_[0] = f;
    s.refresh_pole_bounds();
    return s;
}

const Frac& TruncSeries::coeff(int n) const {
    static const Frac zero;
    if (n >= ord_) throw std::out_of_range("series coefficient beyond truncation order");
    if (n < lead_) return zero;
    return c_[size_t(n - lead_)];
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    int lead = std::min(lead_, o.lead_);
    int ord = std::min(ord_, o.ord_);
    TruncSeries r(lead, std::max(ord, lead));
    for (int n = lead; n < ord; ++n) {
        Frac v;
        if (n >= lead_ && n < ord_) v += c_[size_t(n - lead_)];
        if (n >= o.lead_ && n < o.ord_) v += o.c_[size_t(n - o.lead_)];
        r.c_[size_t(n - lead)] = std::move(v);
    }
    r.normalize();
    r.px_ = std::max(px_, o.px_);
    r.py_ = std::max(py_, o.py_);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return *this + (o * Frac(Rational(-1)));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    int lead = lead_ + o.lead_;
    int ord = std::min(ord_ + o.lead_, o.ord_ + lead_);
    TruncSeries r(lead, std::max(ord, lead));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            int n = lead_ + int(i) + o.lead_ + int(j);
            if (n >= ord) break;
            r.c_[size_t(n - lead)] += c_[i] * o.c_[j];
        }
    }
    r.normalize();
    r.px_ = px_ + o.px_;
    r.py_ = py_ + o.py_;
    return r;
}

TruncSeries TruncSeries::operator*(const Frac& f) const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c *= f;
    r.refresh_pole_bounds();
    return r;
}

TruncSeries TruncSeries::inverse() const {
    TruncSeries a = *this;
    a.normalize();
    if (a.c_.empty() || a.c_[0].is_zero())
        throw std::domain_error("series inverse: leading coefficient is zero or unknown");
    int n = int(a.c_.size());
    TruncSeries r(-a.lead_, -a.lead_ + n);
    Frac inv0 = a.c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k < n; ++k) {
        Frac s;
        for (int i = 1; i <= k; ++i) s += a.c_[size_t(i)] * r.c_[size_t(k - i)];
        r.c_[size_t(k)] = -(s * inv0);
    }
    r.refresh_pole_bounds();
    return r;
}

TruncSeries TruncSeries::truncate(int ord) const {
    if (ord >= ord_) return *this;
    TruncSeries r = *this;
    r.ord_ = std::max(ord, lead_);
    r.c_.resize(size_t(r.ord_ - lead_));
    if (r.c_.empty()) {
        r.lead_ = ord;
        r.ord_ = ord;
    }
    r.refresh_pole_bounds();
    return r;
}

TruncSeries TruncSeries::subst_space(int v, const Frac& value) const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = c.subst(v, value);
    r.normalize();
    r.refresh_pole_bounds();
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    int lo = std::min(lead_, o.lead_), hi = std::min(ord_, o.ord_);
    for (int n = lo; n < hi; ++n)
        if (coeff(n) != o.coeff(n)) return false;
    return true;
}

TruncSeries TruncSeries::from_frac(const Frac& f, int ord) {
    if (f.is_zero()) return zero_to(ord);
    // split num and den by t-powers
    auto split = [](const Poly& p) {
        int v = p.valuation(VT);
        auto cs = p.coeffs_in(VT);
        std::vector<Frac> out;
        for (size_t k = size_t(v); k < cs.size(); ++k) out.emplace_back(cs[k]);
        return std::pair<int, std::vector<Frac>>(v, std::move(out));
    };
    auto [vn, ncs] = split(f.num());
    auto [vd, dcs] = split(f.den());
    // numerator series window must extend far enough for the requested order
    int need = ord - vn + vd;
    (void)need;
    TruncSeries nums(vn, std::move(ncs));
    TruncSeries dens(vd, std::move(dcs));
    // exact polynomials: both windows are complete; extend them artificially
    auto extend = [&](TruncSeries s, int o) {
        while (s.ord_ < o) {
            s.c_.emplace_back();
            ++s.ord_;
        }
        return s;
    };
    int span = ord - (vn - vd);  // required length of the quotient window
    nums = extend(nums, vn + std::max(span, 1));
    dens = extend(dens, vd + std::max(span, 1));
    TruncSeries r = nums * dens.inverse();
    return r.truncate(ord);
}

}  // namespace gw
