#ifndef GALWALKS_SERIES_HPP
#define GALWALKS_SERIES_HPP

#include <vector>

#include "galwalks/frac.hpp"

namespace gw {

// Truncated Laurent series in t. Coefficients are t-free fractions in the
// remaining variables; the window [lead, ord) is the range of known
// exponents. pole_x/pole_y record bounds on the coefficient pole orders at
// X=0 / Y=0 (max under addition, sum under multiplication).
class TruncSeries {
public:
    TruncSeries() : lead_(0), ord_(0) {}
    TruncSeries(int lead, std::vector<Frac> cs)
        : lead_(lead), ord_(lead + int(cs.size())), c_(std::move(cs)) {
        refresh_pole_bounds();
    }
    static TruncSeries zero_to(int ord) { return TruncSeries(ord <= 0 ? ord : 0, ord); }
    static TruncSeries constant(const Frac& f, int ord);
    // t-expansion of an exact fraction (den may vanish at t=0: Laurent)
    static TruncSeries from_frac(const Frac& f, int ord);

    int lead() const { return lead_; }
    int ord() const { return ord_; }  // exponents < ord are known
    int pole_x() const { return px_; }
    int pole_y() const { return py_; }
    bool known_zero() const;

    // coefficient of t^n; throws when n >= ord
    const Frac& coeff(int n) const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Frac& f) const;
    // inverse of a series whose first known coefficient is nonzero
    TruncSeries inverse() const;
    TruncSeries truncate(int ord) const;
    // substitute a t-free fraction for variable v in every coefficient
    TruncSeries subst_space(int v, const Frac& value) const;

    bool operator==(const TruncSeries& o) const;

private:
    TruncSeries(int lead, int ord) : lead_(lead), ord_(ord), c_(size_t(ord - lead)) {}
    void refresh_pole_bounds();
    void normalize();  // advance lead past leading zeros (window start only)

    int lead_, ord_;
    std::vector<Frac> c_;
    int px_ = 0, py_ = 0;
};

}  // namespace gw

#endif
