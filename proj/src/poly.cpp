#include "galwalks/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gw {

const Rational& Poly::const_value() const {
    static const Rational zero(0);
    if (terms_.empty()) return zero;
    if (!is_constant()) throw std::logic_error("const_value on non-constant poly");
    return terms_[0].c;
}

int Poly::degree(int v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.m[v]));
    return terms_.empty() ? -1 : d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < kMaxVars; ++i) s += t.m[i];
        d = std::max(d, s);
    }
    return d;
}

bool Poly::has_var(int v) const {
    for (const auto& t : terms_)
        if (t.m[v]) return true;
    return false;
}

int Poly::valuation(int v) const {
    if (terms_.empty()) return 0;
    int val = terms_[0].m[v];
    for (const auto& t : terms_) val = std::min(val, int(t.m[v]));
    return val;
}

Poly Poly::from_map(std::map<Monomial, Rational>&& m) {
    Poly p;
    p.terms_.reserve(m.size());
    // map is ascending; we store descending
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        if (it->second != 0) p.terms_.push_back({it->first, std::move(it->second)});
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& q) const {
    Poly r;
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        if (terms_[i].m > q.terms_[j].m) {
            r.terms_.push_back(terms_[i++]);
        } else if (q.terms_[j].m > terms_[i].m) {
            r.terms_.push_back(q.terms_[j++]);
        } else {
            Rational c = terms_[i].c + q.terms_[j].c;
            if (c != 0) r.terms_.push_back({terms_[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& q) const { return *this + (-q); }

Poly Poly::operator*(const Poly& q) const {
    if (is_zero() || q.is_zero()) return Poly();
    // single-term shortcut keeps the merge path cheap
    if (q.terms_.size() == 1) {
        Poly r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Rational c = t.c * q.terms_[0].c;
            r.terms_.push_back({t.m * q.terms_[0].m, std::move(c)});
        }
        return r;
    }
    if (terms_.size() == 1) return q * *this;
    std::map<Monomial, Rational> acc;
    for (const auto& a : terms_)
        for (const auto& b : q.terms_) {
            auto [it, fresh] = acc.try_emplace(a.m * b.m, 0);
            it->second += a.c * b.c;
        }
    return from_map(std::move(acc));
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::operator/(const Rational& c) const {
    if (c == 0) throw std::domain_error("division by zero rational");
    Poly r = *this;
    for (auto& t : r.terms_) t.c /= c;
    return r;
}

bool Poly::operator==(const Poly& q) const {
    if (terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != q.terms_[i].m || terms_[i].c != q.terms_[i].c) return false;
    return true;
}

Poly Poly::derivative(int v) const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!t.m[v]) continue;
        Monomial m = t.m;
        Rational c = t.c * int(m[v]);
        m[v] = uint16_t(m[v] - 1);
        r.terms_.push_back({m, std::move(c)});
    }
    // order is preserved by lowering one exponent uniformly? no: resort
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.m > b.m; });
    return r;
}

std::vector<Poly> Poly::coeffs_in(int v) const {
    int d = std::max(degree(v), 0);
    std::vector<Poly> cs(size_t(d) + 1);
    for (const auto& t : terms_) {
        Monomial m = t.m;
        int k = m[v];
        m[v] = 0;
        cs[size_t(k)].terms_.push_back({m, t.c});
    }
    for (auto& c : cs)
        std::sort(c.terms_.begin(), c.terms_.end(),
                  [](const Term& a, const Term& b) { return a.m > b.m; });
    return cs;
}

Poly Poly::from_coeffs(int v, const std::vector<Poly>& cs) {
    Poly r;
    for (size_t k = 0; k < cs.size(); ++k) {
        Poly shifted = cs[k] * Poly::term(Monomial::var(v, uint16_t(k)), 1);
        r += shifted;
    }
    return r;
}

Poly Poly::coeff_of(int v, int k) const {
    Poly r;
    for (const auto& t : terms_) {
        if (t.m[v] != k) continue;
        Monomial m = t.m;
        m[v] = 0;
        r.terms_.push_back({m, t.c});
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.m > b.m; });
    return r;
}

Poly Poly::subst(int v, const Poly& value) const {
    auto cs = coeffs_in(v);
    // Horner
    Poly r;
    for (size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
}

Poly Poly::rename(const std::array<int, kMaxVars>& ren) const {
    std::map<Monomial, Rational> acc;
    for (const auto& t : terms_) {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i)
            if (t.m[i]) m[ren[i]] = uint16_t(m[ren[i]] + t.m[i]);
        acc[m] += t.c;
    }
    return from_map(std::move(acc));
}

Rational Poly::eval(const std::vector<std::pair<int, Rational>>& at) const {
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational prod = t.c;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!t.m[i]) continue;
            const Rational* val = nullptr;
            for (const auto& [v, r] : at)
                if (v == i) val = &r;
            if (!val) throw std::logic_error("eval: unbound variable " + VarTable::instance().name(i));
            Rational pw(1);
            Rational base = *val;
            for (int k = 0; k < t.m[i]; ++k) pw *= base;
            prod *= pw;
        }
        sum += prod;
    }
    return sum;
}

Rational Poly::primitive_part() {
    if (terms_.empty()) return Rational(0);
    // scale so all coefficients are coprime integers, leading one positive
    Integer num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_[0].c < 0) scale = -scale;
    for (auto& t : terms_) t.c *= scale;
    return Rational(1) / scale;
}

std::optional<Poly> Poly::divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly r = a, q;
    while (!r.is_zero()) {
        if (!b.lead_mono().divides(r.lead_mono())) return std::nullopt;
        Monomial m = r.lead_mono() / b.lead_mono();
        Rational c = r.lead_coeff() / b.lead_coeff();
        Poly t = Poly::term(m, c);
        q += t;
        r -= t * b;
    }
    return q;
}

PseudoDiv pseudo_divmod(const Poly& a, const Poly& b, int v) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    int db = b.degree(v);
    Poly lcb = b.coeff_of(v, db);
    Poly q, r = a;
    Poly scale(Rational(1));
    int dr = r.degree(v);
    while (!r.is_zero() && dr >= db) {
        Poly lcr = r.coeff_of(v, dr);
        Poly shift = Poly::term(Monomial::var(v, uint16_t(dr - db)), 1);
        q = q * lcb + lcr * shift;
        r = r * lcb - lcr * shift * b;
        scale *= lcb;
        dr = r.degree(v);
    }
    return {q, r, scale};
}

// ---- gcd -------------------------------------------------------------

namespace {

int pick_var(const Poly& a, const Poly& b) {
    // lowest id occurring in either
    for (int v = 0; v < kMaxVars; ++v)
        if (a.has_var(v) || b.has_var(v)) return v;
    return -1;
}

Poly gcd_many(const std::vector<Poly>& ps) {
    Poly g;
    for (const auto& p : ps) {
        g = poly_gcd(g, p);
        if (g.is_constant() && !g.is_zero()) return g;
    }
    return g;
}

}  // namespace

Poly content_in(const Poly& p, const std::vector<int>& vars) {
    // gcd of the coefficients attached to monomials in `vars`
    std::map<Monomial, Poly> groups;
    for (const auto& t : p.terms()) {
        Monomial mv, rest = t.m;
        for (int v : vars) {
            mv[v] = rest[v];
            rest[v] = 0;
        }
        groups[mv] += Poly::term(rest, t.c);
    }
    Poly g;
    for (auto& [m, c] : groups) {
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));
    int v = pick_var(a, b);
    if (v < 0) return Poly(Rational(1));
    if (!a.has_var(v)) return poly_gcd(content_in(b, {v}), a);
    if (!b.has_var(v)) return poly_gcd(content_in(a, {v}), b);

    Poly ca = content_in(a, {v}), cb = content_in(b, {v});
    Poly pa = *Poly::divide_exact(a, ca), pb = *Poly::divide_exact(b, cb);
    Poly cg = poly_gcd(ca, cb);

    // subresultant PRS on the primitive parts
    Poly f = pa, g = pb;
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    Poly h(Rational(1)), s(Rational(1));
    while (true) {
        int df = f.degree(v), dg = g.degree(v);
        int delta = df - dg;
        Poly rem = pseudo_divmod(f, g, v).r;
        if (rem.is_zero()) break;
        if (rem.degree(v) == 0) {
            g = Poly(Rational(1));
            break;
        }
        f = g;
        // divide by s * h^delta
        Poly divisor = s;
        for (int i = 0; i < delta; ++i) divisor *= h;
        g = *Poly::divide_exact(rem, divisor);
        s = f.coeff_of(v, f.degree(v));
        // h = s^delta' * h^(1-delta') with delta' = old delta
        if (delta == 0) {
            // h unchanged
        } else {
            Poly hn = s;
            for (int i = 1; i < delta; ++i) hn *= s;
            Poly hd = h;
            for (int i = 1; i < delta - 1; ++i) hd *= h;
            h = (delta == 1) ? hn : *Poly::divide_exact(hn, hd);
        }
    }
    Poly gp = g.primitive();
    // remove v-content of the PRS result, then attach the outer content
    if (gp.degree(v) > 0) {
        Poly gc = content_in(gp, {v});
        gp = *Poly::divide_exact(gp, gc);
    } else {
        gp = Poly(Rational(1));
    }
    Poly result = (cg * gp).primitive();
    return result;
}

// ---- resultant / discriminant ---------------------------------------

namespace {

// Bareiss fraction-free determinant; entries are polynomials
Poly det_bareiss(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly(Rational(1));
    Poly denom(Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = denom.is_constant() && denom.const_value() == 1
                              ? num
                              : *Poly::divide_exact(num, denom);
            }
            m[i][k] = Poly();
        }
        denom = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

}  // namespace

Poly resultant(const Poly& p, const Poly& q, int v) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("resultant of two zero polynomials");
    if (!p.has_var(v) && !q.has_var(v))
        throw std::domain_error("resultant: variable absent from both inputs");
    if (p.is_zero() || q.is_zero()) return Poly();
    auto pc = p.coeffs_in(v), qc = q.coeffs_in(v);
    int dp = int(pc.size()) - 1, dq = int(qc.size()) - 1;
    if (dp == 0 && dq == 0) return Poly(Rational(1));
    size_t n = size_t(dp + dq);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    // Sylvester matrix, p-rows first, coefficients laid out ascending
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[size_t(r)][size_t(r + k)] = pc[size_t(k)];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[size_t(dq + r)][size_t(r + k)] = qc[size_t(k)];
    return det_bareiss(std::move(m));
}

Poly squarefree_part(const Poly& p, int v) {
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (!p.has_var(v)) return Poly(Rational(1));
    Poly g = poly_gcd(p, p.derivative(v));
    Poly q = *Poly::divide_exact(p.primitive(), g);
    Poly c = content_in(q, {v});
    q = *Poly::divide_exact(q, c);
    q.primitive_part();
    return q;
}

Poly discriminant(const Poly& p, int v) {
    int d = p.degree(v);
    if (d < 1) throw std::domain_error("discriminant of degree-0 polynomial");
    Poly res = resultant(p, p.derivative(v), v);
    Poly lc = p.coeff_of(v, d);
    Poly q = *Poly::divide_exact(res, lc);
    long exp = long(d) * (d - 1) / 2;
    return (exp % 2) ? -q : q;
}

// ---- Newton polygon --------------------------------------------------

NewtonPolygonReport newton_polygon(const Poly& p, int main_var) {
    if (p.is_zero()) throw std::domain_error("newton_polygon of zero polynomial");
    auto cs = p.coeffs_in(main_var);
    NewtonPolygonReport rep;
    rep.degree = int(cs.size()) - 1;
    rep.zero_roots = 0;
    while (rep.zero_roots < int(cs.size()) && cs[size_t(rep.zero_roots)].is_zero())
        ++rep.zero_roots;
    // points (i, val_t(c_i)) for nonzero coefficients
    std::vector<std::pair<long, long>> pts;
    for (size_t i = size_t(rep.zero_roots); i < cs.size(); ++i)
        if (!cs[i].is_zero()) pts.push_back({long(i), cs[i].valuation(VT)});
    // lower convex hull, left to right
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep if b is strictly below segment a-pt
            if ((b.second - a.second) * (pt.first - a.first) <
                (pt.second - a.second) * (b.first - a.first))
                break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rational hs(hull[i + 1].second - hull[i].second, hull[i + 1].first - hull[i].first);
        hs.canonicalize();
        rep.slopes.push_back({-hs, int(hull[i + 1].first - hull[i].first)});
    }
    std::sort(rep.slopes.begin(), rep.slopes.end(),
              [](const NewtonSlope& a, const NewtonSlope& b) { return a.slope < b.slope; });
    return rep;
}

}  // namespace gw
