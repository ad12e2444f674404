#include "galwalks/model.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "galwalks/expr.hpp"

namespace gw {

std::vector<std::string> Model::expr_vars() const {
    std::vector<std::string> vs = {"X", "Y", "t", "Z"};
    vs.insert(vs.end(), params.begin(), params.end());
    return vs;
}

Frac Model::step_poly() const {
    Frac xm = Frac(Poly::term(Monomial::var(VX, uint16_t(mx)) * Monomial::var(VY, uint16_t(my)), 1));
    Frac acc;
    for (const auto& s : steps) {
        Poly mono = Poly::term(Monomial::var(VX, uint16_t(s.dx + mx)) * Monomial::var(VY, uint16_t(s.dy + my)), 1);
        acc += s.w * Frac(mono);
    }
    return acc / xm;
}

Model load_model_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("model document is not valid: ") + e.what());
    }
    Model m;
    if (doc.contains("name")) m.name = doc["name"].get<std::string>();
    if (doc.contains("params")) {
        for (const auto& p : doc["params"]) m.params.push_back(p.get<std::string>());
        std::sort(m.params.begin(), m.params.end());
        for (const auto& p : m.params) {
            if (p == "X" || p == "Y" || p == "t" || p == "Z")
                throw std::runtime_error("parameter name collides with a reserved variable: " + p);
            VarTable::instance().id(p);
        }
    }
    if (!doc.contains("steps") || !doc["steps"].is_array() || doc["steps"].empty())
        throw std::runtime_error("model document has no steps");
    std::set<std::pair<int, int>> seen;
    for (const auto& st : doc["steps"]) {
        if (!st.contains("dx") || !st.contains("dy"))
            throw std::runtime_error("malformed step: dx/dy required");
        Step s;
        s.dx = st["dx"].get<int>();
        s.dy = st["dy"].get<int>();
        std::string wtext = st.contains("w") ? st["w"].get<std::string>() : "1";
        s.w = parse_expr(wtext, m.params);
        if (s.w.is_zero()) throw std::runtime_error("zero weight on step");
        if (!seen.insert({s.dx, s.dy}).second)
            throw std::runtime_error("duplicate step direction");
        m.steps.push_back(std::move(s));
    }
    for (const auto& s : m.steps) {
        m.mx = std::max(m.mx, -s.dx);
        m.Mx = std::max(m.Mx, s.dx);
        m.my = std::max(m.my, -s.dy);
        m.My = std::max(m.My, s.dy);
    }
    bool all_dx0 = true, all_dy0 = true, upper = true, lower = true;
    for (const auto& s : m.steps) {
        all_dx0 &= (s.dx == 0);
        all_dy0 &= (s.dy == 0);
        upper &= (s.dy >= s.dx);
        lower &= (s.dy <= s.dx);
    }
    m.is_univariate = all_dx0 || all_dy0;
    m.has_small_backward_steps = true;
    for (const auto& s : m.steps)
        m.has_small_backward_steps &= (s.dx >= -1 && s.dy >= -1);
    m.is_upper_or_lower_diagonal = upper || lower;
    return m;
}

Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_model_text(ss.str());
}

Kernel make_kernel(const Model& m) {
    if (m.is_univariate) throw std::runtime_error("kernel: univariate model");
    Kernel k;
    k.model = m;
    k.mx = m.mx;
    k.my = m.my;
    k.dx = m.dx();
    k.dy = m.dy();
    Monomial shift = Monomial::var(VX, uint16_t(m.mx)) * Monomial::var(VY, uint16_t(m.my));
    Frac snum_exact;
    for (const auto& s : m.steps) {
        Poly mono = Poly::term(Monomial::var(VX, uint16_t(s.dx + m.mx)) * Monomial::var(VY, uint16_t(s.dy + m.my)), 1);
        snum_exact += s.w * Frac(mono);
    }
    k.ktilde_exact = Frac(Poly::term(shift, 1)) - Frac(Poly::var(VT)) * snum_exact;
    // primitive representative over Q[params ∪ main vars]; same zero set,
    // same divisibility tests (the parameter content is a unit)
    k.ktilde = k.ktilde_exact.num().primitive();
    k.snum_exact = snum_exact;
    if (!k.ktilde.has_var(VX) || !k.ktilde.has_var(VY) || !k.ktilde.has_var(VT))
        throw std::runtime_error("kernel: K does not involve all of X, Y, t");
    return k;
}

bool Kernel::divides(const Poly& p) const {
    if (p.is_zero()) return true;
    return Poly::divide_exact(p, ktilde).has_value();
}

Frac Kernel::cofactor(const Frac& f) const { return f / ktilde_exact; }

FunctionalEquation functional_equation(const Kernel& k, int i0, int j0) {
    const Model& m = k.model;
    if (!m.has_small_backward_steps)
        throw std::runtime_error(
            "functional equation: unsupported form (model has a backward step of size >= 2)");
    FunctionalEquation fe;
    fe.eps = 0;
    for (const auto& s : m.steps)
        if (s.dx == -1 && s.dy == -1) fe.eps = 1;
    Frac kt = k.ktilde_exact;
    fe.ktilde_x0 = kt.subst(VY, Frac());
    fe.ktilde_0y = kt.subst(VX, Frac());
    fe.rhs_i = i0 + k.mx;
    fe.rhs_j = j0 + k.my;
    fe.a_template = "A(X) = (" + fe.ktilde_x0.str() + ")*Q(X,0)" +
                    (fe.eps ? " + t*Q(0,0)" : "");
    fe.b_template = "B(Y) = (" + fe.ktilde_0y.str() + ")*Q(0,Y)";
    return fe;
}

GenusReport genus_upper_bound(const Kernel& k, unsigned seed) {
    GenusReport g;
    g.dx = k.dx;
    g.dy = k.dy;
    g.smooth_genus = 1L + long(k.dx) * k.dy - k.dx - k.dy;
    std::mt19937_64 rng(seed);
    auto rnd = [&]() {
        std::uniform_int_distribution<long> d(2, 997);
        return Rational(d(rng), d(rng) + 1000);
    };
    // specialize t and the parameters, then probe for common affine roots of
    // K, dK/dX, dK/dY via iterated resultants
    Poly kk = k.ktilde;
    kk = kk.subst(VT, Poly(rnd()));
    for (const auto& p : k.model.params) kk = kk.subst(VarTable::instance().id(p), Poly(rnd()));
    Poly kx = kk.derivative(VX), ky = kk.derivative(VY);
    g.probe = GenusReport::Inconclusive;
    if (!kx.is_zero() && !ky.is_zero()) {
        Poly r1 = resultant(kk, kx, VY);
        Poly r2 = resultant(kk, ky, VY);
        if (!r1.is_zero() && !r2.is_zero()) {
            Poly c = poly_gcd(r1, r2);
            if (c.is_constant()) g.probe = GenusReport::Smooth;
        }
    }
    return g;
}

}  // namespace gw
