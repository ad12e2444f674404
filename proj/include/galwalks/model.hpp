#ifndef GALWALKS_MODEL_HPP
#define GALWALKS_MODEL_HPP

#include <string>
#include <vector>

#include "galwalks/frac.hpp"

namespace gw {

struct Step {
    int dx, dy;
    Frac w;  // nonzero, parameters only
};

struct Model {
    std::string name;
    std::vector<std::string> params;  // sorted, registered in VarTable
    std::vector<Step> steps;
    int mx = 0, Mx = 0, my = 0, My = 0;  // largest backward/forward moves

    bool is_univariate = false;
    bool has_small_backward_steps = false;
    bool is_upper_or_lower_diagonal = false;

    int dx() const { return mx + Mx; }
    int dy() const { return my + My; }

    // S as an exact fraction in X, Y (Laurent cleared against params only)
    Frac step_poly() const;
    std::vector<std::string> expr_vars() const;  // X,Y,t,Z + params
};

// parse the model document (key/value text with arrays, JSON syntax)
Model load_model_text(const std::string& text);
Model load_model_file(const std::string& path);

struct Kernel {
    Model model;
    Poly ktilde;        // primitive representative of X^mx Y^my (1 - t S)
    Frac ktilde_exact;  // the exact kernel polynomial (param-fraction coefficients)
    Frac snum_exact;    // X^mx Y^my S
    int mx, my, dx, dy;

    // divisibility by the kernel polynomial (up to the parameter-unit scale)
    bool divides(const Poly& p) const;
    Frac cofactor(const Frac& f) const;  // f / ktilde_exact when divisible
};

Kernel make_kernel(const Model& m);

struct FunctionalEquation {
    Frac ktilde_x0;  // coefficient of Q(X,0) in A(X)
    Frac ktilde_0y;  // coefficient of Q(0,Y) in B(Y)
    int eps;         // 1 iff (-1,-1) is a step
    int rhs_i, rhs_j;  // right-hand side monomial X^rhs_i Y^rhs_j
    std::string a_template, b_template;
};

// start = end-point shift: walks starting at (i0, j0)
FunctionalEquation functional_equation(const Kernel& k, int i0 = 0, int j0 = 0);

struct GenusReport {
    int dx, dy;
    long smooth_genus;
    enum Probe { Smooth, Inconclusive } probe;
};

GenusReport genus_upper_bound(const Kernel& k, unsigned seed = 1);

}  // namespace gw

#endif
