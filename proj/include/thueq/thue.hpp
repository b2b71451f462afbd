#pragma once

#include "thueq/ball.hpp"
#include "thueq/poly.hpp"

#include <vector>

namespace thueq::series {

// Thue's construction for P = f_t, U = X^2 + 1, n = 4, with sqrt(lambda) = i.
// Every object is a polynomial in X with coefficients in Q(i)[t].
struct ThueData {
    BiPoly P, U, Y;
    BiPoly a, b, c, d_poly;
    BiPoly u, z;
    BiPoly w_num, w_den;  // w = z / u
    GaussRat lambda;
    GaussRat sqrt_lambda;
    BiPoly ode_residual;  // U P'' - 3 U' P' + 6 U'' P
};

const ThueData& thue_data();

// f_t as a polynomial in X over Q(i)[t].
BiPoly f_poly();

enum class RootExpr { type0, type3, type0_perturbed };

// Substitutes the closed-form root expression into f_t and reduces in
// Q(i)(t)[y]/(y^4 - w), w = (it - 4)/(it + 4). True iff the result is zero.
bool quotient_root_check(RootExpr which);

struct Approximants {
    int xi = 0;
    int r = 0;
    GPoly p;  // M_r B_r(xi) as a polynomial in t
    GPoly q;  // M_r A_r(xi)
};

Approximants approximants(int xi, int r);

// A_r, B_r evaluated at a numeric t, as polynomials in X.
std::pair<GPoly, GPoly> thue_AB_at(int r, const GaussRat& t);

// Upper bounds for |C_r^(j)(alpha)|, j = 0..2r, alpha the root near -1/t.
std::vector<Rat> divisibility_bounds(int r, const GaussRat& t, long bits);

}  // namespace thueq::series
