#include "thueq/thue.hpp"

#include "thueq/errors.hpp"
#include "thueq/hyperchi.hpp"

namespace thueq::series {

namespace {

GPoly gc(const GaussRat& z) { return GPoly(z); }
GPoly tvar() { return GPoly::var(); }

BiPoly bi(std::initializer_list<GPoly> coeffs) { return BiPoly(std::vector<GPoly>(coeffs)); }

BiPoly scale(const BiPoly& p, const GaussRat& k) { return p.scaled(gc(k)); }

// Substitute a numeric t into every coefficient.
GPoly at_t(const BiPoly& p, const GaussRat& t) {
    std::vector<GaussRat> v;
    for (const auto& c : p.coeffs()) v.push_back(c.eval(t));
    return GPoly(std::move(v));
}

ThueData build() {
    ThueData d;
    const GaussRat I = GaussRat::i();
    GPoly t = tvar();
    d.P = bi({gc(1), t, gc(-6), -t, gc(1)});
    d.U = bi({gc(1), GPoly(), gc(1)});
    BiPoly Pp = d.P.derivative(), Up = d.U.derivative(), Upp = Up.derivative();

    const int n = 4;
    d.Y = scale(d.U * Pp, 2) - scale(Up * d.P, n);
    BiPoly disc = Up * Up - scale(d.U * Upp, 2);
    if (disc.degree() != 0 || disc.lead().degree() != 0) throw ContractViolation("disc(U) is not constant");
    d.lambda = disc.lead().lead() / GaussRat(4);
    if (!(d.lambda == GaussRat(-1))) throw ContractViolation("unexpected lambda");
    d.sqrt_lambda = I;

    const GaussRat sl = d.sqrt_lambda, lam = d.lambda;
    const GaussRat k = make_rat(n * n - 1, 6);
    BiPoly X = BiPoly::var();
    BiPoly UpX2U = Up * X - scale(d.U, 2);
    d.a = scale(scale(Up, sl) + BiPoly(gc(lam * GaussRat(2))), k);
    d.b = scale(scale(Up, sl) - BiPoly(gc(lam * GaussRat(2))), k);
    d.c = scale(scale(UpX2U, sl) + scale(X, lam * GaussRat(2)), k);
    d.d_poly = scale(scale(UpX2U, sl) - scale(X, lam * GaussRat(2)), k);

    GaussRat inv = GaussRat(1) / (GaussRat(2 * n) * sl);
    d.u = scale(scale(d.Y, inv) - d.P, make_rat(1, 2));
    d.z = scale(scale(d.Y, inv) + d.P, make_rat(1, 2));
    d.w_num = d.z;
    d.w_den = d.u;

    d.ode_residual = d.U * Pp.derivative() - scale(Up * Pp, n - 1) + scale(Upp * d.P, n * (n - 1) / 2);
    return d;
}

// Y^r chi(X/Y) with chi given by rational coefficients.
template <class P>
P chi_hom(const hyperchi::ChiPoly& c, const P& x, const P& y) {
    return hyperchi::chi_star<P>(c, x, y);
}

}  // namespace

const ThueData& thue_data() {
    static const ThueData data = build();
    return data;
}

BiPoly f_poly() { return thue_data().P; }

bool quotient_root_check(RootExpr which) {
    const GaussRat I = GaussRat::i();
    GPoly t = tvar();
    BiPoly y = BiPoly::var();
    BiPoly one(gc(1));
    BiPoly N, D;
    switch (which) {
    case RootExpr::type0:
        N = scale(y - one, I);
        D = y + one;
        break;
    case RootExpr::type0_perturbed:
        N = scale(y - one, I * GaussRat(2));
        D = y + one;
        break;
    case RootExpr::type3:
        N = y - BiPoly(gc(I));
        D = scale(y, -I) + one;
        break;
    }
    BiPoly T(t);
    BiPoly N2 = N * N, D2 = D * D;
    BiPoly F = N2 * N2 - T * N2 * N * D - scale(N2 * D2, 6) + T * N * D2 * D + D2 * D2;

    // (it + 4) y^4 - (it - 4)
    GPoly lead = t.scaled(I) + gc(4);
    GPoly tail = t.scaled(I) - gc(4);
    while (F.degree() >= 4) {
        long m = F.degree();
        GPoly lc = F.lead();
        BiPoly red = BiPoly::monomial(lead, 4) - BiPoly(tail);
        F = F * BiPoly(lead) - BiPoly::monomial(lc, static_cast<size_t>(m - 4)) * red;
    }
    return F.is_zero();
}

Approximants approximants(int xi, int r) {
    if (xi != 0 && xi != 1) throw DomainError("xi must be 0 or 1");
    if (r < 1) throw DomainError("r must be at least 1");
    const ThueData& d = thue_data();
    GPoly x = gc(GaussRat(xi));
    GPoly a = d.a.eval(x), b = d.b.eval(x), c = d.c.eval(x), dd = d.d_poly.eval(x);
    GPoly u = d.u.eval(x), z = d.z.eval(x);

    hyperchi::ChiPoly ch = hyperchi::chi(r);
    GPoly czu = chi_hom(ch, z, u), cuz = chi_hom(ch, u, z);
    GaussRat sign = pow(-GaussRat::i(), static_cast<unsigned long>(r));
    GPoly A = (a * czu - b * cuz).scaled(sign);
    GPoly B = (c * czu - dd * cuz).scaled(sign);

    hyperchi::DenomData dn = hyperchi::denom_data(r);
    Rat M = pow(Rat(xi == 0 ? 8 : 2), r) / 5 * make_rat(dn.Delta, dn.N);
    Approximants out;
    out.xi = xi;
    out.r = r;
    out.p = B.scaled(GaussRat(M));
    out.q = A.scaled(GaussRat(M));
    for (const GPoly* poly : {&out.p, &out.q})
        for (const auto& co : poly->coeffs())
            if (!co.is_gaussian_integer())
                throw IntegralityViolation("approximant coefficient " + co.str() + " is not a Gaussian integer");
    return out;
}

std::pair<GPoly, GPoly> thue_AB_at(int r, const GaussRat& t) {
    if (r < 1) throw DomainError("r must be at least 1");
    const ThueData& d = thue_data();
    GPoly a = at_t(d.a, t), b = at_t(d.b, t), c = at_t(d.c, t), dd = at_t(d.d_poly, t);
    GPoly u = at_t(d.u, t), z = at_t(d.z, t);
    hyperchi::ChiPoly ch = hyperchi::chi(r);
    GPoly czu = chi_hom(ch, z, u), cuz = chi_hom(ch, u, z);
    GaussRat sign = pow(-GaussRat::i(), static_cast<unsigned long>(r));
    return {(a * czu - b * cuz).scaled(sign), (c * czu - dd * cuz).scaled(sign)};
}

std::vector<Rat> divisibility_bounds(int r, const GaussRat& t, long bits) {
    if (t.is_zero()) throw DomainError("t must be nonzero");
    BallPoly f;
    GPoly Pt = at_t(thue_data().P, t);
    for (const auto& co : Pt.coeffs()) f.push_back(ComplexBall::exact(co, bits));
    auto alpha = isolate_root(f, GaussRat(-1) / t, bits);
    if (!alpha) throw VerificationFailure("could not isolate the root near -1/t");

    auto [A, B] = thue_AB_at(r, t);
    auto to_ball = [bits](const GPoly& p) {
        BallPoly out;
        for (const auto& co : p.coeffs()) out.push_back(ComplexBall::exact(co, bits));
        return out;
    };
    std::vector<Rat> bounds;
    for (int j = 0; j <= 2 * r; ++j) {
        ComplexBall cj = *alpha * eval(to_ball(A), *alpha) - eval(to_ball(B), *alpha);
        bounds.push_back(cj.abs_bounds().hi);
        A = A.derivative();
        B = B.derivative();
    }
    return bounds;
}

}  // namespace thueq::series
