#pragma once

#include "thueq/gaussrat.hpp"
#include "thueq/interval.hpp"

#include <optional>
#include <vector>

namespace thueq {

// Disc {z : |z - (re + i im)| <= rad}. Midpoints are kept on a dyadic grid
// with `bits` significant bits; rounding error is pushed into the radius.
struct ComplexBall {
    Rat re;
    Rat im;
    Rat rad;
    long bits = 128;

    ComplexBall() = default;
    ComplexBall(const GaussRat& mid, Rat radius = 0, long prec = 128);
    static ComplexBall exact(const GaussRat& mid, long prec = 128) { return ComplexBall(mid, 0, prec); }

    GaussRat mid() const { return {re, im}; }
    RatInterval abs_bounds() const;
    bool contains_zero() const;
    bool contains(const GaussRat& z) const;
    ComplexBall conj() const;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

ComplexBall nth_root(const ComplexBall& w, unsigned n);

// Coefficients low to high.
using BallPoly = std::vector<ComplexBall>;

ComplexBall eval(const BallPoly& p, const ComplexBall& z);
// Taylor coefficients of p(center + z).
BallPoly taylor_shift(const BallPoly& p, const ComplexBall& center);

// Refines `guess` by Newton on the midpoint polynomial, then certifies a
// disc that holds exactly one root of every polynomial inside the
// coefficient balls. Empty if the certificate fails.
std::optional<ComplexBall> isolate_root(const BallPoly& p, const GaussRat& guess, long bits);

}  // namespace thueq
