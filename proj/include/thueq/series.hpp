#pragma once

#include "thueq/poly.hpp"

#include <vector>

namespace thueq::series {

// Power series in s = 1/t known modulo s^N.
class Series {
public:
    Series() = default;
    Series(std::vector<GaussRat> coeffs, long order);
    static Series constant(const GaussRat& c, long order);
    static Series from_poly(const GPoly& p, long order);

    long order() const { return static_cast<long>(c_.size()); }
    const GaussRat& operator[](size_t k) const { return c_[k]; }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    GPoly poly() const { return GPoly(c_); }
    // Coefficients of degree < n as a polynomial.
    GPoly truncated(long n) const;
    bool is_zero() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator/(const Series& a, const Series& b);
    Series scaled(const GaussRat& k) const;
    Series inverse() const;

private:
    std::vector<GaussRat> c_;
};

// Root of s X^4 - X^3 - 6 s X^2 + X + s with value 0 at s = 0.
Series newton_alpha_series(long N);
long newton_steps(long N);
// -(alpha + 1)/(alpha - 1)
Series alpha3_series(const Series& alpha);

struct PadePair {
    GPoly U;
    GPoly V;
    long deg_num = 0;
    long deg_den = 0;
    long contact_order = 0;
};

PadePair pade(const Series& B, long deg_num, long deg_den);
// U - B V as a polynomial, with B cut at degree < B.order().
GPoly pade_residual(const PadePair& p, const Series& B);
// Multiply U, V by the least positive integer that clears all denominators.
PadePair clear_denominators(const PadePair& p);

// c with |sum_j e_j s^j| <= c |s|^lead_exp for |s| <= 1/tmin.
Rat tail_bound(const GPoly& expr, long lead_exp, const Rat& tmin);

// Fraction-free elimination; returns the solution or empty when singular.
std::vector<GaussRat> solve_linear(std::vector<std::vector<GaussRat>> A, std::vector<GaussRat> b);

}  // namespace thueq::series
