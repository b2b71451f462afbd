#pragma once

#include "thueq/rat.hpp"

#include <string>

namespace thueq {

// Element of Q(i).
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }
    bool is_gaussian_integer() const { return re.get_den() == 1 && im.get_den() == 1; }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

    std::string str() const;
};

GaussRat pow(const GaussRat& z, unsigned long e);
// Upper bound for |z|; exact when z is real or |z|^2 is a rational square.
Rat abs_upper(const GaussRat& z, long bits = 96);
Rat abs_lower(const GaussRat& z, long bits = 96);

}  // namespace thueq
