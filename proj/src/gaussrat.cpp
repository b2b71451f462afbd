#include "thueq/gaussrat.hpp"

#include "thueq/errors.hpp"

namespace thueq {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat n = o.norm();
    if (n == 0) throw DivisionError("division by zero in Q(i)");
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussRat::str() const {
    if (im == 0) return fraction_string(re);
    std::string s = re == 0 ? "" : fraction_string(re) + (im > 0 ? "+" : "");
    return s + fraction_string(im) + "i";
}

GaussRat pow(const GaussRat& z, unsigned long e) {
    GaussRat r(1), b = z;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Rat abs_upper(const GaussRat& z, long bits) {
    if (z.im == 0) return abs(z.re);
    if (z.re == 0) return abs(z.im);
    return sqrt_upper(z.norm(), bits);
}

Rat abs_lower(const GaussRat& z, long bits) {
    if (z.im == 0) return abs(z.re);
    if (z.re == 0) return abs(z.im);
    return sqrt_lower(z.norm(), bits);
}

}  // namespace thueq
