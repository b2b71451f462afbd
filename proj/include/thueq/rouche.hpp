#pragma once

#include "thueq/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace thueq::rouche {

// sum_j p_j s^(low + j), s = 1/t
struct Laurent {
    long low = 0;
    GPoly p;

    static Laurent monomial(const GaussRat& c, long e) { return {e, GPoly(c)}; }
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent scaled(const Laurent& a, const GaussRat& k);
std::string to_string(const Laurent& a);

struct EnclosureCert {
    std::string label;
    Laurent center;
    Rat radius_c;
    long radius_exp = 0;
    Rat tmin;
    bool verified = false;
    Rat lhs;     // majorant of everything except the dominant term
    Rat rhs;     // |d| * radius_c
    Rat margin;  // rhs - lhs
    long dominant_exp = 0;
    // (exponent of 1/|t|, coefficient); every coefficient is >= 0
    std::vector<std::pair<long, Rat>> majorant;
    std::string diagnostic;
};

// Certifies a root of f_t within radius_c / |t|^radius_exp of center(1/t)
// for every |t| >= tmin.
EnclosureCert certify_enclosure(const Laurent& center, const Rat& radius_c, long radius_exp, const Rat& tmin);

// Radii of the low-order enclosures.
Rat radius_alpha0();  // 5.01, exponent 3
Rat radius_alpha2();  // 5.02, exponent 1
Rat radius_alpha13(); // 2.16, exponent 1

// The four low-order enclosures, in root order 0, 1, 2, 3. `scale`
// multiplies every radius.
std::vector<EnclosureCert> root_certificates(const Rat& tmin, const Rat& scale = 1);

enum class HighOrder { B, B3 };
Laurent high_order_center(HighOrder which);
EnclosureCert certify_high_order(HighOrder which, const Rat& tmin = 100, const Rat& scale = 1);

struct RootSeparation {
    Rat tmin;
    Rat min_pairwise;    // among alpha0, alpha1, alpha3
    Rat min_to_alpha2;   // coefficient of |t|
    Rat alpha0_abs;      // coefficient of 1/|t|
};

RootSeparation root_separation(const Rat& tmin);

}  // namespace thueq::rouche
