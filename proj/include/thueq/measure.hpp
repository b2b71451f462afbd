#pragma once

#include "thueq/descent.hpp"
#include "thueq/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thueq::measure {

// One exact inequality lhs <= rhs (lhs < rhs when strict).
struct ChainLine {
    std::string name;
    Rat lhs, rhs;
    bool strict = false;
    bool ok = false;
};

struct MeasureConstants {
    int type_index = 0;
    Rat tmin;
    int rmax = 0;
    // stated
    Rat k0, Q_coeff, l0_coeff, E_div, qmin_coeff, c_coeff;
    // exact chain at tmin
    Rat k0_exact, Q_exact, l0_exact, E_exact, base_exact, qmin_exact, c_exact;
    std::vector<ChainLine> lines;
    bool ok = false;
    std::string failing_line;
};

// Throws DependencyError when Lettl, the root identity or a Rouche
// certificate is missing at tmin.
MeasureConstants measure_constants(int type_index, const Rat& tmin, int rmax = 60);

// 1 / (c |t| |q|^(kappa_hi + 1)); gate |q| >= qmin |t|.
Rat irrationality_lower(const Rat& t_abs, const Rat& q_abs, int type_index);

struct Gate {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct AssemblyOptions {
    int kmax = 11;
    int rmax = 60;
};

struct ProofReport {
    Rat tmin;
    std::optional<Rat> kappa_hi;
    std::optional<Rat> contradiction_upper;
    Rat descent_lower_0, descent_lower_3;
    std::vector<Gate> gates;
    bool proven = false;
    std::string diagnostic;

    std::optional<descent::DescentChain> chain0, chain3;
    std::optional<MeasureConstants> m0, m3;
};

// Least integer X with X^(3 - kappa) >= 137.16, kappa = a/b.
Int contradiction_bound(const Rat& kappa);

ProofReport theorem_assembly(const Rat& tmin, const AssemblyOptions& opt = {});

struct CorollaryLin {
    Rat C;
    Rat t0;
    Rat kappa_hi_t0;
    Rat term_threshold;  // (20.14 C)^(1/4)
    Rat term_small;      // 3 C^(1/3)
    Rat term_measure;    // (443 C)^(1/(2 - kappa))
    Rat C0;
    bool consistency_ok = false;  // 443 > 8.86 * 15.48 / 0.31
    Rat family_coeff;             // |x|^4 <= family_coeff |t| on (x, +-x)
};

CorollaryLin corollary_lin(const Rat& C, std::optional<Rat> t0 = std::nullopt);

struct EpsGates {
    Rat t;
    Rat kappa_hi;
    bool g1 = false, g2 = false, g3 = false;
    bool all() const { return g1 && g2 && g3; }
};

EpsGates eps_gates(const Rat& eps, const Rat& t_abs);
// Literal form of gate (ii): 8.86 / |t|^(1/2 + eps/4) <= 0.33.
bool eps_gate2_literal(const Rat& eps, const Rat& t_abs);

struct CorollaryEps {
    Rat eps;
    Rat t0;
    EpsGates at_t0;
    EpsGates at_2t0;
};

CorollaryEps corollary_eps(const Rat& eps, const Rat& cap = Rat(pow(Int(10), 60)));

}  // namespace thueq::measure
