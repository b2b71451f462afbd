#pragma once

#include "thueq/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thueq::descent {

// |beta^(j)| < beta / (|t| |y|^3), beta = 8 / (sep^2 sep2)
struct BetaBound {
    Rat tmin;
    Rat exact;
    Rat stated;  // 8.86
    bool ok = false;
};

BetaBound beta_bound(const Rat& tmin);

struct Step1Result {
    int type_index = 0;
    Rat tmin;
    // type 0: |y| > exact |t|; type 3: |y| > |t| / exact
    Rat exact;
    Rat stated;  // 2.67 or 2.27
    bool ok = false;
    Rat side_margin;  // type 3: |4 x^4| - 1 when x = y
};

Step1Result step1(int type_index, const Rat& tmin);

struct Step2Result {
    Rat tmin;
    Rat exact;   // |y| > |t|^2 / exact
    Rat stated;  // 5.02
    bool ok = false;
    Rat side_margin;  // |1 - 5 t^2| - 1 lower bound
};

Step2Result step2_type0(const Rat& tmin);

struct StepRecord {
    int type_index = 0;
    int k = 0;
    Rat c0_in;
    Rat c1, c2, c3;
    Rat c_exact;  // formula value before rounding
    Rat c_out;    // chained value
    Rat y_lower;  // tmin^k / c_out
    bool nonvanish_ok = false;
    Rat nonvanish_margin;
    long P_degree = -1;
    long Vt_degree = -1;
    series::PadePair pade;  // integer coefficients
};

// The source series: B for type 0, B3 for type 3.
const series::Series& source_series(int type_index);

StepRecord run_step(int type_index, int k, const Rat& c0, const Rat& tmin, bool round = true);

struct DescentChain {
    int type_index = 0;
    Rat tmin;
    bool rounded = true;
    Step1Result s1;
    std::optional<Step2Result> s2;
    std::vector<StepRecord> steps;
    bool ok = false;
    std::string diagnostic;
    Rat y_lower;  // final lower bound for |y| at tmin
};

DescentChain run_descent(int type_index, int kmax, const Rat& tmin, bool round = true);

struct StarBounds {
    Rat Q, t_abs;
    Rat beta_coeff;           // |beta| < beta_coeff / (|t| |y|^3)
    Rat type_threshold_pow4;  // min(|x|,|y|)^4 >= 20.14 Q / |t|
    Rat lb_linear;            // 1 < lb_linear |y| + lb_cubic / |y|^3
    Rat lb_cubic;
    bool threshold_consistent = false;  // 8.86 / 0.44 <= 20.14
};

StarBounds star_bounds(const Rat& Q, const Rat& t_abs);
bool star_lb_holds(const StarBounds& s, const Rat& y_abs);

}  // namespace thueq::descent
