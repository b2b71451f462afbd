#pragma once

#include "thueq/ball.hpp"
#include "thueq/quadfield.hpp"

#include <array>
#include <optional>
#include <vector>

namespace thueq::dioph {

using quadfield::QuadInt;

struct Solution {
    long d = 1;
    QuadInt t, x, y, mu;
    std::optional<int> type_index;
};

// Moves the arguments into one field; rational integers adapt to the other.
std::vector<QuadInt> unify(std::vector<QuadInt> xs);

QuadInt eval_form(const QuadInt& t, const QuadInt& x, const QuadInt& y);

std::array<std::pair<QuadInt, QuadInt>, 4> orbit(const QuadInt& x, const QuadInt& y);

bool is_unit(const QuadInt& mu);

// One representative (xi, 0) per equivalence class.
std::vector<Solution> trivial_solutions(long d, const QuadInt& mu);

struct IrreducibilityResult {
    std::vector<QuadInt> exceptions;     // reducible f_t, sorted canonically
    std::vector<QuadInt> root_in_field;  // f_t has a root in the field
};

IrreducibilityResult irreducibility_exceptions();

struct ZeroSolutions {
    bool only_trivial = true;
    // x = slope * y for each listed slope
    std::vector<QuadInt> slopes;
};

ZeroSolutions solve_zero(const QuadInt& t);

// Non-trivial solutions with min(|x|, |y|) < 3 and |t| >= tmin_abs.
std::vector<Solution> small_solution_search(const Rat& tmin_abs);

// The distinct t values of a solution list, sorted canonically.
std::vector<QuadInt> t_values(const std::vector<Solution>& sols);

// Enclosures of alpha^(0..3) for the given t.
std::optional<std::array<ComplexBall, 4>> root_balls(const QuadInt& t, long bits);

int classify_type(const QuadInt& t, const QuadInt& x, const QuadInt& y);

}  // namespace thueq::dioph
