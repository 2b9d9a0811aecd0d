#pragma once

#include <string>

#include "redchern/mpoly.hpp"

namespace redchern {

// Terms are rendered in canonical order. Variable names with a numeric
// suffix get a subscript ("c12" -> c_12 / c_{12}); "xi" renders as \xi in LaTeX.
std::string to_text(const MPoly& p);   // c_2 - 1/3*c_1^2
std::string to_latex(const MPoly& p);  // c_2 - \frac{1}{3} c_1^2

std::string variable_text(const Variable& v);
std::string variable_latex(const Variable& v);

}  // namespace redchern
