#pragma once

#include "ciq/rational.hpp"

#include <vector>

namespace ciq {

// Euler characteristic of a smooth complete intersection of multidegree
// `degrees` in P^n, via the coefficient of t^{n-r} in
// (prod d_i) * (1+t)^{n+1} / prod (1+d_i t), extracted from the truncated
// power series over exact rationals.
Int euler_char_ci(int n, const std::vector<int>& degrees);

// Middle Betti number b = dim H^{n-2} of the (2,3) complete intersection
// in P^n, n even >= 4: all other even degrees contribute 1, odd vanish.
Int middle_betti(int n);

}  // namespace ciq
