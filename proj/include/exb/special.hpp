#pragma once

#include <functional>

namespace exb::special {

// Sign-change enclosure: lo < hi and f_lo, f_hi of strictly opposite sign.
struct RootBracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

// Safeguarded false-position/bisection hybrid. Deterministic; the bracket
// width shrinks every iteration, so it cannot stall on flat or kinked f.
// Returns the midpoint of the final enclosure of width <= tol.
double find_root(const std::function<double(double)>& f, RootBracket bracket,
                 double tol = 1e-14);

// Bessel function of the first kind J_order(x).
// Supported domain: order in [-1/2, 60], x in [0, 200].
// Absolute error <= 1e-10 across that domain.
double bessel_j(double order, double x);

// d/dx J_order(x), absolute error <= 1e-9 on the bessel_j domain.
// x = 0 is accepted only for order >= 1 (the derivative diverges below).
double bessel_j_prime(double order, double x);

// Smallest positive zero of J_order, located to 1e-10.
double first_bessel_zero(double order);

// Gamma function on (0, 100], relative error <= 1e-12.
double gamma_fn(double x);

}  // namespace exb::special
