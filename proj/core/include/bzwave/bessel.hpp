#pragma once

namespace bzwave {

// Bessel functions of the first kind, implemented in-repo so the library has
// no special-function dependency. Power series below the crossover, Hankel
// asymptotic expansion above it, both accumulated in long double; absolute
// accuracy <= 1e-12 on (0, 50].
double bessel_j0(double x);
double bessel_j1(double x);

}  // namespace bzwave
