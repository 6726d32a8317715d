#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace bzwave {

// Adaptive Gauss-Kronrod (G7,K15). Throws QuadratureFailure if the absolute
// tolerance cannot be reached within the depth limit. Stateless; safe for
// concurrent callers.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-12,
                          int max_depth = 60);

// Composite Simpson over uniformly spaced samples. Grids are built with odd
// node counts; an even count falls back to Simpson + 3/8 on the last three
// cells, keeping 4th order.
double composite_simpson(const std::vector<double>& f, double dx);

// Simpson with per-node weights exposed, for deterministic reductions over
// masked integrands.
std::vector<double> simpson_weights(std::size_t n, double dx);

}  // namespace bzwave
