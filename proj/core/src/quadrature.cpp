#include "bzwave/quadrature.hpp"

#include <cmath>

#include "bzwave/errors.hpp"

namespace bzwave {

namespace {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit at
// the odd-index abscissae.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
  double integral;
  double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);

  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  const double integral = resk * h;
  const double error = std::abs((resk - resg) * h);
  return {integral, error};
}

double integrate_rec(const std::function<double(double)>& f, double a,
                     double b, double tol, int depth) {
  const GkResult r = gk15(f, a, b);
  if (r.error <= tol || r.error <= 1e-17 * std::abs(r.integral)) {
    return r.integral;
  }
  if (depth <= 0) {
    throw QuadratureFailure("adaptive quadrature did not reach tolerance");
  }
  const double c = 0.5 * (a + b);
  return integrate_rec(f, a, c, 0.5 * tol, depth - 1) +
         integrate_rec(f, c, b, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  return sign * integrate_rec(f, a, b, abs_tol, max_depth);
}

std::vector<double> simpson_weights(std::size_t n, double dx) {
  std::vector<double> w(n, 0.0);
  if (n < 2) return w;
  if (n == 2) {
    w[0] = w[1] = 0.5 * dx;
    return w;
  }
  std::size_t m = n;
  bool tail38 = false;
  if (n % 2 == 0) {
    // Even node count: odd interval count; close with Simpson 3/8.
    m = n - 3;
    tail38 = true;
  }
  // Composite Simpson over nodes [0, m-1] (m odd).
  w[0] += dx / 3.0;
  w[m - 1] += dx / 3.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    w[i] += (i % 2 == 1 ? 4.0 : 2.0) * dx / 3.0;
  }
  if (tail38) {
    const double c = 3.0 * dx / 8.0;
    w[n - 4] += c;
    w[n - 3] += 3.0 * c;
    w[n - 2] += 3.0 * c;
    w[n - 1] += c;
  }
  return w;
}

double composite_simpson(const std::vector<double>& f, double dx) {
  const std::vector<double> w = simpson_weights(f.size(), dx);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
  return s;
}

}  // namespace bzwave
