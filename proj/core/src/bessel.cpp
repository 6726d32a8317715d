#include "bzwave/bessel.hpp"

#include <cmath>

namespace bzwave {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// The power series loses ~5 digits to cancellation near the crossover and the
// Hankel expansion's optimal truncation only clears 1e-12 from about x = 14
// up, so the switch sits at 16 with long double accumulation on both sides.
constexpr double kCrossover = 16.0;

long double series_j0(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum) + 1e-40L) break;
  }
  return sum;
}

long double series_j1(long double x) {
  const long double q = 0.25L * x * x;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * (k + 1.0L));
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum) + 1e-40L) break;
  }
  return 0.5L * x * sum;
}

// Hankel expansion, DLMF 10.17.3:
//   J_nu(x) ~ sqrt(2/(pi x)) [cos(w) sum (-1)^k a_{2k}/x^{2k}
//                             - sin(w) sum (-1)^k a_{2k+1}/x^{2k+1}],
// w = x - nu pi/2 - pi/4, a_m = prod_{j<=m} (4nu^2-(2j-1)^2) / (m! 8^m).
// Terms are generated by recurrence and the sums truncated at the smallest
// term.
long double hankel(long double x, int nu) {
  const long double fournu2 = 4.0L * nu * nu;
  long double c = 1.0L;  // a_m / x^m, signs of the products included
  long double P = 1.0L;
  long double Q = 0.0L;
  long double prev = 1e300L;
  for (int m = 1; m < 64; ++m) {
    const long double odd = 2.0L * m - 1.0L;
    c *= (fournu2 - odd * odd) / (8.0L * m * x);
    if (std::abs(c) >= prev) break;  // asymptotic tail turned around
    prev = std::abs(c);
    const long double signed_term = ((m / 2) % 2 == 0) ? c : -c;
    if (m % 2 == 1) {
      Q += signed_term;
    } else {
      P += signed_term;
    }
    if (std::abs(c) < 1e-20L) break;
  }
  const long double w = x - 0.5L * nu * kPi - 0.25L * kPi;
  const long double amp = std::sqrt(2.0L / (kPi * x));
  return amp * (P * std::cos(w) - Q * std::sin(w));
}

}  // namespace

double bessel_j0(double x) {
  const long double ax = std::abs(static_cast<long double>(x));
  if (ax == 0.0L) return 1.0;
  if (ax < kCrossover) return static_cast<double>(series_j0(ax));
  return static_cast<double>(hankel(ax, 0));
}

double bessel_j1(double x) {
  const long double ax = std::abs(static_cast<long double>(x));
  long double r;
  if (ax < kCrossover)
    r = series_j1(ax);
  else
    r = hankel(ax, 1);
  return static_cast<double>(x < 0.0 ? -r : r);
}

}  // namespace bzwave
