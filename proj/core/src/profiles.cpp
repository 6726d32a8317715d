#include "bzwave/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bzwave/errors.hpp"
#include "bzwave/quadrature.hpp"

namespace bzwave {

double Profile::antiderivative(double s) const {
  return integrate_adaptive([this](double t) { return value(t); }, 0.0, s,
                            1e-12);
}

// ---------------------------------------------------------------- Gaussian

GaussianProfile::GaussianProfile(double amplitude, double width, double center)
    : a_(amplitude), w_(width), c_(center) {
  if (!(width > 0.0)) throw ConfigError("gaussian: width must be positive");
}

double GaussianProfile::value(double s) const {
  const double q = (s - c_) / w_;
  return a_ * std::exp(-0.5 * q * q);
}

double GaussianProfile::d1(double s) const {
  const double q = (s - c_) / w_;
  return -a_ * q / w_ * std::exp(-0.5 * q * q);
}

double GaussianProfile::d2(double s) const {
  const double q = (s - c_) / w_;
  return a_ * (q * q - 1.0) / (w_ * w_) * std::exp(-0.5 * q * q);
}

double GaussianProfile::d3(double s) const {
  const double q = (s - c_) / w_;
  return a_ * q * (3.0 - q * q) / (w_ * w_ * w_) * std::exp(-0.5 * q * q);
}

double GaussianProfile::antiderivative(double s) const {
  const double k = w_ * std::sqrt(M_PI / 2.0);
  const double r2 = std::sqrt(2.0);
  return a_ * k *
         (std::erf((s - c_) / (w_ * r2)) + std::erf(c_ / (w_ * r2)));
}

double GaussianProfile::support_radius() const {
  return std::abs(c_) + 9.0 * w_;
}

std::string GaussianProfile::describe() const { return "gaussian"; }

// ---------------------------------------------------------- GaussianPrime

GaussianPrimeProfile::GaussianPrimeProfile(double amplitude, double width,
                                           double center)
    : g_(amplitude, width, center) {}

double GaussianPrimeProfile::value(double s) const { return g_.d1(s); }
double GaussianPrimeProfile::d1(double s) const { return g_.d2(s); }
double GaussianPrimeProfile::d2(double s) const { return g_.d3(s); }
double GaussianPrimeProfile::antiderivative(double s) const {
  return g_.value(s) - g_.value(0.0);
}
double GaussianPrimeProfile::support_radius() const {
  return g_.support_radius();
}
std::string GaussianPrimeProfile::describe() const { return "gaussian_prime"; }

// ------------------------------------------------------------------ Sech2

Sech2Profile::Sech2Profile(double amplitude, double width, double center)
    : a_(amplitude), w_(width), c_(center) {
  if (!(width > 0.0)) throw ConfigError("sech2: width must be positive");
}

double Sech2Profile::value(double s) const {
  const double q = (s - c_) / w_;
  const double sech = 1.0 / std::cosh(q);
  return a_ * sech * sech;
}

double Sech2Profile::d1(double s) const {
  const double q = (s - c_) / w_;
  const double sech = 1.0 / std::cosh(q);
  return -2.0 * a_ / w_ * sech * sech * std::tanh(q);
}

double Sech2Profile::d2(double s) const {
  const double q = (s - c_) / w_;
  const double sech = 1.0 / std::cosh(q);
  const double th = std::tanh(q);
  return 2.0 * a_ / (w_ * w_) * sech * sech * (2.0 * th * th - sech * sech);
}

double Sech2Profile::antiderivative(double s) const {
  return a_ * w_ * (std::tanh((s - c_) / w_) + std::tanh(c_ / w_));
}

double Sech2Profile::support_radius() const {
  return std::abs(c_) + 22.0 * w_;
}

std::string Sech2Profile::describe() const { return "sech2"; }

// ------------------------------------------------------------------- Bump

BumpProfile::BumpProfile(double amplitude, double radius, double center)
    : a_(amplitude), r_(radius), c_(center) {
  if (!(radius > 0.0)) throw ConfigError("bump: radius must be positive");
}

double BumpProfile::value(double s) const {
  const double q = (s - c_) / r_;
  const double d = 1.0 - q * q;
  if (d <= 0.0) return 0.0;
  return a_ * std::exp(1.0 - 1.0 / d);
}

double BumpProfile::d1(double s) const {
  const double q = (s - c_) / r_;
  const double d = 1.0 - q * q;
  if (d <= 0.0) return 0.0;
  const double psi1 = -2.0 * q / (r_ * d * d);
  return value(s) * psi1;
}

double BumpProfile::d2(double s) const {
  const double q = (s - c_) / r_;
  const double d = 1.0 - q * q;
  if (d <= 0.0) return 0.0;
  const double psi1 = -2.0 * q / (r_ * d * d);
  const double psi2 = -2.0 * (1.0 + 3.0 * q * q) / (r_ * r_ * d * d * d);
  return value(s) * (psi1 * psi1 + psi2);
}

double BumpProfile::support_radius() const { return std::abs(c_) + r_; }

std::string BumpProfile::describe() const { return "bump"; }

// -------------------------------------------------------------- Tabulated

TabulatedProfile::TabulatedProfile(std::vector<double> s,
                                   std::vector<double> v)
    : s_(std::move(s)), v_(std::move(v)) {
  const std::size_t n = s_.size();
  if (n < 3 || v_.size() != n)
    throw ConfigError("tabulated profile needs >= 3 matched samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(s_[i] > s_[i - 1]))
      throw ConfigError("tabulated profile abscissae must increase");

  // Natural cubic spline second derivatives (tridiagonal solve).
  m_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
  diag[0] = diag[n - 1] = 1.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = s_[i] - s_[i - 1];
    const double h1 = s_[i + 1] - s_[i];
    sub[i] = h0 / 6.0;
    diag[i] = (h0 + h1) / 3.0;
    sup[i] = h1 / 6.0;
    rhs[i] = (v_[i + 1] - v_[i]) / h1 - (v_[i] - v_[i - 1]) / h0;
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];

  // Exact piecewise integrals of the cubic segments.
  cumint_.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = s_[i + 1] - s_[i];
    const double seg = 0.5 * h * (v_[i] + v_[i + 1]) -
                       h * h * h / 24.0 * (m_[i] + m_[i + 1]);
    cumint_[i + 1] = cumint_[i] + seg;
  }
  // Reference the antiderivative to s = 0.
  if (0.0 <= s_.front())
    int_to_zero_ = 0.0;
  else if (0.0 >= s_.back())
    int_to_zero_ = cumint_.back();
  else {
    // integral from s_[0] to 0, via the same segment formula.
    const std::size_t k = segment(0.0);
    const double h = s_[k + 1] - s_[k];
    const double a = (s_[k + 1] - 0.0) / h;
    const double b = (0.0 - s_[k]) / h;
    // Integral of the spline over [s_k, 0].
    const double part =
        h * (0.5 * (1.0 - a * a) * v_[k] + 0.5 * b * b * v_[k + 1]) +
        h * h * h / 6.0 *
            ((a * a / 2.0 - a * a * a * a / 4.0 - 0.25) * m_[k] +
             (b * b * b * b / 4.0 - b * b / 2.0) * m_[k + 1]);
    int_to_zero_ = cumint_[k] + part;
  }
}

std::size_t TabulatedProfile::segment(double s) const {
  const auto it = std::upper_bound(s_.begin(), s_.end(), s);
  std::size_t k = static_cast<std::size_t>(it - s_.begin());
  if (k == 0) return 0;
  if (k >= s_.size()) return s_.size() - 2;
  return k - 1;
}

double TabulatedProfile::value(double s) const {
  if (s < s_.front() || s > s_.back()) return 0.0;
  const std::size_t k = segment(s);
  const double h = s_[k + 1] - s_[k];
  const double a = (s_[k + 1] - s) / h;
  const double b = (s - s_[k]) / h;
  return a * v_[k] + b * v_[k + 1] +
         ((a * a * a - a) * m_[k] + (b * b * b - b) * m_[k + 1]) * h * h / 6.0;
}

double TabulatedProfile::d1(double s) const {
  if (s < s_.front() || s > s_.back()) return 0.0;
  const std::size_t k = segment(s);
  const double h = s_[k + 1] - s_[k];
  const double a = (s_[k + 1] - s) / h;
  const double b = (s - s_[k]) / h;
  return (v_[k + 1] - v_[k]) / h +
         h / 6.0 *
             ((3.0 * b * b - 1.0) * m_[k + 1] - (3.0 * a * a - 1.0) * m_[k]);
}

double TabulatedProfile::d2(double s) const {
  if (s < s_.front() || s > s_.back()) return 0.0;
  const std::size_t k = segment(s);
  const double h = s_[k + 1] - s_[k];
  const double a = (s_[k + 1] - s) / h;
  const double b = (s - s_[k]) / h;
  return a * m_[k] + b * m_[k + 1];
}

double TabulatedProfile::antiderivative(double s) const {
  double upto;
  if (s <= s_.front())
    upto = 0.0;
  else if (s >= s_.back())
    upto = cumint_.back();
  else {
    const std::size_t k = segment(s);
    const double h = s_[k + 1] - s_[k];
    const double a = (s_[k + 1] - s) / h;
    const double b = (s - s_[k]) / h;
    const double part =
        h * (0.5 * (1.0 - a * a) * v_[k] + 0.5 * b * b * v_[k + 1]) +
        h * h * h / 6.0 *
            ((a * a / 2.0 - a * a * a * a / 4.0 - 0.25) * m_[k] +
             (b * b * b * b / 4.0 - b * b / 2.0) * m_[k + 1]);
    upto = cumint_[k] + part;
  }
  return upto - int_to_zero_;
}

double TabulatedProfile::support_radius() const {
  return std::max(std::abs(s_.front()), std::abs(s_.back()));
}

std::string TabulatedProfile::describe() const { return "tabulated"; }

ProfilePtr load_tabulated_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open tabulated data file: " + path);
  std::vector<double> s, v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double a, b;
    if (ls >> a >> b) {
      s.push_back(a);
      v.push_back(b);
    }
  }
  return std::make_shared<TabulatedProfile>(std::move(s), std::move(v));
}

}  // namespace bzwave
