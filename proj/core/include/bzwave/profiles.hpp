#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

namespace bzwave {

// One-variable data family with derivatives and the antiderivative
// A(s) = int_0^s value. Closed forms where available; the base class falls
// back to adaptive quadrature.
class Profile {
 public:
  virtual ~Profile() = default;

  virtual double value(double s) const = 0;
  virtual double d1(double s) const = 0;
  virtual double d2(double s) const = 0;
  virtual double antiderivative(double s) const;

  // Half-width beyond which the profile is numerically negligible.
  virtual double support_radius() const = 0;
  virtual bool compact_support() const { return false; }
  virtual bool is_zero() const { return false; }
  // Non-decaying data admitted in test scenarios only.
  virtual bool decaying() const { return true; }

  virtual std::string describe() const = 0;
};

using ProfilePtr = std::shared_ptr<const Profile>;

class ZeroProfile final : public Profile {
 public:
  double value(double) const override { return 0.0; }
  double d1(double) const override { return 0.0; }
  double d2(double) const override { return 0.0; }
  double antiderivative(double) const override { return 0.0; }
  double support_radius() const override { return 0.0; }
  bool compact_support() const override { return true; }
  bool is_zero() const override { return true; }
  std::string describe() const override { return "zero"; }
};

// a * exp(-(s-c)^2 / (2 w^2)); antiderivative via erf.
class GaussianProfile final : public Profile {
 public:
  GaussianProfile(double amplitude, double width, double center = 0.0);
  double value(double s) const override;
  double d1(double s) const override;
  double d2(double s) const override;
  double antiderivative(double s) const override;
  double support_radius() const override;
  std::string describe() const override;

  double d3(double s) const;

 private:
  double a_, w_, c_;
};

// Derivative of a Gaussian; used to realize traveling-wave alpha data where
// alpha1 = -dir * l'.
class GaussianPrimeProfile final : public Profile {
 public:
  GaussianPrimeProfile(double amplitude, double width, double center = 0.0);
  double value(double s) const override;
  double d1(double s) const override;
  double d2(double s) const override;
  double antiderivative(double s) const override;
  double support_radius() const override;
  std::string describe() const override;

 private:
  GaussianProfile g_;
};

// a * sech^2((s-c)/w); antiderivative a*w*tanh.
class Sech2Profile final : public Profile {
 public:
  Sech2Profile(double amplitude, double width, double center = 0.0);
  double value(double s) const override;
  double d1(double s) const override;
  double d2(double s) const override;
  double antiderivative(double s) const override;
  double support_radius() const override;
  std::string describe() const override;

 private:
  double a_, w_, c_;
};

// Smooth compactly supported bump a * exp(1 - 1/(1 - ((s-c)/R)^2)) on
// |s-c| < R, zero outside.
class BumpProfile final : public Profile {
 public:
  BumpProfile(double amplitude, double radius, double center = 0.0);
  double value(double s) const override;
  double d1(double s) const override;
  double d2(double s) const override;
  double support_radius() const override;
  bool compact_support() const override { return true; }
  std::string describe() const override;

 private:
  double a_, r_, c_;
};

// Constant datum, test-only: violates the decay hypotheses but yields exactly
// solvable scenarios (alpha = 1 + c t).
class ConstantProfile final : public Profile {
 public:
  explicit ConstantProfile(double c) : c_(c) {}
  double value(double) const override { return c_; }
  double d1(double) const override { return 0.0; }
  double d2(double) const override { return 0.0; }
  double antiderivative(double s) const override { return c_ * s; }
  double support_radius() const override {
    return std::numeric_limits<double>::infinity();
  }
  bool decaying() const override { return false; }
  std::string describe() const override { return "constant"; }

 private:
  double c_;
};

// Natural cubic spline through tabulated (s, value) pairs, zero outside the
// table range. The antiderivative integrates the spline piecewise exactly.
class TabulatedProfile final : public Profile {
 public:
  TabulatedProfile(std::vector<double> s, std::vector<double> v);
  double value(double s) const override;
  double d1(double s) const override;
  double d2(double s) const override;
  double antiderivative(double s) const override;
  double support_radius() const override;
  std::string describe() const override;

 private:
  std::size_t segment(double s) const;
  std::vector<double> s_, v_, m_;       // nodes, values, second derivatives
  std::vector<double> cumint_;          // antiderivative at nodes, from s_[0]
  double int_to_zero_ = 0.0;            // integral from s_[0] to 0
};

// Loads a two-column CSV of (s, value) rows into a TabulatedProfile.
ProfilePtr load_tabulated_csv(const std::string& path);

}  // namespace bzwave
