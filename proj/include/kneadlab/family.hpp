#pragma once

#include <cmath>
#include <string_view>
#include <vector>

namespace kneadlab {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// A one-parameter family mu*f on [0,1], scaled so that f(c) = 1 and
// f(0) = f(1) = 0 (hence mu*f(c) = mu).  Members supply analytic
// x-derivatives of f; the core never differentiates f numerically.
class UnimodalFamily {
 public:
  virtual ~UnimodalFamily() = default;

  virtual std::string_view name() const noexcept = 0;
  virtual double critical_point() const noexcept = 0;

  // mu * f(x)
  virtual double eval(double mu, double x) const = 0;

  // f'(x), f''(x), f'''(x)
  virtual double d1(double x) const = 0;
  virtual double d2(double x) const = 0;
  virtual double d3(double x) const = 0;
};

// Canonical arithmetic for the built-in maps.  The batched kernels replicate
// these exact operation orders; keep both sides in sync (see kernels.cpp).
inline double logistic_map(double mu, double x) {
  const double one_minus = 1.0 - x;
  return mu * (4.0 * (x * one_minus));
}

inline double sine_map(double mu, double x) { return mu * std::sin(kPi * x); }

class LogisticFamily final : public UnimodalFamily {
 public:
  std::string_view name() const noexcept override { return "logistic"; }
  double critical_point() const noexcept override { return 0.5; }
  double eval(double mu, double x) const override { return logistic_map(mu, x); }
  double d1(double x) const override { return 4.0 - 8.0 * x; }
  double d2(double) const override { return -8.0; }
  double d3(double) const override { return 0.0; }
};

class SineFamily final : public UnimodalFamily {
 public:
  std::string_view name() const noexcept override { return "sine"; }
  double critical_point() const noexcept override { return 0.5; }
  double eval(double mu, double x) const override { return sine_map(mu, x); }
  double d1(double x) const override { return kPi * std::cos(kPi * x); }
  double d2(double x) const override { return -kPi * kPi * std::sin(kPi * x); }
  double d3(double x) const override { return -kPi * kPi * kPi * std::cos(kPi * x); }
};

const UnimodalFamily& logistic_family();
const UnimodalFamily& sine_family();

// Lookup by CLI/config name; throws std::invalid_argument on unknown names.
const UnimodalFamily& family_by_name(std::string_view name);
std::vector<std::string_view> family_names();

struct OrbitPoint {
  int index;
  double value;
};

// x0, f(x0), ..., f^n(x0).  Inputs outside [0,1] (beyond a 1e-12 rounding
// grace) throw std::domain_error; tiny escapes are clamped.
std::vector<OrbitPoint> iterate(const UnimodalFamily& fam, double mu, double x0,
                                int n);

// d/dx f^n_mu(x): the chain-rule product of mu*f' along the orbit.  n >= 1.
double iterate_derivative(const UnimodalFamily& fam, double mu, double x, int n);

namespace detail {
// Validates v in [0,1] with 1e-12 grace, returning the clamped value.
double require_unit(double v, const char* what);
// Clamps rounding escapes from [0,1]; escapes beyond 1e-12 throw.
double clamp_unit(double v);
}  // namespace detail

}  // namespace kneadlab
