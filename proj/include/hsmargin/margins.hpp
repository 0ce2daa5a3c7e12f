#ifndef HSMARGIN_MARGINS_HPP_
#define HSMARGIN_MARGINS_HPP_

#include <string>
#include <vector>

#include "hsmargin/errors.hpp"

namespace hsm {

// Angular activation families. NormFace is the margin-free baseline
// (target and non-target activations are both plain cosine).
enum class Family {
  NormFace,
  CosFace,
  ArcFace,
  SphereFace,
  SphereFaceRv1,
  SphereFaceRv2,
  ExpMargin,
  CombinedMargin,
};

const char* family_name(Family f);
Family parse_family(const std::string& name);  // throws ConfigError

// An angle in radians, validated to lie in [0, pi].
class Angle {
 public:
  explicit Angle(double radians);
  double radians() const { return radians_; }

 private:
  double radians_;
};

// Margin family plus its hyperparameters. Use the factory functions; they
// validate the parameter ranges (multiplicative families need m >= 1,
// additive families need m >= 0, SphereFace is restricted to m in [1, 2]).
struct MarginSpec {
  Family family = Family::NormFace;
  double m = 1.0;
  // CombinedMargin only: psi(theta) = cos(m1*theta + m2) - m3.
  double m1 = 1.0;
  double m2 = 0.0;
  double m3 = 0.0;

  static MarginSpec normface();
  static MarginSpec cosface(double m);
  static MarginSpec arcface(double m);
  static MarginSpec sphereface(double m);
  static MarginSpec sphereface_r_v1(double m);
  static MarginSpec sphereface_r_v2(double m);
  static MarginSpec exp_margin(double m);
  static MarginSpec combined(double m1, double m2, double m3);

  // True for the families that modify the non-target activation
  // (SphereFace-R v2); the detachment rule acts on eta for these and on
  // psi for everything else.
  bool modifies_nontarget() const { return family == Family::SphereFaceRv2; }

  void validate() const;  // throws DomainError
};

// Target angular activation psi(theta).
double target_psi(const MarginSpec& spec, Angle theta);

// Non-target angular activation eta(theta).
double nontarget_eta(const MarginSpec& spec, Angle theta);

// Characteristic function delta(theta) = eta(theta) - psi(theta).
double characteristic_delta(const MarginSpec& spec, Angle theta);

// Per-non-target-class exponent s * (eta(theta_i) - eta(theta_y) +
// delta(theta_y)); together these values fully determine the loss.
double q_characteristics(Angle theta_y, Angle theta_i, double s,
                         const MarginSpec& spec);

// Gradient weighting factors rho_i = exp(Q_i) / (1 + sum_j exp(Q_j)),
// computed with max-shifted exponentials so large Q cannot overflow.
std::vector<double> grad_weighting_rho(const std::vector<double>& q_values);

// Points closer than this to a non-differentiable angle count as "at the
// kink" (only SphereFace-R v1 has one, at theta = pi/m).
inline constexpr double kKinkTolerance = 1e-9;

struct DerivResult {
  double value = 0.0;  // left-limit value when at_kink is set
  bool at_kink = false;
};

// Derivative of the target activation. With detach_characteristic the
// characteristic function is held constant in the backward pass, so the
// derivative of any target-modified family collapses to eta'(theta).
DerivResult target_psi_derivative_at(const MarginSpec& spec, Angle theta,
                                     bool detach_characteristic);

// Derivative of the non-target activation; detachment collapses
// SphereFace-R v2's eta' to psi'(theta) = -sin(theta).
DerivResult nontarget_eta_derivative_at(const MarginSpec& spec, Angle theta,
                                        bool detach_characteristic);

// Throwing wrappers: KinkError when the point is flagged and gradients are
// exact (detach_characteristic = false). Pre: theta in (0, pi).
double psi_derivative(const MarginSpec& spec, Angle theta,
                      bool detach_characteristic);
double eta_derivative(const MarginSpec& spec, Angle theta,
                      bool detach_characteristic);

}  // namespace hsm

#endif  // HSMARGIN_MARGINS_HPP_
