#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace rgl {

/// Physical and dissipation parameters of the rotating Ginzburg-Landau /
/// Gross-Pitaevskii hybrid model.
///
/// The dissipation angle theta_d fixes the split of the complex time
/// direction: gamma = cos(theta_d) > 0 is the dissipative weight and
/// beta = -sin(theta_d) the dispersive one, normalized so that
/// gamma^2 + beta^2 = 1.
struct ModelParams {
  double omega = 1.0;    // trap frequency, > 0
  double Omega = 0.0;    // rotation speed, |Omega| < omega
  double theta_d = 0.0;  // dissipation angle, in (-pi/2, pi/2)
  double lambda = 0.0;   // interaction strength, >= 0 (defocusing)
  double sigma = 1.0;    // nonlinearity exponent, > 0
  double mu = 0.0;       // chemical potential
  int dim = 2;           // spatial dimension, 2 or 3

  double gamma() const { return std::cos(theta_d); }
  double beta() const { return -std::sin(theta_d); }
};

/// Admissible upper bound on the nonlinearity exponent: d/(2(d-2)),
/// read as +infinity in d = 2. Throws std::invalid_argument for
/// dimensions outside {2, 3}.
double sigma_bound(int dim);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every standing assumption of the model. Total: always returns a
/// report, never throws. An empty report means all invariants hold.
ValidationReport validate(const ModelParams& p);

/// Spectral truncation and quadrature sizes.
///
/// Sizing rule: n_radial_quad >= max_level + 1 and
/// n_angular_quad >= 4*max_level + 1 (n_axial_quad >= max_level + 1 in 3D),
/// so that pair products of retained basis functions are integrated exactly
/// and the cubic product is angularly alias-free.
struct Truncation {
  int max_level = 8;       // highest oscillator level retained, >= 1
  int n_radial_quad = 0;   // 0 = apply the sizing rule
  int n_angular_quad = 0;  // 0 = apply the sizing rule
  int n_axial_quad = 0;    // 0 = apply the sizing rule (3D only)

  /// Returns a copy with zero entries replaced by the documented rule.
  Truncation with_defaults() const;
};

/// Checks the truncation against the documented sizing rule.
ValidationReport validate(const Truncation& t, int dim);

}  // namespace rgl
