#include "rgl/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace rgl {

namespace {

// <|x|^2> by grid quadrature; exact for retained-band pairs.
double second_moment(const SpectralBasis& b, const Eigen::VectorXcd& field) {
  return (field.cwiseAbs2().array() * b.quad_weights.array() *
          b.node_coords.rowwise().squaredNorm().array())
      .sum();
}

// sum w |psi|^{2 sigma + 2}
double nl_norm_pow(const SpectralBasis& b, const Eigen::VectorXcd& field,
                   double sigma) {
  return (Eigen::pow(field.cwiseAbs2().array(), sigma + 1.0) *
          b.quad_weights.array())
      .sum();
}

}  // namespace

double mass(const SpectralCoeffs& coeffs) { return coeffs.values.squaredNorm(); }

double mass_quadrature(const WaveField& field) {
  return (field.values.cwiseAbs2().array() * field.basis->quad_weights.array())
      .sum();
}

double angular_momentum(const SpectralCoeffs& coeffs) {
  const SpectralBasis& b = *coeffs.basis;
  double lz = 0.0;
  for (int n = 0; n < b.n_modes(); ++n)
    lz += b.modes[n].angular_index * std::norm(coeffs.values[n]);
  return lz;
}

EnergyBreakdown energy(const SpectralCoeffs& coeffs, const ModelParams& p) {
  const SpectralBasis& b = *coeffs.basis;
  double h0 = 0.0;
  for (int n = 0; n < b.n_modes(); ++n)
    h0 += b.modes[n].energy_unrotated * std::norm(coeffs.values[n]);

  const Eigen::VectorXcd field = b.mode_values * coeffs.values;
  const double x2 = second_moment(b, field);
  const double omega_b = b.params.omega;  // grid/basis oscillator frequency

  EnergyBreakdown e;
  // ||grad psi||^2 = 2 <H_0> - omega_b^2 <|x|^2>, exact for the basis.
  e.kinetic = h0 - 0.5 * omega_b * omega_b * x2;
  e.potential = 0.5 * p.omega * p.omega * x2;
  e.rotational = -p.Omega * angular_momentum(coeffs);
  e.nonlinear =
      (p.lambda == 0.0)
          ? 0.0
          : p.lambda / (p.sigma + 1.0) * nl_norm_pow(b, field, p.sigma);
  e.total = e.kinetic + e.potential + e.nonlinear + e.rotational;
  return e;
}

double free_energy(const SpectralCoeffs& coeffs, const ModelParams& p) {
  return energy(coeffs, p).total - p.mu * mass(coeffs);
}

double sigma_norm(const SpectralCoeffs& coeffs) {
  const SpectralBasis& b = *coeffs.basis;
  double h0 = 0.0;
  for (int n = 0; n < b.n_modes(); ++n)
    h0 += b.modes[n].energy_unrotated * std::norm(coeffs.values[n]);
  const Eigen::VectorXcd field = b.mode_values * coeffs.values;
  const double x2 = second_moment(b, field);
  const double omega_b = b.params.omega;
  const double grad2 = 2.0 * h0 - omega_b * omega_b * x2;
  return std::sqrt(coeffs.values.squaredNorm() + grad2 + x2);
}

double lp_norm(const WaveField& field, double p) {
  if (std::isinf(p)) return field.values.cwiseAbs().maxCoeff();
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  const auto abs2 = field.values.cwiseAbs2().array();
  return std::pow(
      (Eigen::pow(abs2, 0.5 * p) * field.basis->quad_weights.array()).sum(),
      1.0 / p);
}

LocalizationCheck localization_check(const WaveField& field, double p) {
  if (p < 2.0)
    throw std::invalid_argument("localization_check: p must be >= 2");
  const SpectralBasis& b = *field.basis;
  const int d = b.params.dim;
  LocalizationCheck chk;
  chk.theta = d * (p - 2.0) / (2.0 * p + d * (p - 2.0));
  chk.lhs = std::sqrt(mass_quadrature(field));
  const double xnorm = std::sqrt(second_moment(b, field.values));
  chk.rhs = 2.0 * std::pow(xnorm, chk.theta) *
            std::pow(lp_norm(field, p), 1.0 - chk.theta);
  return chk;
}

EnergyLowerBoundCheck energy_lower_bound_check(const SpectralCoeffs& coeffs,
                                               const ModelParams& p) {
  const SpectralBasis& b = *coeffs.basis;
  const double eps = (p.Omega * p.Omega) / (p.omega * p.omega);
  if (!(eps < 1.0))
    throw std::invalid_argument("energy_lower_bound_check: needs omega > |Omega|");

  double h0 = 0.0;
  for (int n = 0; n < b.n_modes(); ++n)
    h0 += b.modes[n].energy_unrotated * std::norm(coeffs.values[n]);
  const Eigen::VectorXcd field = b.mode_values * coeffs.values;
  const double x2 = second_moment(b, field);
  const double omega_b = b.params.omega;
  const double grad2 = 2.0 * h0 - omega_b * omega_b * x2;

  EnergyLowerBoundCheck chk;
  if (p.lambda > 0.0) {
    chk.c = 4.0 / std::min(1.0 - eps, 2.0 * p.lambda * p.sigma / (p.sigma + 1.0));
    chk.lhs = grad2 + x2 + nl_norm_pow(b, field, p.sigma);
  } else {
    chk.c = 4.0 / (1.0 - eps);
    chk.lhs = grad2 + x2;
  }
  chk.rhs = chk.c * energy(coeffs, p).total;
  return chk;
}

MassEnergyInterpolationCheck mass_energy_interpolation_check(
    const SpectralCoeffs& coeffs, const ModelParams& p) {
  if (!(p.lambda > 0.0))
    throw std::invalid_argument(
        "mass_energy_interpolation_check: needs lambda > 0");
  const double eps = (p.Omega * p.Omega) / (p.omega * p.omega);
  if (!(eps < 1.0))
    throw std::invalid_argument(
        "mass_energy_interpolation_check: needs omega > |Omega|");

  MassEnergyInterpolationCheck chk;
  const int d = p.dim;
  chk.theta_loc = d * p.sigma / (2.0 * p.sigma + 2.0 + d * p.sigma);
  chk.exponent = (p.sigma * chk.theta_loc + 1.0) / (p.sigma + 1.0);
  const double c =
      4.0 / std::min(1.0 - eps, 2.0 * p.lambda * p.sigma / (p.sigma + 1.0));
  chk.C = 2.0 * std::pow(c, chk.exponent);
  chk.lhs = mass(coeffs);
  const double e = energy(coeffs, p).total;
  if (e == 0.0 && chk.lhs > 0.0)
    throw std::runtime_error(
        "mass_energy_interpolation_check: zero energy with positive mass");
  chk.rhs = chk.C * std::pow(e, chk.exponent);
  return chk;
}

IdentityResiduals identity_residuals(const DiagnosticsSeries& s,
                                     const ModelParams& p) {
  if (s.size() < 3)
    throw std::invalid_argument("identity_residuals: need at least 3 samples");
  const double two_gamma = 2.0 * p.gamma();
  IdentityResiduals res;
  double mass_integral = 0.0;    // int (E + sigma E_nl - mu M) ds
  double energy_integral = 0.0;  // int ||d_t psi||^2 ds
  auto mass_integrand = [&](std::size_t j) {
    return s.e_total[j] + p.sigma * s.e_nl[j] - p.mu * s.mass[j];
  };
  for (std::size_t j = 1; j < s.size(); ++j) {
    const double h = s.t[j] - s.t[j - 1];
    mass_integral += 0.5 * h * (mass_integrand(j) + mass_integrand(j - 1));
    energy_integral += 0.5 * h * (s.dpsi_l2sq[j] + s.dpsi_l2sq[j - 1]);
    res.mass_residual =
        std::max(res.mass_residual,
                 std::abs(s.mass[j] - s.mass[0] + two_gamma * mass_integral));
    res.energy_residual =
        std::max(res.energy_residual,
                 std::abs(s.free_energy[j] - s.free_energy[0] +
                          two_gamma * energy_integral));
  }
  return res;
}

}  // namespace rgl
