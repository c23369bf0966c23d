#pragma once

#include <vector>

#include "rgl/basis.hpp"

namespace rgl {

/// Energy split E = kinetic + potential + nonlinear + rotational with
///   kinetic    = 1/2 ||grad psi||^2
///   potential  = int V |psi|^2,  V = omega^2 |x|^2 / 2
///   nonlinear  = lambda/(sigma+1) ||psi||_{2s+2}^{2s+2}
///   rotational = -Omega <psi, L psi>
struct EnergyBreakdown {
  double kinetic = 0.0;
  double potential = 0.0;
  double nonlinear = 0.0;
  double rotational = 0.0;
  double total = 0.0;
};

/// Time series of simulation diagnostics. Columns share one length and
/// times are strictly increasing. dpsi_l2sq holds ||d_t psi||_{L^2}^2
/// evaluated spectrally from the equation at the sample time; it backs the
/// free-energy identity and is not part of the CSV contract.
struct DiagnosticsSeries {
  std::vector<double> t;
  std::vector<double> mass;
  std::vector<double> e_kin, e_pot, e_nl, e_rot, e_total;
  std::vector<double> free_energy;
  std::vector<double> angular_momentum;
  std::vector<double> dpsi_l2sq;

  std::size_t size() const { return t.size(); }
};

/// M(psi) = sum |c_n|^2 (Parseval, exact in the truncated basis).
double mass(const SpectralCoeffs& coeffs);

/// Quadrature mass int |psi|^2 dx of a grid field.
double mass_quadrature(const WaveField& field);

/// <L> = sum m_n |c_n|^2.
double angular_momentum(const SpectralCoeffs& coeffs);

EnergyBreakdown energy(const SpectralCoeffs& coeffs, const ModelParams& p);

/// F = E - mu M.
double free_energy(const SpectralCoeffs& coeffs, const ModelParams& p);

/// ||f||_Sigma = sqrt(||f||^2 + ||grad f||^2 + ||x f||^2), with the gradient
/// term obtained spectrally from 2<H_0 f, f> - omega^2 ||x f||^2.
double sigma_norm(const SpectralCoeffs& coeffs);

/// Discrete L^p norm (sum w |f|^p)^{1/p}; p = infinity gives the grid max.
double lp_norm(const WaveField& field, double p);

struct LocalizationCheck {
  double lhs = 0.0;    // ||f||_2
  double rhs = 0.0;    // 2 ||x f||_2^theta ||f||_p^{1-theta}
  double theta = 0.0;  // d(p-2) / (2p + d(p-2))
};

/// Localization inequality ||f||_2 <= 2 ||x f||_2^theta ||f||_p^{1-theta}.
/// Requires p >= 2.
LocalizationCheck localization_check(const WaveField& field, double p);

struct EnergyLowerBoundCheck {
  double lhs = 0.0;  // ||grad||^2 + ||x psi||^2 [+ ||psi||_{2s+2}^{2s+2}]
  double rhs = 0.0;  // c * E(psi)
  double c = 0.0;
};

/// lhs <= c E(psi) with c = 4 / min{1 - Omega^2/omega^2, 2 lambda sigma/(sigma+1)}.
/// For lambda = 0 only the gradient/moment part is checked, c = 4/(1-eps).
EnergyLowerBoundCheck energy_lower_bound_check(const SpectralCoeffs& coeffs,
                                               const ModelParams& p);

struct MassEnergyInterpolationCheck {
  double lhs = 0.0;       // M(psi)
  double rhs = 0.0;       // C E(psi)^exponent
  double theta_loc = 0.0; // d sigma / (2 sigma + 2 + d sigma)
  double exponent = 0.0;  // (sigma theta_loc + 1) / (sigma + 1)
  double C = 0.0;         // 2 c^exponent
};

/// M <= C E^{(sigma theta_loc + 1)/(sigma + 1)}. Requires lambda > 0 and
/// omega > |Omega|.
MassEnergyInterpolationCheck mass_energy_interpolation_check(
    const SpectralCoeffs& coeffs, const ModelParams& p);

struct IdentityResiduals {
  double mass_residual = 0.0;
  double energy_residual = 0.0;
};

/// Trapezoid-rule residuals of the mass and free-energy dissipation
/// identities over a recorded series. Requires at least 3 samples.
IdentityResiduals identity_residuals(const DiagnosticsSeries& series,
                                     const ModelParams& p);

}  // namespace rgl
