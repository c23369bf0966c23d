#pragma once

#include "rgl/basis.hpp"

namespace rgl {

/// Largest kernel-evaluation time kept clear of zeros of sinh(e^{-i theta}
/// omega t) and of branch ambiguity of the principal-value prefactor:
/// pi / (2 omega max(1, |tan theta|)). Longer linear evolution always goes
/// through the (exact, unconditionally stable) mode propagator.
double delta_safe(const ModelParams& p);

/// Exact mode-space semigroup: c_n -> c_n exp(-e^{-i theta}(E_{Omega,n} - mu) t).
/// Energies are re-derived from the mode quantum numbers with the supplied
/// parameters, so mu/Omega overrides are honored. Requires t >= 0.
SpectralCoeffs propagate_modes(const SpectralCoeffs& coeffs, double t,
                               const ModelParams& p);

/// One evaluation of the semigroup kernel S_Omega(t,x,y).
struct KernelEval {
  Complex prefactor;  // principal branch of (omega/(2 pi sinh(e^{-i t} w t)))^{d/2}
  Complex phase;      // Phi(t,x,y); Phi_1 = Re, Phi_2 = Im
  Complex value;      // prefactor * exp(phase)
};

/// Explicit Mehler-type kernel with complex time direction e^{-i theta} and
/// rotating-frame cross terms. In 3D the unrotated x3 y3 oscillator term is
/// included. Requires 0 < t < delta_safe(p).
KernelEval mehler_kernel(double t, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y, const ModelParams& p);

/// Discretization of f -> int S_Omega(t,x,y) f(y) dy on the basis grid.
///
/// For each output node the y-integral is evaluated by a Gauss-Hermite rule
/// centered and scaled to the Gaussian core of the integrand (the kernel is
/// an exact complex Gaussian in y, the band-limited field a polynomial times
/// a Gaussian), with the field synthesized at the quadrature points. Building
/// the operator once amortizes the quadrature over many applications at the
/// same t.
class KernelOperator {
 public:
  KernelOperator(const SpectralBasis& basis, double t, int gh_points = 24);

  WaveField apply(const WaveField& field) const;
  Eigen::VectorXcd apply_to_coeffs(const Eigen::VectorXcd& coeffs) const;

  double time() const { return t_; }

 private:
  const SpectralBasis* basis_;
  double t_;
  Eigen::MatrixXcd a_perp_;       // (n_perp_nodes x n_perp_modes)
  Eigen::MatrixXcd a_axial_;      // (n_z x n_axial_modes), 3D only
  std::vector<int> perp_index_;   // retained mode -> perp column
  std::vector<int> axial_index_;  // retained mode -> axial column
};

/// One-shot convenience wrapper over KernelOperator.
WaveField apply_kernel(double t, const WaveField& field, int gh_points = 24);

struct GaussianDominationResult {
  double c = 0.0;      // smallest constant with Phi_1 <= -|x-y|^2/(c t)
  double delta = 0.0;  // largest sampled time up to which the bound holds
  bool pass = false;
};

/// Lattice search for the Gaussian-domination bound on the real part of the
/// kernel phase. Samples x, y on a fixed grid (|coordinates| <= 5) for each
/// time in t_grid (ascending); pass = false if no positive (c, delta) exist.
GaussianDominationResult gaussian_domination(const ModelParams& p,
                                             const Eigen::VectorXd& t_grid);

struct SmoothingProbe {
  double t = 0.0;
  double q = 0.0;
  double r = 0.0;
  double observed_ratio = 0.0;
};

/// Empirical L^q -> L^r smoothing ratio
///   max_f ||S(t) f||_r / (t^{d/2 (1/r - 1/q)} ||f||_q)
/// over a documented family: centered Gaussians of three widths, two shifted
/// Gaussians, and `family_size` fixed-seed random band-limited fields.
/// Norms are discrete quadrature norms; q or r = infinity is the grid max.
SmoothingProbe smoothing_probe(const SpectralBasis& basis, double t, double q,
                               double r, int family_size);

/// Same probe for the gradient estimate: numerator ||grad S(t)f||_r +
/// ||x S(t)f||_r (finite-difference gradient on the polar grid), scale
/// t^{-1/2 + d/2 (1/r - 1/q)}.
SmoothingProbe smoothing_probe_gradient(const SpectralBasis& basis, double t,
                                        double q, double r, int family_size);

}  // namespace rgl
