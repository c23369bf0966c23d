#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rgl/params.hpp"

namespace rgl {

using Complex = std::complex<double>;

/// One joint eigenmode of the rotating Hamiltonian and the angular momentum
/// operator. In 2D these are Laguerre-Gauss modes
///   chi ~ r^|m| L_{n_r}^{|m|}(omega r^2) e^{-omega r^2/2} e^{i m phi},
/// in 3D tensorized with a 1D Hermite function of index n_z.
struct EigenMode {
  int radial_index = 0;   // n_r >= 0
  int angular_index = 0;  // m, eigenvalue of L
  int axial_index = 0;    // n_z >= 0, used in 3D only
  double energy_unrotated = 0.0;  // omega(2 n_r + |m| + 1) [+ omega(n_z + 1/2)]
  double energy_rotated = 0.0;    // energy_unrotated - Omega*m
};

/// Multiplicity of oscillator level n (n >= 1): binomial(d + n - 2, n - 1).
std::int64_t degeneracy(int level, int dim);

/// Enumerates all modes with unrotated energy <= omega(d/2 + max_level - 1),
/// sorted by ascending rotated energy with ties broken by (|m|, m, n_r, n_z).
std::vector<EigenMode> enumerate_modes(const ModelParams& p, int max_level);

/// Joint eigenbasis with its quadrature grid. Immutable after construction
/// and freely shareable across threads; all transforms below are pure.
struct SpectralBasis {
  ModelParams params;
  Truncation trunc;  // with defaults resolved
  std::vector<EigenMode> modes;

  // Polar grid: radial Gauss-Laguerre in s = omega r^2, uniform angles,
  // Gauss-Hermite along x3 in 3D. Flattened node k runs over
  // ((ir * n_phi + ia) * n_z + iz).
  Eigen::VectorXd r_nodes;     // radii
  Eigen::VectorXd r_weights;   // folded: sum_i w_i g(r_i) == int_0^inf g r dr
  Eigen::VectorXd phi_nodes;   // uniform on [0, 2pi)
  double phi_weight = 0.0;     // 2pi / n_phi
  Eigen::VectorXd z_nodes;     // empty in 2D
  Eigen::VectorXd z_weights;   // folded: sum w g(z) == int g dz

  Eigen::MatrixXd node_coords;   // n_nodes x dim, Cartesian
  Eigen::VectorXd quad_weights;  // flattened product weights
  Eigen::MatrixXcd mode_values;  // n_nodes x n_modes, discretely orthonormal
  Eigen::VectorXd mode_norm_scale;  // rescale absorbing float error, ~1

  int n_modes() const { return static_cast<int>(modes.size()); }
  int n_nodes() const { return static_cast<int>(quad_weights.size()); }

  /// Discrete inner product <f, g> = sum_k w_k conj(f_k) g_k.
  Complex inner(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const;
};

/// Builds the basis. Throws std::invalid_argument on invalid parameters or a
/// truncation violating the sizing rule.
SpectralBasis build_basis(const ModelParams& p, const Truncation& t);

/// Coefficient vector in the joint basis, aligned with the mode ordering.
struct SpectralCoeffs {
  const SpectralBasis* basis = nullptr;
  Eigen::VectorXcd values;

  SpectralCoeffs() = default;
  SpectralCoeffs(const SpectralBasis& b, Eigen::VectorXcd v);
};

/// Complex field values on the quadrature grid, aligned with node_coords.
struct WaveField {
  const SpectralBasis* basis = nullptr;
  Eigen::VectorXcd values;

  WaveField() = default;
  WaveField(const SpectralBasis& b, Eigen::VectorXcd v);
};

/// Pointwise evaluation of sum_n c_n chi_n at the quadrature nodes.
WaveField synthesize(const SpectralCoeffs& coeffs);

/// Discrete projection c_n = sum_k w_k conj(chi_n(x_k)) psi(x_k).
SpectralCoeffs analyze(const WaveField& field);

/// Diagonal action of the rotating Hamiltonian: c_n -> E_{Omega,n} c_n.
SpectralCoeffs apply_hamiltonian(const SpectralCoeffs& coeffs);

/// Values of every retained mode at arbitrary points (rows of `points`,
/// n x dim). Used by the kernel quadrature and by fine-grid oracles.
Eigen::MatrixXcd evaluate_modes(const SpectralBasis& basis,
                                const Eigen::MatrixXd& points);

/// sum_n c_n chi_n evaluated at arbitrary points.
Eigen::VectorXcd synthesize_at(const SpectralBasis& basis,
                               const Eigen::VectorXcd& coeffs,
                               const Eigen::MatrixXd& points);

namespace detail {

/// Radial part R of the 2D Laguerre-Gauss mode, normalized so that
/// int_0^inf R^2 r dr = 1; the full mode is R(r) e^{i m phi} / sqrt(2 pi).
double laguerre_gauss_radial(int nr, int mabs, double omega, double r);

/// Normalized 1D Hermite function of the omega-oscillator.
double hermite_function(int k, double omega, double z);

}  // namespace detail

}  // namespace rgl
