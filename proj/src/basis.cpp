#include "rgl/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "rgl/quadrature.hpp"

namespace rgl {

std::int64_t degeneracy(int level, int dim) {
  if (level < 1) throw std::invalid_argument("degeneracy: level must be >= 1");
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("degeneracy: dim must be 2 or 3");
  // binomial(dim + level - 2, level - 1) with small arguments, exact.
  const int n = dim + level - 2;
  const int k = level - 1;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<EigenMode> enumerate_modes(const ModelParams& p, int max_level) {
  std::vector<EigenMode> modes;
  for (int level = 1; level <= max_level; ++level) {
    const int k = level - 1;  // 2 n_r + |m| (+ n_z) = k
    const int nz_max = (p.dim == 3) ? k : 0;
    for (int nz = 0; nz <= nz_max; ++nz) {
      const int k2 = k - nz;
      for (int nr = 0; 2 * nr <= k2; ++nr) {
        const int mabs = k2 - 2 * nr;
        for (int m : (mabs == 0 ? std::vector<int>{0}
                                : std::vector<int>{-mabs, mabs})) {
          EigenMode mode;
          mode.radial_index = nr;
          mode.angular_index = m;
          mode.axial_index = nz;
          mode.energy_unrotated = p.omega * (0.5 * p.dim + level - 1);
          mode.energy_rotated = mode.energy_unrotated - p.Omega * m;
          modes.push_back(mode);
        }
      }
    }
  }
  std::sort(modes.begin(), modes.end(),
            [](const EigenMode& a, const EigenMode& b) {
              return std::make_tuple(a.energy_rotated, std::abs(a.angular_index),
                                     a.angular_index, a.radial_index,
                                     a.axial_index) <
                     std::make_tuple(b.energy_rotated, std::abs(b.angular_index),
                                     b.angular_index, b.radial_index,
                                     b.axial_index);
            });
  return modes;
}

namespace {

// Normalized radial factor sqrt(omega^{|m|+1} nr! / (pi (nr+|m|)!)) *
// r^|m| L_{nr}^{|m|}(omega r^2) e^{-omega r^2 / 2}, so that
// int_0^inf R^2 r dr = 1/(2 pi).
double radial_factor(int nr, int mabs, double omega, double r) {
  if (r == 0.0 && mabs > 0) return 0.0;
  const double s = omega * r * r;
  // associated Laguerre L_{nr}^{mabs}(s) by upward recurrence
  double lk = 1.0;
  if (nr >= 1) {
    double lkm1 = 1.0;
    lk = 1.0 + mabs - s;
    for (int k = 1; k < nr; ++k) {
      const double lkp1 =
          ((2.0 * k + 1.0 + mabs - s) * lk - (k + mabs) * lkm1) / (k + 1.0);
      lkm1 = lk;
      lk = lkp1;
    }
  }
  const double log_norm =
      0.5 * ((mabs + 1) * std::log(omega) + std::lgamma(nr + 1.0) -
             std::log(M_PI) - std::lgamma(nr + mabs + 1.0));
  const double log_r = (mabs > 0) ? mabs * std::log(r) : 0.0;
  return std::exp(log_norm + log_r - 0.5 * s) * lk;
}

// Normalized 1D Hermite function (omega/pi)^{1/4} / sqrt(2^k k!) *
// H_k(sqrt(omega) z) e^{-omega z^2 / 2}, via the stable normalized recurrence.
double hermite_function(int k, double omega, double z) {
  const double u = std::sqrt(omega) * z;
  double h0 = std::pow(omega / M_PI, 0.25) * std::exp(-0.5 * u * u);
  if (k == 0) return h0;
  double h1 = std::sqrt(2.0) * u * h0;
  for (int j = 1; j < k; ++j) {
    const double h2 =
        std::sqrt(2.0 / (j + 1.0)) * u * h1 - std::sqrt(j / (j + 1.0)) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

}  // namespace

Complex SpectralBasis::inner(const Eigen::VectorXcd& f,
                             const Eigen::VectorXcd& g) const {
  return (f.conjugate().array() * quad_weights.array() * g.array()).sum();
}

SpectralBasis build_basis(const ModelParams& p, const Truncation& t_in) {
  if (auto rep = validate(p); !rep.ok())
    throw std::invalid_argument("build_basis: invalid parameters: " +
                                rep.summary());
  const Truncation t = t_in.with_defaults();
  if (auto rep = validate(t, p.dim); !rep.ok())
    throw std::invalid_argument("build_basis: invalid truncation: " +
                                rep.summary());

  SpectralBasis basis;
  basis.params = p;
  basis.trunc = t;
  basis.modes = enumerate_modes(p, t.max_level);
  if (basis.modes.empty())
    throw std::invalid_argument("build_basis: truncation retains no modes");

  // Radial rule in s = omega r^2: int_0^inf g(r) r dr
  //   = 1/(2 omega) sum_i w_i e^{s_i} g(sqrt(s_i/omega)).
  const QuadratureRule gl = gauss_laguerre(t.n_radial_quad);
  const int nr = t.n_radial_quad;
  basis.r_nodes.resize(nr);
  basis.r_weights.resize(nr);
  for (int i = 0; i < nr; ++i) {
    basis.r_nodes[i] = std::sqrt(gl.nodes[i] / p.omega);
    basis.r_weights[i] = gl.weights[i] * std::exp(gl.nodes[i]) / (2.0 * p.omega);
  }

  const int nphi = t.n_angular_quad;
  basis.phi_nodes.resize(nphi);
  for (int a = 0; a < nphi; ++a) basis.phi_nodes[a] = 2.0 * M_PI * a / nphi;
  basis.phi_weight = 2.0 * M_PI / nphi;

  int nz = 1;
  if (p.dim == 3) {
    const QuadratureRule gh = gauss_hermite(t.n_axial_quad);
    nz = t.n_axial_quad;
    basis.z_nodes.resize(nz);
    basis.z_weights.resize(nz);
    for (int i = 0; i < nz; ++i) {
      basis.z_nodes[i] = gh.nodes[i] / std::sqrt(p.omega);
      basis.z_weights[i] =
          gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]) / std::sqrt(p.omega);
    }
  }

  const int n_nodes = nr * nphi * nz;
  basis.node_coords.resize(n_nodes, p.dim);
  basis.quad_weights.resize(n_nodes);
  for (int ir = 0; ir < nr; ++ir) {
    for (int ia = 0; ia < nphi; ++ia) {
      for (int iz = 0; iz < nz; ++iz) {
        const int k = (ir * nphi + ia) * nz + iz;
        const double r = basis.r_nodes[ir], phi = basis.phi_nodes[ia];
        basis.node_coords(k, 0) = r * std::cos(phi);
        basis.node_coords(k, 1) = r * std::sin(phi);
        double w = basis.r_weights[ir] * basis.phi_weight;
        if (p.dim == 3) {
          basis.node_coords(k, 2) = basis.z_nodes[iz];
          w *= basis.z_weights[iz];
        }
        basis.quad_weights[k] = w;
      }
    }
  }

  // Mode values on the grid, then renormalize each column so the discrete
  // norm is exactly 1.
  const int n_modes = basis.n_modes();
  basis.mode_values.resize(n_nodes, n_modes);
  const double angular_norm = 1.0 / std::sqrt(2.0 * M_PI);
  for (int n = 0; n < n_modes; ++n) {
    const EigenMode& mode = basis.modes[n];
    const int mabs = std::abs(mode.angular_index);
    for (int ir = 0; ir < nr; ++ir) {
      // radial_factor already carries the 1/sqrt(pi); fold the angular
      // normalization so |chi|^2 integrates to 1.
      const double rad = radial_factor(mode.radial_index, mabs, p.omega,
                                       basis.r_nodes[ir]) *
                         std::sqrt(M_PI) * angular_norm;
      for (int ia = 0; ia < nphi; ++ia) {
        const double arg = mode.angular_index * basis.phi_nodes[ia];
        const Complex ang(std::cos(arg), std::sin(arg));
        for (int iz = 0; iz < nz; ++iz) {
          const int k = (ir * nphi + ia) * nz + iz;
          double axial = 1.0;
          if (p.dim == 3)
            axial = hermite_function(mode.axial_index, p.omega, basis.z_nodes[iz]);
          basis.mode_values(k, n) = rad * ang * axial;
        }
      }
    }
  }
  basis.mode_norm_scale.resize(n_modes);
  for (int n = 0; n < n_modes; ++n) {
    const double norm = std::sqrt(
        (basis.mode_values.col(n).cwiseAbs2().array() * basis.quad_weights.array())
            .sum());
    basis.mode_norm_scale[n] = 1.0 / norm;
    basis.mode_values.col(n) *= basis.mode_norm_scale[n];
  }
  return basis;
}

SpectralCoeffs::SpectralCoeffs(const SpectralBasis& b, Eigen::VectorXcd v)
    : basis(&b), values(std::move(v)) {
  if (values.size() != b.n_modes())
    throw std::invalid_argument("SpectralCoeffs: length must equal mode count");
}

WaveField::WaveField(const SpectralBasis& b, Eigen::VectorXcd v)
    : basis(&b), values(std::move(v)) {
  if (values.size() != b.n_nodes())
    throw std::invalid_argument("WaveField: length must equal node count");
}

WaveField synthesize(const SpectralCoeffs& coeffs) {
  if (!coeffs.basis) throw std::invalid_argument("synthesize: unbound coeffs");
  return WaveField(*coeffs.basis, coeffs.basis->mode_values * coeffs.values);
}

SpectralCoeffs analyze(const WaveField& field) {
  if (!field.basis) throw std::invalid_argument("analyze: unbound field");
  const SpectralBasis& b = *field.basis;
  Eigen::VectorXcd weighted =
      field.values.array() * b.quad_weights.array().cast<Complex>();
  return SpectralCoeffs(b, b.mode_values.adjoint() * weighted);
}

SpectralCoeffs apply_hamiltonian(const SpectralCoeffs& coeffs) {
  if (!coeffs.basis)
    throw std::invalid_argument("apply_hamiltonian: unbound coeffs");
  const SpectralBasis& b = *coeffs.basis;
  Eigen::VectorXcd out = coeffs.values;
  for (int n = 0; n < b.n_modes(); ++n) out[n] *= b.modes[n].energy_rotated;
  return SpectralCoeffs(b, std::move(out));
}

Eigen::MatrixXcd evaluate_modes(const SpectralBasis& basis,
                                const Eigen::MatrixXd& points) {
  const ModelParams& p = basis.params;
  if (points.cols() != p.dim)
    throw std::invalid_argument("evaluate_modes: point dimension mismatch");
  const int np = static_cast<int>(points.rows());
  const int nm = basis.n_modes();
  Eigen::MatrixXcd vals(np, nm);
  const double angular_norm = 1.0 / std::sqrt(2.0 * M_PI);
  for (int k = 0; k < np; ++k) {
    const double x = points(k, 0), y = points(k, 1);
    const double r = std::hypot(x, y);
    const double phi = std::atan2(y, x);
    for (int n = 0; n < nm; ++n) {
      const EigenMode& mode = basis.modes[n];
      const int mabs = std::abs(mode.angular_index);
      double v = radial_factor(mode.radial_index, mabs, p.omega, r) *
                 std::sqrt(M_PI) * angular_norm;
      if (p.dim == 3)
        v *= hermite_function(mode.axial_index, p.omega, points(k, 2));
      const double arg = mode.angular_index * phi;
      vals(k, n) =
          v * basis.mode_norm_scale[n] * Complex(std::cos(arg), std::sin(arg));
    }
  }
  return vals;
}

Eigen::VectorXcd synthesize_at(const SpectralBasis& basis,
                               const Eigen::VectorXcd& coeffs,
                               const Eigen::MatrixXd& points) {
  return evaluate_modes(basis, points) * coeffs;
}

}  // namespace rgl
