#include "rgl/params.hpp"

#include <sstream>
#include <stdexcept>

namespace rgl {

double sigma_bound(int dim) {
  if (dim == 2) return std::numeric_limits<double>::infinity();
  if (dim == 3) return 1.5;
  throw std::invalid_argument("sigma_bound: dim must be 2 or 3, got " +
                              std::to_string(dim));
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

ValidationReport validate(const ModelParams& p) {
  ValidationReport rep;
  auto bad = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (p.dim != 2 && p.dim != 3) {
    bad("dim must be 2 or 3 (got " + std::to_string(p.dim) + ")");
    return rep;  // remaining checks depend on a valid dimension
  }
  if (!(p.omega > 0.0) || !std::isfinite(p.omega))
    bad("omega must be positive and finite");
  if (!std::isfinite(p.Omega) || !(p.omega > std::abs(p.Omega)))
    bad("omega > |Omega| required (trapping condition)");
  const double half_pi = std::asin(1.0);
  if (!std::isfinite(p.theta_d) || !(std::abs(p.theta_d) < half_pi))
    bad("theta must lie strictly inside (-pi/2, pi/2)");
  if (!(p.lambda >= 0.0) || !std::isfinite(p.lambda))
    bad("lambda must be >= 0 (defocusing)");
  const double sb = sigma_bound(p.dim);
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma))
    bad("sigma must be positive");
  else if (!(p.sigma < sb)) {
    std::ostringstream os;
    os << "sigma < d/(2(d-2)) = " << sb << " required (got " << p.sigma << ")";
    bad(os.str());
  }
  if (!std::isfinite(p.mu)) bad("mu must be finite");
  return rep;
}

Truncation Truncation::with_defaults() const {
  Truncation t = *this;
  if (t.n_radial_quad == 0) t.n_radial_quad = t.max_level + 1;
  if (t.n_angular_quad == 0) t.n_angular_quad = 4 * t.max_level + 1;
  if (t.n_axial_quad == 0) t.n_axial_quad = t.max_level + 1;
  return t;
}

ValidationReport validate(const Truncation& t, int dim) {
  ValidationReport rep;
  auto bad = [&rep](const std::string& msg) { rep.violations.push_back(msg); };
  if (t.max_level < 1) bad("max_level must be >= 1");
  if (t.n_radial_quad < t.max_level + 1)
    bad("n_radial_quad >= max_level + 1 required");
  if (t.n_angular_quad < 4 * t.max_level + 1)
    bad("n_angular_quad >= 4*max_level + 1 required");
  if (dim == 3 && t.n_axial_quad < t.max_level + 1)
    bad("n_axial_quad >= max_level + 1 required in 3D");
  return rep;
}

}  // namespace rgl
