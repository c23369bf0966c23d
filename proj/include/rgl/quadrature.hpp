#pragma once

#include <Eigen/Dense>

namespace rgl {

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Laguerre rule: sum_i w_i f(s_i) == int_0^inf e^{-s} f(s) ds
/// exactly for polynomials of degree <= 2n-1. Nodes ascending.
QuadratureRule gauss_laguerre(int n);

/// n-point Gauss-Hermite rule: sum_i w_i f(u_i) == int_R e^{-u^2} f(u) du
/// exactly for polynomials of degree <= 2n-1. Nodes ascending.
QuadratureRule gauss_hermite(int n);

}  // namespace rgl
