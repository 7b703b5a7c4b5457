#pragma once

#include <Eigen/Dense>

#include "semoras/quadrature.hpp"

namespace semoras {

/// One-dimensional spectral building blocks on the reference element [-1,1]
/// for the P_N - P_{N-2} pair: velocity on the N+1 GLL nodes, pressure on
/// the N-1 interior Gauss nodes.
struct OperatorSet1D {
  int order;  // N

  Quadrature1D gll;  // N+1 nodes
  Quadrature1D gl;   // N-1 nodes (degree N-2 rule)

  Eigen::MatrixXd D_gll;        // (N+1)x(N+1) nodal derivative matrix
  Eigen::VectorXd M_gll;        // diagonal GLL mass (the weights)
  Eigen::MatrixXd J_gl_to_gll;  // (N+1)x(N-1) interpolation, GL -> GLL
  Eigen::MatrixXd K_gll;        // (N+1)x(N+1) weak stiffness D^T M D

  // Derived factors used by the gradient/divergence tensor kernels.
  // weak_deriv = J^T M D and weak_mass = J^T M are scale-free: the physical
  // element Jacobians cancel between mass and derivative.
  Eigen::MatrixXd weak_deriv;  // (N-1)x(N+1)
  Eigen::MatrixXd weak_mass;   // (N-1)x(N+1)
};

/// Builds the full 1D operator set for polynomial degree N >= 2.
OperatorSet1D build_operator_set(int order);

/// Interpolation matrix evaluating Lagrange polynomials on `from` at the
/// points `to` (barycentric form; exact node hits handled).
Eigen::MatrixXd interpolation_matrix(const std::vector<double>& from,
                                     const std::vector<double>& to);

/// Nodal derivative matrix on an arbitrary node set (barycentric form with
/// the negative-sum diagonal, so rows sum to zero exactly).
Eigen::MatrixXd derivative_matrix(const std::vector<double>& nodes);

}  // namespace semoras
