#pragma once

#include <vector>

namespace semoras {

enum class QuadratureKind {
  GaussLobattoLegendre,  // includes the interval endpoints
  GaussLegendre,         // interior nodes only
};

/// One-dimensional quadrature rule on [-1,1].
///
/// For GaussLobattoLegendre, `order` is the polynomial degree N and the rule
/// has N+1 nodes (exact for degree <= 2N-1). For GaussLegendre, `order` is
/// the degree of the interpolated space and the rule has order+1 nodes
/// (exact for degree <= 2*order+1).
struct Quadrature1D {
  QuadratureKind kind;
  int order;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive, sum to 2

  int num_nodes() const { return static_cast<int>(nodes.size()); }
};

/// Computes the rule by Newton iteration on the Legendre polynomials
/// (tolerance 1e-14, at most 100 iterations per node).
/// Throws std::invalid_argument for order < 2 (GLL) or order < 1 (GL).
Quadrature1D build_quadrature(QuadratureKind kind, int order);

/// Legendre polynomial value and first derivative at x.
struct LegendreEval {
  double value;
  double deriv;
};
LegendreEval legendre_eval(int n, double x);

/// Barycentric interpolation weights for an arbitrary node set.
std::vector<double> barycentric_weights(const std::vector<double>& nodes);

}  // namespace semoras
