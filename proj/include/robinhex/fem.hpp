#pragma once

#include "robinhex/geometry.hpp"
#include "robinhex/mesh.hpp"

#include <array>

namespace robinhex {

/// Result of one FEM computation on the mesh pair (h, h/2).
/// `value` is the raw fine-mesh quantity; `extrapolated` applies two-level
/// Richardson extrapolation with exponent 2. `residual` is the algebraic
/// residual of the fine solve divided by an operator-norm estimate.
struct SolveReport {
    double value = 0.0;
    double mesh_h = 0.0;
    std::array<double, 2> refinement_pair{0.0, 0.0};  // values at h and h/2
    double extrapolated = 0.0;
    double residual = 0.0;
};

/// Smallest eigenvalue of -Laplace with Robin condition u_nu + beta*u = 0,
/// via shifted inverse iteration on (K + beta*B, M). The shift starts at
/// min(0, beta*P/A) - 1 and decreases automatically until the shifted matrix
/// is positive definite.
SolveReport robin_eig(const ConvexPolygon& p, double beta, double h);

/// Robin torsion tau = integral of u, (K + beta*B) u = load, beta > 0.
SolveReport robin_torsion(const ConvexPolygon& p, double beta, double h);

/// First nonzero Neumann eigenvalue (constant mode deflated).
SolveReport neumann_mu2(const ConvexPolygon& p, double h);

/// Sigma_infty = integral of u where -Laplace(u) = 1, u_nu = -|E|/|dE| on the
/// boundary and the boundary mean of u vanishes (one scalar multiplier).
SolveReport sigma_infty(const ConvexPolygon& p, double h);

}  // namespace robinhex
