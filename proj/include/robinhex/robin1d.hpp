#pragma once

#include <vector>

namespace robinhex {

/// First Robin eigenvalue of the unit interval I = (-1/2, 1/2).
/// alpha > 0: the unique root of sqrt(l) tan(sqrt(l)/2) = alpha in (0, pi^2).
/// alpha = 0: exactly 0. alpha < 0: l = -mu with sqrt(mu) tanh(sqrt(mu)/2) = -alpha.
double interval_eigenvalue(double alpha);

/// Residual of the defining transcendental relation at (alpha, lambda).
/// alpha > 0 uses the relation alpha^2/(lambda + alpha^2) = sin^2(sqrt(lambda)/2);
/// alpha < 0 uses sqrt(mu) tanh(sqrt(mu)/2) = -alpha with mu = -lambda.
double interval_eigenvalue_residual(double alpha, double lambda);

/// First Robin eigenvalue of an interval of length w with parameter beta,
/// via the scaling law: lambda(I, w*beta) / w^2.
double interval_eigenvalue_scaled(double length, double beta);

/// Robin torsion of the unit interval for alpha > 0: tau = 1/12 + 1/(2*alpha).
double interval_torsion(double alpha);

/// Sequence lambda(I, w*beta)/w over the given widths; converges to 2*beta.
std::vector<double> small_width_eig_limit(double beta, const std::vector<double>& widths);

}  // namespace robinhex
