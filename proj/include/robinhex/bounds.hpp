#pragma once

#include "robinhex/geometry.hpp"
#include "robinhex/fem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace robinhex {

// Closed-form bounds. The width bounds sample 360 directions plus all edge
// normals and the diameter-orthogonal direction; every sampled direction
// yields a valid bound, so the maximum over samples never overestimates.

double eig_upper(const ConvexPolygon& p, double beta);                    // beta*P/A
double eig_lower_sperb(const ConvexPolygon& p, double beta, double mu2);  // beta > 0
double eig_lower_bossel(const ConvexPolygon& p, double beta);             // beta*h - beta^2
double eig_lower_width(const ConvexPolygon& p, double beta);              // slicing bound

double tor_upper(const ConvexPolygon& p, double beta);                           // beta*P/A^2
double tor_lower_keady(const ConvexPolygon& p, double beta, double sigma_inf);   // beta > 0
double tor_lower_width(const ConvexPolygon& p, double beta);                     // slicing bound
double tor_lower_cheeger(const ConvexPolygon& p, double beta);  // (beta*h - beta^2)/A

/// Minimal width over the sampled directions (the slicing bounds use it).
double minimal_width(const ConvexPolygon& p);

struct BoundsReport {
    std::string shape_id;
    double beta = 0.0;

    double eig_upper = 0.0;
    std::optional<double> eig_lower_sperb;
    std::optional<double> eig_lower_bossel;
    std::optional<double> eig_lower_width;
    double fem_eig = 0.0;

    double tor_upper = 0.0;
    std::optional<double> tor_lower_keady;
    std::optional<double> tor_lower_width;
    std::optional<double> tor_lower_cheeger;
    std::optional<double> fem_torsion_inv;

    std::optional<double> mu2;
    std::optional<double> sigma_inf;

    bool sandwich_ok = true;
    std::vector<std::string> violations;
};

/// Evaluates every applicable bound against FEM references at mesh size h
/// (extrapolated values). For beta < 0 only the upper bounds and the FEM
/// eigenvalue are reported. The sandwich tolerance is 2e-3 relative.
BoundsReport bounds_report(const ConvexPolygon& p, double beta, double mesh_h,
                           const std::string& shape_id);

struct AsymptoticRow {
    double beta;
    double ratio;   // value / beta
    double target;  // P/A or P/A^2
    double gap;     // |ratio - target|
};

enum class SpectralFunctional { eigenvalue, torsion };

/// value/beta against the beta -> 0 target along a beta list. Torsion FEM
/// requires beta > 0; negative-beta eigenvalue rows use FEM as well.
std::vector<AsymptoticRow> asymptotic_check(const ConvexPolygon& p, SpectralFunctional f,
                                            const std::vector<double>& betas, double mesh_h);

}  // namespace robinhex
