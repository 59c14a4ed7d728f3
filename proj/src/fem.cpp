#include "robinhex/fem.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace robinhex {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct System {
    SpMat stiffness;
    SpMat mass;
    SpMat boundary_mass;
    Eigen::VectorXd load;           // integral of each hat function
    Eigen::VectorXd boundary_load;  // boundary integral of each hat function
};

System assemble(const Mesh& mesh) {
    const int n = static_cast<int>(mesh.nodes.size());
    std::vector<Triplet> tk, tm, tb;
    tk.reserve(9 * mesh.triangles.size());
    tm.reserve(9 * mesh.triangles.size());
    tb.reserve(4 * mesh.boundary_edges.size());
    Eigen::VectorXd load = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd bload = Eigen::VectorXd::Zero(n);

    for (const auto& t : mesh.triangles) {
        const Point& a = mesh.nodes[t[0]];
        const Point& b = mesh.nodes[t[1]];
        const Point& c = mesh.nodes[t[2]];
        const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        const double ar = 0.5 * det;
        // Hat-function gradients.
        const double gx[3] = {(b.y - c.y) / det, (c.y - a.y) / det, (a.y - b.y) / det};
        const double gy[3] = {(c.x - b.x) / det, (a.x - c.x) / det, (b.x - a.x) / det};
        for (int i = 0; i < 3; ++i) {
            load[t[i]] += ar / 3.0;
            for (int j = 0; j < 3; ++j) {
                tk.emplace_back(t[i], t[j], ar * (gx[i] * gx[j] + gy[i] * gy[j]));
                tm.emplace_back(t[i], t[j], (i == j ? ar / 6.0 : ar / 12.0));
            }
        }
    }
    for (const auto& e : mesh.boundary_edges) {
        const Point& a = mesh.nodes[e[0]];
        const Point& b = mesh.nodes[e[1]];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        tb.emplace_back(e[0], e[0], len / 3.0);
        tb.emplace_back(e[1], e[1], len / 3.0);
        tb.emplace_back(e[0], e[1], len / 6.0);
        tb.emplace_back(e[1], e[0], len / 6.0);
        bload[e[0]] += 0.5 * len;
        bload[e[1]] += 0.5 * len;
    }

    System s;
    s.stiffness.resize(n, n);
    s.mass.resize(n, n);
    s.boundary_mass.resize(n, n);
    s.stiffness.setFromTriplets(tk.begin(), tk.end());
    s.mass.setFromTriplets(tm.begin(), tm.end());
    s.boundary_mass.setFromTriplets(tb.begin(), tb.end());
    s.load = std::move(load);
    s.boundary_load = std::move(bload);
    return s;
}

double inf_norm(const SpMat& m) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(m.rows());
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it) row[it.row()] += std::abs(it.value());
    return row.maxCoeff();
}

struct EigenPair {
    double value;
    double residual;  // ||A v - lambda M v|| / ((||A|| + |lambda| ||M||) ||v||)
};

// Smallest generalized eigenvalue of (A, M) by shift-and-invert iteration.
// The shift only decreases; positive definiteness of A - sigma*M (all LDL^T
// pivots positive) certifies sigma < lambda_1, so the iteration converges to
// the smallest eigenvalue. With deflate_constants the constant vector is
// projected out and the smallest nonzero eigenvalue is returned.
EigenPair smallest_eigenvalue(const SpMat& A, const SpMat& M, double shift,
                              bool deflate_constants) {
    const int n = static_cast<int>(A.rows());
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const double ones_m = ones.dot(M * ones);

    Eigen::SimplicialLDLT<SpMat> solver;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 60) throw std::runtime_error("fem: could not find a definite shift");
        SpMat shifted = A - shift * M;
        solver.compute(shifted);
        if (solver.info() == Eigen::Success && solver.vectorD().minCoeff() > 0.0) break;
        shift = 2.0 * shift - std::max(1.0, std::abs(shift));
    }

    auto deflate = [&](Eigen::VectorXd& v) {
        if (deflate_constants) v -= (ones.dot(M * v) / ones_m) * ones;
    };

    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    if (deflate_constants) {
        for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(1.0 + i);
        deflate(v);
    }
    v /= std::sqrt(v.dot(M * v));

    const double norm_a = inf_norm(A);
    const double norm_m = inf_norm(M);
    double lambda = v.dot(A * v);
    for (int it = 0; it < 2000; ++it) {
        Eigen::VectorXd w = solver.solve(M * v);
        deflate(w);
        w /= std::sqrt(w.dot(M * w));
        const double next = w.dot(A * w);
        v = std::move(w);
        const Eigen::VectorXd r = A * v - next * M * v;
        const double res = r.norm() / ((norm_a + std::abs(next) * norm_m) * v.norm());
        if (std::abs(next - lambda) <= 1e-14 * std::max(1.0, std::abs(next)) && res <= 1e-10) {
            return EigenPair{next, res};
        }
        lambda = next;
    }
    throw std::runtime_error("fem: inverse iteration did not converge");
}

SolveReport make_report(double h, double v_h, double v_h2, double residual) {
    SolveReport rep;
    rep.mesh_h = h;
    rep.refinement_pair = {v_h, v_h2};
    rep.value = v_h2;
    rep.extrapolated = v_h2 + (v_h2 - v_h) / 3.0;
    rep.residual = residual;
    return rep;
}

}  // namespace

SolveReport robin_eig(const ConvexPolygon& p, double beta, double h) {
    if (beta == 0.0) throw std::invalid_argument("robin_eig: beta must be nonzero");
    const double shift0 = std::min(0.0, beta * perimeter(p) / area(p)) - 1.0;
    double vals[2], res = 0.0;
    for (int level = 0; level < 2; ++level) {
        const Mesh mesh = triangulate(p, h / (level + 1.0));
        const System s = assemble(mesh);
        const SpMat A = s.stiffness + beta * s.boundary_mass;
        const EigenPair e = smallest_eigenvalue(A, s.mass, shift0, false);
        vals[level] = e.value;
        res = e.residual;
    }
    return make_report(h, vals[0], vals[1], res);
}

SolveReport robin_torsion(const ConvexPolygon& p, double beta, double h) {
    if (!(beta > 0.0))
        throw std::invalid_argument("robin_torsion: beta must be positive (free-boundary regime unsupported)");
    double vals[2], res = 0.0;
    for (int level = 0; level < 2; ++level) {
        const Mesh mesh = triangulate(p, h / (level + 1.0));
        const System s = assemble(mesh);
        const SpMat A = s.stiffness + beta * s.boundary_mass;
        Eigen::SimplicialLDLT<SpMat> solver(A);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("robin_torsion: factorization failed");
        const Eigen::VectorXd u = solver.solve(s.load);
        vals[level] = s.load.dot(u);
        const Eigen::VectorXd r = A * u - s.load;
        res = r.norm() / (inf_norm(A) * u.norm() + s.load.norm());
    }
    return make_report(h, vals[0], vals[1], res);
}

SolveReport neumann_mu2(const ConvexPolygon& p, double h) {
    double vals[2], res = 0.0;
    for (int level = 0; level < 2; ++level) {
        const Mesh mesh = triangulate(p, h / (level + 1.0));
        const System s = assemble(mesh);
        const EigenPair e = smallest_eigenvalue(s.stiffness, s.mass, -1.0, true);
        vals[level] = e.value;
        res = e.residual;
    }
    return make_report(h, vals[0], vals[1], res);
}

SolveReport sigma_infty(const ConvexPolygon& p, double h) {
    double vals[2], res = 0.0;
    for (int level = 0; level < 2; ++level) {
        const Mesh mesh = triangulate(p, h / (level + 1.0));
        const System s = assemble(mesh);
        const int n = static_cast<int>(mesh.nodes.size());
        const double ar = s.load.sum();
        const double per = s.boundary_load.sum();
        if (std::abs(ar - area(p)) > 1e-10 * area(p))
            throw std::runtime_error("sigma_infty: mesh area inconsistent with the domain");

        // Bordered system: [K c; c^T 0] [u; mu] = [F - (|E|/|dE|) c; 0]
        // imposes the zero boundary mean through one multiplier.
        std::vector<Triplet> trip;
        trip.reserve(s.stiffness.nonZeros() + 2 * n);
        for (int k = 0; k < s.stiffness.outerSize(); ++k)
            for (SpMat::InnerIterator it(s.stiffness, k); it; ++it)
                trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()),
                                  it.value());
        for (int i = 0; i < n; ++i) {
            if (s.boundary_load[i] != 0.0) {
                trip.emplace_back(i, n, s.boundary_load[i]);
                trip.emplace_back(n, i, s.boundary_load[i]);
            }
        }
        SpMat big(n + 1, n + 1);
        big.setFromTriplets(trip.begin(), trip.end());
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
        rhs.head(n) = s.load - (ar / per) * s.boundary_load;

        Eigen::SparseLU<SpMat> solver;
        solver.analyzePattern(big);
        solver.factorize(big);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("sigma_infty: singular solve failed");
        const Eigen::VectorXd x = solver.solve(rhs);
        vals[level] = s.load.dot(x.head(n));
        const Eigen::VectorXd r = big * x - rhs;
        res = r.norm() / (inf_norm(big) * x.norm() + rhs.norm());
    }
    return make_report(h, vals[0], vals[1], res);
}

}  // namespace robinhex
