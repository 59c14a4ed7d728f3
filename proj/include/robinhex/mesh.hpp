#pragma once

#include "robinhex/geometry.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace robinhex {

/// P1 triangulation of a convex polygon. Triangles are positively oriented;
/// boundary edges form a single closed CCW chain on the polygon boundary.
struct Mesh {
    std::vector<Point> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> boundary_edges;
    double target_h = 0.0;

    double max_edge_length() const;
    double boundary_length() const;
};

/// Ear-fan triangulation from the centroid followed by uniform midpoint
/// refinement until every edge is at most 1.5*h. Throws when the refinement
/// would exceed the node budget.
Mesh triangulate(const ConvexPolygon& p, double h, int node_budget = 500000);

/// Validates orientation, degeneracy, the boundary chain and that boundary
/// nodes lie on the polygon; throws on violation.
void validate_mesh(const Mesh& mesh, const ConvexPolygon& p);

/// Plain ASCII export: counts header, then nodes, triangles, boundary edges.
void write_mesh_ascii(const Mesh& mesh, std::ostream& os);

}  // namespace robinhex
