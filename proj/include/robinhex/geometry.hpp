#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace robinhex {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Unit vector in the plane (norm 1 to 1e-14).
struct Direction {
    double x = 0.0;
    double y = 0.0;

    static Direction of(double x, double y);
    Direction perpendicular() const { return Direction{-y, x}; }
};

/// Strictly convex polygon, counter-clockwise vertex order.
///
/// Construction rejects fewer than 3 vertices, clockwise orientation and
/// collinear triples (cross-product threshold 1e-12 x bounding-box scale).
class ConvexPolygon {
public:
    static ConvexPolygon from_vertices(std::vector<Point> vertices);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& vertex(std::size_t i) const { return vertices_[i]; }

private:
    explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}
    std::vector<Point> vertices_;
};

double area(const ConvexPolygon& p);
double perimeter(const ConvexPolygon& p);
Point centroid(const ConvexPolygon& p);

/// Exterior turn angle at each vertex, all in (0, pi); they sum to 2*pi.
/// The interior angle at vertex i is pi - turn[i].
std::vector<double> turn_angles(const ConvexPolygon& p);

/// Lambda(P) = sum of cot(theta_i / 2) over the interior angles theta_i.
double lambda_sum(const ConvexPolygon& p);

struct DiameterInfo {
    double length;
    Direction direction;
};

/// Largest vertex-pair distance and its direction; ties resolve to the
/// lexicographically smallest canonical direction.
DiameterInfo diameter(const ConvexPolygon& p);

/// Distance between the two support lines orthogonal to xi.
double width(const ConvexPolygon& p, const Direction& xi);

/// Width orthogonal to a diameter divided by the diameter, in (0, 1].
double conv_eps_ratio(const ConvexPolygon& p);

/// Regular n-gon of the given area, centered at the origin with a vertex on
/// the positive x-axis (flat-top orientation for n = 6).
ConvexPolygon regular_ngon(int n, double target_area);

/// Intersection of the half-planes bounded by the edges offset inward by r.
/// Empty when r reaches the inradius; the result may have fewer edges.
std::optional<ConvexPolygon> inner_parallel_body(const ConvexPolygon& p, double r);

/// Largest r with nonempty inner parallel body (Chebyshev radius).
double inradius(const ConvexPolygon& p);

/// Largest r at which the inner parallel body still keeps every edge of p.
double edge_retention_radius(const ConvexPolygon& p);

bool contains_point(const ConvexPolygon& p, const Point& q, double tol);
bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner, double tol);

ConvexPolygon scaled(const ConvexPolygon& p, double factor);
ConvexPolygon translated(const ConvexPolygon& p, const Point& shift);

/// Inner parallel body re-expanded by a disk of radius `radius`.
/// The core may be degenerate: one point (disk) or two points (stadium).
struct RoundedBody {
    std::vector<Point> core;
    double radius = 0.0;

    bool degenerate_core() const { return core.size() < 3; }

    static RoundedBody from_polygon(const ConvexPolygon& core, double radius);
    static RoundedBody disk(const Point& center, double radius);
};

struct RoundedMeasures {
    double perimeter;
    double area;
};

/// Steiner formulas: Per = Per(core) + 2*pi*r, Area = |core| + r*Per(core) + pi*r^2.
RoundedMeasures rounded_measures(const RoundedBody& b);

/// Inscribed polygonal approximation, `arcs_per_corner` segments per corner arc.
/// Area deficit is O(arcs^-2). For radius 0 this is the identity on the core.
ConvexPolygon polygonize(const RoundedBody& b, int arcs_per_corner);

RoundedBody scaled(const RoundedBody& b, double factor);
RoundedBody translated(const RoundedBody& b, const Point& shift);

/// Hexagonal frames for cluster constructions: k congruent flat-top regular
/// hexagons of area (1-epsilon)*|domain|/divisor, fully inside the domain,
/// on an axis-aligned lattice centered at the centroid. The divisor is the
/// smallest k' >= k whose lattice holds at least k' interior cells, so the
/// full lattice covers a (1-epsilon) fraction of the domain.
struct HexLattice {
    double side = 0.0;
    int divisor = 0;
    double cell_area = 0.0;
    std::vector<Point> centers;
};

HexLattice hex_lattice_cells(const ConvexPolygon& domain, int k, double epsilon);
ConvexPolygon hex_cell_polygon(const HexLattice& lattice, std::size_t index);

}  // namespace robinhex
