#include "robinhex/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace robinhex {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(const Point& a, const Point& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

double bbox_scale(const std::vector<Point>& v) {
    double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::max(xmax - xmin, ymax - ymin);
}

double signed_area(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return 0.5 * s;
}

double polyline_perimeter(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += dist(v[i], v[(i + 1) % v.size()]);
    return s;
}

// Keeps the part of `poly` with nx*x + ny*y <= c.
void clip_half_plane(const std::vector<Point>& poly, double nx, double ny, double c,
                     std::vector<Point>& out) {
    out.clear();
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % m];
        const double da = nx * a.x + ny * a.y - c;
        const double db = nx * b.x + ny * b.y - c;
        if (da <= 0.0) out.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            const double t = da / (da - db);
            out.push_back(Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
}

// Removes duplicate and collinear vertices; empties the result below 3 vertices.
void tidy_ring(std::vector<Point>& v, double scale) {
    const double dup_tol = 1e-13 * std::max(1.0, scale);
    std::vector<Point> dedup;
    dedup.reserve(v.size());
    for (const auto& p : v) {
        if (dedup.empty() || dist(p, dedup.back()) > dup_tol) dedup.push_back(p);
    }
    while (dedup.size() > 1 && dist(dedup.front(), dedup.back()) <= dup_tol) dedup.pop_back();
    if (dedup.size() < 3) {
        v = std::move(dedup);
        return;
    }
    const double turn_tol = 1e-12 * std::max(1.0, scale) * std::max(1.0, scale);
    std::vector<Point> out;
    out.reserve(dedup.size());
    const std::size_t m = dedup.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = dedup[(i + m - 1) % m];
        const Point& b = dedup[i];
        const Point& c = dedup[(i + 1) % m];
        if (cross(a, b, c) > turn_tol) out.push_back(b);
    }
    v = std::move(out);
}

// Inner parallel body on raw vertex rings; returns false when empty.
bool clip_inner_raw(const std::vector<Point>& verts, double r, std::vector<Point>& out,
                    std::vector<Point>& scratch) {
    out = verts;
    const double scale = bbox_scale(verts);
    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = verts[i];
        const Point& b = verts[(i + 1) % m];
        const double len = dist(a, b);
        const double nx = (b.y - a.y) / len;   // outward normal for CCW order
        const double ny = -(b.x - a.x) / len;
        clip_half_plane(out, nx, ny, nx * a.x + ny * a.y - r, scratch);
        out.swap(scratch);
        if (out.size() < 3) return false;
    }
    tidy_ring(out, scale);
    if (out.size() < 3) return false;
    return signed_area(out) >= 1e-14;
}

Point arc_point(const Point& center, double r, double angle) {
    return Point{center.x + r * std::cos(angle), center.y + r * std::sin(angle)};
}

}  // namespace

Direction Direction::of(double x, double y) {
    const double n = std::hypot(x, y);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("Direction: zero or non-finite vector");
    return Direction{x / n, y / n};
}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point> vertices) {
    if (vertices.size() < 3)
        throw std::invalid_argument("ConvexPolygon: need at least 3 vertices");
    for (const auto& p : vertices)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("ConvexPolygon: non-finite vertex");
    if (signed_area(vertices) <= 0.0)
        throw std::invalid_argument("ConvexPolygon: vertices must be counter-clockwise");
    const double scale = bbox_scale(vertices);
    const double turn_tol = 1e-12 * std::max(1.0, scale) * std::max(1.0, scale);
    const std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = vertices[(i + m - 1) % m];
        const Point& b = vertices[i];
        const Point& c = vertices[(i + 1) % m];
        if (cross(a, b, c) <= turn_tol)
            throw std::invalid_argument(
                "ConvexPolygon: not strictly convex at vertex " + std::to_string(i));
    }
    return ConvexPolygon(std::move(vertices));
}

double area(const ConvexPolygon& p) { return signed_area(p.vertices()); }

double perimeter(const ConvexPolygon& p) { return polyline_perimeter(p.vertices()); }

Point centroid(const ConvexPolygon& p) {
    const auto& v = p.vertices();
    double cx = 0.0, cy = 0.0, a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& s = v[i];
        const Point& t = v[(i + 1) % v.size()];
        const double w = s.x * t.y - t.x * s.y;
        cx += (s.x + t.x) * w;
        cy += (s.y + t.y) * w;
        a += w;
    }
    return Point{cx / (3.0 * a), cy / (3.0 * a)};
}

std::vector<double> turn_angles(const ConvexPolygon& p) {
    const auto& v = p.vertices();
    const std::size_t m = v.size();
    std::vector<double> turns(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = v[(i + m - 1) % m];
        const Point& b = v[i];
        const Point& c = v[(i + 1) % m];
        const double e1x = b.x - a.x, e1y = b.y - a.y;
        const double e2x = c.x - b.x, e2y = c.y - b.y;
        turns[i] = std::atan2(e1x * e2y - e1y * e2x, e1x * e2x + e1y * e2y);
    }
    return turns;
}

double lambda_sum(const ConvexPolygon& p) {
    // cot(theta/2) = tan(turn/2) with theta = pi - turn.
    double s = 0.0;
    for (double t : turn_angles(p)) s += std::tan(0.5 * t);
    return s;
}

DiameterInfo diameter(const ConvexPolygon& p) {
    const auto& v = p.vertices();
    double best = -1.0;
    Direction dir{1.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const double d = dist(v[i], v[j]);
            Direction cand = Direction::of(v[j].x - v[i].x, v[j].y - v[i].y);
            if (cand.x < 0.0 || (cand.x == 0.0 && cand.y < 0.0))
                cand = Direction{-cand.x, -cand.y};
            if (d > best * (1.0 + 1e-12)) {
                best = d;
                dir = cand;
            } else if (d > best * (1.0 - 1e-12)) {
                if (cand.x < dir.x || (cand.x == dir.x && cand.y < dir.y)) dir = cand;
            }
        }
    }
    return DiameterInfo{best, dir};
}

double width(const ConvexPolygon& p, const Direction& xi) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& v : p.vertices()) {
        const double s = v.x * xi.x + v.y * xi.y;
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return hi - lo;
}

double conv_eps_ratio(const ConvexPolygon& p) {
    const DiameterInfo d = diameter(p);
    return width(p, d.direction.perpendicular()) / d.length;
}

ConvexPolygon regular_ngon(int n, double target_area) {
    if (n < 3) throw std::invalid_argument("regular_ngon: n must be at least 3");
    if (!(target_area > 0.0)) throw std::invalid_argument("regular_ngon: area must be positive");
    const double r = std::sqrt(2.0 * target_area / (n * std::sin(2.0 * kPi / n)));
    std::vector<Point> v(n);
    for (int i = 0; i < n; ++i) {
        const double ang = 2.0 * kPi * i / n;
        v[i] = Point{r * std::cos(ang), r * std::sin(ang)};
    }
    return ConvexPolygon::from_vertices(std::move(v));
}

std::optional<ConvexPolygon> inner_parallel_body(const ConvexPolygon& p, double r) {
    if (r < 0.0) throw std::invalid_argument("inner_parallel_body: negative radius");
    if (r == 0.0) return p;
    std::vector<Point> out, scratch;
    if (!clip_inner_raw(p.vertices(), r, out, scratch)) return std::nullopt;
    return ConvexPolygon::from_vertices(std::move(out));
}

double inradius(const ConvexPolygon& p) {
    std::vector<Point> out, scratch;
    double lo = 0.0, hi = 0.5 * bbox_scale(p.vertices());
    while (clip_inner_raw(p.vertices(), hi, out, scratch)) hi *= 2.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (clip_inner_raw(p.vertices(), mid, out, scratch))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double edge_retention_radius(const ConvexPolygon& p) {
    // Edge i shrinks at rate cot(theta_i/2) + cot(theta_{i+1}/2); the first
    // edge to vanish does so while all others persist (convex offsets only
    // lose edges), so the minimum of the per-edge vanishing radii is exact.
    const auto& v = p.vertices();
    const auto turns = turn_angles(p);
    const std::size_t m = v.size();
    double rbar = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const double len = dist(v[i], v[(i + 1) % m]);
        const double rate = std::tan(0.5 * turns[i]) + std::tan(0.5 * turns[(i + 1) % m]);
        rbar = std::min(rbar, len / rate);
    }
    return rbar;
}

bool contains_point(const ConvexPolygon& p, const Point& q, double tol) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double len = dist(a, b);
        if (cross(a, b, q) < -tol * len) return false;
    }
    return true;
}

bool contains_polygon(const ConvexPolygon& outer, const ConvexPolygon& inner, double tol) {
    for (const auto& q : inner.vertices())
        if (!contains_point(outer, q, tol)) return false;
    return true;
}

ConvexPolygon scaled(const ConvexPolygon& p, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
    std::vector<Point> v = p.vertices();
    for (auto& q : v) {
        q.x *= factor;
        q.y *= factor;
    }
    return ConvexPolygon::from_vertices(std::move(v));
}

ConvexPolygon translated(const ConvexPolygon& p, const Point& shift) {
    std::vector<Point> v = p.vertices();
    for (auto& q : v) {
        q.x += shift.x;
        q.y += shift.y;
    }
    return ConvexPolygon::from_vertices(std::move(v));
}

RoundedBody RoundedBody::from_polygon(const ConvexPolygon& core, double radius) {
    if (radius < 0.0) throw std::invalid_argument("RoundedBody: negative radius");
    return RoundedBody{core.vertices(), radius};
}

RoundedBody RoundedBody::disk(const Point& center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("RoundedBody::disk: radius must be positive");
    return RoundedBody{{center}, radius};
}

RoundedMeasures rounded_measures(const RoundedBody& b) {
    if (b.core.empty()) throw std::invalid_argument("rounded_measures: empty core");
    double core_per = 0.0, core_area = 0.0;
    if (b.core.size() == 2) {
        core_per = 2.0 * dist(b.core[0], b.core[1]);
    } else if (b.core.size() >= 3) {
        core_per = polyline_perimeter(b.core);
        core_area = signed_area(b.core);
    }
    const double r = b.radius;
    return RoundedMeasures{core_per + 2.0 * kPi * r, core_area + r * core_per + kPi * r * r};
}

ConvexPolygon polygonize(const RoundedBody& b, int arcs_per_corner) {
    if (arcs_per_corner < 1) throw std::invalid_argument("polygonize: arcs_per_corner < 1");
    const double r = b.radius;
    if (r == 0.0) {
        if (b.degenerate_core()) throw std::invalid_argument("polygonize: degenerate flat body");
        return ConvexPolygon::from_vertices(b.core);
    }
    std::vector<Point> out;
    if (b.core.size() == 1) {
        const int n = std::max(3, arcs_per_corner);
        out.reserve(n);
        for (int i = 0; i < n; ++i) out.push_back(arc_point(b.core[0], r, 2.0 * kPi * i / n));
        return ConvexPolygon::from_vertices(std::move(out));
    }
    // Cyclic core (a segment acts as a two-edge ring): offset edges plus one
    // corner arc per vertex, swept between consecutive outward normals.
    std::vector<Point> ring = b.core;
    if (ring.size() == 2) ring.push_back(ring[0]);  // ring of edges a->b, b->a
    const std::size_t m = (b.core.size() == 2) ? 2 : b.core.size();
    const std::vector<Point>& v = b.core;
    std::vector<double> normal_angle(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = v[i];
        const Point& c = v[(i + 1) % m];
        normal_angle[i] = std::atan2(-(c.x - a.x), c.y - a.y);  // outward normal angle
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = v[i];
        const Point& c = v[(i + 1) % m];
        const double phi = normal_angle[i];
        out.push_back(arc_point(a, r, phi));
        out.push_back(arc_point(c, r, phi));
        // Corner arc at c, from this normal to the next one (positive sweep).
        double sweep = normal_angle[(i + 1) % m] - phi;
        while (sweep < 0.0) sweep += 2.0 * kPi;
        while (sweep >= 2.0 * kPi) sweep -= 2.0 * kPi;
        for (int j = 1; j < arcs_per_corner; ++j)
            out.push_back(arc_point(c, r, phi + sweep * j / arcs_per_corner));
    }
    tidy_ring(out, bbox_scale(out));
    return ConvexPolygon::from_vertices(std::move(out));
}

RoundedBody scaled(const RoundedBody& b, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
    RoundedBody out = b;
    for (auto& q : out.core) {
        q.x *= factor;
        q.y *= factor;
    }
    out.radius *= factor;
    return out;
}

RoundedBody translated(const RoundedBody& b, const Point& shift) {
    RoundedBody out = b;
    for (auto& q : out.core) {
        q.x += shift.x;
        q.y += shift.y;
    }
    return out;
}

namespace {

// Flat-top regular hexagon: vertices at angles 0, 60, ..., 300 degrees.
std::vector<Point> hex_vertices(const Point& center, double side) {
    std::vector<Point> v(6);
    for (int i = 0; i < 6; ++i)
        v[i] = arc_point(center, side, kPi * i / 3.0);
    return v;
}

int count_interior_cells(const ConvexPolygon& domain, const Point& origin, double side,
                         std::vector<Point>* centers) {
    const auto& dv = domain.vertices();
    double xmin = dv[0].x, xmax = dv[0].x, ymin = dv[0].y, ymax = dv[0].y;
    for (const auto& q : dv) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const double dx = 1.5 * side;
    const double dy = std::sqrt(3.0) * side;
    const int i_lo = static_cast<int>(std::floor((xmin - origin.x - side) / dx)) - 1;
    const int i_hi = static_cast<int>(std::ceil((xmax - origin.x + side) / dx)) + 1;
    const double tol = 1e-12;
    int count = 0;
    for (int i = i_lo; i <= i_hi; ++i) {
        const double cx = origin.x + dx * i;
        const double off = (i % 2 != 0) ? 0.5 * dy : 0.0;
        const int j_lo = static_cast<int>(std::floor((ymin - origin.y - off - side) / dy)) - 1;
        const int j_hi = static_cast<int>(std::ceil((ymax - origin.y - off + side) / dy)) + 1;
        for (int j = j_lo; j <= j_hi; ++j) {
            const Point c{cx, origin.y + off + dy * j};
            bool inside = true;
            for (const auto& q : hex_vertices(c, side)) {
                if (!contains_point(domain, q, tol)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                ++count;
                if (centers) centers->push_back(c);
            }
        }
    }
    return count;
}

}  // namespace

HexLattice hex_lattice_cells(const ConvexPolygon& domain, int k, double epsilon) {
    if (k < 1) throw std::invalid_argument("hex_lattice_cells: k must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("hex_lattice_cells: epsilon must lie in (0, 1)");
    const double domain_area = area(domain);
    const Point origin = centroid(domain);
    const long long cap = std::max<long long>(1LL << 20, 256LL * k);
    int best_count = 0;
    long long divisor = k;
    while (divisor <= cap) {
        const double cell_area = (1.0 - epsilon) * domain_area / static_cast<double>(divisor);
        const double side = std::sqrt(cell_area / (1.5 * std::sqrt(3.0)));
        const int c = count_interior_cells(domain, origin, side, nullptr);
        best_count = std::max(best_count, c);
        if (c >= divisor) {
            std::vector<Point> centers;
            count_interior_cells(domain, origin, side, &centers);
            std::sort(centers.begin(), centers.end(), [&](const Point& a, const Point& b) {
                const double da = (a.x - origin.x) * (a.x - origin.x) +
                                  (a.y - origin.y) * (a.y - origin.y);
                const double db = (b.x - origin.x) * (b.x - origin.x) +
                                  (b.y - origin.y) * (b.y - origin.y);
                if (da != db) return da < db;
                if (a.x != b.x) return a.x < b.x;
                return a.y < b.y;
            });
            centers.resize(static_cast<std::size_t>(k));
            return HexLattice{side, static_cast<int>(divisor), cell_area, std::move(centers)};
        }
        divisor += std::max<long long>(1, divisor / 64);
    }
    throw std::runtime_error(
        "hex_lattice_cells: cluster does not fit (k too small relative to epsilon); "
        "max feasible cells at this epsilon within the search cap: " +
        std::to_string(best_count));
}

ConvexPolygon hex_cell_polygon(const HexLattice& lattice, std::size_t index) {
    if (index >= lattice.centers.size())
        throw std::out_of_range("hex_cell_polygon: index out of range");
    return ConvexPolygon::from_vertices(hex_vertices(lattice.centers[index], lattice.side));
}

}  // namespace robinhex
