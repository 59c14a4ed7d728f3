#include "robinhex/mesh.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace robinhex {

namespace {

double edge_len(const std::vector<Point>& nodes, int a, int b) {
    return std::hypot(nodes[b].x - nodes[a].x, nodes[b].y - nodes[a].y);
}

double tri_area2(const std::vector<Point>& n, const std::array<int, 3>& t) {
    const Point& a = n[t[0]];
    const Point& b = n[t[1]];
    const Point& c = n[t[2]];
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double l2 = vx * vx + vy * vy;
    double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / l2;
    t = std::min(1.0, std::max(0.0, t));
    return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

}  // namespace

double Mesh::max_edge_length() const {
    double m = 0.0;
    for (const auto& t : triangles) {
        m = std::max(m, edge_len(nodes, t[0], t[1]));
        m = std::max(m, edge_len(nodes, t[1], t[2]));
        m = std::max(m, edge_len(nodes, t[2], t[0]));
    }
    return m;
}

double Mesh::boundary_length() const {
    double s = 0.0;
    for (const auto& e : boundary_edges) s += edge_len(nodes, e[0], e[1]);
    return s;
}

Mesh triangulate(const ConvexPolygon& p, double h, int node_budget) {
    const DiameterInfo diam = diameter(p);
    if (!(h > 0.0) || h >= diam.length)
        throw std::invalid_argument("triangulate: h must lie in (0, diameter)");

    Mesh mesh;
    mesh.target_h = h;
    mesh.nodes.push_back(centroid(p));
    const int m = static_cast<int>(p.size());
    for (int i = 0; i < m; ++i) mesh.nodes.push_back(p.vertex(i));
    for (int i = 0; i < m; ++i) {
        mesh.triangles.push_back({0, 1 + i, 1 + (i + 1) % m});
        mesh.boundary_edges.push_back({1 + i, 1 + (i + 1) % m});
    }

    double max_edge = mesh.max_edge_length();
    while (max_edge > 1.5 * h) {
        const std::int64_t projected =
            static_cast<std::int64_t>(mesh.nodes.size()) +
            3LL * static_cast<std::int64_t>(mesh.triangles.size());
        if (projected > node_budget)
            throw std::runtime_error("triangulate: node budget exceeded; h too small");

        std::map<std::pair<int, int>, int> midpoint;
        auto split = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            mesh.nodes.push_back(Point{0.5 * (mesh.nodes[a].x + mesh.nodes[b].x),
                                       0.5 * (mesh.nodes[a].y + mesh.nodes[b].y)});
            const int id = static_cast<int>(mesh.nodes.size()) - 1;
            midpoint.emplace(key, id);
            return id;
        };

        std::vector<std::array<int, 3>> tris;
        tris.reserve(4 * mesh.triangles.size());
        for (const auto& t : mesh.triangles) {
            const int ab = split(t[0], t[1]);
            const int bc = split(t[1], t[2]);
            const int ca = split(t[2], t[0]);
            tris.push_back({t[0], ab, ca});
            tris.push_back({ab, t[1], bc});
            tris.push_back({ca, bc, t[2]});
            tris.push_back({ab, bc, ca});
        }
        mesh.triangles = std::move(tris);

        std::vector<std::array<int, 2>> bed;
        bed.reserve(2 * mesh.boundary_edges.size());
        for (const auto& e : mesh.boundary_edges) {
            const int mid = split(e[0], e[1]);
            bed.push_back({e[0], mid});
            bed.push_back({mid, e[1]});
        }
        mesh.boundary_edges = std::move(bed);
        max_edge *= 0.5;
    }
    return mesh;
}

void validate_mesh(const Mesh& mesh, const ConvexPolygon& p) {
    const double domain_area = area(p);
    double sum = 0.0;
    for (const auto& t : mesh.triangles) {
        const double a2 = tri_area2(mesh.nodes, t);
        if (!(a2 > 2e-16 * domain_area))
            throw std::runtime_error("validate_mesh: degenerate or misoriented triangle");
        sum += 0.5 * a2;
    }
    if (std::abs(sum - domain_area) > 1e-10 * domain_area)
        throw std::runtime_error("validate_mesh: triangle areas do not cover the domain");

    // Boundary chain: each edge's start must be the previous edge's end.
    for (std::size_t i = 0; i < mesh.boundary_edges.size(); ++i) {
        const auto& prev = mesh.boundary_edges[(i + mesh.boundary_edges.size() - 1) %
                                               mesh.boundary_edges.size()];
        if (mesh.boundary_edges[i][0] != prev[1])
            throw std::runtime_error("validate_mesh: boundary edges are not a closed chain");
    }
    const auto& v = p.vertices();
    for (const auto& e : mesh.boundary_edges) {
        const Point& q = mesh.nodes[e[0]];
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < v.size(); ++i)
            d = std::min(d, point_segment_distance(q, v[i], v[(i + 1) % v.size()]));
        if (d > 1e-12 * std::max(1.0, perimeter(p)))
            throw std::runtime_error("validate_mesh: boundary node off the polygon boundary");
    }
}

void write_mesh_ascii(const Mesh& mesh, std::ostream& os) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu %zu %zu\n", mesh.nodes.size(), mesh.triangles.size(),
                  mesh.boundary_edges.size());
    os << buf;
    for (const auto& n : mesh.nodes) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", n.x, n.y);
        os << buf;
    }
    for (const auto& t : mesh.triangles) {
        std::snprintf(buf, sizeof buf, "%d %d %d\n", t[0], t[1], t[2]);
        os << buf;
    }
    for (const auto& e : mesh.boundary_edges) {
        std::snprintf(buf, sizeof buf, "%d %d\n", e[0], e[1]);
        os << buf;
    }
}

}  // namespace robinhex
