#include "robinhex/random_polygon.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace robinhex {

double RandomPolygonGenerator::uniform(double lo, double hi) {
    // Fixed 53-bit construction: identical streams on every platform.
    const std::uint64_t bits = engine_() >> 11;
    return lo + (hi - lo) * (static_cast<double>(bits) * 0x1.0p-53);
}

ConvexPolygon RandomPolygonGenerator::next(int min_vertices, int max_vertices) {
    if (min_vertices < 3 || max_vertices < min_vertices)
        throw std::invalid_argument("RandomPolygonGenerator: bad vertex range");
    const int n = min_vertices +
                  static_cast<int>(uniform(0.0, 1.0) * (max_vertices - min_vertices + 1.0 - 1e-12));
    const double a = uniform(0.5, 1.5);
    const double b = uniform(0.5, 1.5);
    const double rot = uniform(0.0, std::numbers::pi);
    const double step = 2.0 * std::numbers::pi / n;
    std::vector<Point> v(n);
    for (int i = 0; i < n; ++i) {
        // Jitter below +-0.4*step keeps the angles ordered and separated.
        const double t = step * i + uniform(-0.4, 0.4) * step;
        const double x = a * std::cos(t);
        const double y = b * std::sin(t);
        v[i] = Point{x * std::cos(rot) - y * std::sin(rot),
                     x * std::sin(rot) + y * std::cos(rot)};
    }
    return ConvexPolygon::from_vertices(std::move(v));
}

}  // namespace robinhex
