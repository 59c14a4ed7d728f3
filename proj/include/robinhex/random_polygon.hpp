#pragma once

#include "robinhex/geometry.hpp"

#include <cstdint>
#include <random>

namespace robinhex {

/// Seeded convex polygon generator: n points on a random ellipse at jittered
/// equispaced angles. Points on an ellipse in angular order are in convex
/// position, so the result is convex with varied aspect ratios.
class RandomPolygonGenerator {
public:
    explicit RandomPolygonGenerator(std::uint64_t seed) : engine_(seed) {}

    ConvexPolygon next(int min_vertices, int max_vertices);

private:
    double uniform(double lo, double hi);
    std::mt19937_64 engine_;
};

}  // namespace robinhex
