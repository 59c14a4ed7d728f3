#pragma once

#include "robinhex/bounds.hpp"
#include "robinhex/cheeger.hpp"
#include "robinhex/geometry.hpp"
#include "robinhex/honeycomb.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace robinhex {

/// Polygon exchange format: {"vertices": [[x, y], ...]}, CCW enforced on
/// load (clockwise input is reversed and `reversed` is set).
struct PolygonLoad {
    ConvexPolygon polygon;
    bool reversed = false;
};

PolygonLoad polygon_from_json(const nlohmann::json& j);
PolygonLoad polygon_from_json_text(const std::string& text);
nlohmann::json polygon_to_json(const ConvexPolygon& p);

nlohmann::json to_json(const CheegerResult& r);
nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const PartitionReport& r);

/// Fixed-precision float formatting shared by all CSV output (%.12g).
std::string csv_num(double v);

}  // namespace robinhex
