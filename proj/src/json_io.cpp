#include "robinhex/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace robinhex {

using nlohmann::json;

PolygonLoad polygon_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("polygon JSON must be {\"vertices\": [[x,y], ...]}");
    std::vector<Point> v;
    for (const auto& item : j["vertices"]) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("polygon JSON: each vertex must be [x, y]");
        v.push_back(Point{item[0].get<double>(), item[1].get<double>()});
    }
    double twice_area = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        twice_area += a.x * b.y - a.y * b.x;
    }
    bool reversed = false;
    if (twice_area < 0.0) {
        std::reverse(v.begin(), v.end());
        reversed = true;
    }
    return PolygonLoad{ConvexPolygon::from_vertices(std::move(v)), reversed};
}

PolygonLoad polygon_from_json_text(const std::string& text) {
    return polygon_from_json(json::parse(text));
}

json polygon_to_json(const ConvexPolygon& p) {
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(json::array({v.x, v.y}));
    return json{{"vertices", verts}};
}

json to_json(const CheegerResult& r) {
    json core = json::array();
    for (const auto& v : r.set.core) core.push_back(json::array({v.x, v.y}));
    return json{{"exponent", r.exponent},
                {"radius", r.radius},
                {"constant", r.constant},
                {"set", {{"core", core}, {"radius", r.set.radius}}},
                {"method", r.method == CheegerMethod::closed_form ? "closed_form" : "oracle"},
                {"valid_closed_form", r.valid_closed_form}};
}

json to_json(const BoundsReport& r) {
    json j{{"shape", r.shape_id},
           {"beta", r.beta},
           {"eig_upper", r.eig_upper},
           {"fem_eig", r.fem_eig},
           {"tor_upper", r.tor_upper},
           {"sandwich_ok", r.sandwich_ok},
           {"violations", r.violations}};
    auto put = [&j](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v;
    };
    put("eig_lower_sperb", r.eig_lower_sperb);
    put("eig_lower_bossel", r.eig_lower_bossel);
    put("eig_lower_width", r.eig_lower_width);
    put("tor_lower_keady", r.tor_lower_keady);
    put("tor_lower_width", r.tor_lower_width);
    put("tor_lower_cheeger", r.tor_lower_cheeger);
    put("fem_torsion_inv", r.fem_torsion_inv);
    put("mu2", r.mu2);
    put("sigma_infty", r.sigma_inf);
    return j;
}

json to_json(const PartitionReport& r) {
    return json{{"functional", r.functional},
                {"k", r.k},
                {"scale_divisor", r.scale_divisor},
                {"epsilon", r.epsilon},
                {"beta", r.beta},
                {"raw_sum", r.raw_sum},
                {"scaled", r.scaled},
                {"target", r.target},
                {"target_uncorrected", r.target_uncorrected},
                {"deviation", r.deviation},
                {"exponent_a", r.exponent_a},
                {"exponent_b", r.exponent_b},
                {"placement_verified", r.placement_verified}};
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace robinhex
