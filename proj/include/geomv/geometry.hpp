#pragma once

#include <vector>

namespace geomv {

inline constexpr double kEarthRadiusKm = 6371.0088;

struct PointLL {
    double lat = 0.0;
    double lon = 0.0;
    bool operator==(const PointLL&) const = default;
};

// Closed vertex ring; the last vertex need not repeat the first.
using Ring = std::vector<PointLL>;

struct Disk {
    PointLL center;
    double radius_km = 0.0;
};

struct BBox {
    double lat_min = 0.0, lat_max = 0.0, lon_min = 0.0, lon_max = 0.0;
};

// Great-circle distance on the mean-radius sphere.
double haversine_km(PointLL a, PointLL b);

// Signed planar area of a ring in degree^2 (lon as x, lat as y).
double ring_signed_area(const Ring& ring);

// Planar area centroid of a ring. Throws GeometryError on zero area.
PointLL ring_centroid(const Ring& ring);

// Area-weighted centroid of outer ring minus holes, planar in lat/lon.
PointLL rings_centroid(const std::vector<Ring>& rings);

// Even-odd rule over all rings, so holes are excluded.
bool point_in_rings(PointLL p, const std::vector<Ring>& rings);

bool point_in_disk(PointLL p, const Disk& disk);

BBox rings_bbox(const std::vector<Ring>& rings);
BBox disk_bbox(const Disk& disk);

}  // namespace geomv
