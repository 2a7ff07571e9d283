#include "geomv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geomv/errors.hpp"

namespace geomv {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

double haversine_km(PointLL a, PointLL b) {
    double phi1 = a.lat * kDegToRad;
    double phi2 = b.lat * kDegToRad;
    double dphi = (b.lat - a.lat) * kDegToRad;
    double dlam = (b.lon - a.lon) * kDegToRad;
    double sp = std::sin(dphi / 2.0);
    double sl = std::sin(dlam / 2.0);
    double h = sp * sp + std::cos(phi1) * std::cos(phi2) * sl * sl;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

double ring_signed_area(const Ring& ring) {
    double acc = 0.0;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PointLL& p = ring[i];
        const PointLL& q = ring[(i + 1) % n];
        acc += p.lon * q.lat - q.lon * p.lat;
    }
    return acc / 2.0;
}

PointLL ring_centroid(const Ring& ring) {
    double area = ring_signed_area(ring);
    if (area == 0.0) throw GeometryError("zero-area ring");
    double cx = 0.0, cy = 0.0;
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PointLL& p = ring[i];
        const PointLL& q = ring[(i + 1) % n];
        double cross = p.lon * q.lat - q.lon * p.lat;
        cx += (p.lon + q.lon) * cross;
        cy += (p.lat + q.lat) * cross;
    }
    return PointLL{cy / (6.0 * area), cx / (6.0 * area)};
}

PointLL rings_centroid(const std::vector<Ring>& rings) {
    if (rings.empty()) throw GeometryError("no rings");
    double wsum = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < rings.size(); ++i) {
        double a = std::abs(ring_signed_area(rings[i]));
        if (i == 0 && a == 0.0) throw GeometryError("zero-area outer ring");
        if (a == 0.0) continue;
        PointLL c = ring_centroid(rings[i]);
        double w = (i == 0) ? a : -a;  // holes subtract
        wsum += w;
        cx += w * c.lon;
        cy += w * c.lat;
    }
    if (wsum <= 0.0) throw GeometryError("holes cover the outer ring");
    return PointLL{cy / wsum, cx / wsum};
}

bool point_in_rings(PointLL p, const std::vector<Ring>& rings) {
    bool inside = false;
    for (const Ring& ring : rings) {
        std::size_t n = ring.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const PointLL& a = ring[i];
            const PointLL& b = ring[j];
            bool straddles = (a.lat > p.lat) != (b.lat > p.lat);
            if (straddles) {
                double x_cross = (b.lon - a.lon) * (p.lat - a.lat) / (b.lat - a.lat) + a.lon;
                if (p.lon < x_cross) inside = !inside;
            }
        }
    }
    return inside;
}

bool point_in_disk(PointLL p, const Disk& disk) {
    return haversine_km(p, disk.center) <= disk.radius_km;
}

BBox rings_bbox(const std::vector<Ring>& rings) {
    BBox box{90.0, -90.0, 360.0, -360.0};
    for (const Ring& ring : rings) {
        for (const PointLL& p : ring) {
            box.lat_min = std::min(box.lat_min, p.lat);
            box.lat_max = std::max(box.lat_max, p.lat);
            box.lon_min = std::min(box.lon_min, p.lon);
            box.lon_max = std::max(box.lon_max, p.lon);
        }
    }
    return box;
}

BBox disk_bbox(const Disk& disk) {
    double dlat = disk.radius_km / kEarthRadiusKm / kDegToRad;
    double coslat = std::cos(disk.center.lat * kDegToRad);
    double dlon = (coslat > 1e-12) ? dlat / coslat : 360.0;
    return BBox{disk.center.lat - dlat, disk.center.lat + dlat, disk.center.lon - dlon,
                disk.center.lon + dlon};
}

}  // namespace geomv
