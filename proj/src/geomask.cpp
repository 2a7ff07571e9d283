#include "geomv/geomask.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "geomv/csvio.hpp"
#include "geomv/errors.hpp"

namespace geomv {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
}  // namespace

const char* stratum_name(Stratum s) { return s == Stratum::urban ? "urban" : "rural"; }

const char* season_region_name(SeasonRegion r) {
    switch (r) {
        case SeasonRegion::unimodal: return "unimodal";
        case SeasonRegion::north: return "north";
        case SeasonRegion::south: return "south";
    }
    return "unimodal";
}

Stratum parse_stratum(const std::string& s) {
    if (s == "urban") return Stratum::urban;
    if (s == "rural") return Stratum::rural;
    throw ParseError("unknown stratum '" + s + "'");
}

SeasonRegion parse_season_region(const std::string& s) {
    if (s == "unimodal") return SeasonRegion::unimodal;
    if (s == "north") return SeasonRegion::north;
    if (s == "south") return SeasonRegion::south;
    throw ParseError("unknown season_region '" + s + "'");
}

const char* method_name(MaskMethod m) {
    switch (m) {
        case MaskMethod::hh_simple: return "hh_simple";
        case MaskMethod::hh_bilinear: return "hh_bilinear";
        case MaskMethod::ea_simple: return "ea_simple";
        case MaskMethod::ea_bilinear: return "ea_bilinear";
        case MaskMethod::ea_mod_simple: return "ea_mod_simple";
        case MaskMethod::ea_mod_bilinear: return "ea_mod_bilinear";
        case MaskMethod::admin_center_simple: return "admin_center_simple";
        case MaskMethod::admin_center_bilinear: return "admin_center_bilinear";
        case MaskMethod::ea_zone: return "ea_zone";
        case MaskMethod::admin_zone: return "admin_zone";
    }
    return "hh_simple";
}

MaskMethod parse_method(const std::string& s) {
    for (MaskMethod m : kAllMethods) {
        if (s == method_name(m)) return m;
    }
    throw ParseError("unknown anonymization method '" + s + "'");
}

void MaskParams::validate() const {
    if (urban_max_km < 0.0 || urban_max_km > rural_max_km || rural_max_km > rural_extra_max_km) {
        throw ValidationError("mask radii must satisfy 0 <= urban <= rural <= rural_extra");
    }
    if (rural_extra_share < 0.0 || rural_extra_share > 1.0) {
        throw ValidationError("rural_extra_share must lie in [0, 1]");
    }
}

PointLL ea_center(std::span<const Household> households_in_ea) {
    if (households_in_ea.empty()) throw EmptyGroupError("ea_center of zero households");
    const std::string& ea = households_in_ea.front().ea_id;
    double lat = 0.0, lon = 0.0;
    for (const Household& h : households_in_ea) {
        if (h.ea_id != ea) {
            throw GroupingError("ea_center saw households from " + ea + " and " + h.ea_id);
        }
        lat += h.lat;
        lon += h.lon;
    }
    double n = double(households_in_ea.size());
    return PointLL{lat / n, lon / n};
}

Displaced displace(PointLL point, Stratum stratum, const MaskParams& params, Rng& rng) {
    if (std::abs(point.lat) > 89.9) {
        throw PolarGuardError("latitude " + std::to_string(point.lat) + " too close to a pole");
    }
    double d_max = params.urban_max_km;
    if (stratum == Stratum::rural) {
        d_max = params.rural_max_km;
        if (rng.next_double() < params.rural_extra_share) d_max = params.rural_extra_max_km;
    }
    double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    double d = rng.uniform(0.0, d_max);
    double dlat = d / kEarthRadiusKm * std::cos(theta) * kRadToDeg;
    double dlon = d / (kEarthRadiusKm * std::cos(point.lat * kDegToRad)) * std::sin(theta) * kRadToDeg;
    return Displaced{PointLL{point.lat + dlat, point.lon + dlon}, d};
}

AdminPolygon make_admin_polygon(std::string admin_id, std::vector<Ring> rings) {
    if (rings.empty() || rings[0].size() < 3) {
        throw GeometryError("polygon " + admin_id + " needs an outer ring with >= 3 vertices");
    }
    AdminPolygon poly;
    poly.admin_id = std::move(admin_id);
    poly.rings = std::move(rings);
    poly.centroid = rings_centroid(poly.rings);
    if (!point_in_rings(poly.centroid, poly.rings)) {
        // Non-convex unit: publish the nearest outer-ring vertex instead.
        double best = std::numeric_limits<double>::infinity();
        PointLL best_p = poly.rings[0][0];
        for (const PointLL& v : poly.rings[0]) {
            double dlat = v.lat - poly.centroid.lat;
            double dlon = v.lon - poly.centroid.lon;
            double d2 = dlat * dlat + dlon * dlon;
            if (d2 < best) {
                best = d2;
                best_p = v;
            }
        }
        poly.centroid = best_p;
        poly.centroid_external = true;
    }
    return poly;
}

namespace {

struct EaGroup {
    std::vector<const Household*> members;
    Stratum stratum = Stratum::rural;
};

// Displacement that optionally rejection-samples until the point stays in the
// EA's admin polygon.
Displaced displace_for_ea(PointLL center, Stratum stratum, const MaskParams& params,
                          const AdminPolygon* polygon, Rng& rng) {
    if (!params.constrain_to_admin) return displace(center, stratum, params, rng);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Displaced d = displace(center, stratum, params, rng);
        if (point_in_rings(d.point, polygon->rings)) return d;
    }
    throw GeometryError("constrain_to_admin: no admissible draw in 1000 attempts for " +
                        polygon->admin_id);
}

}  // namespace

std::string feature_id_for(const std::string& household_id, MaskMethod m) {
    return household_id + ":" + method_name(m);
}

std::vector<SpatialFeature> build_features(std::span<const Household> households,
                                           std::span<const AdminPolygon> polygons,
                                           const MaskParams& params) {
    params.validate();

    std::unordered_map<std::string, const AdminPolygon*> by_admin;
    for (const AdminPolygon& p : polygons) by_admin[p.admin_id] = &p;

    // std::map keeps EA iteration order independent of input order.
    std::map<std::string, EaGroup> eas;
    for (const Household& h : households) {
        EaGroup& g = eas[h.ea_id];
        if (!g.members.empty() && g.stratum != h.stratum) {
            throw GroupingError("EA " + h.ea_id + " mixes urban and rural households");
        }
        g.stratum = h.stratum;
        g.members.push_back(&h);
        if (!by_admin.count(h.admin_id)) throw MissingAdminError(h.admin_id);
    }

    struct EaDerived {
        PointLL center;
        PointLL displaced;
        double displacement_km = 0.0;
        double zone_radius_km = 0.0;
    };
    std::unordered_map<std::string, EaDerived> derived;
    for (auto& [ea_id, group] : eas) {
        std::vector<Household> members;
        members.reserve(group.members.size());
        for (const Household* h : group.members) members.push_back(*h);
        EaDerived d;
        d.center = ea_center(members);
        // Substream per EA: identical output for any thread count or ordering.
        Rng rng(Rng::mix(params.seed, Rng::hash_str(ea_id)));
        const AdminPolygon* poly = by_admin.at(group.members.front()->admin_id);
        Displaced disp = displace_for_ea(d.center, group.stratum, params, poly, rng);
        d.displaced = disp.point;
        d.displacement_km = disp.distance_km;
        // The zone of uncertainty spans the full known offset range.
        d.zone_radius_km = group.stratum == Stratum::urban ? params.urban_max_km
                                                           : params.rural_extra_max_km;
        derived[ea_id] = d;
    }

    std::vector<SpatialFeature> out;
    out.reserve(households.size() * 10);
    for (const Household& h : households) {
        const EaDerived& ea = derived.at(h.ea_id);
        const AdminPolygon& admin = *by_admin.at(h.admin_id);
        for (MaskMethod m : kAllMethods) {
            SpatialFeature f;
            f.feature_id = feature_id_for(h.household_id, m);
            f.household_id = h.household_id;
            f.method = m;
            switch (m) {
                case MaskMethod::hh_simple:
                case MaskMethod::hh_bilinear:
                    f.geometry = h.point();
                    break;
                case MaskMethod::ea_simple:
                case MaskMethod::ea_bilinear:
                    f.geometry = ea.center;
                    break;
                case MaskMethod::ea_mod_simple:
                case MaskMethod::ea_mod_bilinear:
                    f.geometry = ea.displaced;
                    f.displacement_km = ea.displacement_km;
                    break;
                case MaskMethod::admin_center_simple:
                case MaskMethod::admin_center_bilinear:
                    f.geometry = admin.centroid;
                    break;
                case MaskMethod::ea_zone:
                    f.geometry = Disk{ea.displaced, ea.zone_radius_km};
                    f.displacement_km = ea.displacement_km;
                    break;
                case MaskMethod::admin_zone:
                    f.geometry = PolygonGeom{admin.rings};
                    break;
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

// --- file interfaces ----------------------------------------------------------

std::vector<Household> read_households_csv(const std::string& path) {
    auto lines = read_lines(path);
    const std::string header = "household_id,ea_id,admin_id,lat,lon,stratum,season_region";
    if (lines.empty() || lines[0] != header) {
        throw ParseError(path + ": expected header " + header);
    }
    std::vector<Household> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = split(lines[i], ',');
        if (f.size() != 7) throw ParseError(path + ": bad row " + std::to_string(i + 1));
        Household h;
        h.household_id = f[0];
        h.ea_id = f[1];
        h.admin_id = f[2];
        h.lat = parse_double(f[3]);
        h.lon = parse_double(f[4]);
        h.stratum = parse_stratum(f[5]);
        h.season_region = parse_season_region(f[6]);
        if (h.household_id.empty() || h.ea_id.empty() || h.admin_id.empty()) {
            throw ParseError(path + ": empty id in row " + std::to_string(i + 1));
        }
        if (h.lat < -90.0 || h.lat > 90.0) {
            throw ParseError(path + ": latitude out of range in row " + std::to_string(i + 1));
        }
        out.push_back(std::move(h));
    }
    return out;
}

void write_households_csv(std::span<const Household> households, const std::string& path) {
    CsvWriter out(path);
    out.raw("household_id,ea_id,admin_id,lat,lon,stratum,season_region");
    for (const Household& h : households) {
        out.row({h.household_id, h.ea_id, h.admin_id, fmt_double(h.lat), fmt_double(h.lon),
                 stratum_name(h.stratum), season_region_name(h.season_region)});
    }
}

namespace {

Ring parse_ring(const std::string& text, const std::string& path) {
    Ring ring;
    for (const std::string& pair : split(text, ',')) {
        std::istringstream ss(trim(pair));
        double lon, lat;
        if (!(ss >> lon >> lat)) throw ParseError(path + ": bad vertex '" + pair + "'");
        ring.push_back(PointLL{lat, lon});
    }
    // Drop an explicit closing vertex; rings are implicitly closed.
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    return ring;
}

std::string ring_to_string(const Ring& ring) {
    std::string s;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (i) s += ',';
        s += fmt_double(ring[i].lon) + " " + fmt_double(ring[i].lat);
    }
    return s;
}

}  // namespace

std::vector<AdminPolygon> read_polygons(const std::string& path) {
    std::vector<AdminPolygon> out;
    for (const std::string& line : read_lines(path)) {
        auto parts = split(line, ';');
        if (parts.size() < 2) throw ParseError(path + ": expected `admin_id;ring[;ring...]`");
        std::vector<Ring> rings;
        for (std::size_t i = 1; i < parts.size(); ++i) rings.push_back(parse_ring(parts[i], path));
        out.push_back(make_admin_polygon(trim(parts[0]), std::move(rings)));
    }
    return out;
}

void write_polygons(std::span<const AdminPolygon> polygons, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (const AdminPolygon& p : polygons) {
        out << p.admin_id;
        for (const Ring& ring : p.rings) out << ';' << ring_to_string(ring);
        out << '\n';
    }
}

namespace {

std::string geom_to_wkt_like(const FeatureGeometry& geom) {
    if (const auto* p = std::get_if<PointLL>(&geom)) {
        return "POINT(" + fmt_double(p->lon) + " " + fmt_double(p->lat) + ")";
    }
    if (const auto* d = std::get_if<Disk>(&geom)) {
        return "DISK(" + fmt_double(d->center.lon) + " " + fmt_double(d->center.lat) + " r=" +
               fmt_double(d->radius_km) + "km)";
    }
    const auto& poly = std::get<PolygonGeom>(geom);
    std::string s = "POLYGON(";
    for (std::size_t i = 0; i < poly.rings.size(); ++i) {
        if (i) s += ';';
        s += '(' + ring_to_string(poly.rings[i]) + ')';
    }
    return s + ")";
}

FeatureGeometry geom_from_wkt_like(const std::string& text, const std::string& path) {
    auto inner = [&](const char* prefix) {
        std::size_t start = std::string(prefix).size();
        return text.substr(start, text.size() - start - 1);
    };
    if (text.starts_with("POINT(")) {
        std::istringstream ss(inner("POINT("));
        double lon, lat;
        if (!(ss >> lon >> lat)) throw ParseError(path + ": bad POINT '" + text + "'");
        return PointLL{lat, lon};
    }
    if (text.starts_with("DISK(")) {
        std::istringstream ss(inner("DISK("));
        double lon, lat;
        std::string rtok;
        if (!(ss >> lon >> lat >> rtok) || !rtok.starts_with("r=")) {
            throw ParseError(path + ": bad DISK '" + text + "'");
        }
        rtok = rtok.substr(2);
        if (rtok.ends_with("km")) rtok = rtok.substr(0, rtok.size() - 2);
        return Disk{PointLL{lat, lon}, parse_double(rtok)};
    }
    if (text.starts_with("POLYGON(")) {
        std::string body = inner("POLYGON(");
        PolygonGeom poly;
        for (const std::string& part : split(body, ';')) {
            std::string ring_text = trim(part);
            if (ring_text.size() < 2 || ring_text.front() != '(' || ring_text.back() != ')') {
                throw ParseError(path + ": bad POLYGON ring '" + part + "'");
            }
            poly.rings.push_back(parse_ring(ring_text.substr(1, ring_text.size() - 2), path));
        }
        return poly;
    }
    throw ParseError(path + ": unknown geometry '" + text + "'");
}

}  // namespace

void write_features_csv(std::span<const SpatialFeature> features, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "feature_id,household_id,method,geom_wkt_like\n";
    for (const SpatialFeature& f : features) {
        // Geometry text contains commas between vertices, so it is quoted.
        out << f.feature_id << ',' << f.household_id << ',' << method_name(f.method) << ",\""
            << geom_to_wkt_like(f.geometry) << "\"\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<SpatialFeature> read_features_csv(const std::string& path) {
    auto lines = read_lines(path);
    const std::string header = "feature_id,household_id,method,geom_wkt_like";
    if (lines.empty() || lines[0] != header) {
        throw ParseError(path + ": expected header " + header);
    }
    std::vector<SpatialFeature> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        // First three fields are comma-split; the quoted geometry is the rest.
        std::size_t q1 = line.find('"');
        std::size_t q2 = line.rfind('"');
        if (q1 == std::string::npos || q2 <= q1) {
            throw ParseError(path + ": bad feature row " + std::to_string(i + 1));
        }
        auto head = split(line.substr(0, q1 - 1), ',');
        if (head.size() != 3) throw ParseError(path + ": bad feature row " + std::to_string(i + 1));
        SpatialFeature f;
        f.feature_id = head[0];
        f.household_id = head[1];
        f.method = parse_method(head[2]);
        f.geometry = geom_from_wkt_like(line.substr(q1 + 1, q2 - q1 - 1), path);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace geomv
