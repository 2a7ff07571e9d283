#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geomv/geometry.hpp"
#include "geomv/rng.hpp"

namespace geomv {

enum class Stratum : std::uint8_t { urban, rural };
enum class SeasonRegion : std::uint8_t { unimodal, north, south };

const char* stratum_name(Stratum s);
const char* season_region_name(SeasonRegion r);
Stratum parse_stratum(const std::string& s);
SeasonRegion parse_season_region(const std::string& s);

struct Household {
    std::string household_id;
    std::string ea_id;
    std::string admin_id;
    double lat = 0.0;
    double lon = 0.0;
    Stratum stratum = Stratum::rural;
    SeasonRegion season_region = SeasonRegion::unimodal;

    PointLL point() const { return PointLL{lat, lon}; }
};

struct AdminPolygon {
    std::string admin_id;
    std::vector<Ring> rings;  // first ring is the outer boundary, rest are holes
    PointLL centroid;
    bool centroid_external = false;  // centroid fell outside, snapped to nearest vertex
};

// The ten anonymization methods of the study design.
enum class MaskMethod : std::uint8_t {
    hh_simple,
    hh_bilinear,
    ea_simple,
    ea_bilinear,
    ea_mod_simple,
    ea_mod_bilinear,
    admin_center_simple,
    admin_center_bilinear,
    ea_zone,
    admin_zone,
};

inline constexpr MaskMethod kAllMethods[10] = {
    MaskMethod::hh_simple,           MaskMethod::hh_bilinear,
    MaskMethod::ea_simple,           MaskMethod::ea_bilinear,
    MaskMethod::ea_mod_simple,       MaskMethod::ea_mod_bilinear,
    MaskMethod::admin_center_simple, MaskMethod::admin_center_bilinear,
    MaskMethod::ea_zone,             MaskMethod::admin_zone,
};

const char* method_name(MaskMethod m);
MaskMethod parse_method(const std::string& s);

struct PolygonGeom {
    std::vector<Ring> rings;
};

using FeatureGeometry = std::variant<PointLL, Disk, PolygonGeom>;

struct SpatialFeature {
    std::string feature_id;
    std::string household_id;
    MaskMethod method = MaskMethod::hh_simple;
    FeatureGeometry geometry;
    double displacement_km = 0.0;  // realized offset for ea_mod_* / ea_zone, else 0
};

struct MaskParams {
    double urban_max_km = 2.0;
    double rural_max_km = 5.0;
    double rural_extra_max_km = 10.0;
    double rural_extra_share = 0.01;
    std::uint64_t seed = 0;
    bool constrain_to_admin = false;

    void validate() const;
};

// Arithmetic mean of household coordinates; EAs are small enough that no
// spherical averaging is needed.
PointLL ea_center(std::span<const Household> households_in_ea);

struct Displaced {
    PointLL point;
    double distance_km = 0.0;
};

// Random offset: bearing uniform on [0, 2pi), distance uniform on [0, d_max]
// with d_max picked by stratum (rural draws may upgrade to the extended
// range). Local equirectangular step, so sub-meter error at offset scale.
Displaced displace(PointLL point, Stratum stratum, const MaskParams& params, Rng& rng);

// Planar area-weighted centroid of outer ring minus holes; snaps to the
// nearest outer-ring vertex when the centroid lands outside.
AdminPolygon make_admin_polygon(std::string admin_id, std::vector<Ring> rings);

// All ten features per household. One displacement per EA, shared by every
// household in it and by both the point and zone variants.
std::vector<SpatialFeature> build_features(std::span<const Household> households,
                                           std::span<const AdminPolygon> polygons,
                                           const MaskParams& params);

std::string feature_id_for(const std::string& household_id, MaskMethod m);

// --- file interfaces ----------------------------------------------------------

// CSV with header household_id,ea_id,admin_id,lat,lon,stratum,season_region
std::vector<Household> read_households_csv(const std::string& path);
void write_households_csv(std::span<const Household> households, const std::string& path);

// One polygon per line: `admin_id;lon lat,lon lat,...;hole ring...`
std::vector<AdminPolygon> read_polygons(const std::string& path);
void write_polygons(std::span<const AdminPolygon> polygons, const std::string& path);

// CSV `feature_id,household_id,method,geom_wkt_like`
void write_features_csv(std::span<const SpatialFeature> features, const std::string& path);
std::vector<SpatialFeature> read_features_csv(const std::string& path);

}  // namespace geomv
