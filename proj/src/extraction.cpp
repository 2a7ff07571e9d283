#include "geomv/extraction.hpp"

#include <algorithm>
#include <cmath>

#include "geomv/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geomv {

ExtractionMethod extraction_for(MaskMethod m) {
    switch (m) {
        case MaskMethod::hh_simple:
        case MaskMethod::ea_simple:
        case MaskMethod::ea_mod_simple:
        case MaskMethod::admin_center_simple:
            return ExtractionMethod::simple;
        case MaskMethod::hh_bilinear:
        case MaskMethod::ea_bilinear:
        case MaskMethod::ea_mod_bilinear:
        case MaskMethod::admin_center_bilinear:
            return ExtractionMethod::bilinear;
        case MaskMethod::ea_zone:
        case MaskMethod::admin_zone:
            return ExtractionMethod::zonal_mean;
    }
    return ExtractionMethod::simple;
}

double extract_simple(RasterView raster, PointLL p) {
    auto cell = raster.georef.cell_of(p);
    if (!cell) {
        throw OutOfExtentError("point (" + std::to_string(p.lat) + ", " + std::to_string(p.lon) +
                               ") outside grid");
    }
    double v = raster.at(cell->first, cell->second);
    if (raster.georef.is_nodata(v)) {
        throw NoDataError("cell (" + std::to_string(cell->first) + ", " +
                          std::to_string(cell->second) + ") is nodata");
    }
    return v;
}

double extract_bilinear(RasterView raster, PointLL p, bool* fell_back) {
    const GridGeoref& g = raster.georef;
    if (!g.contains(p)) {
        throw OutOfExtentError("point (" + std::to_string(p.lat) + ", " + std::to_string(p.lon) +
                               ") outside grid");
    }
    if (fell_back) *fell_back = false;

    // Fractional position in the cell-center lattice, measured from the
    // bottom-left center.
    double gx = (p.lon - g.x_ll) / g.cell_size - 0.5;
    double gy = (p.lat - g.y_ll) / g.cell_size - 0.5;
    if (g.n_cols < 2 || g.n_rows < 2 || gx < 0.0 || gy < 0.0 || gx > double(g.n_cols - 1) ||
        gy > double(g.n_rows - 1)) {
        if (fell_back) *fell_back = true;
        return extract_simple(raster, p);
    }

    auto c0 = std::int32_t(std::floor(gx));
    auto rb0 = std::int32_t(std::floor(gy));
    if (c0 >= g.n_cols - 1) c0 = g.n_cols - 2;    // point on the last center column
    if (rb0 >= g.n_rows - 1) rb0 = g.n_rows - 2;  // point on the last center row
    double u = gx - c0;
    double v = gy - rb0;

    std::int32_t r1 = g.n_rows - 1 - rb0;  // bottom row of the 2x2 block
    std::int32_t r0 = r1 - 1;              // top row
    double q00 = raster.at(r1, c0);
    double q10 = raster.at(r1, c0 + 1);
    double q01 = raster.at(r0, c0);
    double q11 = raster.at(r0, c0 + 1);
    for (auto [val, rr, cc] : {std::tuple{q00, r1, c0}, std::tuple{q10, r1, c0 + 1},
                               std::tuple{q01, r0, c0}, std::tuple{q11, r0, c0 + 1}}) {
        if (g.is_nodata(val)) {
            throw NoDataError("bilinear neighborhood cell (" + std::to_string(rr) + ", " +
                              std::to_string(cc) + ") is nodata");
        }
    }
    return (1.0 - u) * (1.0 - v) * q00 + u * (1.0 - v) * q10 + (1.0 - u) * v * q01 + u * v * q11;
}

namespace {

// Row/col ranges whose cell centers could fall inside the bbox.
struct CellRange {
    std::int32_t row_begin, row_end, col_begin, col_end;  // half-open
};

CellRange cells_for_bbox(const GridGeoref& g, const BBox& box) {
    auto col_of = [&](double lon) { return (lon - g.x_ll) / g.cell_size - 0.5; };
    auto rb_of = [&](double lat) { return (lat - g.y_ll) / g.cell_size - 0.5; };
    auto clamp_col = [&](std::int32_t c) { return std::clamp(c, std::int32_t(0), g.n_cols - 1); };
    auto clamp_row = [&](std::int32_t r) { return std::clamp(r, std::int32_t(0), g.n_rows - 1); };

    std::int32_t c_lo = clamp_col(std::int32_t(std::ceil(col_of(box.lon_min))));
    std::int32_t c_hi = clamp_col(std::int32_t(std::floor(col_of(box.lon_max))));
    std::int32_t rb_lo = clamp_row(std::int32_t(std::ceil(rb_of(box.lat_min))));
    std::int32_t rb_hi = clamp_row(std::int32_t(std::floor(rb_of(box.lat_max))));
    // Convert bottom-based rows to storage rows (top-based).
    std::int32_t r_lo = g.n_rows - 1 - rb_hi;
    std::int32_t r_hi = g.n_rows - 1 - rb_lo;
    return CellRange{r_lo, r_hi + 1, c_lo, c_hi + 1};
}

template <typename InShape>
double zonal_mean_impl(RasterView raster, const BBox& box, PointLL fallback_centroid,
                       InShape&& inside) {
    const GridGeoref& g = raster.georef;
    CellRange range = cells_for_bbox(g, box);
    double sum = 0.0;
    std::size_t n = 0;
    bool any_center_inside = false;
    for (std::int32_t r = range.row_begin; r < range.row_end; ++r) {
        for (std::int32_t c = range.col_begin; c < range.col_end; ++c) {
            if (!inside(g.cell_center(r, c))) continue;
            any_center_inside = true;
            double v = raster.at(r, c);
            if (g.is_nodata(v)) continue;
            sum += v;
            ++n;
        }
    }
    if (n > 0) return sum / double(n);
    if (any_center_inside) throw NoDataError("all cells under the shape are nodata");

    // Shape smaller than a cell: use the cell containing its centroid.
    auto cell = g.cell_of(fallback_centroid);
    if (!cell) throw NoDataError("shape centroid outside grid extent");
    double v = raster.at(cell->first, cell->second);
    if (g.is_nodata(v)) throw NoDataError("fallback cell under shape centroid is nodata");
    return v;
}

}  // namespace

double extract_zonal_mean(RasterView raster, const Disk& disk) {
    return zonal_mean_impl(raster, disk_bbox(disk), disk.center,
                           [&](PointLL p) { return point_in_disk(p, disk); });
}

double extract_zonal_mean(RasterView raster, const PolygonGeom& polygon) {
    if (polygon.rings.empty()) throw GeometryError("zonal mean of empty polygon");
    return zonal_mean_impl(raster, rings_bbox(polygon.rings), rings_centroid(polygon.rings),
                           [&](PointLL p) { return point_in_rings(p, polygon.rings); });
}

double extract_feature(RasterView raster, const SpatialFeature& feature, bool* fell_back) {
    switch (extraction_for(feature.method)) {
        case ExtractionMethod::simple:
            return extract_simple(raster, std::get<PointLL>(feature.geometry));
        case ExtractionMethod::bilinear:
            return extract_bilinear(raster, std::get<PointLL>(feature.geometry), fell_back);
        case ExtractionMethod::zonal_mean:
            if (const auto* disk = std::get_if<Disk>(&feature.geometry)) {
                return extract_zonal_mean(raster, *disk);
            }
            return extract_zonal_mean(raster, std::get<PolygonGeom>(feature.geometry));
    }
    throw Error("unreachable extraction method");
}

DailySeries extract_series(const GridStack& stack, const SpatialFeature& feature) {
    DailySeries series;
    series.feature_id = feature.feature_id;
    series.start_date = stack.start_date;
    series.values.reserve(std::size_t(stack.n_days));
    for (std::int32_t d = 0; d < stack.n_days; ++d) {
        try {
            series.values.push_back(extract_feature(stack.day(d), feature));
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + " (day " + std::to_string(d) + ", " +
                        (stack.start_date + d).iso() + ", feature " + feature.feature_id + ")");
        }
    }
    return series;
}

BatchExtractionResult extract_series_batch(const GridStack& stack,
                                           std::span<const SpatialFeature> features,
                                           int parallelism) {
    BatchExtractionResult result;
    result.series.resize(features.size());
    result.errors.assign(features.size(), "");

    auto run_one = [&](std::size_t i) {
        try {
            result.series[i] = extract_series(stack, features[i]);
        } catch (const Error& e) {
            result.errors[i] = e.what();
        }
    };

#ifdef _OPENMP
    if (parallelism > 1) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(parallelism)
        for (std::int64_t i = 0; i < std::int64_t(features.size()); ++i) {
            run_one(std::size_t(i));
        }
    } else {
        for (std::size_t i = 0; i < features.size(); ++i) run_one(i);
    }
#else
    (void)parallelism;
    for (std::size_t i = 0; i < features.size(); ++i) run_one(i);
#endif

    for (const std::string& e : result.errors) {
        if (!e.empty()) ++result.n_failed;
    }
    return result;
}

}  // namespace geomv
