#pragma once

#include <string>
#include <vector>

#include "geomv/geomask.hpp"
#include "geomv/grid.hpp"

namespace geomv {

enum class ExtractionMethod : std::uint8_t { simple, bilinear, zonal_mean };

// Table pairing: point methods use simple or bilinear, area methods zonal mean.
ExtractionMethod extraction_for(MaskMethod m);

// Value of the unique cell containing p.
double extract_simple(RasterView raster, PointLL p);

// Bilinear interpolation on the 2x2 surrounding cell centers. Outside the
// hull of cell centers (but inside the extent) falls back to simple; the
// optional flag reports that.
double extract_bilinear(RasterView raster, PointLL p, bool* fell_back = nullptr);

// Unweighted mean of every non-nodata cell whose center lies inside the
// shape. A shape smaller than one cell falls back to the cell containing its
// centroid.
double extract_zonal_mean(RasterView raster, const Disk& disk);
double extract_zonal_mean(RasterView raster, const PolygonGeom& polygon);

double extract_feature(RasterView raster, const SpatialFeature& feature, bool* fell_back = nullptr);

// Serial reference: the method-appropriate extraction applied day by day.
DailySeries extract_series(const GridStack& stack, const SpatialFeature& feature);

struct BatchExtractionResult {
    std::vector<DailySeries> series;            // empty slot where a feature errored
    std::vector<std::string> errors;            // per-feature message, "" = ok
    std::size_t n_failed = 0;
};

// OpenMP-parallel batch over features. parallelism <= 1 runs the serial path;
// output is identical for every parallelism level.
BatchExtractionResult extract_series_batch(const GridStack& stack,
                                           std::span<const SpatialFeature> features,
                                           int parallelism);

}  // namespace geomv
