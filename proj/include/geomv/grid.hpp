#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geomv/date.hpp"
#include "geomv/geometry.hpp"

namespace geomv {

// Georeference for a regular lat/lon grid. Row 0 is the northernmost row;
// the anchor is the lower-left corner (ASCII-grid convention).
struct GridGeoref {
    std::int32_t n_cols = 0;
    std::int32_t n_rows = 0;
    double x_ll = 0.0;
    double y_ll = 0.0;
    double cell_size = 0.0;
    double nodata = -9999.0;

    void validate() const;

    PointLL cell_center(std::int32_t row, std::int32_t col) const {
        return PointLL{y_ll + (double(n_rows - 1 - row) + 0.5) * cell_size,
                       x_ll + (double(col) + 0.5) * cell_size};
    }

    double lon_max() const { return x_ll + n_cols * cell_size; }
    double lat_max() const { return y_ll + n_rows * cell_size; }

    bool contains(PointLL p) const {
        return p.lon >= x_ll && p.lon <= lon_max() && p.lat >= y_ll && p.lat <= lat_max();
    }

    // Cell containing p. Points on a shared edge go to the larger row/column
    // index; points on the outer boundary stay in the boundary cell.
    std::optional<std::pair<std::int32_t, std::int32_t>> cell_of(PointLL p) const;

    bool is_nodata(double v) const;
    bool operator==(const GridGeoref&) const = default;
};

enum class WeatherVariable : std::uint8_t { precipitation_mm = 0, temperature_c = 1 };

const char* variable_name(WeatherVariable v);

// One day of one gridded product, row-major from the north.
struct GridRaster {
    GridGeoref georef;
    std::vector<double> values;

    double at(std::int32_t row, std::int32_t col) const {
        return values[std::size_t(row) * georef.n_cols + col];
    }
    double& at(std::int32_t row, std::int32_t col) {
        return values[std::size_t(row) * georef.n_cols + col];
    }
    void validate() const;
};

// Lightweight per-day view into a stack; extraction routines work on this.
struct RasterView {
    const GridGeoref& georef;
    std::span<const double> values;

    RasterView(const GridGeoref& g, std::span<const double> v) : georef(g), values(v) {}
    RasterView(const GridRaster& r) : georef(r.georef), values(r.values) {}

    double at(std::int32_t row, std::int32_t col) const {
        return values[std::size_t(row) * georef.n_cols + col];
    }
};

// A contiguous run of daily rasters sharing one georeference.
struct GridStack {
    GridGeoref georef;
    Date start_date;
    std::int32_t n_days = 0;
    WeatherVariable variable = WeatherVariable::precipitation_mm;
    std::vector<double> values;  // day-major, row-major

    RasterView day(std::int32_t d) const {
        std::size_t cells = std::size_t(georef.n_rows) * georef.n_cols;
        return RasterView(georef, std::span<const double>(values).subspan(d * cells, cells));
    }
    void validate() const;
};

// Extracted daily values for one spatial feature.
struct DailySeries {
    std::string feature_id;
    Date start_date;
    std::vector<double> values;

    Date date_at(std::size_t i) const { return start_date + std::int64_t(i); }
};

// --- file formats -------------------------------------------------------------

// ESRI-style ASCII grid: six header lines then n_rows lines of values.
GridRaster read_ascii_grid(const std::string& path);
void write_ascii_grid(const GridRaster& raster, const std::string& path);

// `.wxstack` binary: magic "WXS1", little-endian header, f32 payload.
GridStack read_stack(const std::string& path);
void write_stack(const GridStack& stack, const std::string& path);

// Series tables: CSV `feature_id,date,value` and a `.wxseries` binary
// (magic "WXT1") holding many features with one shared date range.
void write_series_csv(const std::vector<DailySeries>& series, const std::string& path);
std::vector<DailySeries> read_series_csv(const std::string& path);
void write_series_binary(const std::vector<DailySeries>& series, const std::string& path);
std::vector<DailySeries> read_series_binary(const std::string& path);

}  // namespace geomv
