#include "geomv/grid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>

#include "geomv/csvio.hpp"
#include "geomv/errors.hpp"

namespace geomv {

void GridGeoref::validate() const {
    if (n_cols < 1 || n_rows < 1) throw ShapeError("grid must have at least one cell");
    if (!(cell_size > 0.0)) throw ShapeError("cell_size must be positive");
    if (y_ll < -90.0 || lat_max() > 90.0) throw ShapeError("grid latitude outside [-90, 90]");
    if (x_ll <= -360.0 || lon_max() >= 360.0) throw ShapeError("grid longitude outside (-360, 360)");
}

std::optional<std::pair<std::int32_t, std::int32_t>> GridGeoref::cell_of(PointLL p) const {
    if (!contains(p)) return std::nullopt;
    double fx = (p.lon - x_ll) / cell_size;
    double fy = (p.lat - y_ll) / cell_size;
    auto col = std::int32_t(std::floor(fx));
    if (col >= n_cols) col = n_cols - 1;  // right outer edge
    // A point exactly on a horizontal cell edge belongs to the cell below it
    // (the larger row index); the bottom outer edge stays in row n_rows-1.
    double ffy = std::floor(fy);
    auto row_from_bottom = std::int32_t(ffy);
    if (fy == ffy && row_from_bottom > 0) row_from_bottom -= 1;
    if (row_from_bottom >= n_rows) row_from_bottom = n_rows - 1;
    return std::make_pair(n_rows - 1 - row_from_bottom, col);
}

bool GridGeoref::is_nodata(double v) const {
    if (std::isnan(nodata)) return std::isnan(v);
    return v == nodata;
}

const char* variable_name(WeatherVariable v) {
    return v == WeatherVariable::precipitation_mm ? "precipitation_mm" : "temperature_c";
}

void GridRaster::validate() const {
    georef.validate();
    if (values.size() != std::size_t(georef.n_rows) * georef.n_cols) {
        throw ShapeError("raster holds " + std::to_string(values.size()) + " values, expected " +
                         std::to_string(std::size_t(georef.n_rows) * georef.n_cols));
    }
    for (double v : values) {
        if (!std::isfinite(v) && !georef.is_nodata(v)) {
            throw ShapeError("non-finite value that is not the nodata sentinel");
        }
    }
}

void GridStack::validate() const {
    georef.validate();
    if (n_days < 1) throw ShapeError("stack must hold at least one day");
    if (values.size() != std::size_t(n_days) * georef.n_rows * georef.n_cols) {
        throw ShapeError("stack payload size mismatch");
    }
}

// --- ASCII grid ---------------------------------------------------------------

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

GridRaster read_ascii_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    GridRaster raster;
    const char* expected[6] = {"ncols", "nrows", "xllcorner", "yllcorner", "cellsize",
                               "nodata_value"};
    for (int i = 0; i < 6; ++i) {
        std::string key, value;
        if (!(in >> key >> value)) {
            throw ParseError(path + ": header line " + std::to_string(i + 1) + " truncated");
        }
        if (lower(key) != expected[i]) {
            throw ParseError(path + ": header line " + std::to_string(i + 1) + ": expected " +
                             expected[i] + ", got '" + key + "'");
        }
        switch (i) {
            case 0: raster.georef.n_cols = std::int32_t(parse_long(value)); break;
            case 1: raster.georef.n_rows = std::int32_t(parse_long(value)); break;
            case 2: raster.georef.x_ll = parse_double(value); break;
            case 3: raster.georef.y_ll = parse_double(value); break;
            case 4: raster.georef.cell_size = parse_double(value); break;
            case 5: raster.georef.nodata = parse_double(value); break;
        }
    }
    raster.georef.validate();

    std::size_t expected_count = std::size_t(raster.georef.n_rows) * raster.georef.n_cols;
    raster.values.reserve(expected_count);
    std::string tok;
    while (in >> tok) raster.values.push_back(parse_double(tok));
    if (raster.values.size() != expected_count) {
        throw ShapeError(path + ": got " + std::to_string(raster.values.size()) + " values, want " +
                         std::to_string(expected_count));
    }
    return raster;
}

void write_ascii_grid(const GridRaster& raster, const std::string& path) {
    raster.validate();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "ncols " << raster.georef.n_cols << '\n';
    out << "nrows " << raster.georef.n_rows << '\n';
    out << "xllcorner " << fmt_double(raster.georef.x_ll) << '\n';
    out << "yllcorner " << fmt_double(raster.georef.y_ll) << '\n';
    out << "cellsize " << fmt_double(raster.georef.cell_size) << '\n';
    out << "NODATA_value " << fmt_double(raster.georef.nodata) << '\n';
    for (std::int32_t r = 0; r < raster.georef.n_rows; ++r) {
        for (std::int32_t c = 0; c < raster.georef.n_cols; ++c) {
            if (c) out << ' ';
            out << fmt_double(raster.at(r, c));
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

// --- wxstack binary -------------------------------------------------------------

namespace {

constexpr char kStackMagic[4] = {'W', 'X', 'S', '1'};

template <typename T>
void put(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& in, const std::string& path) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw ShapeError(path + ": truncated header");
    return v;
}

}  // namespace

GridStack read_stack(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kStackMagic, 4) != 0) {
        throw FormatError(path + ": bad magic, not a wxstack file");
    }

    GridStack stack;
    stack.georef.n_cols = std::int32_t(get<std::uint32_t>(in, path));
    stack.georef.n_rows = std::int32_t(get<std::uint32_t>(in, path));
    stack.georef.x_ll = get<double>(in, path);
    stack.georef.y_ll = get<double>(in, path);
    stack.georef.cell_size = get<double>(in, path);
    stack.georef.nodata = get<double>(in, path);
    stack.n_days = std::int32_t(get<std::uint32_t>(in, path));
    stack.start_date = Date{get<std::int64_t>(in, path)};
    auto var_code = get<std::uint8_t>(in, path);
    if (var_code > 1) throw FormatError(path + ": unknown variable code");
    stack.variable = WeatherVariable(var_code);

    if (stack.n_days < 1) throw ShapeError(path + ": n_days must be positive");
    stack.georef.validate();

    std::size_t count = std::size_t(stack.n_days) * stack.georef.n_rows * stack.georef.n_cols;
    std::vector<float> payload(count);
    in.read(reinterpret_cast<char*>(payload.data()), std::streamsize(count * sizeof(float)));
    if (std::size_t(in.gcount()) != count * sizeof(float)) {
        throw ShapeError(path + ": truncated payload");
    }
    stack.values.assign(payload.begin(), payload.end());
    return stack;
}

void write_stack(const GridStack& stack, const std::string& path) {
    stack.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kStackMagic, 4);
    put<std::uint32_t>(out, std::uint32_t(stack.georef.n_cols));
    put<std::uint32_t>(out, std::uint32_t(stack.georef.n_rows));
    put<double>(out, stack.georef.x_ll);
    put<double>(out, stack.georef.y_ll);
    put<double>(out, stack.georef.cell_size);
    put<double>(out, stack.georef.nodata);
    put<std::uint32_t>(out, std::uint32_t(stack.n_days));
    put<std::int64_t>(out, stack.start_date.days);
    put<std::uint8_t>(out, std::uint8_t(stack.variable));
    std::vector<float> payload(stack.values.begin(), stack.values.end());
    out.write(reinterpret_cast<const char*>(payload.data()),
              std::streamsize(payload.size() * sizeof(float)));
    if (!out) throw IoError("write failed: " + path);
}

// --- series tables -----------------------------------------------------------------

void write_series_csv(const std::vector<DailySeries>& series, const std::string& path) {
    CsvWriter out(path);
    out.raw("feature_id,date,value");
    for (const DailySeries& s : series) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            out.row({s.feature_id, s.date_at(i).iso(), fmt_double(s.values[i])});
        }
    }
}

std::vector<DailySeries> read_series_csv(const std::string& path) {
    auto lines = read_lines(path);
    if (lines.empty() || lines[0] != "feature_id,date,value") {
        throw ParseError(path + ": expected header feature_id,date,value");
    }
    std::vector<DailySeries> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = split(lines[i], ',');
        if (f.size() != 3) throw ParseError(path + ": bad row " + std::to_string(i + 1));
        Date d = Date::parse_iso(f[1]);
        if (out.empty() || out.back().feature_id != f[0]) {
            out.push_back(DailySeries{f[0], d, {}});
        }
        DailySeries& s = out.back();
        if (s.start_date + std::int64_t(s.values.size()) != d) {
            throw ParseError(path + ": dates not contiguous for " + f[0]);
        }
        s.values.push_back(parse_double(f[2]));
    }
    return out;
}

namespace {
constexpr char kSeriesMagic[4] = {'W', 'X', 'T', '1'};
}

void write_series_binary(const std::vector<DailySeries>& series, const std::string& path) {
    if (series.empty()) throw ShapeError("refusing to write empty series table");
    std::size_t n_days = series[0].values.size();
    for (const DailySeries& s : series) {
        if (s.values.size() != n_days || s.start_date != series[0].start_date) {
            throw ShapeError("series table requires one shared date range");
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kSeriesMagic, 4);
    put<std::uint32_t>(out, std::uint32_t(series.size()));
    put<std::uint32_t>(out, std::uint32_t(n_days));
    put<std::int64_t>(out, series[0].start_date.days);
    for (const DailySeries& s : series) {
        put<std::uint16_t>(out, std::uint16_t(s.feature_id.size()));
        out.write(s.feature_id.data(), std::streamsize(s.feature_id.size()));
        std::vector<float> payload(s.values.begin(), s.values.end());
        out.write(reinterpret_cast<const char*>(payload.data()),
                  std::streamsize(payload.size() * sizeof(float)));
    }
    if (!out) throw IoError("write failed: " + path);
}

std::vector<DailySeries> read_series_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kSeriesMagic, 4) != 0) {
        throw FormatError(path + ": bad magic, not a wxseries file");
    }
    auto n_features = get<std::uint32_t>(in, path);
    auto n_days = get<std::uint32_t>(in, path);
    Date start{get<std::int64_t>(in, path)};
    std::vector<DailySeries> out;
    out.reserve(n_features);
    for (std::uint32_t i = 0; i < n_features; ++i) {
        auto id_len = get<std::uint16_t>(in, path);
        std::string id(id_len, '\0');
        in.read(id.data(), id_len);
        std::vector<float> payload(n_days);
        in.read(reinterpret_cast<char*>(payload.data()), std::streamsize(n_days * sizeof(float)));
        if (!in) throw ShapeError(path + ": truncated payload");
        DailySeries s{std::move(id), start, {}};
        s.values.assign(payload.begin(), payload.end());
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace geomv
