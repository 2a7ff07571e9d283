#pragma once

#include <stdexcept>
#include <string>

namespace geomv {

// Base class for every error raised by the library. Callers that only care
// about "did it work" can catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- file / format errors ---------------------------------------------------

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

class ShapeError : public Error {
  public:
    explicit ShapeError(const std::string& msg) : Error("shape error: " + msg) {}
};

class FormatError : public Error {
  public:
    explicit FormatError(const std::string& msg) : Error("format error: " + msg) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& msg) : Error("i/o error: " + msg) {}
};

// --- geometry / masking errors ----------------------------------------------

class EmptyGroupError : public Error {
  public:
    explicit EmptyGroupError(const std::string& msg) : Error("empty group: " + msg) {}
};

class GroupingError : public Error {
  public:
    explicit GroupingError(const std::string& msg) : Error("grouping error: " + msg) {}
};

class MissingAdminError : public Error {
  public:
    explicit MissingAdminError(const std::string& admin_id)
        : Error("no polygon for admin unit: " + admin_id) {}
};

class PolarGuardError : public Error {
  public:
    explicit PolarGuardError(const std::string& msg) : Error("polar guard: " + msg) {}
};

class GeometryError : public Error {
  public:
    explicit GeometryError(const std::string& msg) : Error("geometry error: " + msg) {}
};

// --- extraction errors --------------------------------------------------------

class OutOfExtentError : public Error {
  public:
    explicit OutOfExtentError(const std::string& msg) : Error("out of extent: " + msg) {}
};

class NoDataError : public Error {
  public:
    explicit NoDataError(const std::string& msg) : Error("nodata: " + msg) {}
};

// --- season / metric errors ---------------------------------------------------

class InsufficientDataError : public Error {
  public:
    explicit InsufficientDataError(const std::string& msg)
        : Error("insufficient data: " + msg) {}
};

// --- regression errors ----------------------------------------------------------

class CollinearityError : public Error {
  public:
    explicit CollinearityError(const std::string& msg) : Error("collinear design: " + msg) {}
};

class ClusterError : public Error {
  public:
    explicit ClusterError(const std::string& msg) : Error("cluster error: " + msg) {}
};

class DegenerateFitError : public Error {
  public:
    explicit DegenerateFitError(const std::string& msg) : Error("degenerate fit: " + msg) {}
};

// --- multiverse / cli errors ------------------------------------------------------

class LatticeError : public Error {
  public:
    explicit LatticeError(const std::string& msg) : Error("lattice error: " + msg) {}
};

class EmptySubsetError : public Error {
  public:
    explicit EmptySubsetError(const std::string& msg) : Error("empty subset: " + msg) {}
};

class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error("validation error: " + msg) {}
};

}  // namespace geomv
