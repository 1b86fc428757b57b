#ifndef OMEGATT_ERRORS_HPP
#define OMEGATT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omegatt {

// Base class for all domain errors raised by this library. The CLI maps
// these to exit code 1; anything else escaping is a bug.
struct error : std::runtime_error {
  explicit error(const std::string& m) : std::runtime_error(m) {}
};

struct MalformedTree : error {
  explicit MalformedTree(const std::string& m) : error("MalformedTree: " + m) {}
};
struct DimTooSmall : error {
  explicit DimTooSmall(const std::string& m) : error("DimTooSmall: " + m) {}
};
struct DimOutOfRange : error {
  explicit DimOutOfRange(const std::string& m) : error("DimOutOfRange: " + m) {}
};
struct NoBoundary : error {
  explicit NoBoundary(const std::string& m) : error("NoBoundary: " + m) {}
};
struct NotTopCell : error {
  explicit NotTopCell(const std::string& m) : error("NotTopCell: " + m) {}
};
struct NoCells : error {
  explicit NoCells(const std::string& m) : error("NoCells: " + m) {}
};
struct ArityMismatch : error {
  explicit ArityMismatch(const std::string& m) : error("ArityMismatch: " + m) {}
};
struct DimMismatch : error {
  explicit DimMismatch(const std::string& m) : error("DimMismatch: " + m) {}
};
struct FuelExhausted : error {
  explicit FuelExhausted(const std::string& m) : error("FuelExhausted: " + m) {}
};
struct NotCollapsing : error {
  explicit NotCollapsing(const std::string& m) : error("NotCollapsing: " + m) {}
};
struct UnsupportedType : error {
  explicit UnsupportedType(const std::string& m) : error("UnsupportedType: " + m) {}
};
struct ParseError : error {
  explicit ParseError(const std::string& m) : error("ParseError: " + m) {}
};

}  // namespace omegatt

#endif
