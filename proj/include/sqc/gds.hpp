#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sqc/layout.hpp"

namespace sqc {

namespace gds {
// record types
inline constexpr std::uint8_t HEADER = 0x00, BGNLIB = 0x01, LIBNAME = 0x02, UNITS = 0x03, ENDLIB = 0x04,
                              BGNSTR = 0x05, STRNAME = 0x06, ENDSTR = 0x07, BOUNDARY = 0x08, PATH = 0x09,
                              SREF = 0x0A, LAYER = 0x0D, DATATYPE = 0x0E, WIDTH = 0x0F, XY = 0x10, ENDEL = 0x11,
                              SNAME = 0x12, PATHTYPE = 0x21;
// data types
inline constexpr std::uint8_t NODATA = 0, BITARRAY = 1, INT16 = 2, INT32 = 3, REAL4 = 4, REAL8 = 5, ASCII = 6;

/// 8-byte excess-64 base-16 real, as a big-endian word.
std::uint64_t encode_real8(double v);
double decode_real8(std::uint64_t bits);
}  // namespace gds

struct GdsRecord {
  std::uint8_t type = 0;
  std::uint8_t dtype = 0;
  std::vector<std::uint8_t> data;
  friend bool operator==(const GdsRecord&, const GdsRecord&) = default;
};

using GdsXY = std::array<std::int32_t, 2>;

/// Boundary, path and sref elements in their canonical record order are
/// decoded; anything else is kept as raw records and re-emitted verbatim.
struct GdsElement {
  enum class Kind { Boundary, Path, Sref, Opaque };
  Kind kind = Kind::Boundary;
  std::int16_t layer = 0;
  std::int16_t datatype = 0;
  std::int16_t pathtype = 0;
  std::int32_t width = 0;
  std::string sname;
  std::vector<GdsXY> xy;
  std::vector<GdsRecord> raw;  // Opaque only
  friend bool operator==(const GdsElement&, const GdsElement&) = default;
};

struct GdsStructure {
  std::string name;
  std::array<std::int16_t, 12> dates{};
  std::vector<GdsElement> elements;
  friend bool operator==(const GdsStructure&, const GdsStructure&) = default;
};

struct GdsLibrary {
  std::int16_t version = 600;
  std::array<std::int16_t, 12> dates{};
  std::string name;
  std::uint64_t user_unit_bits = 0;  // raw UNITS words, kept bit-exact
  std::uint64_t db_unit_bits = 0;
  std::vector<GdsRecord> before_units;  // between LIBNAME and UNITS
  std::vector<GdsRecord> after_units;   // between UNITS and the first structure
  std::vector<GdsStructure> structures;
  friend bool operator==(const GdsLibrary&, const GdsLibrary&) = default;

  double user_unit() const { return gds::decode_real8(user_unit_bits); }
  double db_unit() const { return gds::decode_real8(db_unit_bits); }
  const GdsStructure* find(const std::string& name) const;
};

struct GdsOptions {
  std::string library = "SQC";
  std::string top = "TOP";
  bool timestamps = false;  // real dates instead of the fixed epoch
};

std::vector<std::uint8_t> encode_records(const std::vector<GdsRecord>& records);
/// Splits a stream into records. Throws TruncatedRecord / OddLength / ParseError
/// with the byte offset of the offending record.
std::vector<GdsRecord> decode_records(const std::vector<std::uint8_t>& bytes);

/// Cells per distinct component geometry plus a top cell holding SREFs,
/// routed paths and pin pads. Coordinates are round(um * 1000).
GdsLibrary to_gds_library(const ChipLayout& layout, const GdsOptions& opt = {});
std::vector<std::uint8_t> write_gds(const GdsLibrary& lib);
std::vector<std::uint8_t> write_gds(const ChipLayout& layout, const GdsOptions& opt = {});
GdsLibrary read_gds(const std::vector<std::uint8_t>& bytes);

/// Flattened geometry of a library (SREFs expanded from the top cell) for
/// previews. Paths come back as RoutedPath with width in um.
ChipLayout flatten_gds(const GdsLibrary& lib, const std::string& top = "");

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace sqc
