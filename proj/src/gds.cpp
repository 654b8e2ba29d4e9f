#include "sqc/gds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <set>

#include "sqc/error.hpp"

namespace sqc {

namespace gds {

std::uint64_t encode_real8(double v) {
  if (v == 0.0 || !std::isfinite(v)) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArguments, "cannot encode a non-finite real");
    return 0;
  }
  const std::uint64_t sign = v < 0 ? 1ULL << 63 : 0;
  int x;
  const double f = std::frexp(std::abs(v), &x);  // |v| = f * 2^x, f in [0.5, 1)
  // Smallest e with 16^e >= 2^x keeps the mantissa in [1/16, 1).
  const int e = x >= 0 ? (x + 3) / 4 : -((-x) / 4);
  const double m = std::ldexp(f, x - 4 * e);
  const int biased = e + 64;
  if (biased < 0 || biased > 127) fail(ErrorCode::InvalidArguments, "real out of GDSII range");
  const auto mant = static_cast<std::uint64_t>(std::ldexp(m, 56));
  return sign | (static_cast<std::uint64_t>(biased) << 56) | (mant & ((1ULL << 56) - 1));
}

double decode_real8(std::uint64_t bits) {
  const bool neg = bits >> 63;
  const int e = static_cast<int>((bits >> 56) & 0x7F) - 64;
  const std::uint64_t mant = bits & ((1ULL << 56) - 1);
  const double v = std::ldexp(static_cast<double>(mant), 4 * e - 56);
  return neg ? -v : v;
}

}  // namespace gds

namespace {

using Bytes = std::vector<std::uint8_t>;

GdsRecord rec(std::uint8_t type, std::uint8_t dtype = gds::NODATA) { return {type, dtype, {}}; }

GdsRecord rec16(std::uint8_t type, const std::vector<std::int16_t>& v) {
  GdsRecord r{type, gds::INT16, {}};
  for (auto x : v) {
    const auto u = static_cast<std::uint16_t>(x);
    r.data.push_back(static_cast<std::uint8_t>(u >> 8));
    r.data.push_back(static_cast<std::uint8_t>(u));
  }
  return r;
}

GdsRecord rec32(std::uint8_t type, const std::vector<std::int32_t>& v) {
  GdsRecord r{type, gds::INT32, {}};
  for (auto x : v) {
    const auto u = static_cast<std::uint32_t>(x);
    for (int s = 24; s >= 0; s -= 8) r.data.push_back(static_cast<std::uint8_t>(u >> s));
  }
  return r;
}

GdsRecord rec_ascii(std::uint8_t type, const std::string& s) {
  GdsRecord r{type, gds::ASCII, Bytes(s.begin(), s.end())};
  if (r.data.size() % 2) r.data.push_back(0);
  return r;
}

GdsRecord rec_real8(std::uint8_t type, const std::vector<std::uint64_t>& v) {
  GdsRecord r{type, gds::REAL8, {}};
  for (auto x : v)
    for (int s = 56; s >= 0; s -= 8) r.data.push_back(static_cast<std::uint8_t>(x >> s));
  return r;
}

std::vector<std::int16_t> get16(const GdsRecord& r) {
  std::vector<std::int16_t> out;
  for (std::size_t i = 0; i + 1 < r.data.size(); i += 2)
    out.push_back(static_cast<std::int16_t>(static_cast<std::uint16_t>(r.data[i] << 8 | r.data[i + 1])));
  return out;
}

std::vector<std::int32_t> get32(const GdsRecord& r) {
  std::vector<std::int32_t> out;
  for (std::size_t i = 0; i + 3 < r.data.size(); i += 4) {
    std::uint32_t u = 0;
    for (int k = 0; k < 4; ++k) u = u << 8 | r.data[i + k];
    out.push_back(static_cast<std::int32_t>(u));
  }
  return out;
}

std::uint64_t get64(const GdsRecord& r, std::size_t at) {
  std::uint64_t u = 0;
  for (int k = 0; k < 8; ++k) u = u << 8 | r.data[at + k];
  return u;
}

std::string get_ascii(const GdsRecord& r) {
  std::string s(r.data.begin(), r.data.end());
  while (!s.empty() && s.back() == '\0') s.pop_back();
  return s;
}

/// Expected data type and payload granularity of the record types we decode.
bool known_type(std::uint8_t type, std::uint8_t& dtype) {
  switch (type) {
    case gds::HEADER:
    case gds::BGNLIB:
    case gds::BGNSTR:
    case gds::LAYER:
    case gds::DATATYPE:
    case gds::PATHTYPE: dtype = gds::INT16; return true;
    case gds::LIBNAME:
    case gds::STRNAME:
    case gds::SNAME: dtype = gds::ASCII; return true;
    case gds::UNITS: dtype = gds::REAL8; return true;
    case gds::WIDTH:
    case gds::XY: dtype = gds::INT32; return true;
    case gds::ENDLIB:
    case gds::ENDSTR:
    case gds::BOUNDARY:
    case gds::PATH:
    case gds::SREF:
    case gds::ENDEL: dtype = gds::NODATA; return true;
    default: return false;
  }
}

std::size_t unit_size(std::uint8_t dtype) {
  switch (dtype) {
    case gds::INT16: return 2;
    case gds::INT32:
    case gds::REAL4: return 4;
    case gds::REAL8: return 8;
    default: return 1;
  }
}

struct Located {
  GdsRecord r;
  std::size_t offset;
};

std::vector<Located> split(const Bytes& b) {
  std::vector<Located> out;
  std::size_t off = 0;
  for (;;) {
    if (off == b.size()) throw ParseFailure(ErrorCode::TruncatedRecord, off, "", "stream ends before ENDLIB");
    if (b.size() - off < 4) throw ParseFailure(ErrorCode::TruncatedRecord, off, "", "record header cut short");
    const std::size_t len = static_cast<std::size_t>(b[off]) << 8 | b[off + 1];
    if (len % 2) throw ParseFailure(ErrorCode::OddLength, off, "", "record length " + std::to_string(len) + " is odd");
    if (len < 4) throw ParseFailure(ErrorCode::ParseError, off, "", "record length " + std::to_string(len) + " < 4");
    if (off + len > b.size())
      throw ParseFailure(ErrorCode::TruncatedRecord, off, "",
                         "record needs " + std::to_string(len) + " bytes, " + std::to_string(b.size() - off) + " left");
    GdsRecord r{b[off + 2], b[off + 3], Bytes(b.begin() + off + 4, b.begin() + off + len)};
    std::uint8_t want;
    if (known_type(r.type, want) && r.dtype != want)
      throw ParseFailure(ErrorCode::ParseError, off, "",
                         "record type " + std::to_string(r.type) + " has data type " + std::to_string(r.dtype));
    if (r.data.size() % unit_size(r.dtype))
      throw ParseFailure(ErrorCode::ParseError, off, "", "payload size does not match the data type");
    const bool end = r.type == gds::ENDLIB;
    out.push_back({std::move(r), off});
    off += len;
    if (end) return out;  // trailing block padding is ignored
  }
}

bool is_element_start(std::uint8_t t) {
  // boundary, path, sref, aref, text, node, box
  return t == gds::BOUNDARY || t == gds::PATH || t == gds::SREF || t == 0x0B || t == 0x0C || t == 0x15 || t == 0x2D;
}

/// Decode the canonical record sequence of an element, or keep it raw.
GdsElement decode_element(const std::vector<GdsRecord>& rs) {
  GdsElement e;
  auto types = [&](std::initializer_list<std::uint8_t> want) {
    if (rs.size() != want.size()) return false;
    std::size_t i = 0;
    for (auto t : want)
      if (rs[i++].type != t) return false;
    return true;
  };
  auto xy_of = [](const GdsRecord& r) {
    std::vector<GdsXY> pts;
    const auto v = get32(r);
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) pts.push_back({v[i], v[i + 1]});
    return pts;
  };
  auto one16 = [](const GdsRecord& r) { return r.data.size() == 2; };
  if (types({gds::BOUNDARY, gds::LAYER, gds::DATATYPE, gds::XY, gds::ENDEL}) && rs[0].data.empty() &&
      one16(rs[1]) && one16(rs[2]) && rs[3].data.size() % 8 == 0 && !rs[3].data.empty() && rs[4].data.empty()) {
    e.kind = GdsElement::Kind::Boundary;
    e.layer = get16(rs[1])[0];
    e.datatype = get16(rs[2])[0];
    e.xy = xy_of(rs[3]);
    return e;
  }
  if (types({gds::PATH, gds::LAYER, gds::DATATYPE, gds::PATHTYPE, gds::WIDTH, gds::XY, gds::ENDEL}) &&
      rs[0].data.empty() && one16(rs[1]) && one16(rs[2]) && one16(rs[3]) && rs[4].data.size() == 4 &&
      rs[5].data.size() % 8 == 0 && !rs[5].data.empty() && rs[6].data.empty()) {
    e.kind = GdsElement::Kind::Path;
    e.layer = get16(rs[1])[0];
    e.datatype = get16(rs[2])[0];
    e.pathtype = get16(rs[3])[0];
    e.width = get32(rs[4])[0];
    e.xy = xy_of(rs[5]);
    return e;
  }
  if (types({gds::SREF, gds::SNAME, gds::XY, gds::ENDEL}) && rs[0].data.empty() && rs[2].data.size() == 8 &&
      rs[3].data.empty() && rec_ascii(gds::SNAME, get_ascii(rs[1])) == rs[1]) {
    e.kind = GdsElement::Kind::Sref;
    e.sname = get_ascii(rs[1]);
    e.xy = xy_of(rs[2]);
    return e;
  }
  e.kind = GdsElement::Kind::Opaque;
  e.raw = rs;
  return e;
}

void emit_element(const GdsElement& e, std::vector<GdsRecord>& out) {
  std::vector<std::int32_t> flat;
  for (const auto& p : e.xy) {
    flat.push_back(p[0]);
    flat.push_back(p[1]);
  }
  switch (e.kind) {
    case GdsElement::Kind::Boundary:
      out.push_back(rec(gds::BOUNDARY));
      out.push_back(rec16(gds::LAYER, {e.layer}));
      out.push_back(rec16(gds::DATATYPE, {e.datatype}));
      out.push_back(rec32(gds::XY, flat));
      out.push_back(rec(gds::ENDEL));
      break;
    case GdsElement::Kind::Path:
      out.push_back(rec(gds::PATH));
      out.push_back(rec16(gds::LAYER, {e.layer}));
      out.push_back(rec16(gds::DATATYPE, {e.datatype}));
      out.push_back(rec16(gds::PATHTYPE, {e.pathtype}));
      out.push_back(rec32(gds::WIDTH, {e.width}));
      out.push_back(rec32(gds::XY, flat));
      out.push_back(rec(gds::ENDEL));
      break;
    case GdsElement::Kind::Sref:
      out.push_back(rec(gds::SREF));
      out.push_back(rec_ascii(gds::SNAME, e.sname));
      out.push_back(rec32(gds::XY, flat));
      out.push_back(rec(gds::ENDEL));
      break;
    case GdsElement::Kind::Opaque:
      out.insert(out.end(), e.raw.begin(), e.raw.end());
      break;
  }
}

std::int32_t quantize(double um) {
  const double nm = std::round(um * 1000.0);
  if (!(nm >= std::numeric_limits<std::int32_t>::min() && nm <= std::numeric_limits<std::int32_t>::max()))
    fail(ErrorCode::CoordinateOverflow, "coordinate " + std::to_string(um) + " um exceeds 32-bit database units");
  return static_cast<std::int32_t>(nm);
}

std::vector<GdsXY> quantize_ring(const Polygon& poly) {
  std::vector<GdsXY> out;
  for (const auto& p : poly) out.push_back({quantize(p.x), quantize(p.y)});
  if (!out.empty()) out.push_back(out.front());
  return out;
}

std::array<std::int16_t, 12> stamp(bool real) {
  std::array<std::int16_t, 12> d{1970, 1, 1, 0, 0, 0, 1970, 1, 1, 0, 0, 0};
  if (real) {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    const std::array<std::int16_t, 6> now{static_cast<std::int16_t>(tm.tm_year + 1900),
                                          static_cast<std::int16_t>(tm.tm_mon + 1),
                                          static_cast<std::int16_t>(tm.tm_mday),
                                          static_cast<std::int16_t>(tm.tm_hour),
                                          static_cast<std::int16_t>(tm.tm_min),
                                          static_cast<std::int16_t>(tm.tm_sec)};
    std::copy(now.begin(), now.end(), d.begin());
    std::copy(now.begin(), now.end(), d.begin() + 6);
  }
  return d;
}

std::string cell_base(ComponentKind k) {
  std::string s = to_string(k);
  for (auto& c : s) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

const GdsStructure* GdsLibrary::find(const std::string& n) const {
  for (const auto& s : structures)
    if (s.name == n) return &s;
  return nullptr;
}

std::vector<std::uint8_t> encode_records(const std::vector<GdsRecord>& records) {
  Bytes out;
  for (const auto& r : records) {
    if (r.data.size() % 2) fail(ErrorCode::OddLength, "record payload of odd size");
    const std::size_t len = 4 + r.data.size();
    if (len > 0xFFFF) fail(ErrorCode::InvalidArguments, "record longer than 65535 bytes");
    out.push_back(static_cast<std::uint8_t>(len >> 8));
    out.push_back(static_cast<std::uint8_t>(len));
    out.push_back(r.type);
    out.push_back(r.dtype);
    out.insert(out.end(), r.data.begin(), r.data.end());
  }
  return out;
}

std::vector<GdsRecord> decode_records(const std::vector<std::uint8_t>& bytes) {
  std::vector<GdsRecord> out;
  for (auto& l : split(bytes)) out.push_back(std::move(l.r));
  return out;
}

GdsLibrary to_gds_library(const ChipLayout& layout, const GdsOptions& opt) {
  GdsLibrary lib;
  lib.dates = stamp(opt.timestamps);
  lib.name = opt.library;
  lib.user_unit_bits = gds::encode_real8(1e-3);
  lib.db_unit_bits = gds::encode_real8(1e-9);

  // One cell per distinct (kind, geometry).
  std::vector<std::pair<ComponentKind, std::vector<GdsElement>>> cells;
  std::map<ComponentKind, int> per_kind;
  std::vector<std::string> cell_of(layout.components.size());
  for (std::size_t i = 0; i < layout.components.size(); ++i) {
    const auto& c = layout.components[i];
    std::vector<GdsElement> els;
    for (const auto& s : c.footprint) {
      if (s.polygon.size() < 3) continue;
      GdsElement e;
      e.kind = GdsElement::Kind::Boundary;
      e.layer = static_cast<std::int16_t>(s.layer);
      e.xy = quantize_ring(s.polygon);
      els.push_back(std::move(e));
    }
    std::size_t k = 0;
    while (k < cells.size() && !(cells[k].first == c.kind && cells[k].second == els)) ++k;
    if (k == cells.size()) {
      cells.emplace_back(c.kind, std::move(els));
      GdsStructure st;
      st.name = cell_base(c.kind) + "_" + std::to_string(per_kind[c.kind]++);
      st.dates = lib.dates;
      st.elements = cells.back().second;
      lib.structures.push_back(std::move(st));
    }
    cell_of[i] = lib.structures[k].name;
  }

  GdsStructure top;
  top.name = opt.top;
  top.dates = lib.dates;
  for (std::size_t i = 0; i < layout.components.size(); ++i) {
    GdsElement e;
    e.kind = GdsElement::Kind::Sref;
    e.sname = cell_of[i];
    e.xy = {{quantize(layout.components[i].origin.x), quantize(layout.components[i].origin.y)}};
    top.elements.push_back(std::move(e));
  }
  for (const auto& p : layout.paths) {
    GdsElement e;
    e.kind = GdsElement::Kind::Path;
    e.layer = static_cast<std::int16_t>(p.layer);
    e.width = quantize(p.width);
    for (const auto& q : p.centerline()) {
      const GdsXY v{quantize(q.x), quantize(q.y)};
      if (e.xy.empty() || e.xy.back() != v) e.xy.push_back(v);
    }
    if (e.xy.size() < 2) continue;
    top.elements.push_back(std::move(e));
  }
  for (const auto& pin : layout.pins) {
    GdsElement e;
    e.kind = GdsElement::Kind::Boundary;
    e.layer = static_cast<std::int16_t>(pin.layer);
    e.xy = quantize_ring(rect_polygon(pin.rect()));
    top.elements.push_back(std::move(e));
  }
  lib.structures.push_back(std::move(top));
  return lib;
}

std::vector<std::uint8_t> write_gds(const GdsLibrary& lib) {
  std::vector<GdsRecord> rs;
  rs.push_back(rec16(gds::HEADER, {lib.version}));
  rs.push_back(rec16(gds::BGNLIB, std::vector<std::int16_t>(lib.dates.begin(), lib.dates.end())));
  rs.push_back(rec_ascii(gds::LIBNAME, lib.name));
  rs.insert(rs.end(), lib.before_units.begin(), lib.before_units.end());
  rs.push_back(rec_real8(gds::UNITS, {lib.user_unit_bits, lib.db_unit_bits}));
  rs.insert(rs.end(), lib.after_units.begin(), lib.after_units.end());
  for (const auto& s : lib.structures) {
    rs.push_back(rec16(gds::BGNSTR, std::vector<std::int16_t>(s.dates.begin(), s.dates.end())));
    rs.push_back(rec_ascii(gds::STRNAME, s.name));
    for (const auto& e : s.elements) emit_element(e, rs);
    rs.push_back(rec(gds::ENDSTR));
  }
  rs.push_back(rec(gds::ENDLIB));
  return encode_records(rs);
}

std::vector<std::uint8_t> write_gds(const ChipLayout& layout, const GdsOptions& opt) {
  return write_gds(to_gds_library(layout, opt));
}

GdsLibrary read_gds(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 4 || bytes[2] != gds::HEADER)
    throw ParseFailure(ErrorCode::BadMagic, 0, "", "stream does not start with a HEADER record");
  const auto rs = split(bytes);
  if (rs.empty() || rs[0].r.type != gds::HEADER || rs[0].r.data.size() != 2)
    throw ParseFailure(ErrorCode::BadMagic, 0, "", "stream does not start with a HEADER record");
  GdsLibrary lib;
  lib.version = get16(rs[0].r)[0];
  std::size_t i = 1;
  auto expect = [&](std::uint8_t type, const char* what, std::size_t size = 0) -> const GdsRecord& {
    if (i >= rs.size() || rs[i].r.type != type || (size && rs[i].r.data.size() != size))
      throw ParseFailure(ErrorCode::ParseError, i < rs.size() ? rs[i].offset : bytes.size(), "",
                         std::string("expected ") + what);
    return rs[i++].r;
  };
  auto dates_of = [](const GdsRecord& r) {
    std::array<std::int16_t, 12> d{};
    const auto v = get16(r);
    std::copy(v.begin(), v.end(), d.begin());
    return d;
  };
  lib.dates = dates_of(expect(gds::BGNLIB, "BGNLIB", 24));
  lib.name = get_ascii(expect(gds::LIBNAME, "LIBNAME"));
  while (i < rs.size() && rs[i].r.type != gds::UNITS && rs[i].r.type != gds::BGNSTR && rs[i].r.type != gds::ENDLIB)
    lib.before_units.push_back(rs[i++].r);
  const GdsRecord& units = expect(gds::UNITS, "UNITS", 16);
  lib.user_unit_bits = get64(units, 0);
  lib.db_unit_bits = get64(units, 8);
  while (i < rs.size() && rs[i].r.type != gds::BGNSTR && rs[i].r.type != gds::ENDLIB)
    lib.after_units.push_back(rs[i++].r);

  while (i < rs.size() && rs[i].r.type == gds::BGNSTR) {
    GdsStructure s;
    s.dates = dates_of(expect(gds::BGNSTR, "BGNSTR", 24));
    s.name = get_ascii(expect(gds::STRNAME, "STRNAME"));
    for (;;) {
      if (i >= rs.size() || rs[i].r.type == gds::ENDLIB || rs[i].r.type == gds::BGNSTR)
        throw ParseFailure(ErrorCode::ParseError, i < rs.size() ? rs[i].offset : bytes.size(), "",
                           "structure '" + s.name + "' has no ENDSTR");
      if (rs[i].r.type == gds::ENDSTR) {
        ++i;
        break;
      }
      if (!is_element_start(rs[i].r.type)) {
        GdsElement e;
        e.kind = GdsElement::Kind::Opaque;
        e.raw = {rs[i++].r};
        s.elements.push_back(std::move(e));
        continue;
      }
      std::vector<GdsRecord> el;
      const std::size_t start = rs[i].offset;
      for (;;) {
        if (i >= rs.size() || rs[i].r.type == gds::ENDSTR || rs[i].r.type == gds::ENDLIB ||
            (!el.empty() && is_element_start(rs[i].r.type)))
          throw ParseFailure(ErrorCode::ParseError, start, "", "element without ENDEL");
        el.push_back(rs[i].r);
        if (rs[i++].r.type == gds::ENDEL) break;
      }
      s.elements.push_back(decode_element(el));
    }
    lib.structures.push_back(std::move(s));
  }
  if (i >= rs.size() || rs[i].r.type != gds::ENDLIB)
    throw ParseFailure(ErrorCode::ParseError, i < rs.size() ? rs[i].offset : bytes.size(), "",
                       "unexpected record between structures");
  return lib;
}

ChipLayout flatten_gds(const GdsLibrary& lib, const std::string& top_name) {
  const GdsStructure* top = nullptr;
  if (!top_name.empty()) {
    top = lib.find(top_name);
    if (!top) fail(ErrorCode::MissingSubEntity, "no structure '" + top_name + "'");
  } else {
    std::set<std::string> referenced;
    for (const auto& s : lib.structures)
      for (const auto& e : s.elements)
        if (e.kind == GdsElement::Kind::Sref) referenced.insert(e.sname);
    for (const auto& s : lib.structures)
      if (!referenced.count(s.name)) top = &s;
  }
  ChipLayout out;
  if (!top) return out;
  const double um = lib.user_unit() > 0 ? lib.user_unit() : 1e-3;
  auto pt = [&](const GdsXY& v, Point off) { return Point{v[0] * um + off.x, v[1] * um + off.y}; };
  Rect box{0, 0, 0, 0};
  auto grow = [&](Point p) {
    box.x1 = std::max(box.x1, p.x);
    box.y1 = std::max(box.y1, p.y);
  };

  int serial = 0;
  std::function<void(const GdsStructure&, Point, PlacedComponent*, int)> walk =
      [&](const GdsStructure& s, Point off, PlacedComponent* owner, int depth) {
        if (depth > 32) fail(ErrorCode::ParseError, "structure references nest too deeply");
        for (const auto& e : s.elements) {
          if (e.kind == GdsElement::Kind::Boundary && e.xy.size() >= 4) {
            Polygon poly;
            for (std::size_t k = 0; k + 1 < e.xy.size(); ++k) poly.push_back(pt(e.xy[k], off));
            for (const auto& p : poly) grow(owner ? p + owner->origin : p);
            if (owner) {
              owner->footprint.push_back({e.layer, poly});
            } else {
              PlacedComponent c;
              c.id = "B" + std::to_string(serial++);
              c.kind = ComponentKind::Pad;
              c.footprint.push_back({e.layer, poly});
              out.components.push_back(std::move(c));
            }
          } else if (e.kind == GdsElement::Kind::Path && e.xy.size() >= 2) {
            RoutedPath p;
            p.net = "path" + std::to_string(out.paths.size());
            p.layer = e.layer;
            p.width = e.width * um;
            const Point base = owner ? owner->origin + off : off;
            for (const auto& v : e.xy) p.spine.push_back(pt(v, base));
            for (const auto& q : p.spine) grow(q);
            out.paths.push_back(std::move(p));
          } else if (e.kind == GdsElement::Kind::Sref && !e.xy.empty()) {
            const GdsStructure* child = lib.find(e.sname);
            if (!child) continue;
            const Point at = pt(e.xy[0], off);
            if (owner) {
              walk(*child, at, owner, depth + 1);
              continue;
            }
            PlacedComponent c;
            c.id = e.sname + "#" + std::to_string(serial++);
            c.origin = at;
            std::string base = e.sname.substr(0, e.sname.rfind('_'));
            for (auto& ch : base) ch = ch == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            try {
              c.kind = component_kind_from_string(base);
            } catch (const Error&) {
              c.kind = ComponentKind::Pad;
            }
            walk(*child, {}, &c, depth + 1);
            out.components.push_back(std::move(c));
          }
        }
      };
  walk(*top, {}, nullptr, 0);
  out.width = std::ceil(box.x1);
  out.height = std::ceil(box.y1);
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::IoError, "short write to '" + path + "'");
}

}  // namespace sqc
