#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace sqc {

/// Physical point in micrometers.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
};

double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point a);
double distance(Point a, Point b);

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  friend bool operator==(const Rect&, const Rect&) = default;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  Rect inflated(double d) const { return {x0 - d, y0 - d, x1 + d, y1 + d}; }
  Rect unite(const Rect& o) const;
  /// Interiors intersect (touching edges do not count).
  bool overlaps(const Rect& o) const { return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1; }
};

/// Simple polygon, vertices in order, closing edge implicit (first vertex is
/// not repeated).
using Polygon = std::vector<Point>;
using Polyline = std::vector<Point>;

Rect bounding_box(std::span<const Point> pts);
Polygon rect_polygon(const Rect& r);
Polygon translated(const Polygon& poly, Point offset);
double signed_area(const Polygon& poly);

/// Even-odd test; points on the boundary count as inside.
bool point_in_polygon(Point p, const Polygon& poly);
double point_segment_distance(Point p, Point a, Point b);
double segment_distance(Point a, Point b, Point c, Point d);
double point_polygon_distance(Point p, const Polygon& poly);  // 0 when inside
double polygon_distance(const Polygon& a, const Polygon& b);  // 0 when they touch or overlap
double polyline_distance(const Polyline& a, const Polyline& b);
double polyline_polygon_distance(const Polyline& line, const Polygon& poly);

/// Intersection of two closed segments: nothing, a point, or an overlap
/// interval (collinear case).
struct SegmentIntersection {
  enum class Kind { None, Point, Overlap } kind = Kind::None;
  Point p0;  // the point, or overlap start
  Point p1;  // overlap end (== p0 for Point)
};
SegmentIntersection intersect_segments(Point a, Point b, Point c, Point d);

/// True when no two non-adjacent edges touch and adjacent edges only share
/// their common vertex.
bool is_simple_polygon(const Polygon& poly);

/// Annular sector band of the given width around a centerline arc.
/// Angles in radians, counter-clockwise from start to end when end > start.
Polygon arc_band(Point center, double radius, double width, double start_angle, double end_angle,
                 int segments);

/// Replace every interior corner of `line` with a circular arc of `radius`
/// polygonized at `segments_per_quarter` per 90 degrees. The radius is clamped
/// per corner to half the shorter adjacent segment.
Polyline round_corners(const Polyline& line, double radius, int segments_per_quarter = 16);

/// Remove consecutive duplicates and collinear interior vertices.
Polyline simplify_polyline(const Polyline& line);

}  // namespace sqc
