#pragma once

#include <vector>

#include "hopfcert/interval.hpp"
#include "hopfcert/poly.hpp"

namespace hopfcert {

struct Point2 {
  Rational x;
  Rational y;
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

// sign of the cross product (b - a) x (c - a)
int orientation(const Point2& a, const Point2& b, const Point2& c);

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b);

// closed-segment intersection test, including touching and collinear overlap
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d);

enum class PointLocation { inside, boundary, outside };

// Simple closed polygon with rational vertices in the (alpha, beta) plane,
// playing the role of one disk D_k. Kept in counterclockwise orientation.
class PolygonDisk {
 public:
  explicit PolygonDisk(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return v_; }
  size_t size() const { return v_.size(); }

  PointLocation locate(const Point2& p) const;

  RationalInterval alpha_hull() const;
  RationalInterval beta_hull() const;

  // every point of the closed box lies in the closed polygon
  bool contains_box(const Box2& box) const;
  bool intersects_box_boundary(const Box2& box) const;

  struct Edge {
    Point2 a;
    Point2 b;
    // the edge parameterized by t in [0, 1] as polynomials in t
    QPoly alpha_of_t() const;
    QPoly beta_of_t() const;
  };
  std::vector<Edge> edges() const;

 private:
  std::vector<Point2> v_;
};

bool polygons_disjoint(const PolygonDisk& a, const PolygonDisk& b);

}  // namespace hopfcert
