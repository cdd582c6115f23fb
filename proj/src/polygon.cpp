#include "hopfcert/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfcert {

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign(cross);
}

bool point_on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orientation(a, b, p) != 0) return false;
  Rational xlo = a.x < b.x ? a.x : b.x, xhi = a.x < b.x ? b.x : a.x;
  Rational ylo = a.y < b.y ? a.y : b.y, yhi = a.y < b.y ? b.y : a.y;
  return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && point_on_segment(c, a, b)) return true;
  if (o2 == 0 && point_on_segment(d, a, b)) return true;
  if (o3 == 0 && point_on_segment(a, c, d)) return true;
  if (o4 == 0 && point_on_segment(b, c, d)) return true;
  return false;
}

namespace {

Rational twice_signed_area(const std::vector<Point2>& v) {
  Rational acc(0);
  for (size_t i = 0; i < v.size(); ++i) {
    const Point2& p = v[i];
    const Point2& q = v[(i + 1) % v.size()];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc;
}

}  // namespace

PolygonDisk::PolygonDisk(std::vector<Point2> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (size_t i = 0; i < v_.size(); ++i)
    if (v_[i] == v_[(i + 1) % v_.size()])
      throw std::invalid_argument("polygon has a repeated vertex");
  // simplicity: non-adjacent edges must not meet
  size_t n = v_.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(v_[i], v_[(i + 1) % n], v_[j], v_[(j + 1) % n]))
        throw std::invalid_argument("polygon is self-intersecting");
    }
  }
  Rational area2 = twice_signed_area(v_);
  if (area2 == 0) throw std::invalid_argument("degenerate polygon");
  if (area2 < 0) std::reverse(v_.begin(), v_.end());
}

PointLocation PolygonDisk::locate(const Point2& p) const {
  size_t n = v_.size();
  for (size_t i = 0; i < n; ++i)
    if (point_on_segment(p, v_[i], v_[(i + 1) % n])) return PointLocation::boundary;
  // crossing number against upward/downward edges
  int winding = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point2& a = v_[i];
    const Point2& b = v_[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && orientation(a, b, p) > 0) ++winding;
    } else {
      if (b.y <= p.y && orientation(a, b, p) < 0) --winding;
    }
  }
  return winding != 0 ? PointLocation::inside : PointLocation::outside;
}

RationalInterval PolygonDisk::alpha_hull() const {
  Rational lo = v_[0].x, hi = v_[0].x;
  for (const auto& p : v_) {
    if (p.x < lo) lo = p.x;
    if (p.x > hi) hi = p.x;
  }
  return {lo, hi};
}

RationalInterval PolygonDisk::beta_hull() const {
  Rational lo = v_[0].y, hi = v_[0].y;
  for (const auto& p : v_) {
    if (p.y < lo) lo = p.y;
    if (p.y > hi) hi = p.y;
  }
  return {lo, hi};
}

bool PolygonDisk::intersects_box_boundary(const Box2& box) const {
  Point2 c1{box.alpha.lo, box.beta.lo}, c2{box.alpha.hi, box.beta.lo};
  Point2 c3{box.alpha.hi, box.beta.hi}, c4{box.alpha.lo, box.beta.hi};
  const Point2 corners[4] = {c1, c2, c3, c4};
  size_t n = v_.size();
  for (size_t i = 0; i < n; ++i)
    for (int e = 0; e < 4; ++e)
      if (segments_intersect(v_[i], v_[(i + 1) % n], corners[e], corners[(e + 1) % 4]))
        return true;
  return false;
}

bool PolygonDisk::contains_box(const Box2& box) const {
  if (intersects_box_boundary(box)) return false;
  Point2 c1{box.alpha.lo, box.beta.lo}, c2{box.alpha.hi, box.beta.lo};
  Point2 c3{box.alpha.hi, box.beta.hi}, c4{box.alpha.lo, box.beta.hi};
  for (const Point2& c : {c1, c2, c3, c4})
    if (locate(c) == PointLocation::outside) return false;
  // no polygon vertex may sit strictly inside the box either
  for (const auto& p : v_)
    if (box.alpha.lo < p.x && p.x < box.alpha.hi && box.beta.lo < p.y &&
        p.y < box.beta.hi)
      return false;
  return true;
}

QPoly PolygonDisk::Edge::alpha_of_t() const {
  return QPoly(std::vector<Rational>{a.x, b.x - a.x});
}

QPoly PolygonDisk::Edge::beta_of_t() const {
  return QPoly(std::vector<Rational>{a.y, b.y - a.y});
}

std::vector<PolygonDisk::Edge> PolygonDisk::edges() const {
  std::vector<Edge> out;
  out.reserve(v_.size());
  for (size_t i = 0; i < v_.size(); ++i)
    out.push_back({v_[i], v_[(i + 1) % v_.size()]});
  return out;
}

bool polygons_disjoint(const PolygonDisk& a, const PolygonDisk& b) {
  for (const auto& ea : a.edges())
    for (const auto& eb : b.edges())
      if (segments_intersect(ea.a, ea.b, eb.a, eb.b)) return false;
  if (a.locate(b.vertices()[0]) != PointLocation::outside) return false;
  if (b.locate(a.vertices()[0]) != PointLocation::outside) return false;
  return true;
}

}  // namespace hopfcert
