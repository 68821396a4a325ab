#include "schub/point.hpp"

#include <stdexcept>

namespace schub {

std::string to_string(Point p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

PointSet::PointSet(int n) : n_(n) {
  if (n < 0 || n > kMaxDegree)
    throw std::invalid_argument("point set degree out of range");
}

PointSet PointSet::full_square(int n) {
  PointSet s(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) s.insert({i, j});
  return s;
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (int i = 0; i <= n_; ++i)
    for (int j = 0; j <= n_; ++j)
      if (bits_[static_cast<std::size_t>(i) * (n_ + 1) + j])
        out.push_back({i, j});
  return out;
}

std::string PointSet::str() const {
  std::string s = "{";
  bool first = true;
  for (Point p : points()) {
    if (!first) s += ",";
    s += to_string(p);
    first = false;
  }
  return s + "}";
}

}  // namespace schub
