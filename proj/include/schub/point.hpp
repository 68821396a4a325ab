#pragma once

#include <bitset>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace schub {

inline constexpr int kMaxDegree = 16;

/// Lattice point (i,j) of the framed square {0..n} x {0..n}.
/// Row i, column j; the permutation graph point for row i is (i, w(i)).
struct Point {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// Componentwise order on points. Note that lt_cw is strict in *both*
// coordinates; it is not the strict order subordinate to leq_cw.
constexpr bool leq_cw(Point p, Point q) { return p.i <= q.i && p.j <= q.j; }
constexpr bool lt_cw(Point p, Point q) { return p.i < q.i && p.j < q.j; }
constexpr bool comparable_cw(Point p, Point q) {
  return lt_cw(p, q) || lt_cw(q, p);
}

constexpr Point upended(Point p, int n) { return {n - p.i, n - p.j}; }
constexpr Point inverted(Point p) { return {p.j, p.i}; }

constexpr bool in_framed_square(Point p, int n) {
  return 0 <= p.i && p.i <= n && 0 <= p.j && p.j <= n;
}
constexpr bool in_restricted_square(Point p, int n) {
  return 1 <= p.i && p.i <= n - 1 && 1 <= p.j && p.j <= n - 1;
}

std::string to_string(Point p);

/// Set of points of a fixed framed square, stored as a bitset.
class PointSet {
 public:
  PointSet() : n_(0) {}
  explicit PointSet(int n);

  static PointSet full_square(int n);

  int degree() const { return n_; }
  bool contains(Point p) const { return bits_[index(p)]; }
  void insert(Point p) { bits_.set(index(p)); }
  void erase(Point p) { bits_.reset(index(p)); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains_all(const PointSet& other) const {
    return (other.bits_ & ~bits_).none();
  }

  PointSet& operator|=(const PointSet& other) {
    bits_ |= other.bits_;
    return *this;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  /// Points in row-major order.
  std::vector<Point> points() const;

  std::string str() const;

 private:
  std::size_t index(Point p) const {
    return static_cast<std::size_t>(p.i) * (n_ + 1) + p.j;
  }

  int n_;
  std::bitset<(kMaxDegree + 1) * (kMaxDegree + 1)> bits_;
};

}  // namespace schub
