#pragma once

#include <string>
#include <vector>

#include "schub/pair.hpp"

namespace schub {

/// Directional neighbor data at p = (i,j), down/right flavor:
///   side   = (i,j') with j' the least level-set column strictly right of j
///            in row i,
///   corner = (i',j') with i' the farthest row at or below i keeping the
///            corner in the level set with diff_w(p, corner) = 0,
///   target = (i',j).
/// The up/left flavor mirrors all three. Total on the restricted square
/// (the frame is always in the level set).
struct NeighborFrame {
  Point p;
  Point side;
  Point target;
  Point corner;
};

NeighborFrame next_down(const PermPair& pair, Point p);
NeighborFrame next_up(const PermPair& pair, Point p);

// The P/Q conditions. All take p with rk_pair(p) > 0 and throw otherwise.

/// rk_pair drops at the down target; equivalently diff_x(p, corner) > 0.
bool prop_down(const PermPair& pair, Point p);
bool prop_up(const PermPair& pair, Point p);

bool q_down(const PermPair& pair, Point p);  // prop_down(p) or prop_up(target)
bool q_up(const PermPair& pair, Point p);
bool q_cond(const PermPair& pair, Point p);  // q_down or q_up

/// Coordinatewise shift data at p in the level-set complement:
///   rd = (next level-set row below in column j, next level-set column
///         right in row i) > p, and lu the mirror < p. All four corners of
///   (p,rd) and (p,lu) lie in the level set.
struct ShiftFrame {
  Point p;
  Point rd;
  Point lu;
};

ShiftFrame shift_frame(const PermPair& pair, Point p);

/// diff_x(p, rd) = 1; equivalently rk_pair(p) = 1, rd in the level set and
/// diff_w(p, rd) = 0.
bool strong_prop_right(const PermPair& pair, Point p);
bool strong_prop_left(const PermPair& pair, Point p);

/// Points leveled by a single mutation: union over t in R of
/// (level set of pair_t) minus (level set of pair). Every member has
/// rk_pair = 1.
PointSet critical_set(const PermPair& pair);

/// {t in R : p is in the level set of pair_t}.
std::vector<Transposition> r_set_at(const PermPair& pair, Point p);

struct PointViolation {
  Point p;
  std::string clause;
};

/// For a smooth pair, checks q_cond at every point of the level-set
/// complement; returns the violations (empty on pass). Uses a per-pair
/// memo of neighbor frames. Throws on non-smooth input.
std::vector<PointViolation> check_prop_main(const PermPair& pair);

/// For a smooth pair, checks at every critical point:
///   (1) strong_prop_right or strong_prop_left,
///   (2) diff_w(p, rd) = 0 implies strong_prop_right,
///   (3) diff_w(p, lu) = 0 implies strong_prop_left.
std::vector<PointViolation> check_prop_main1(const PermPair& pair);

}  // namespace schub
