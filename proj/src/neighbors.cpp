#include "schub/neighbors.hpp"

#include <array>
#include <optional>

namespace schub {

namespace {

void require_restricted(const PermPair& pair, Point p) {
  if (!in_restricted_square(p, pair.degree()))
    throw std::domain_error("point outside the restricted square");
}

void require_complement(const PermPair& pair, Point p) {
  require_restricted(pair, p);
  if (pair.rank_pair().at(p) == 0)
    throw std::domain_error("point lies in the level set");
}

NeighborFrame scan_down(const PermPair& pair, Point p) {
  const RankTable& pi = pair.rank_pair();
  const RankTable& rkw = pair.rank_w();
  int n = pair.degree();
  int jp = p.j + 1;
  while (pi.at(p.i, jp) != 0) ++jp;  // (i,n) is always in the level set
  // The diff_w condition is monotone in l, so the scan can stop at the
  // first failure; the level-set condition is not, so track the last hit.
  int ip = p.i;
  for (int l = p.i; l <= n; ++l) {
    if (diff(rkw, p, {l, jp}) != 0) break;
    if (pi.at(l, jp) == 0) ip = l;
  }
  return {p, {p.i, jp}, {ip, p.j}, {ip, jp}};
}

NeighborFrame scan_up(const PermPair& pair, Point p) {
  const RankTable& pi = pair.rank_pair();
  const RankTable& rkw = pair.rank_w();
  int jp = p.j - 1;
  while (pi.at(p.i, jp) != 0) --jp;
  int ip = p.i;
  for (int l = p.i; l >= 0; --l) {
    if (diff(rkw, p, {l, jp}) != 0) break;
    if (pi.at(l, jp) == 0) ip = l;
  }
  return {p, {p.i, jp}, {ip, p.j}, {ip, jp}};
}

bool drop_at(const PermPair& pair, Point p, Point target) {
  return pair.rank_pair().at(target) < pair.rank_pair().at(p);
}

// Frame memo over the restricted square; the verification sweeps revisit
// points through the four-headed q condition.
class NeighborScanner {
 public:
  explicit NeighborScanner(const PermPair& pair) : pair_(pair) {}

  const NeighborFrame& down(Point p) {
    auto& slot = down_[idx(p)];
    if (!slot) slot = scan_down(pair_, p);
    return *slot;
  }
  const NeighborFrame& up(Point p) {
    auto& slot = up_[idx(p)];
    if (!slot) slot = scan_up(pair_, p);
    return *slot;
  }

  bool prop_down(Point p) { return drop_at(pair_, p, down(p).target); }
  bool prop_up(Point p) { return drop_at(pair_, p, up(p).target); }

  bool q_down(Point p) {
    if (prop_down(p)) return true;
    return prop_up(down(p).target);
  }
  bool q_up(Point p) {
    if (prop_up(p)) return true;
    return prop_down(up(p).target);
  }
  bool q_cond(Point p) { return q_down(p) || q_up(p); }

 private:
  std::size_t idx(Point p) const {
    return static_cast<std::size_t>(p.i) * (pair_.degree() + 1) + p.j;
  }

  const PermPair& pair_;
  std::array<std::optional<NeighborFrame>, (kMaxDegree + 1) * (kMaxDegree + 1)>
      down_, up_;
};

}  // namespace

NeighborFrame next_down(const PermPair& pair, Point p) {
  require_restricted(pair, p);
  return scan_down(pair, p);
}

NeighborFrame next_up(const PermPair& pair, Point p) {
  require_restricted(pair, p);
  return scan_up(pair, p);
}

bool prop_down(const PermPair& pair, Point p) {
  require_complement(pair, p);
  return drop_at(pair, p, scan_down(pair, p).target);
}

bool prop_up(const PermPair& pair, Point p) {
  require_complement(pair, p);
  return drop_at(pair, p, scan_up(pair, p).target);
}

bool q_down(const PermPair& pair, Point p) {
  require_complement(pair, p);
  NeighborFrame f = scan_down(pair, p);
  if (drop_at(pair, p, f.target)) return true;
  // No drop leaves the target in the complement with the same rank.
  return drop_at(pair, f.target, scan_up(pair, f.target).target);
}

bool q_up(const PermPair& pair, Point p) {
  require_complement(pair, p);
  NeighborFrame f = scan_up(pair, p);
  if (drop_at(pair, p, f.target)) return true;
  return drop_at(pair, f.target, scan_down(pair, f.target).target);
}

bool q_cond(const PermPair& pair, Point p) {
  return q_down(pair, p) || q_up(pair, p);
}

ShiftFrame shift_frame(const PermPair& pair, Point p) {
  require_complement(pair, p);
  const RankTable& pi = pair.rank_pair();
  int rd_i = p.i + 1, rd_j = p.j + 1;
  while (pi.at(rd_i, p.j) != 0) ++rd_i;
  while (pi.at(p.i, rd_j) != 0) ++rd_j;
  int lu_i = p.i - 1, lu_j = p.j - 1;
  while (pi.at(lu_i, p.j) != 0) --lu_i;
  while (pi.at(p.i, lu_j) != 0) --lu_j;
  return {p, {rd_i, rd_j}, {lu_i, lu_j}};
}

bool strong_prop_right(const PermPair& pair, Point p) {
  return diff(pair.rank_x(), p, shift_frame(pair, p).rd) == 1;
}

bool strong_prop_left(const PermPair& pair, Point p) {
  return diff(pair.rank_x(), p, shift_frame(pair, p).lu) == 1;
}

PointSet critical_set(const PermPair& pair) {
  int n = pair.degree();
  PointSet crit(n);
  const RankTable& pi = pair.rank_pair();
  const Permutation& x = pair.x();
  for (const Transposition& t : pair.r_set()) {
    int ja = x(t.a), jb = x(t.b);
    for (int i = t.a; i < t.b; ++i)
      for (int j = ja; j < jb; ++j)
        if (pi.at(i, j) == 1) crit.insert({i, j});
  }
  return crit;
}

std::vector<Transposition> r_set_at(const PermPair& pair, Point p) {
  std::vector<Transposition> out;
  const Permutation& x = pair.x();
  int r = pair.rank_pair().at(p);
  for (const Transposition& t : pair.r_set()) {
    bool in_box = t.a <= p.i && p.i < t.b && x(t.a) <= p.j && p.j < x(t.b);
    if (r - (in_box ? 1 : 0) == 0) out.push_back(t);
  }
  return out;
}

std::vector<PointViolation> check_prop_main(const PermPair& pair) {
  if (!pair.is_smooth()) throw std::domain_error("pair is not smooth");
  std::vector<PointViolation> out;
  NeighborScanner scan(pair);
  int n = pair.degree();
  const RankTable& pi = pair.rank_pair();
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (pi.at(i, j) > 0 && !scan.q_cond({i, j}))
        out.push_back({{i, j}, "q_cond"});
  return out;
}

std::vector<PointViolation> check_prop_main1(const PermPair& pair) {
  if (!pair.is_smooth()) throw std::domain_error("pair is not smooth");
  std::vector<PointViolation> out;
  const RankTable& rkw = pair.rank_w();
  for (Point p : critical_set(pair).points()) {
    ShiftFrame f = shift_frame(pair, p);
    bool right = diff(pair.rank_x(), p, f.rd) == 1;
    bool left = diff(pair.rank_x(), p, f.lu) == 1;
    if (!right && !left) out.push_back({p, "prp"});
    if (diff(rkw, p, f.rd) == 0 && !right) out.push_back({p, "rshift-forced"});
    if (diff(rkw, p, f.lu) == 0 && !left) out.push_back({p, "lshift-forced"});
  }
  return out;
}

}  // namespace schub
