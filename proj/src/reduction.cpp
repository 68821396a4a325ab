#include "schub/reduction.hpp"

#include <algorithm>

namespace schub {

Reduction reduce(const PermPair& pair) {
  int n = pair.degree();
  Reduction red;
  red.source = pair;

  std::array<bool, kMaxDegree + 1> in_rows{};
  for (const Transposition& t : pair.r_set()) {
    in_rows[t.a] = true;
    in_rows[t.b] = true;
  }
  for (int i = 1; i <= n; ++i)
    if (in_rows[i]) red.rows.push_back(i);

  // Outside the participating rows the graphs of w and x agree, so the
  // column set J = x(I) = w(I).
  for (int i : red.rows) red.cols.push_back(pair.x()(i));
  std::sort(red.cols.begin(), red.cols.end());

  red.row_proj.fill(0);
  red.col_proj.fill(0);
  for (int i = 0; i <= n; ++i) {
    red.row_proj[i] = static_cast<std::uint8_t>(
        std::upper_bound(red.rows.begin(), red.rows.end(), i) -
        red.rows.begin());
    red.col_proj[i] = static_cast<std::uint8_t>(
        std::upper_bound(red.cols.begin(), red.cols.end(), i) -
        red.cols.begin());
  }

  int m = static_cast<int>(red.rows.size());
  if (m == 0) {
    red.target = PermPair::make(Permutation(), Permutation());
  } else {
    std::vector<int> wbar(m), xbar(m);
    for (int k = 0; k < m; ++k) {
      wbar[k] = red.col_proj[pair.w()(red.rows[k])];
      xbar[k] = red.col_proj[pair.x()(red.rows[k])];
    }
    red.target = PermPair::make(Permutation::from_oneline(wbar),
                                Permutation::from_oneline(xbar));
  }
  return red;
}

bool is_reduced(const PermPair& pair) {
  std::array<bool, kMaxDegree + 1> in_rows{};
  for (const Transposition& t : pair.r_set()) {
    in_rows[t.a] = true;
    in_rows[t.b] = true;
  }
  for (int i = 1; i <= pair.degree(); ++i)
    if (!in_rows[i]) return false;
  return true;
}

Point project_point(const Reduction& red, Point p) {
  return {red.row_proj[p.i], red.col_proj[p.j]};
}

std::optional<Transposition> project_transposition(const Reduction& red,
                                                   const Transposition& t) {
  int a = red.row_proj[t.a], b = red.row_proj[t.b];
  if (a == b) return std::nullopt;
  return Transposition(a, b);
}

bool is_t_minimal(const PermPair& pair, const Transposition& t) {
  if (!pair.in_r_set(t))
    throw std::domain_error("transposition not in R of the pair");
  for (const Transposition& s : pair.r_set())
    if (s.a != t.a && s.b != t.b) return false;
  return true;
}

PointSet crit_red(const PermPair& pair) {
  if (!pair.is_smooth()) throw std::domain_error("pair is not smooth");
  PointSet out(pair.degree());
  for (Point p : critical_set(pair).points()) {
    bool all_minimal = true;
    for (const Transposition& t : r_set_at(pair, p))
      if (!is_t_minimal(pair, t)) {
        all_minimal = false;
        break;
      }
    if (all_minimal) out.insert(p);
  }
  return out;
}

bool shape_admissible(const MinimalShape& s) {
  return 1 <= s.i1 && s.i1 < s.i2 && s.i2 <= s.n && 1 <= s.j1 && s.j1 < s.j2 &&
         s.j2 <= s.n && (s.i2 - s.i1) + (s.j2 - s.j1) >= s.n;
}

std::vector<MinimalShape> admissible_shapes(int n) {
  std::vector<MinimalShape> out;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2) {
          MinimalShape s{n, i1, i2, j1, j2};
          if (shape_admissible(s)) out.push_back(s);
        }
  return out;
}

PermPair minimal_shape_pair(const MinimalShape& s) {
  if (!shape_admissible(s))
    throw std::invalid_argument("inadmissible minimal shape");
  int n = s.n, i1 = s.i1, i2 = s.i2, j1 = s.j1, j2 = s.j2;
  std::vector<int> w(n), x(n);
  for (int i = 1; i <= n; ++i) {
    int& wi = w[i - 1];
    if (i < i1)
      wi = j2 + 1 - i;
    else if (i < n + i1 - j2)
      wi = n + i1 - i;
    else if (i <= i2 - j1 + 1)
      wi = n + 1 - i;
    else if (i <= i2)
      wi = i2 + 1 - i;
    else
      wi = n + j1 - i;

    int& xi = x[i - 1];
    if (i < i1)
      xi = j2 - i;
    else if (i == i1)
      xi = j1;
    else if (i <= n + i1 - j2)
      xi = n + i1 + 1 - i;
    else if (i <= i2 - j1)
      xi = n + 1 - i;
    else if (i < i2)
      xi = i2 - i;
    else if (i == i2)
      xi = j2;
    else
      xi = n + j1 + 1 - i;
  }
  return PermPair::make(Permutation::from_oneline(w),
                        Permutation::from_oneline(x));
}

std::vector<std::pair<Transposition, Transposition>> gasharov_map(
    const PermPair& pair, const Transposition& tprime) {
  if (!pair.in_r_set(tprime))
    throw std::domain_error("transposition not in R of the pair");
  PermPair mut = pair.mutated(tprime);
  std::vector<std::pair<Transposition, Transposition>> out;
  for (const Transposition& t : mut.r_set()) {
    Transposition conj = t.conjugated_by(tprime);
    out.emplace_back(t, pair.in_r_set(conj) ? conj : t);
  }
  return out;
}

}  // namespace schub
