#pragma once

#include <array>
#include <optional>
#include <vector>

#include "schub/neighbors.hpp"
#include "schub/pair.hpp"

namespace schub {

/// Projection of a pair onto the rows that participate in some reflection
/// of R. Rows I (increasing), columns J = x(I) = w(I) (increasing), and
/// the weakly monotone projections {0..n} -> {0..m} for rows and columns.
struct Reduction {
  PermPair source;
  PermPair target;  // degree m = #I; degree 0 when R is empty
  std::vector<int> rows;
  std::vector<int> cols;
  std::array<std::uint8_t, kMaxDegree + 1> row_proj;
  std::array<std::uint8_t, kMaxDegree + 1> col_proj;

  bool is_identity() const {
    return static_cast<int>(rows.size()) == source.degree();
  }
};

Reduction reduce(const PermPair& pair);

/// True iff every row index participates in some reflection of R.
bool is_reduced(const PermPair& pair);

Point project_point(const Reduction& red, Point p);

/// t_{a,b} -> t_{proj(a),proj(b)} when the projections differ; nullopt
/// (identity marker) otherwise.
std::optional<Transposition> project_transposition(const Reduction& red,
                                                   const Transposition& t);

/// t = t_{a,b} in R is minimal if every t_{a',b'} in R has a' = a or
/// b' = b. Throws if t is not in R.
bool is_t_minimal(const PermPair& pair, const Transposition& t);

/// Critical points all of whose leveling reflections are minimal.
/// Defined for smooth pairs; throws otherwise.
PointSet crit_red(const PermPair& pair);

/// Shape parameters of the minimal reduced family: rows i1 < i2, columns
/// j1 < j2 with (i2 - i1) + (j2 - j1) >= n (equivalently the branch
/// boundary condition n + i1 - j2 <= i2 - j1).
struct MinimalShape {
  int n;
  int i1, i2;
  int j1, j2;

  friend constexpr auto operator<=>(const MinimalShape&,
                                    const MinimalShape&) = default;
};

bool shape_admissible(const MinimalShape& s);
std::vector<MinimalShape> admissible_shapes(int n);

/// The explicit pair attached to a shape (the classification of reduced
/// minimal pairs): w by a 5-branch formula, x by a 7-branch formula.
/// Throws on inadmissible shapes.
PermPair minimal_shape_pair(const MinimalShape& s);

/// The injection R_{pair_t'} -> R \ {t'} given by conjugation when the
/// conjugate stays in R and by the identity otherwise. Returned as the
/// explicit (t, phi(t)) list sorted by t. Throws if t' is not in R.
std::vector<std::pair<Transposition, Transposition>> gasharov_map(
    const PermPair& pair, const Transposition& tprime);

}  // namespace schub
