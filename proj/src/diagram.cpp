#include "schub/diagram.hpp"

#include <sstream>

#include "schub/reduction.hpp"

namespace schub {

std::string render_diagram(const PermPair& pair) {
  int n = pair.degree();
  PointSet marks(n);
  if (pair.is_smooth()) marks = crit_red(pair);

  int headw = n >= 10 ? 2 : 1;
  std::ostringstream out;
  auto pad = [&](int v, int width) {
    std::string t = std::to_string(v);
    return std::string(width > static_cast<int>(t.size())
                           ? width - t.size()
                           : 0,
                       ' ') +
           t;
  };

  out << std::string(headw, ' ') << " |";
  for (int j = 1; j <= n; ++j) out << ' ' << pad(j, 2);
  out << '\n';
  out << std::string(headw, '-') << "-+" << std::string(3 * n, '-') << '\n';

  for (int i = 1; i <= n; ++i) {
    out << pad(i, headw) << " |";
    for (int j = 1; j <= n; ++j) {
      bool wdot = pair.w()(i) == j;
      bool xdot = pair.x()(i) == j;
      char glyph = wdot ? (xdot ? 'B' : 'O') : (xdot ? 'X' : ' ');
      if (marks.contains({i, j})) glyph = 'C';
      int r = pair.rank_pair().at(i, j);
      char bg = r == 0 ? '.' : r == 1 ? '+' : '#';
      out << ' ' << glyph << bg;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace schub
