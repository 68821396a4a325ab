#pragma once

#include <string>

#include "schub/pair.hpp"

namespace schub {

/// Text diagram of a pair over the n x n grid, byte-deterministic.
///
/// Each cell is two characters: a glyph and a background class.
///   glyph: 'X' graph point of x only, 'O' of w only, 'B' of both,
///          ' ' neither; 'C' overrides at crit_red points (smooth pairs).
///   background: '.' rk_pair = 0, '+' rk_pair = 1, '#' rk_pair >= 2.
std::string render_diagram(const PermPair& pair);

}  // namespace schub
