#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schub/point.hpp"

namespace schub {

/// Permutation of {1..n} in one-line notation, one-based positions and
/// values. Cheap value type; degree is capped at kMaxDegree.
///
/// The default-constructed permutation has degree 0 (the empty product),
/// which shows up as the reduction of a pair (w,w).
class Permutation {
 public:
  Permutation() : n_(0) { v_.fill(0); }

  static Permutation identity(int n);
  static Permutation longest(int n);  // w0: i -> n+1-i

  /// Builds from one-line values; rejects anything that is not a bijection
  /// of {1..n}.
  static Permutation from_oneline(std::span<const int> values);

  /// Accepts a compact digit string ("35142") for n <= 9, or
  /// comma-separated values ("10,9,8,...") otherwise.
  static Permutation parse(std::string_view text);

  int degree() const { return n_; }

  /// w(i), one-based.
  int operator()(int i) const { return v_[i - 1]; }

  /// w^{-1}(value), one-based.
  int position_of(int value) const;

  Point graph_point(int i) const { return {i, v_[i - 1]}; }

  /// Number of inversions.
  int length() const;

  Permutation inverse() const;

  /// w0 * w * w0.
  Permutation upend() const;

  /// Right multiplication by the transposition of positions a < b,
  /// i.e. the one-line word with entries a and b swapped.
  Permutation swapped(int a, int b) const;

  /// True iff some subsequence of the one-line word is order-isomorphic
  /// to the pattern.
  bool contains_pattern(const Permutation& pattern) const;

  std::string str() const;

  /// Order-preserving 64-bit encoding (4 bits per entry).
  std::uint64_t code() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    for (int k = 0; k < a.n_; ++k)
      if (a.v_[k] != b.v_[k]) return a.v_[k] <=> b.v_[k];
    return std::strong_ordering::equal;
  }

 private:
  int n_;
  std::array<std::uint8_t, kMaxDegree> v_;
};

/// Transposition t_{a,b}, normalized to a < b on construction.
struct Transposition {
  int a;
  int b;

  Transposition(int i, int j);

  /// t^x = x t x^{-1}; swaps x(a) and x(b).
  Transposition conjugated_by(const Permutation& x) const;

  /// t^* = w0 t w0 with respect to degree n.
  Transposition upended(int n) const;

  /// Conjugation by another transposition, t^{t'} = t' t t'.
  Transposition conjugated_by(const Transposition& t) const;

  std::string str() const;

  friend constexpr auto operator<=>(const Transposition&,
                                    const Transposition&) = default;
};

std::vector<Transposition> all_transpositions(int n);

/// All of S_n in lexicographic one-line order; memoized, n <= 8.
const std::vector<Permutation>& symmetric_group(int n);

}  // namespace schub
