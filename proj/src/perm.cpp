#include "schub/perm.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace schub {

namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxDegree)
    throw std::invalid_argument("degree out of range [0, " +
                                std::to_string(kMaxDegree) + "]");
}

}  // namespace

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::array<int, kMaxDegree> vals{};
  for (int i = 0; i < n; ++i) vals[i] = i + 1;
  if (n == 0) return Permutation();
  return from_oneline(std::span<const int>(vals.data(), n));
}

Permutation Permutation::longest(int n) {
  check_degree(n);
  std::array<int, kMaxDegree> vals{};
  for (int i = 0; i < n; ++i) vals[i] = n - i;
  if (n == 0) return Permutation();
  return from_oneline(std::span<const int>(vals.data(), n));
}

Permutation Permutation::from_oneline(std::span<const int> values) {
  int n = static_cast<int>(values.size());
  if (n == 0) throw std::invalid_argument("one-line word must be nonempty");
  check_degree(n);
  std::array<bool, kMaxDegree + 1> seen{};
  Permutation w;
  w.n_ = n;
  for (int k = 0; k < n; ++k) {
    int v = values[k];
    if (v < 1 || v > n)
      throw std::invalid_argument("entry " + std::to_string(v) +
                                  " outside 1.." + std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("duplicate entry " + std::to_string(v) +
                                  ": not a bijection");
    seen[v] = true;
    w.v_[k] = static_cast<std::uint8_t>(v);
  }
  return w;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  if (text.find(',') != std::string_view::npos) {
    std::string buf(text);
    std::istringstream in(buf);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation entry '" + tok + "'");
      }
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size())
        throw std::invalid_argument("bad permutation entry '" + tok + "'");
      vals.push_back(v);
    }
  } else {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '1' || c > '9')
        throw std::invalid_argument(
            "compact form accepts digits 1-9 only; use commas for larger "
            "degrees");
      vals.push_back(c - '0');
    }
  }
  if (vals.empty()) throw std::invalid_argument("empty permutation");
  return from_oneline(vals);
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= n_; ++i)
    if (v_[i - 1] == value) return i;
  throw std::invalid_argument("value not in 1..n");
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (v_[i] > v_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 1; i <= n_; ++i) r.v_[v_[i - 1] - 1] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::upend() const {
  // (w0 w w0)(i) = n+1 - w(n+1-i)
  Permutation r;
  r.n_ = n_;
  for (int i = 1; i <= n_; ++i)
    r.v_[i - 1] = static_cast<std::uint8_t>(n_ + 1 - v_[n_ - i]);
  return r;
}

Permutation Permutation::swapped(int a, int b) const {
  if (a < 1 || b > n_ || a >= b)
    throw std::invalid_argument("transposition out of range for degree " +
                                std::to_string(n_));
  Permutation r = *this;
  std::swap(r.v_[a - 1], r.v_[b - 1]);
  return r;
}

bool Permutation::contains_pattern(const Permutation& pattern) const {
  int k = pattern.degree();
  if (k > n_) return false;
  if (k == 0) return true;
  // Backtracking over positions; patterns here stay tiny.
  std::array<int, kMaxDegree> chosen{};
  auto extend = [&](auto&& self, int depth, int start) -> bool {
    if (depth == k) return true;
    for (int pos = start; pos <= n_ - (k - depth - 1); ++pos) {
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        bool want = pattern.v_[d] < pattern.v_[depth];
        bool have = v_[chosen[d] - 1] < v_[pos - 1];
        if (want != have) ok = false;
      }
      if (!ok) continue;
      chosen[depth] = pos;
      if (self(self, depth + 1, pos + 1)) return true;
    }
    return false;
  };
  return extend(extend, 0, 1);
}

std::string Permutation::str() const {
  if (n_ == 0) return "";
  std::string s;
  if (n_ <= 9) {
    for (int k = 0; k < n_; ++k) s += static_cast<char>('0' + v_[k]);
  } else {
    for (int k = 0; k < n_; ++k) {
      if (k) s += ',';
      s += std::to_string(static_cast<int>(v_[k]));
    }
  }
  return s;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int k = 0; k < n_; ++k) c = (c << 4) | (v_[k] - 1);
  return c;
}

Transposition::Transposition(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {
  if (i == j || i < 1 || j < 1)
    throw std::invalid_argument("transposition needs distinct positive indices");
}

Transposition Transposition::conjugated_by(const Permutation& x) const {
  return Transposition(x(a), x(b));
}

Transposition Transposition::upended(int n) const {
  return Transposition(n + 1 - b, n + 1 - a);
}

Transposition Transposition::conjugated_by(const Transposition& t) const {
  auto map = [&](int i) { return i == t.a ? t.b : i == t.b ? t.a : i; };
  return Transposition(map(a), map(b));
}

std::string Transposition::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  out.reserve(n * (n - 1) / 2);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  return out;
}

const std::vector<Permutation>& symmetric_group(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("symmetric_group supports degrees 1..8");
  static std::mutex mu;
  static std::vector<std::vector<Permutation>> cache(9);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot.empty()) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    do {
      slot.push_back(Permutation::from_oneline(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
  }
  return slot;
}

}  // namespace schub
