#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library routine it is checking.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "fpa/lie_basis.hpp"
#include "fpa/poisson_poly.hpp"
#include "fpa/text.hpp"

namespace oracle {

using fpa::Rational;
using Words = std::map<std::string, Rational>;

inline fpa::PoissonPoly P(const std::string& s, int n = 2) { return fpa::parse_expr(s, n); }

// Lyndon words by definition: strictly smaller than every proper rotation.
inline std::size_t lyndon_count_brute(int n, int len) {
  std::size_t count = 0;
  std::vector<int> w(len, 0);
  while (true) {
    std::string s(w.begin(), w.end());
    bool ok = true;
    for (int r = 1; r < len && ok; ++r) {
      std::string rot = s.substr(r) + s.substr(0, r);
      if (!(s < rot)) ok = false;
    }
    if (ok) ++count;
    int i = len - 1;
    while (i >= 0 && w[i] == n - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return count;
}

inline int mobius(int k) {
  int result = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      result = -result;
    }
  }
  if (k > 1) result = -result;
  return result;
}

// (1/d) sum_{e | d} mu(e) n^{d/e}
inline long long witt(int n, int d) {
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    long long p = 1;
    for (int i = 0; i < d / e; ++i) p *= n;
    total += mobius(e) * p;
  }
  return total / d;
}

inline void add(Words& a, const Words& b, const Rational& c) {
  for (const auto& [w, x] : b) {
    Rational& slot = a[w];
    slot += c * x;
    if (sgn(slot) == 0) a.erase(w);
  }
}

inline Words times(const Words& a, const Words& b) {
  Words out;
  for (const auto& [u, x] : a) {
    for (const auto& [v, y] : b) add(out, Words{{u + v, x * y}}, Rational(1));
  }
  return out;
}

inline Words commutator(const Words& a, const Words& b) {
  Words out = times(a, b);
  add(out, times(b, a), Rational(-1));
  return out;
}

// Walks the bracket tree directly.
inline Words expand(fpa::LieMonomial m) {
  if (m.is_generator()) return {{std::string(1, static_cast<char>('a' + m.generator_index() - 1)), Rational(1)}};
  return commutator(expand(m.left()), expand(m.right()));
}

inline Words expand(const fpa::LieElement& e) {
  Words out;
  for (const auto& [m, c] : e.terms()) add(out, expand(m), c);
  return out;
}

// Rank over Q by plain elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
