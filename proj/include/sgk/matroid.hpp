#pragma once

// The alternating oriented matroid C^{m,k+1}: covectors are sign patterns
// of real polynomials of degree <= k at m increasing points.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgk/graphs.hpp"

namespace sgk {

inline constexpr int kMaxSignLength = 64;
inline constexpr int kMaxEnumerationLength = 20;

/// Element of {-1,0,+1}^m as two disjoint bit planes.
struct SignVector {
  int m = 0;
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;

  SignVector() = default;
  SignVector(int length, std::uint64_t p, std::uint64_t n) : m(length), plus(p), minus(n) {
    if (m < 1 || m > kMaxSignLength) throw std::invalid_argument("SignVector: length out of range");
    if ((p & n) != 0 || ((p | n) & ~low_mask(m)) != 0) throw std::invalid_argument("SignVector: malformed planes");
  }

  static SignVector from_ints(const std::vector<int>& e) {
    std::uint64_t p = 0, n = 0;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] > 0) p |= std::uint64_t{1} << j;
      else if (e[j] < 0) n |= std::uint64_t{1} << j;
    }
    return {static_cast<int>(e.size()), p, n};
  }

  /// Parses "+-0" strings; commas, spaces and parentheses are ignored.
  static SignVector parse(std::string_view text) {
    std::vector<int> e;
    for (char c : text) {
      if (c == '+') e.push_back(1);
      else if (c == '-') e.push_back(-1);
      else if (c == '0') e.push_back(0);
      else if (c != ',' && c != ' ' && c != '(' && c != ')') throw std::invalid_argument("SignVector: bad character in '" + std::string(text) + "'");
    }
    return from_ints(e);
  }

  int at(int j) const { return ((plus >> j) & 1U) ? 1 : ((minus >> j) & 1U) ? -1 : 0; }
  void set(int j, int v) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    plus &= ~bit;
    minus &= ~bit;
    if (v > 0) plus |= bit;
    else if (v < 0) minus |= bit;
  }

  std::uint64_t support() const { return plus | minus; }
  std::uint64_t zeros() const { return ~support() & low_mask(m); }
  int zero_count() const { return std::popcount(zeros()); }
  bool is_zero() const { return support() == 0; }

  std::vector<int> entries() const {
    std::vector<int> out(m);
    for (int j = 0; j < m; ++j) out[j] = at(j);
    return out;
  }

  std::string to_string() const {
    std::string s(m, '0');
    for (int j = 0; j < m; ++j) s[j] = at(j) > 0 ? '+' : at(j) < 0 ? '-' : '0';
    return s;
  }

  SignVector operator-() const { return {m, minus, plus}; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

  /// Lexicographic in entries with - < 0 < +.
  friend bool operator<(const SignVector& a, const SignVector& b) {
    if (a.m != b.m) return a.m < b.m;
    for (int j = 0; j < a.m; ++j)
      if (a.at(j) != b.at(j)) return a.at(j) < b.at(j);
    return false;
  }
};

namespace detail {

// Adjustment between consecutive nonzero entries separated by `gap` zeros.
inline int pair_adjustment(int a, int b, int gap) {
  const bool even = gap % 2 == 0;
  return (a != b && even) || (a == b && !even) ? 1 : 0;
}

}  // namespace detail

/// Least degree of a real polynomial whose signs at m increasing points
/// are s.
inline int minimal_degree(const SignVector& s) {
  if (s.is_zero()) throw std::invalid_argument("minimal_degree: zero vector");
  int deg = s.zero_count();
  int last = 0;
  int gap = 0;
  for (int j = 0; j < s.m; ++j) {
    const int v = s.at(j);
    if (v == 0) {
      ++gap;
      continue;
    }
    if (last != 0) deg += detail::pair_adjustment(last, v, gap);
    last = v;
    gap = 0;
  }
  return deg;
}

inline bool is_covector(const SignVector& s, int k) { return !s.is_zero() && minimal_degree(s) <= k; }

/// Number of sign changes in the sequence of nonzero entries.
inline int sign_changes(const SignVector& s) {
  int last = 0;
  int changes = 0;
  for (int j = 0; j < s.m; ++j) {
    const int v = s.at(j);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

/// True iff the nonzero entries contain an alternating subsequence of
/// length k+2.
inline bool is_vector(const SignVector& s, int k) {
  if (s.is_zero()) throw std::invalid_argument("is_vector: zero vector");
  return sign_changes(s) >= k + 1;
}

/// Coordinatewise s_j = 0 or s_j = t_j.
inline bool covector_leq(const SignVector& s, const SignVector& t) {
  if (s.m != t.m) throw std::invalid_argument("covector_leq: length mismatch");
  return (s.plus & ~t.plus) == 0 && (s.minus & ~t.minus) == 0;
}

/// Covectors of C^{m,k+1} in lexicographic (- < 0 < +) order.
inline std::vector<SignVector> enumerate_covectors(int m, int k) {
  if (k < 0 || m <= k) throw std::invalid_argument("enumerate_covectors: need m > k >= 0");
  if (m > kMaxEnumerationLength) throw TooLarge("enumerate_covectors: length too large", static_cast<std::uint64_t>(m));
  std::vector<SignVector> out;
  SignVector cur(m, 0, 0);
  std::function<void(int, int, int, int)> rec = [&](int j, int deg, int last, int gap) {
    if (deg > k) return;
    if (j == m) {
      if (last != 0) out.push_back(cur);
      return;
    }
    for (int v : {-1, 0, 1}) {
      cur.set(j, v);
      if (v == 0)
        rec(j + 1, deg + 1, last, gap + 1);
      else
        rec(j + 1, deg + (last != 0 ? detail::pair_adjustment(last, v, gap) : 0), v, 0);
    }
    cur.set(j, 0);
  };
  rec(0, 0, 0, 0);
  return out;
}

/// Covectors with exactly k zeros; there are 2 C(m,k) of them.
inline std::vector<SignVector> enumerate_cocircuits(int m, int k) {
  std::vector<SignVector> out;
  for (const auto& s : enumerate_covectors(m, k))
    if (s.zero_count() == k) out.push_back(s);
  return out;
}

/// Entry of the extension with s_{j+m} = (-1)^m s_j.
inline int extended_entry(const SignVector& s, long j) {
  const long m = s.m;
  const long r = ((j % m) + m) % m;
  const long q = (j - r) / m;
  const int v = s.at(static_cast<int>(r));
  return (m % 2 != 0 && q % 2 != 0) ? -v : v;
}

/// Right action of sigma^a rho^b: (s.sigma^a)_j = (-1)^a s~_{j-a},
/// (s.sigma^a rho)_j = (-1)^a s~_{-j-a}. No covector check.
inline SignVector act_sign(const SignVector& s, const DihedralElement& g) {
  if (s.m != g.m) throw std::invalid_argument("act_sign: modulus mismatch");
  SignVector out(s.m, 0, 0);
  const int a = g.shift;
  for (int j = 0; j < s.m; ++j) {
    const long src = g.flip ? -static_cast<long>(j) - a : static_cast<long>(j) - a;
    const int v = extended_entry(s, src);
    out.set(j, a % 2 != 0 ? -v : v);
  }
  return out;
}

/// The action on covectors of C^{m,k+1}; throws on non-covector input.
inline SignVector dihedral_act_sign(const SignVector& s, const DihedralElement& g, int k) {
  if (!is_covector(s, k)) throw std::invalid_argument("dihedral_act_sign: not a covector: " + s.to_string());
  return act_sign(s, g);
}

/// Sign vector with some slots left free for completion.
struct PartialSignVector {
  SignVector values;
  std::uint64_t free_mask = 0;

  static PartialSignVector parse(std::string_view text) {
    std::string fixed;
    std::uint64_t mask = 0;
    int j = 0;
    for (char c : text) {
      if (c == '*' || c == '?') {
        mask |= std::uint64_t{1} << j;
        fixed.push_back('0');
        ++j;
      } else if (c == '+' || c == '-' || c == '0') {
        fixed.push_back(c);
        ++j;
      }
    }
    return {SignVector::parse(fixed), mask};
  }
};

/// Least minimal_degree over nonzero completions, or INT_MAX if only the
/// zero vector is available.
inline int min_completion_degree(const PartialSignVector& p) {
  constexpr int inf = std::numeric_limits<int>::max() / 2;
  // state 0: no nonzero yet; 1 + 2*(sign<0) + parity: last sign and gap parity
  std::array<int, 5> cur{0, inf, inf, inf, inf};
  const int m = p.values.m;
  for (int j = 0; j < m; ++j) {
    std::array<int, 5> nxt{inf, inf, inf, inf, inf};
    const bool is_free = (p.free_mask >> j) & 1U;
    const int fixed = p.values.at(j);
    for (int st = 0; st < 5; ++st) {
      if (cur[st] >= inf) continue;
      for (int v : {-1, 0, 1}) {
        if (!is_free && v != fixed) continue;
        int to = 0;
        int cost = cur[st];
        if (v == 0) {
          cost += 1;
          to = st == 0 ? 0 : (st - 1) / 2 * 2 + 1 + (1 - (st - 1) % 2);
        } else {
          if (st != 0) {
            const int last = (st - 1) / 2 == 0 ? 1 : -1;
            cost += detail::pair_adjustment(last, v, (st - 1) % 2);
          }
          to = 1 + (v < 0 ? 2 : 0);
        }
        nxt[to] = std::min(nxt[to], cost);
      }
    }
    cur = nxt;
  }
  int best = inf;
  for (int st = 1; st < 5; ++st) best = std::min(best, cur[st]);
  return best >= inf ? std::numeric_limits<int>::max() : best;
}

/// True iff some completion of the free slots is a covector of C^{m,k+1}.
inline bool covector_extension_feasible(const PartialSignVector& p, int k) {
  return min_completion_degree(p) <= k;
}

}  // namespace sgk
