#pragma once

// Graded Z2 cohomology rings of C_m and D_{2m}, Stiefel-Whitney classes of
// the representation bundle, and the test-graph classification.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgk/geometry.hpp"
#include "sgk/graphs.hpp"

namespace sgk {

enum class RingCase { Odd, TwoMod4, ZeroMod4, Cyclic4 };

inline std::string to_string(RingCase c) {
  switch (c) {
    case RingCase::Odd: return "ODD";
    case RingCase::TwoMod4: return "TWO_MOD_4";
    case RingCase::ZeroMod4: return "ZERO_MOD_4";
    case RingCase::Cyclic4: return "CYCLIC_4";
  }
  return "?";
}

struct RingDescriptor {
  RingCase ring;
  std::vector<std::string> generators;
  std::vector<int> degrees;
  std::string relations;
};

/// Z2[alpha] (also H*(C_2)), Z2[alpha,beta], Z2[x,y,u]/(xy), Z2[x,u]/(x^2).
inline RingDescriptor describe(RingCase c) {
  switch (c) {
    case RingCase::Odd: return {c, {"α"}, {1}, ""};
    case RingCase::TwoMod4: return {c, {"α", "β"}, {1, 1}, ""};
    case RingCase::ZeroMod4: return {c, {"x", "y", "u"}, {1, 1, 2}, "xy"};
    case RingCase::Cyclic4: return {c, {"x", "u"}, {1, 2}, "x^2"};
  }
  throw std::invalid_argument("describe: unknown ring");
}

inline RingCase ring_case_for(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("ring_for: need n >= 1, k >= 0");
  const int m = 2 * n + k;
  if (m % 2 != 0) return RingCase::Odd;
  return m % 4 == 2 ? RingCase::TwoMod4 : RingCase::ZeroMod4;
}

inline RingDescriptor ring_for(int n, int k) { return describe(ring_case_for(n, k)); }

using Exponent = std::array<int, 3>;

inline constexpr int kDefaultMaxDegree = 64;

/// Element of a truncated graded ring; bucket d holds the monomials of
/// degree d present with coefficient 1.
class GradedPoly {
 public:
  GradedPoly(RingCase ring, int max_degree) : ring_(ring), max_degree_(max_degree), terms_(max_degree + 1) {
    if (max_degree < 0) throw std::invalid_argument("GradedPoly: negative degree bound");
  }

  static GradedPoly one(RingCase ring, int max_degree) {
    GradedPoly p(ring, max_degree);
    p.terms_[0].insert({0, 0, 0});
    return p;
  }

  /// A generator by index.
  static GradedPoly gen(RingCase ring, int index, int max_degree) {
    const auto d = describe(ring);
    if (index < 0 || index >= static_cast<int>(d.generators.size())) throw std::invalid_argument("GradedPoly: bad generator");
    GradedPoly p(ring, max_degree);
    Exponent e{0, 0, 0};
    e[index] = 1;
    p.toggle(e);
    return p;
  }

  static GradedPoly gen(RingCase ring, std::string_view name, int max_degree) {
    const auto d = describe(ring);
    for (std::size_t i = 0; i < d.generators.size(); ++i)
      if (d.generators[i] == name || alias(d.generators[i]) == name) return gen(ring, static_cast<int>(i), max_degree);
    throw std::invalid_argument("GradedPoly: no generator '" + std::string(name) + "' in " + sgk::to_string(ring));
  }

  static GradedPoly parse(RingCase ring, std::string_view text, int max_degree = kDefaultMaxDegree);

  RingCase ring() const { return ring_; }
  int max_degree() const { return max_degree_; }

  int degree_of(const Exponent& e) const {
    const auto& deg = degrees();
    int d = 0;
    for (std::size_t i = 0; i < deg.size(); ++i) d += e[i] * deg[i];
    return d;
  }

  /// Adds a monomial (mod 2), dropping it if it is zero in the ring or
  /// above the degree bound.
  void toggle(const Exponent& e) {
    if (vanishes(e)) return;
    const int d = degree_of(e);
    if (d > max_degree_) return;
    auto [it, inserted] = terms_[d].insert(e);
    if (!inserted) terms_[d].erase(it);
  }

  const std::set<Exponent>& component(int d) const {
    static const std::set<Exponent> empty;
    return d >= 0 && d <= max_degree_ ? terms_[d] : empty;
  }
  bool vanishes_in_degree(int d) const { return component(d).empty(); }
  bool is_zero() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& s) { return s.empty(); });
  }
  bool has_unit_constant() const { return !terms_[0].empty(); }

  /// Highest degree with a nonzero component, -1 for zero.
  int top_degree() const {
    for (int d = max_degree_; d >= 0; --d)
      if (!terms_[d].empty()) return d;
    return -1;
  }

  GradedPoly truncated(int max_degree) const {
    GradedPoly out(ring_, max_degree);
    for (int d = 0; d <= std::min(max_degree, max_degree_); ++d) out.terms_[d] = terms_[d];
    return out;
  }

  GradedPoly homogeneous(int d) const {
    GradedPoly out(ring_, max_degree_);
    if (d >= 0 && d <= max_degree_) out.terms_[d] = terms_[d];
    return out;
  }

  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
    check_same(a, b);
    GradedPoly out = a.truncated(std::min(a.max_degree_, b.max_degree_));
    for (int d = 0; d <= out.max_degree_; ++d)
      for (const auto& e : b.terms_[d]) out.toggle(e);
    return out;
  }

  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    check_same(a, b);
    const int top = std::min(a.max_degree_, b.max_degree_);
    GradedPoly out(a.ring_, top);
    for (int i = 0; i <= top; ++i) {
      if (a.terms_[i].empty()) continue;
      for (int j = 0; i + j <= top; ++j)
        for (const auto& e : a.terms_[i])
          for (const auto& f : b.terms_[j]) out.toggle({e[0] + f[0], e[1] + f[1], e[2] + f[2]});
    }
    return out;
  }

  GradedPoly pow(int e) const {
    if (e < 0) return invert().pow(-e);
    GradedPoly acc = one(ring_, max_degree_);
    GradedPoly base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return acc;
  }

  /// Inverse of a unit: q_0 = 1, q_d = sum_{i>=1} p_i q_{d-i}.
  GradedPoly invert() const {
    if (!has_unit_constant()) throw std::domain_error("GradedPoly::invert: constant term is 0");
    GradedPoly q = one(ring_, max_degree_);
    for (int d = 1; d <= max_degree_; ++d)
      for (int i = 1; i <= d; ++i)
        for (const auto& e : terms_[i])
          for (const auto& f : q.terms_[d - i]) q.toggle({e[0] + f[0], e[1] + f[1], e[2] + f[2]});
    return q;
  }

  /// Degree ascending, exponent tuples descending within a degree.
  std::string to_string() const {
    const auto names = describe(ring_).generators;
    std::string out;
    for (int d = 0; d <= max_degree_; ++d)
      for (auto it = terms_[d].rbegin(); it != terms_[d].rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < names.size(); ++i) {
          if ((*it)[i] == 0) continue;
          if (!mono.empty()) mono += "·";
          mono += names[i];
          if ((*it)[i] > 1) mono += "^" + std::to_string((*it)[i]);
        }
        out += mono.empty() ? "1" : mono;
      }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    if (a.ring_ != b.ring_) return false;
    const int top = std::max(a.max_degree_, b.max_degree_);
    for (int d = 0; d <= top; ++d)
      if (a.component(d) != b.component(d)) return false;
    return true;
  }

  /// Equality of the components up to degree d.
  bool equal_up_to(const GradedPoly& o, int d) const {
    if (ring_ != o.ring_) return false;
    for (int i = 0; i <= d; ++i)
      if (component(i) != o.component(i)) return false;
    return true;
  }

 private:
  static std::string alias(const std::string& name) {
    if (name == "α") return "alpha";
    if (name == "β") return "beta";
    return name;
  }

  static void check_same(const GradedPoly& a, const GradedPoly& b) {
    if (a.ring_ != b.ring_) throw std::invalid_argument("GradedPoly: ring mismatch");
  }

  const std::vector<int>& degrees() const {
    static const std::vector<int> odd{1}, two{1, 1}, zero{1, 1, 2}, cyc{1, 2};
    switch (ring_) {
      case RingCase::Odd: return odd;
      case RingCase::TwoMod4: return two;
      case RingCase::ZeroMod4: return zero;
      case RingCase::Cyclic4: return cyc;
    }
    return odd;
  }

  bool vanishes(const Exponent& e) const {
    if (ring_ == RingCase::ZeroMod4) return e[0] > 0 && e[1] > 0;
    if (ring_ == RingCase::Cyclic4) return e[0] >= 2;
    return false;
  }

  RingCase ring_;
  int max_degree_;
  std::vector<std::set<Exponent>> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(RingCase ring, std::string_view text, int max_degree) : ring_(ring), s_(text), max_(max_degree) {}

  GradedPoly run() {
    GradedPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("GradedPoly::parse: " + why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  GradedPoly expr() {
    GradedPoly acc = term();
    while (eat("+")) acc = acc + term();
    return acc;
  }

  GradedPoly term() {
    GradedPoly acc = power();
    for (;;) {
      skip();
      if (eat("*") || eat("·")) {
        acc = acc * power();
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] != '+' && s_[pos_] != ')') {
        acc = acc * power();
        continue;
      }
      return acc;
    }
  }

  GradedPoly power() {
    GradedPoly base = atom();
    if (eat("^")) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  GradedPoly atom() {
    skip();
    if (eat("(")) {
      GradedPoly p = expr();
      if (!eat(")")) fail("expected ')'");
      return p;
    }
    if (eat("1")) return GradedPoly::one(ring_, max_);
    if (eat("0")) return GradedPoly(ring_, max_);
    for (std::string_view name : {"alpha", "beta", "α", "β", "x", "y", "u"})
      if (eat(name)) return GradedPoly::gen(ring_, name, max_);
    fail("unexpected token");
  }

  RingCase ring_;
  std::string_view s_;
  int max_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GradedPoly GradedPoly::parse(RingCase ring, std::string_view text, int max_degree) {
  return detail::PolyParser(ring, text, max_degree).run();
}

// ------------------------------------------------------------ restriction

struct RestrictionMap {
  std::string name;
  RingCase source;
  RingCase target;
  std::vector<std::string> images;  // image of each source generator
};

/// The restriction homomorphisms available for a source ring.
inline std::vector<RestrictionMap> restriction_maps() {
  return {
      {"j", RingCase::ZeroMod4, RingCase::Cyclic4, {"x", "x", "u"}},
      {"p", RingCase::Odd, RingCase::Cyclic4, {"x"}},
      {"phi_rho", RingCase::Odd, RingCase::Odd, {"α"}},
      {"phi_rho", RingCase::TwoMod4, RingCase::Odd, {"0", "α"}},
      {"phi_sigma_half", RingCase::TwoMod4, RingCase::Odd, {"α", "0"}},
      {"phi_rho", RingCase::ZeroMod4, RingCase::Odd, {"α", "0", "0"}},
      {"phi_sigma_rho", RingCase::ZeroMod4, RingCase::Odd, {"0", "α", "0"}},
      {"phi_sigma_half", RingCase::ZeroMod4, RingCase::Odd, {"0", "0", "α^2"}},
      {"phi_sigma_half", RingCase::Cyclic4, RingCase::Odd, {"0", "α^2"}},
  };
}

inline const RestrictionMap& find_restriction(RingCase source, std::string_view name) {
  static const auto maps = restriction_maps();
  for (const auto& r : maps)
    if (r.source == source && r.name == name) return r;
  throw std::invalid_argument("restrict: no homomorphism '" + std::string(name) + "' on " + to_string(source));
}

/// Applies a named restriction homomorphism monomial by monomial.
inline GradedPoly restrict(const GradedPoly& p, std::string_view name) {
  const auto& r = find_restriction(p.ring(), name);
  const int top = p.max_degree();
  std::vector<GradedPoly> img;
  for (const auto& s : r.images) img.push_back(GradedPoly::parse(r.target, s, top));
  GradedPoly out(r.target, top);
  for (int d = 0; d <= top; ++d)
    for (const auto& e : p.component(d)) {
      GradedPoly mono = GradedPoly::one(r.target, top);
      for (std::size_t i = 0; i < img.size(); ++i)
        if (e[i] > 0) mono = mono * img[i].pow(e[i]);
      out = out + mono;
    }
  return out;
}

// ------------------------------------------------------- characteristic classes

/// Total Stiefel-Whitney class of the bundle associated with W_{n,k}.
inline GradedPoly total_sw_class(int n, int k, int max_degree = kDefaultMaxDegree) {
  const RingCase c = ring_case_for(n, k);
  auto P = [&](std::string_view s) { return GradedPoly::parse(c, s, max_degree); };
  if (k % 2 == 1) return P("1 + α").pow((k - 1) / 2 + 1);
  const int r = k / 2;
  const int up = (r + 1) / 2;
  const int down = r / 2;
  if (c == RingCase::TwoMod4) return P("1 + α") * P("1 + β").pow(up) * (P("1 + α") * P("1 + α + β")).pow(down);
  return P("1 + y") * P("1 + x + y + u").pow(up) * P("1 + x + y").pow(down);
}

namespace detail {

// Detecting cyclic subgroups of order 2 for each ring, with the matching
// restriction names.
inline std::vector<std::pair<DihedralElement, std::string>> detecting_subgroups(RingCase c, int m) {
  switch (c) {
    case RingCase::Odd: return {{DihedralElement::rho(m), "phi_rho"}};
    case RingCase::TwoMod4: return {{{m, m / 2, false}, "phi_sigma_half"}, {DihedralElement::rho(m), "phi_rho"}};
    case RingCase::ZeroMod4:
      return {{DihedralElement::rho(m), "phi_rho"}, {{m, 1, true}, "phi_sigma_rho"}, {{m, m / 2, false}, "phi_sigma_half"}};
    case RingCase::Cyclic4: break;
  }
  throw std::invalid_argument("detecting_subgroups: unsupported ring");
}

inline std::vector<Exponent> monomials_of_degree(RingCase c, int d) {
  std::vector<Exponent> out;
  GradedPoly probe(c, d);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      for (int e = 0; e <= d; ++e) {
        const Exponent x{a, b, e};
        const int gens = static_cast<int>(describe(c).generators.size());
        if ((gens < 3 && e > 0) || (gens < 2 && b > 0)) continue;
        GradedPoly t(c, d);
        t.toggle(x);
        if (probe.degree_of(x) == d && !t.is_zero()) out.push_back(x);
      }
  return out;
}

inline int binomial_mod2(int n, int r) { return r >= 0 && r <= n && (r & ~n) == 0 ? 1 : 0; }

}  // namespace detail

/// Whitney product over the invariant blocks of W_{n,k}. Each block's class
/// is the unique element whose restrictions to the detecting subgroups
/// match the -1 eigenvalue counts of the actual matrices.
inline GradedPoly total_sw_class_from_blocks(int n, int k, int max_degree = kDefaultMaxDegree) {
  const RingCase c = ring_case_for(n, k);
  const OrthogonalRep W = representation(n, k);
  const int m = W.m();
  const int dim = k + 1;

  std::vector<std::vector<int>> blocks;
  if (c == RingCase::TwoMod4) {
    for (int i = 0; i < dim; ++i) blocks.push_back({i});
  } else {
    int i = 0;
    if (k % 2 == 0) blocks.push_back({i++});
    for (; i < dim; i += 2) blocks.push_back({i, i + 1});
  }

  const auto subgroups = detail::detecting_subgroups(c, m);
  std::vector<Mat> mats;
  for (const auto& [g, name] : subgroups) mats.push_back(W.matrix(g));

  GradedPoly total = GradedPoly::one(c, max_degree);
  for (const auto& block : blocks) {
    std::vector<int> neg;
    for (const auto& M : mats) {
      double trace = 0;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          const bool in_a = std::find(block.begin(), block.end(), a) != block.end();
          const bool in_b = std::find(block.begin(), block.end(), b) != block.end();
          if (in_a != in_b && std::abs(M(a, b)) > 1e-9) throw std::domain_error("from_blocks: block not invariant");
          if (in_a && a == b) trace += M(a, a);
        }
      const double count = (static_cast<double>(block.size()) - trace) / 2.0;
      if (std::abs(count - std::round(count)) > 1e-9) throw std::domain_error("from_blocks: element is not an involution on the block");
      neg.push_back(static_cast<int>(std::lround(count)));
    }
    GradedPoly wb = GradedPoly::one(c, max_degree);
    for (int d = 1; d <= static_cast<int>(block.size()); ++d) {
      const auto basis = detail::monomials_of_degree(c, d);
      std::optional<GradedPoly> found;
      for (std::uint32_t pick = 0; pick < (1U << basis.size()); ++pick) {
        GradedPoly cand(c, max_degree);
        for (std::size_t b = 0; b < basis.size(); ++b)
          if ((pick >> b) & 1U) cand.toggle(basis[b]);
        bool ok = true;
        for (std::size_t s = 0; s < subgroups.size() && ok; ++s) {
          const GradedPoly img = restrict(cand, subgroups[s].second);
          GradedPoly want(RingCase::Odd, max_degree);
          if (detail::binomial_mod2(neg[s], d)) want.toggle({d, 0, 0});
          ok = img == want;
        }
        if (ok) {
          if (found) throw std::domain_error("from_blocks: restrictions do not detect degree " + std::to_string(d));
          found = cand;
        }
      }
      if (!found) throw std::domain_error("from_blocks: no class matches the restrictions in degree " + std::to_string(d));
      wb = wb + *found;
    }
    total = total * wb;
  }
  return total;
}

/// Dual class: w-bar w = 1.
inline GradedPoly wbar(int n, int k, int max_degree = kDefaultMaxDegree) { return total_sw_class(n, k, max_degree).invert(); }

/// w-bar_l as the t^k coefficient of t^{k+l} in H*[t] modulo
/// sum_{r=0}^{k+1} w_{k+1-r} t^r.
inline GradedPoly wbar_from_projective_relation(const GradedPoly& w, int k) {
  const RingCase c = w.ring();
  const int top = w.max_degree();
  std::vector<GradedPoly> coeff(k + 1, GradedPoly(c, top));
  coeff[k] = GradedPoly::one(c, top);
  GradedPoly out = GradedPoly::one(c, top);
  for (int l = 1; l <= top; ++l) {
    // multiply by t, then rewrite t^{k+1} = sum_{r=0}^{k} w_{k+1-r} t^r
    const GradedPoly overflow = coeff[k];
    for (int j = k; j >= 1; --j) coeff[j] = coeff[j - 1];
    coeff[0] = GradedPoly(c, top);
    for (int r = 0; r <= k; ++r) coeff[r] = coeff[r] + overflow * w.homogeneous(k + 1 - r);
    out = out + coeff[k].homogeneous(l);
  }
  return out;
}

/// Degrees 1..max_degree where w-bar vanishes.
inline std::vector<int> vanishing_degrees(const GradedPoly& wb) {
  std::vector<int> out;
  for (int d = 1; d <= wb.max_degree(); ++d)
    if (wb.vanishes_in_degree(d)) out.push_back(d);
  return out;
}

// -------------------------------------------------------- vanishing windows

struct Window {
  int lo = 0;  // first degree
  int hi = 0;  // one past the last degree
  std::string rule;
  friend bool operator==(const Window& a, const Window& b) { return a.lo == b.lo && a.hi == b.hi; }
};

inline int two_adic_valuation(int s) {
  if (s <= 0) throw std::invalid_argument("two_adic_valuation: need s > 0");
  return std::countr_zero(static_cast<unsigned>(s));
}

/// Every predicted window [lo, hi) with w-bar_d = 0 for lo <= d < hi.
inline std::vector<Window> vanishing_windows(int n, int k) {
  const RingCase c = ring_case_for(n, k);
  std::vector<Window> out;
  if (k % 2 == 1) {
    const int r = (k - 1) / 2;
    if (r > 0) {
      const int a = two_adic_valuation(r);
      out.push_back({1 << a, 1 << (a + 1), "k=2r+1"});
    }
    return out;
  }
  const int r = k / 2;
  auto add = [&](int s, int min_a, int offset, const char* rule) {
    if (s <= 0) return;
    const int a = two_adic_valuation(s);
    if (a < min_a) return;
    const int lo = 3 * (1 << a) + offset;
    const int hi = 1 << (a + 2);
    if (lo < hi) out.push_back({lo, hi, rule});
  };
  if (c == RingCase::ZeroMod4 && r >= 3) {
    if (r % 2 == 0) add(r / 2, 1, 1, "r=2s");
    if (r % 2 == 1) add((r - 1) / 2, 0, -1, "r=2s+1");
    if (r % 2 == 0) add((r - 2) / 2, 1, -2, "r=2s+2");
    if (r % 2 == 0) add((r - 4) / 2, 2, -5, "r=2s+4");
  }
  if (c == RingCase::TwoMod4 && r >= 2) {
    if (r % 2 == 0) add(r / 2, 0, 0, "r=2s");
    if (r % 2 == 1) add((r - 1) / 2, 0, -1, "r=2s+1");
    if (r % 2 == 0) add((r - 2) / 2, 1, -3, "r=2s+2");
  }
  return out;
}

/// The first applicable window, if any.
inline std::optional<Window> vanishing_window(int n, int k) {
  auto all = vanishing_windows(n, k);
  if (all.empty()) return std::nullopt;
  return all.front();
}

// ------------------------------------------------------------ classification

enum class Verdict { TestGraphCertified, TestGraphUpToDegree, NonTestForLargeN, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TestGraphCertified: return "TEST_GRAPH_CERTIFIED";
    case Verdict::TestGraphUpToDegree: return "TEST_GRAPH_UP_TO_DEGREE";
    case Verdict::NonTestForLargeN: return "NON_TEST_FOR_LARGE_N";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

inline constexpr const char* kLargeNCaveat = "for n >= N(k), N unspecified";

struct ClassificationReport {
  int n = 0;
  int k = 0;
  int m = 0;
  RingCase ring = RingCase::Odd;
  int max_degree = 0;
  std::string w;
  std::string wbar;
  std::vector<int> vanishing;
  std::optional<Window> window;
  Verdict verdict = Verdict::Inconclusive;
  std::string certificate;
  std::vector<std::string> caveats;
};

namespace detail {

// Restriction to a subgroup of order 2 taking w to 1 + α, so that w-bar
// restricts to the nowhere-vanishing series sum α^r.
inline std::optional<std::string> unit_line_restriction(const GradedPoly& w) {
  const auto target = GradedPoly::parse(RingCase::Odd, "1 + α", w.max_degree());
  for (const auto& r : restriction_maps())
    if (r.source == w.ring() && r.target == RingCase::Odd && restrict(w, r.name) == target) return r.name;
  return std::nullopt;
}

}  // namespace detail

inline ClassificationReport classify(int n, int k, int max_degree = kDefaultMaxDegree) {
  ClassificationReport rep;
  rep.n = n;
  rep.k = k;
  rep.m = 2 * n + k;
  rep.ring = ring_case_for(n, k);
  rep.max_degree = max_degree;
  const GradedPoly w = total_sw_class(n, k, max_degree);
  const GradedPoly wb = w.invert();
  rep.w = w.to_string();
  rep.wbar = wb.to_string();
  rep.vanishing = vanishing_degrees(wb);
  rep.window = vanishing_window(n, k);

  if (k <= 2) {
    if (auto name = detail::unit_line_restriction(w)) {
      rep.verdict = Verdict::TestGraphCertified;
      rep.certificate = *name + "(w) = 1 + α, so " + *name + "(w-bar) = sum of α^r, nonzero in every degree";
      return rep;
    }
  }
  if (k == 4 && n % 2 == 0) {
    const auto jw = restrict(w, "j");
    if (jw == GradedPoly::parse(RingCase::Cyclic4, "(1 + x)(1 + u)", max_degree)) {
      rep.verdict = Verdict::TestGraphCertified;
      rep.certificate = "j(w) = (1 + x)(1 + u), so j(w-bar) = (1 + x) sum of u^i, nonzero in every degree";
      return rep;
    }
  }
  const bool obstructing =
      std::any_of(rep.vanishing.begin(), rep.vanishing.end(), [](int d) { return d == 1 || d % 2 == 0; });
  if (obstructing) {
    rep.verdict = Verdict::NonTestForLargeN;
    rep.caveats.push_back(kLargeNCaveat);
  } else if (rep.vanishing.empty()) {
    rep.verdict = Verdict::TestGraphUpToDegree;
    rep.caveats.push_back("w-bar nonzero only checked up to degree " + std::to_string(max_degree));
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.caveats.push_back("w-bar vanishes only in odd degrees > 1");
  }
  return rep;
}

}  // namespace sgk
