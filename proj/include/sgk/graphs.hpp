#pragma once

// Finite graphs over circular sets: (stable) Kneser graphs, categorical
// product and exponential, exact colouring, dihedral symmetry.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgk/error.hpp"

namespace sgk {

inline constexpr int kMaxModulus = 64;

inline std::uint64_t low_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

/// A subset of Z_m stored as a bitmask (bit j set iff j is a member).
struct CircularSet {
  int m = 0;
  std::uint64_t bits = 0;

  CircularSet() = default;
  CircularSet(int modulus, std::uint64_t mask) : m(modulus), bits(mask) {
    if (m < 1 || m > kMaxModulus) throw std::invalid_argument("CircularSet: modulus out of range");
    if ((bits & ~low_mask(m)) != 0) throw std::invalid_argument("CircularSet: member >= modulus");
  }

  static CircularSet from_members(int modulus, std::span<const int> members) {
    std::uint64_t mask = 0;
    for (int j : members) {
      if (j < 0 || j >= modulus) throw std::invalid_argument("CircularSet: member out of range");
      mask |= std::uint64_t{1} << j;
    }
    return CircularSet(modulus, mask);
  }
  static CircularSet from_members(int modulus, std::initializer_list<int> members) {
    return from_members(modulus, std::span<const int>(members.begin(), members.size()));
  }

  int size() const { return std::popcount(bits); }
  bool contains(int j) const { return j >= 0 && j < m && ((bits >> j) & 1U); }
  bool disjoint(const CircularSet& o) const { return (bits & o.bits) == 0; }
  bool subset_of(const CircularSet& o) const { return (bits & ~o.bits) == 0; }

  /// No two cyclically consecutive members, {m-1, 0} included.
  bool is_stable() const {
    if (m == 1) return true;
    const std::uint64_t rotated = (bits >> 1) | ((bits & 1U) << (m - 1));
    return (bits & rotated) == 0;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int j : members()) {
      if (!first) s += ",";
      s += std::to_string(j);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const CircularSet&, const CircularSet&) = default;

  /// Lexicographic on sorted member lists, which is the enumeration order.
  friend bool operator<(const CircularSet& a, const CircularSet& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.members() < b.members();
  }
};

/// The element sigma^shift rho^flip of D_{2m}, with rho sigma = sigma^{-1} rho.
struct DihedralElement {
  int m = 1;
  int shift = 0;
  bool flip = false;

  DihedralElement() = default;
  DihedralElement(int modulus, int s, bool f) : m(modulus), shift(0), flip(f) {
    if (m < 1) throw std::invalid_argument("DihedralElement: modulus must be positive");
    shift = ((s % m) + m) % m;
  }

  static DihedralElement identity(int m) { return {m, 0, false}; }
  static DihedralElement sigma(int m) { return {m, 1, false}; }
  static DihedralElement rho(int m) { return {m, 0, true}; }

  bool is_identity() const { return shift == 0 && !flip; }

  /// Product in the order of a right action: x.(g*h) = (x.g).h.
  friend DihedralElement operator*(const DihedralElement& g, const DihedralElement& h) {
    if (g.m != h.m) throw std::invalid_argument("DihedralElement: modulus mismatch");
    const int s = g.flip ? g.shift - h.shift : g.shift + h.shift;
    return {g.m, s, g.flip != h.flip};
  }

  DihedralElement inverse() const { return flip ? *this : DihedralElement{m, -shift, false}; }

  DihedralElement pow(int e) const {
    DihedralElement base = e < 0 ? inverse() : *this;
    DihedralElement acc = identity(m);
    for (int i = 0; i < std::abs(e); ++i) acc = acc * base;
    return acc;
  }

  int order() const {
    if (is_identity()) return 1;
    if (flip) return 2;
    return m / std::gcd(shift, m);
  }

  /// Image of a residue: j -> (-1)^flip (j + shift) mod m.
  int apply(int j) const {
    const int t = ((j + shift) % m + m) % m;
    return flip ? (m - t) % m : t;
  }

  std::string to_string() const {
    std::string s;
    if (shift != 0) s = shift == 1 ? "sigma" : "sigma^" + std::to_string(shift);
    if (flip) s += s.empty() ? "rho" : "*rho";
    return s.empty() ? "e" : s;
  }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
  friend auto operator<=>(const DihedralElement& a, const DihedralElement& b) {
    return std::tie(a.m, a.flip, a.shift) <=> std::tie(b.m, b.flip, b.shift);
  }
};

/// All 2m elements: rotations first, then reflections, each by shift.
inline std::vector<DihedralElement> dihedral_group(int m) {
  std::vector<DihedralElement> out;
  for (int f = 0; f < 2; ++f)
    for (int s = 0; s < m; ++s) out.emplace_back(m, s, f == 1);
  return out;
}

/// Right action S.g on subsets of Z_m.
inline CircularSet dihedral_act(const CircularSet& S, const DihedralElement& g) {
  if (S.m != g.m) throw std::invalid_argument("dihedral_act: modulus mismatch");
  std::uint64_t out = 0;
  for (std::uint64_t b = S.bits; b != 0; b &= b - 1) out |= std::uint64_t{1} << g.apply(std::countr_zero(b));
  return {S.m, out};
}

/// Parameters of a (stable) Kneser graph, kept for serialization.
struct KneserParams {
  int n = 0;
  int k = 0;
  int m() const { return 2 * n + k; }
};

/// Finite graph with a symmetric adjacency relation; loops allowed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count)
      : n_(vertex_count), words_((vertex_count + 63) / 64), adj_(static_cast<std::size_t>(n_) * words_, 0) {
    if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  }

  int vertex_count() const { return n_; }
  int words() const { return words_; }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    set_bit(u, v);
    set_bit(v, u);
  }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  bool has_loop(int v) const { return adjacent(v, v); }
  bool loopless() const {
    for (int v = 0; v < n_; ++v)
      if (has_loop(v)) return false;
    return true;
  }

  std::span<const std::uint64_t> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  int degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  std::vector<int> neighbours(int v) const {
    std::vector<int> out;
    for (int i = 0; i < words_; ++i)
      for (std::uint64_t b = adj_[static_cast<std::size_t>(v) * words_ + i]; b != 0; b &= b - 1)
        out.push_back(i * 64 + std::countr_zero(b));
    return out;
  }

  /// Unordered edges {u,v}; a loop counts once.
  std::size_t edge_count() const {
    std::size_t twice = 0;
    std::size_t loops = 0;
    for (int v = 0; v < n_; ++v) {
      twice += static_cast<std::size_t>(degree(v));
      loops += has_loop(v) ? 1 : 0;
    }
    return (twice - loops) / 2 + loops;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbours(u))
        if (u <= v) out.emplace_back(u, v);
    return out;
  }

  Graph induced(std::span<const int> keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (labels_) {
      std::vector<CircularSet> l;
      for (int v : keep) l.push_back((*labels_)[v]);
      g.set_labels(std::move(l));
    }
    g.params_ = params_;
    return g;
  }

  Graph without_vertex(int v) const {
    std::vector<int> keep;
    for (int u = 0; u < n_; ++u)
      if (u != v) keep.push_back(u);
    return induced(keep);
  }

  void set_labels(std::vector<CircularSet> labels) {
    if (static_cast<int>(labels.size()) != n_) throw std::invalid_argument("Graph: label count mismatch");
    std::unordered_map<std::uint64_t, int> index;
    for (int v = 0; v < n_; ++v)
      if (!index.emplace(labels[v].bits, v).second) throw std::invalid_argument("Graph: labels not injective");
    labels_ = std::move(labels);
    index_ = std::move(index);
  }
  bool has_labels() const { return labels_.has_value(); }
  const CircularSet& label(int v) const { return labels_.value()[v]; }
  const std::vector<CircularSet>& labels() const { return labels_.value(); }
  std::optional<int> index_of(const CircularSet& s) const {
    auto it = index_.find(s.bits);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void set_params(KneserParams p) { params_ = p; }
  const std::optional<KneserParams>& params() const { return params_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }
  void set_bit(int u, int v) { adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63); }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::optional<std::vector<CircularSet>> labels_;
  std::unordered_map<std::uint64_t, int> index_;
  std::optional<KneserParams> params_;
};

// ---------------------------------------------------------------- builders

inline Graph complete_graph(int s) {
  Graph g(s);
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int len) {
  Graph g(len);
  for (int v = 0; v < len; ++v) g.add_edge(v, (v + 1) % len);
  return g;
}

/// One vertex with a loop: the terminal object.
inline Graph looped_point() {
  Graph g(1);
  g.add_edge(0, 0);
  return g;
}

/// Stable n-subsets of Z_m in lexicographic order of their member lists.
inline std::vector<CircularSet> enumerate_stable_sets(int n, int m) {
  if (n < 1) throw std::invalid_argument("enumerate_stable_sets: n must be >= 1");
  if (m > kMaxModulus) throw std::invalid_argument("enumerate_stable_sets: modulus exceeds 64");
  std::vector<CircularSet> out;
  if (m < 2 * n) return out;
  std::function<void(int, int, std::uint64_t)> rec = [&](int next, int left, std::uint64_t mask) {
    if (left == 0) {
      out.emplace_back(m, mask);
      return;
    }
    for (int j = next; j < m; ++j) {
      if (j == m - 1 && (mask & 1U) && m > 1) break;
      // remaining members need at least 2 slots each
      if (j + 2 * (left - 1) > m - 1) break;
      rec(j + 2, left - 1, mask | (std::uint64_t{1} << j));
    }
  };
  rec(0, n, 0);
  return out;
}

/// All n-subsets of Z_m in lexicographic order.
inline std::vector<CircularSet> enumerate_subsets(int n, int m) {
  if (n < 1) throw std::invalid_argument("enumerate_subsets: n must be >= 1");
  if (m > kMaxModulus) throw std::invalid_argument("enumerate_subsets: modulus exceeds 64");
  std::vector<CircularSet> out;
  if (m < n) return out;
  std::function<void(int, int, std::uint64_t)> rec = [&](int next, int left, std::uint64_t mask) {
    if (left == 0) {
      out.emplace_back(m, mask);
      return;
    }
    for (int j = next; j <= m - left; ++j) rec(j + 1, left - 1, mask | (std::uint64_t{1} << j));
  };
  rec(0, n, 0);
  return out;
}

inline Graph disjointness_graph(std::vector<CircularSet> vertices, KneserParams p) {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i].disjoint(vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  g.set_labels(std::move(vertices));
  g.set_params(p);
  return g;
}

/// SG_{n,k}: stable n-subsets of Z_{2n+k}, adjacent iff disjoint.
inline Graph stable_kneser_graph(int n, int k) {
  if (n < 1) throw std::invalid_argument("stable_kneser_graph: n must be >= 1");
  if (k < 0) throw std::invalid_argument("stable_kneser_graph: k must be >= 0");
  return disjointness_graph(enumerate_stable_sets(n, 2 * n + k), {n, k});
}

/// KG_{n,k}: all n-subsets of Z_{2n+k}, adjacent iff disjoint.
inline Graph kneser_graph(int n, int k) {
  if (n < 1) throw std::invalid_argument("kneser_graph: n must be >= 1");
  if (k < 0) throw std::invalid_argument("kneser_graph: k must be >= 0");
  return disjointness_graph(enumerate_subsets(n, 2 * n + k), {n, k});
}

/// Categorical product; vertex (u, w) has index u * |H| + w.
inline Graph product(const Graph& G, const Graph& H) {
  const int nh = H.vertex_count();
  Graph out(G.vertex_count() * nh);
  for (auto [u, v] : G.edges())
    for (auto [a, b] : H.edges()) {
      out.add_edge(u * nh + a, v * nh + b);
      out.add_edge(u * nh + b, v * nh + a);
    }
  return out;
}

inline constexpr std::uint64_t kMaxExponentialVertices = 4096;

/// Exponential graph [G,H]. A vertex is a function f: V(G) -> V(H) encoded
/// as sum f(u) |H|^u. Looped vertices are exactly the homomorphisms G -> H.
inline Graph exponential(const Graph& G, const Graph& H) {
  const int ng = G.vertex_count();
  const int nh = H.vertex_count();
  std::uint64_t count = 1;
  for (int i = 0; i < ng; ++i) {
    count *= static_cast<std::uint64_t>(nh);
    if (count > kMaxExponentialVertices) throw TooLarge("exponential: too many functions", count);
  }
  const int N = static_cast<int>(count);
  std::vector<std::vector<int>> value(N, std::vector<int>(ng));
  for (int f = 0; f < N; ++f) {
    int x = f;
    for (int u = 0; u < ng; ++u) {
      value[f][u] = x % nh;
      x /= nh;
    }
  }
  const auto ge = G.edges();
  Graph out(N);
  for (int f = 0; f < N; ++f)
    for (int g = f; g < N; ++g) {
      bool ok = true;
      for (auto [u, v] : ge) {
        if (!H.adjacent(value[f][u], value[g][v]) || !H.adjacent(value[f][v], value[g][u])) {
          ok = false;
          break;
        }
      }
      if (ok) out.add_edge(f, g);
    }
  return out;
}

/// Number of graph homomorphisms G -> H by backtracking.
inline std::uint64_t count_homomorphisms(const Graph& G, const Graph& H) {
  const int ng = G.vertex_count();
  std::vector<int> f(ng, -1);
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int u) {
    if (u == ng) {
      ++count;
      return;
    }
    for (int a = 0; a < H.vertex_count(); ++a) {
      bool ok = !G.has_loop(u) || H.has_loop(a);
      for (int v = 0; ok && v < u; ++v)
        if (G.adjacent(u, v) && !H.adjacent(a, f[v])) ok = false;
      if (!ok) continue;
      f[u] = a;
      rec(u + 1);
    }
  };
  rec(0);
  return count;
}

// --------------------------------------------------------------- colouring

struct Colouring {
  int chromatic_number = 0;
  std::vector<int> colours;  // colour per vertex, 0-based
};

inline bool is_proper_colouring(const Graph& G, std::span<const int> colours) {
  if (static_cast<int>(colours.size()) != G.vertex_count()) return false;
  for (auto [u, v] : G.edges())
    if (colours[u] == colours[v]) return false;
  return true;
}

namespace detail {

// Exact DSATUR branch and bound (Brelaz), deterministic tie-breaking.
class DsaturSolver {
 public:
  explicit DsaturSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {
    for (int v = 0; v < n_; ++v) nbrs_.push_back(g.neighbours(v));
  }

  Colouring solve() {
    if (n_ == 0) return {};
    best_colours_ = greedy_dsatur();
    best_ = 1 + *std::max_element(best_colours_.begin(), best_colours_.end());
    lower_ = greedy_clique_size();
    if (best_ > lower_) {
      colour_.assign(n_, -1);
      forbid_.assign(n_, std::vector<int>(best_, 0));
      sat_.assign(n_, 0);
      search(0, 0);
    }
    return {best_, best_colours_};
  }

 private:
  std::vector<int> greedy_dsatur() const {
    std::vector<int> colour(n_, -1);
    std::vector<std::vector<char>> used(n_, std::vector<char>(n_ + 1, 0));
    std::vector<int> sat(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      for (int v = 0; v < n_; ++v) {
        if (colour[v] >= 0) continue;
        if (pick < 0 || sat[v] > sat[pick] ||
            (sat[v] == sat[pick] && nbrs_[v].size() > nbrs_[pick].size()))
          pick = v;
      }
      int c = 0;
      while (used[pick][c]) ++c;
      colour[pick] = c;
      for (int w : nbrs_[pick])
        if (!used[w][c]) {
          used[w][c] = 1;
          ++sat[w];
        }
    }
    return colour;
  }

  int greedy_clique_size() const {
    int best = 1;
    for (int start = 0; start < n_; ++start) {
      std::vector<int> clique{start};
      std::vector<int> cand = nbrs_[start];
      std::sort(cand.begin(), cand.end(), [&](int a, int b) {
        return nbrs_[a].size() != nbrs_[b].size() ? nbrs_[a].size() > nbrs_[b].size() : a < b;
      });
      for (int c : cand) {
        bool all = true;
        for (int q : clique)
          if (!g_.adjacent(c, q)) {
            all = false;
            break;
          }
        if (all) clique.push_back(c);
      }
      best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
  }

  void assign(int v, int c, int delta) {
    for (int w : nbrs_[v]) {
      int& f = forbid_[w][c];
      if (delta > 0) {
        if (f++ == 0) ++sat_[w];
      } else {
        if (--f == 0) --sat_[w];
      }
    }
  }

  void search(int coloured, int used) {
    if (best_ == lower_) return;
    if (coloured == n_) {
      best_ = used;
      best_colours_ = colour_;
      return;
    }
    int pick = -1;
    int pick_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      int deg = 0;
      for (int w : nbrs_[v]) deg += colour_[w] < 0 ? 1 : 0;
      if (pick < 0 || sat_[v] > sat_[pick] || (sat_[v] == sat_[pick] && deg > pick_deg)) {
        pick = v;
        pick_deg = deg;
      }
    }
    for (int c = 0; c < std::min(used + 1, best_ - 1); ++c) {
      if (forbid_[pick][c] != 0) continue;
      colour_[pick] = c;
      assign(pick, c, +1);
      search(coloured + 1, std::max(used, c + 1));
      assign(pick, c, -1);
      colour_[pick] = -1;
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<int> colour_;
  std::vector<std::vector<int>> forbid_;
  std::vector<int> sat_;
  std::vector<int> best_colours_;
  int best_ = 0;
  int lower_ = 0;
};

}  // namespace detail

/// Exact chromatic number with a witness colouring.
inline Colouring chromatic_number(const Graph& G) {
  if (!G.loopless()) throw std::invalid_argument("chromatic_number: graph has a loop");
  return detail::DsaturSolver(G).solve();
}

/// True iff deleting any single vertex lowers the chromatic number.
inline bool vertex_criticality_check(const Graph& G) {
  if (G.vertex_count() == 0) throw std::invalid_argument("vertex_criticality_check: empty graph");
  const int chi = chromatic_number(G).chromatic_number;
  for (int v = 0; v < G.vertex_count(); ++v)
    if (chromatic_number(G.without_vertex(v)).chromatic_number >= chi) return false;
  return true;
}

// ---------------------------------------------------------- group actions

/// Permutation of V(T) induced by g acting on labels; throws if a label
/// leaves the vertex set.
inline std::vector<int> vertex_permutation(const Graph& T, const DihedralElement& g) {
  if (!T.has_labels()) throw std::invalid_argument("vertex_permutation: graph has no labels");
  std::vector<int> perm(T.vertex_count());
  for (int v = 0; v < T.vertex_count(); ++v) {
    auto img = T.index_of(dihedral_act(T.label(v), g));
    if (!img) throw std::invalid_argument("action does not preserve V(T): " + T.label(v).to_string());
    perm[v] = *img;
  }
  return perm;
}

/// Subgroup generated by the given elements, sorted.
inline std::vector<DihedralElement> generated_subgroup(std::span<const DihedralElement> generators, int m) {
  std::vector<DihedralElement> group{DihedralElement::identity(m)};
  for (std::size_t i = 0; i < group.size(); ++i)
    for (const auto& g : generators) {
      auto h = group[i] * g;
      if (std::find(group.begin(), group.end(), h) == group.end()) group.push_back(h);
    }
  std::sort(group.begin(), group.end());
  return group;
}

struct FreeActionWitness {
  int vertex = 0;
  int power = 0;  // (vertex, vertex . g^power) is an edge
};

struct FreeActionEntry {
  DihedralElement element;
  std::optional<FreeActionWitness> witness;  // empty: "not free"
};

inline bool is_free_witness(const Graph& T, const DihedralElement& g, int v, int power) {
  auto img = T.index_of(dihedral_act(T.label(v), g.pow(power)));
  return img && T.adjacent(v, *img);
}

/// For every non-identity element of the generated group, a vertex v and a
/// power p with (v, v.g^p) in E(T), or no witness.
inline std::vector<FreeActionEntry> free_action_check(const Graph& T, std::span<const DihedralElement> generators) {
  if (!T.has_labels()) throw std::invalid_argument("free_action_check: graph has no labels");
  if (!T.loopless()) throw std::invalid_argument("free_action_check: graph has a loop");
  const int m = T.label(0).m;
  for (const auto& g : generators) {
    auto perm = vertex_permutation(T, g);
    for (auto [u, v] : T.edges())
      if (!T.adjacent(perm[u], perm[v])) throw std::invalid_argument("action does not preserve E(T)");
  }
  std::vector<FreeActionEntry> out;
  for (const auto& g : generated_subgroup(generators, m)) {
    if (g.is_identity()) continue;
    FreeActionEntry e{g, std::nullopt};
    const int ord = g.order();
    for (int v = 0; v < T.vertex_count() && !e.witness; ++v)
      for (int p = 1; p < ord; ++p)
        if (is_free_witness(T, g, v, p)) {
          e.witness = FreeActionWitness{v, p};
          break;
        }
    out.push_back(e);
  }
  return out;
}

inline constexpr int kMaxAutomorphismVertices = 16;

/// |Aut(G)| as the product of orbit sizes along a stabilizer chain; each
/// orbit point is confirmed by a backtracking extension search.
inline std::uint64_t automorphism_group_order(const Graph& G) {
  const int n = G.vertex_count();
  if (n > kMaxAutomorphismVertices) throw TooLarge("automorphism_group_order: graph too large", static_cast<std::uint64_t>(n));
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = G.degree(v);

  std::vector<int> image(n, -1);
  std::vector<char> taken(n, 0);
  auto compatible = [&](int v, int w) {
    if (taken[w] || deg[v] != deg[w] || G.has_loop(v) != G.has_loop(w)) return false;
    for (int u = 0; u < n; ++u)
      if (image[u] >= 0 && G.adjacent(u, v) != G.adjacent(image[u], w)) return false;
    return true;
  };
  std::function<bool(int)> extend = [&](int v) {
    if (v == n) return true;
    if (image[v] >= 0) return extend(v + 1);
    for (int w = 0; w < n; ++w) {
      if (!compatible(v, w)) continue;
      image[v] = w;
      taken[w] = 1;
      if (extend(v + 1)) {
        image[v] = -1;
        taken[w] = 0;
        return true;
      }
      image[v] = -1;
      taken[w] = 0;
    }
    return false;
  };

  std::uint64_t order = 1;
  for (int level = 0; level < n; ++level) {
    // image[0..level-1] fixed pointwise
    std::uint64_t orbit = 0;
    for (int w = 0; w < n; ++w) {
      if (!compatible(level, w)) continue;
      image[level] = w;
      taken[w] = 1;
      // extend() ignores fixed entries, so clear everything after level first
      if (extend(level + 1)) ++orbit;
      image[level] = -1;
      taken[w] = 0;
    }
    order *= orbit;
    image[level] = level;
    taken[level] = 1;
  }
  return order;
}

}  // namespace sgk
