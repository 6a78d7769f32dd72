#pragma once

// Hom posets, neighbourhood and order complexes, GF(2) homology, and the
// covector -> Hom(K_2, SG_{n,k}) map.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgk/error.hpp"
#include "sgk/graphs.hpp"
#include "sgk/matroid.hpp"

namespace sgk {

/// A cell of Hom(G,H): assignment[u] is a nonempty bitmask over V(H).
struct MultiHom {
  std::vector<std::uint64_t> assignment;

  int total_size() const {
    int s = 0;
    for (auto a : assignment) s += std::popcount(a);
    return s;
  }
  bool is_atom() const {
    return std::all_of(assignment.begin(), assignment.end(), [](std::uint64_t a) { return std::popcount(a) == 1; });
  }

  friend bool operator==(const MultiHom&, const MultiHom&) = default;
  friend bool operator<(const MultiHom& a, const MultiHom& b) {
    const int sa = a.total_size(), sb = b.total_size();
    if (sa != sb) return sa < sb;
    return a.assignment < b.assignment;
  }
};

inline bool multihom_leq(const MultiHom& f, const MultiHom& g) {
  if (f.assignment.size() != g.assignment.size()) return false;
  for (std::size_t u = 0; u < f.assignment.size(); ++u)
    if ((f.assignment[u] & ~g.assignment[u]) != 0) return false;
  return true;
}

inline bool is_multihom(const Graph& G, const Graph& H, const MultiHom& f) {
  if (static_cast<int>(f.assignment.size()) != G.vertex_count()) return false;
  for (auto a : f.assignment)
    if (a == 0 || (H.vertex_count() < 64 && (a >> H.vertex_count()) != 0)) return false;
  for (auto [u, v] : G.edges())
    for (std::uint64_t a = f.assignment[u]; a != 0; a &= a - 1)
      for (std::uint64_t b = f.assignment[v]; b != 0; b &= b - 1)
        if (!H.adjacent(std::countr_zero(a), std::countr_zero(b))) return false;
  return true;
}

struct MultiHomHash {
  std::size_t operator()(const MultiHom& f) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto a : f.assignment) h = (h ^ std::hash<std::uint64_t>{}(a)) * 1099511628211ULL;
    return h;
  }
};

/// Finite poset stored by its covering relation.
template <class T>
struct FinitePoset {
  std::vector<T> elements;
  std::vector<std::vector<int>> upper_covers;

  int size() const { return static_cast<int>(elements.size()); }

  std::vector<std::vector<int>> lower_covers() const {
    std::vector<std::vector<int>> low(elements.size());
    for (int i = 0; i < size(); ++i)
      for (int j : upper_covers[i]) low[j].push_back(i);
    return low;
  }

  std::vector<int> minimal_elements() const {
    std::vector<char> has_lower(elements.size(), 0);
    for (const auto& ups : upper_covers)
      for (int j : ups) has_lower[j] = 1;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (!has_lower[i]) out.push_back(i);
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (upper_covers[i].empty()) out.push_back(i);
    return out;
  }

  /// Bit rows: row i holds every j >= i.
  std::vector<std::vector<std::uint64_t>> up_sets() const {
    const int n = size();
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> up(n, std::vector<std::uint64_t>(words, 0));
    std::vector<int> order = topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int i = *it;
      up[i][i >> 6] |= std::uint64_t{1} << (i & 63);
      for (int j : upper_covers[i])
        for (int w = 0; w < words; ++w) up[i][w] |= up[j][w];
    }
    return up;
  }

  bool leq(int i, int j) const {
    if (i == j) return true;
    std::vector<char> seen(elements.size(), 0);
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : upper_covers[x]) {
        if (y == j) return true;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  /// Ordering with every element before its upper covers.
  std::vector<int> topological_order() const {
    std::vector<int> indeg(elements.size(), 0);
    for (const auto& ups : upper_covers)
      for (int j : ups) ++indeg[j];
    std::vector<int> order;
    std::vector<int> stack;
    for (int i = size() - 1; i >= 0; --i)
      if (indeg[i] == 0) stack.push_back(i);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int y : upper_covers[x])
        if (--indeg[y] == 0) stack.push_back(y);
    }
    if (static_cast<int>(order.size()) != size()) throw std::domain_error("FinitePoset: cover relation has a cycle");
    return order;
  }

  /// Builds the covering relation from an order predicate; quadratic in size.
  static FinitePoset from_leq(std::vector<T> elems, const std::function<bool(const T&, const T&)>& leq_fn) {
    FinitePoset p;
    p.elements = std::move(elems);
    const int n = p.size();
    p.upper_covers.assign(n, {});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !leq_fn(p.elements[i], p.elements[j])) continue;
        bool cover = true;
        for (int c = 0; c < n && cover; ++c)
          if (c != i && c != j && leq_fn(p.elements[i], p.elements[c]) && leq_fn(p.elements[c], p.elements[j])) cover = false;
        if (cover) p.upper_covers[i].push_back(j);
      }
    return p;
  }
};

inline constexpr std::uint64_t kDefaultMaxCells = 1000000;

namespace detail {

// Visits every cell of Hom(G,H); stops early once `limit` cells were seen.
inline std::uint64_t visit_multihoms(const Graph& G, const Graph& H, std::uint64_t limit,
                                     const std::function<void(const MultiHom&)>& visit) {
  if (H.vertex_count() > 64) throw TooLarge("hom_poset: target has more than 64 vertices", static_cast<std::uint64_t>(H.vertex_count()));
  const int ng = G.vertex_count();
  const int nh = H.vertex_count();
  std::vector<std::uint64_t> nbr(nh, 0);
  for (int a = 0; a < nh; ++a)
    for (int b : H.neighbours(a)) nbr[a] |= std::uint64_t{1} << b;
  auto common = [&](std::uint64_t set) {
    std::uint64_t c = low_mask(nh);
    for (std::uint64_t s = set; s != 0; s &= s - 1) c &= nbr[std::countr_zero(s)];
    return c;
  };
  MultiHom f{std::vector<std::uint64_t>(ng, 0)};
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int u) {
    if (count > limit) return;
    if (u == ng) {
      ++count;
      if (visit) visit(f);
      return;
    }
    std::uint64_t cand = nh == 0 ? 0 : low_mask(nh);
    for (int v = 0; v < u; ++v)
      if (G.adjacent(u, v)) cand &= common(f.assignment[v]);
    // enumerate nonempty submasks of cand
    for (std::uint64_t sub = cand; sub != 0; sub = (sub - 1) & cand) {
      if (G.has_loop(u) && (common(sub) & sub) != sub) continue;
      f.assignment[u] = sub;
      rec(u + 1);
      if (count > limit) return;
    }
    f.assignment[u] = 0;
  };
  rec(0);
  return count;
}

}  // namespace detail

/// Number of cells of Hom(G,H), counted up to limit + 1.
inline std::uint64_t hom_poset_size(const Graph& G, const Graph& H, std::uint64_t limit = kDefaultMaxCells) {
  return detail::visit_multihoms(G, H, limit, {});
}

/// Hom(G,H) ordered by componentwise inclusion; elements sorted by total
/// size, then assignment.
inline FinitePoset<MultiHom> hom_poset(const Graph& G, const Graph& H, std::uint64_t max_cells = kDefaultMaxCells) {
  const std::uint64_t estimate = hom_poset_size(G, H, max_cells);
  if (estimate > max_cells) throw TooLarge("hom_poset: cell count exceeds bound", estimate);
  FinitePoset<MultiHom> P;
  detail::visit_multihoms(G, H, max_cells, [&](const MultiHom& f) { P.elements.push_back(f); });
  std::sort(P.elements.begin(), P.elements.end());
  std::unordered_map<MultiHom, int, MultiHomHash> index;
  for (int i = 0; i < P.size(); ++i) index.emplace(P.elements[i], i);
  P.upper_covers.assign(P.elements.size(), {});
  const std::uint64_t all = low_mask(H.vertex_count());
  for (int i = 0; i < P.size(); ++i) {
    MultiHom g = P.elements[i];
    for (std::size_t u = 0; u < g.assignment.size(); ++u) {
      const std::uint64_t orig = g.assignment[u];
      for (std::uint64_t add = all & ~orig; add != 0; add &= add - 1) {
        g.assignment[u] = orig | (add & -add);
        auto it = index.find(g);
        if (it != index.end()) P.upper_covers[i].push_back(it->second);
      }
      g.assignment[u] = orig;
    }
    std::sort(P.upper_covers[i].begin(), P.upper_covers[i].end());
  }
  return P;
}

/// Abstract simplicial complex given by its facets (sorted, maximal,
/// duplicate-free).
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> facets;

  static SimplicialComplex from_faces(int vertex_count, std::vector<std::vector<int>> faces) {
    for (auto& f : faces) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      for (int v : f)
        if (v < 0 || v >= vertex_count) throw std::invalid_argument("SimplicialComplex: vertex out of range");
    }
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex X{vertex_count, {}};
    for (auto& f : faces) {
      if (f.empty()) continue;
      bool contained = false;
      for (const auto& g : X.facets)
        if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          contained = true;
          break;
        }
      if (!contained) X.facets.push_back(std::move(f));
    }
    std::sort(X.facets.begin(), X.facets.end());
    return X;
  }

  int dimension() const {
    int d = -1;
    for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }
};

/// N(G): vertex sets with a common neighbour.
inline SimplicialComplex neighbourhood_complex(const Graph& G) {
  std::vector<std::vector<int>> faces;
  for (int v = 0; v < G.vertex_count(); ++v) {
    auto nb = G.neighbours(v);
    if (!nb.empty()) faces.push_back(std::move(nb));
  }
  return SimplicialComplex::from_faces(G.vertex_count(), std::move(faces));
}

inline constexpr std::uint64_t kMaxChains = 2000000;

/// Order complex: facets are the maximal chains.
template <class T>
SimplicialComplex order_complex(const FinitePoset<T>& P, std::uint64_t max_chains = kMaxChains) {
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  std::function<void(int)> rec = [&](int x) {
    chain.push_back(x);
    if (P.upper_covers[x].empty()) {
      if (chains.size() >= max_chains) throw TooLarge("order_complex: too many maximal chains", chains.size() + 1);
      chains.push_back(chain);
    }
    for (int y : P.upper_covers[x]) rec(y);
    chain.pop_back();
  };
  for (int x : P.minimal_elements()) rec(x);
  SimplicialComplex X{P.size(), {}};
  for (auto& c : chains) std::sort(c.begin(), c.end());
  std::sort(chains.begin(), chains.end());
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  X.facets = std::move(chains);
  return X;
}

// ----------------------------------------------------------------- homology

inline constexpr std::uint64_t kMaxFaces = 5000000;
inline constexpr std::size_t kDenseColumnLimit = std::size_t{1} << 13;

/// faces[d] lists all d-dimensional faces in lexicographic order.
inline std::vector<std::vector<std::vector<int>>> faces_by_dimension(const SimplicialComplex& X,
                                                                     std::uint64_t max_faces = kMaxFaces) {
  std::uint64_t bound = 0;
  for (const auto& f : X.facets) {
    if (f.size() >= 40) throw TooLarge("faces_by_dimension: facet too large", f.size());
    bound += (std::uint64_t{1} << f.size()) - 1;
  }
  if (bound > 8 * max_faces) throw TooLarge("faces_by_dimension: face count bound exceeded", bound);
  const int dim = X.dimension();
  std::vector<std::set<std::vector<int>>> sets(dim + 1);
  std::uint64_t total = 0;
  for (const auto& f : X.facets) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::uint32_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U) face.push_back(f[i]);
      if (sets[face.size() - 1].insert(std::move(face)).second && ++total > max_faces)
        throw TooLarge("faces_by_dimension: face count exceeded", total);
    }
  }
  std::vector<std::vector<std::vector<int>>> out(dim + 1);
  for (int d = 0; d <= dim; ++d) out[d].assign(sets[d].begin(), sets[d].end());
  return out;
}

/// Sparse GF(2) matrix as sorted row-index lists per column.
struct SparseGF2 {
  std::size_t rows = 0;
  std::vector<std::vector<std::uint32_t>> columns;
};

/// Boundary map from d-faces to (d-1)-faces; d >= 1.
inline SparseGF2 boundary_matrix(const std::vector<std::vector<int>>& lower, const std::vector<std::vector<int>>& upper) {
  std::map<std::vector<int>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  SparseGF2 B{lower.size(), {}};
  B.columns.reserve(upper.size());
  for (const auto& f : upper) {
    std::vector<std::uint32_t> col;
    for (std::size_t skip = 0; skip < f.size(); ++skip) {
      std::vector<int> g;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != skip) g.push_back(f[i]);
      auto it = index.find(g);
      if (it == index.end()) throw std::domain_error("boundary_matrix: face set not closed");
      col.push_back(it->second);
    }
    std::sort(col.begin(), col.end());
    B.columns.push_back(std::move(col));
  }
  return B;
}

/// Bit-packed Gaussian elimination; columns become rows of the packing.
inline std::size_t gf2_rank_dense(const SparseGF2& A) {
  const std::size_t words = (A.rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> vecs;
  vecs.reserve(A.columns.size());
  for (const auto& c : A.columns) {
    std::vector<std::uint64_t> v(words, 0);
    for (auto r : c) v[r >> 6] ^= std::uint64_t{1} << (r & 63);
    vecs.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < A.rows && rank < vecs.size(); ++bit) {
    const std::size_t w = bit >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
    std::size_t piv = rank;
    while (piv < vecs.size() && !(vecs[piv][w] & mask)) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[rank]);
    for (std::size_t i = rank + 1; i < vecs.size(); ++i)
      if (vecs[i][w] & mask)
        for (std::size_t x = w; x < words; ++x) vecs[i][x] ^= vecs[rank][x];
    ++rank;
  }
  return rank;
}

/// Column reduction by lowest nonzero row.
inline std::size_t gf2_rank_sparse(const SparseGF2& A) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  std::vector<std::vector<std::uint32_t>> cols = A.columns;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      auto it = pivot_of.find(c.back());
      if (it == pivot_of.end()) break;
      const auto& p = cols[it->second];
      std::vector<std::uint32_t> sum;
      std::set_symmetric_difference(c.begin(), c.end(), p.begin(), p.end(), std::back_inserter(sum));
      c = std::move(sum);
    }
    if (!c.empty()) {
      pivot_of.emplace(c.back(), j);
      ++rank;
    }
  }
  return rank;
}

inline std::size_t gf2_rank(const SparseGF2& A) {
  return A.columns.size() < kDenseColumnLimit && A.rows < kDenseColumnLimit ? gf2_rank_dense(A) : gf2_rank_sparse(A);
}

/// Unreduced Betti numbers over GF(2), up to the top dimension.
inline std::vector<std::size_t> z2_betti(const SimplicialComplex& X) {
  const auto faces = faces_by_dimension(X);
  const int dim = static_cast<int>(faces.size()) - 1;
  std::vector<std::size_t> rank(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) rank[d] = gf2_rank(boundary_matrix(faces[d - 1], faces[d]));
  std::vector<std::size_t> betti;
  for (int d = 0; d <= dim; ++d) betti.push_back(faces[d].size() - rank[d] - rank[d + 1]);
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

/// True iff every composite boundary map vanishes over GF(2).
inline bool boundary_squares_to_zero(const SimplicialComplex& X) {
  const auto faces = faces_by_dimension(X);
  for (std::size_t d = 2; d < faces.size(); ++d) {
    const auto lo = boundary_matrix(faces[d - 2], faces[d - 1]);
    const auto hi = boundary_matrix(faces[d - 1], faces[d]);
    for (const auto& col : hi.columns) {
      std::map<std::uint32_t, int> parity;
      for (auto r : col)
        for (auto q : lo.columns[r]) parity[q] ^= 1;
      for (const auto& [q, bit] : parity)
        if (bit) return false;
    }
  }
  return true;
}

/// Boundary map of dimension d in MatrixMarket coordinate format.
inline std::string boundary_matrix_market(const SimplicialComplex& X, int d) {
  const auto faces = faces_by_dimension(X);
  if (d < 1 || d >= static_cast<int>(faces.size())) throw std::invalid_argument("boundary_matrix_market: dimension out of range");
  const auto B = boundary_matrix(faces[d - 1], faces[d]);
  std::size_t nnz = 0;
  for (const auto& c : B.columns) nnz += c.size();
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << B.rows << ' ' << B.columns.size() << ' ' << nnz << '\n';
  for (std::size_t j = 0; j < B.columns.size(); ++j)
    for (auto r : B.columns[j]) os << (r + 1) << ' ' << (j + 1) << " 1\n";
  return os.str();
}

/// P^1: atoms of P, adjacent (loops included) iff they share an upper bound.
template <class T>
Graph looped_one_skeleton(const FinitePoset<T>& P) {
  const auto atoms = P.minimal_elements();
  const auto up = P.up_sets();
  Graph g(static_cast<int>(atoms.size()));
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i; j < atoms.size(); ++j) {
      const auto& a = up[atoms[i]];
      const auto& b = up[atoms[j]];
      for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & b[w]) {
          g.add_edge(static_cast<int>(i), static_cast<int>(j));
          break;
        }
    }
  return g;
}

// ---------------------------------------------------- covectors and Hom

/// S_l(s) = { j : (-1)^j s_j = (-1)^l } as a bitmask.
inline std::uint64_t sign_class(const SignVector& s, int l) {
  std::uint64_t out = 0;
  for (int j = 0; j < s.m; ++j) {
    const int v = s.at(j);
    if (v == 0) continue;
    const int signed_v = (j % 2 == 0) ? v : -v;
    if (signed_v == (l == 0 ? 1 : -1)) out |= std::uint64_t{1} << j;
  }
  return out;
}

/// l -> { T in V(SG_{n,k}) : T subset of S_l(s) } as a cell of Hom(K_2, SG).
inline MultiHom covector_to_hom(const SignVector& s, const Graph& sg) {
  const auto& p = sg.params();
  if (!p || !sg.has_labels()) throw std::invalid_argument("covector_to_hom: graph is not a stable Kneser graph");
  if (s.m != p->m()) throw std::invalid_argument("covector_to_hom: length mismatch");
  if (!is_covector(s, p->k)) throw std::invalid_argument("covector_to_hom: not a covector: " + s.to_string());
  if (sg.vertex_count() > 64) throw TooLarge("covector_to_hom: more than 64 vertices", static_cast<std::uint64_t>(sg.vertex_count()));
  MultiHom f{{0, 0}};
  for (int l = 0; l < 2; ++l) {
    const std::uint64_t cls = sign_class(s, l);
    for (int v = 0; v < sg.vertex_count(); ++v)
      if ((sg.label(v).bits & ~cls) == 0) f.assignment[l] |= std::uint64_t{1} << v;
  }
  if (f.assignment[0] == 0 || f.assignment[1] == 0) throw std::domain_error("covector_to_hom: empty image for " + s.to_string());
  return f;
}

inline MultiHom covector_to_hom(const SignVector& s, int n, int k) { return covector_to_hom(s, stable_kneser_graph(n, k)); }

/// (f.g)(l) = { T.g : T in f(l) }.
inline MultiHom act_hom(const MultiHom& f, const Graph& sg, const DihedralElement& g) {
  const auto perm = vertex_permutation(sg, g);
  MultiHom out{std::vector<std::uint64_t>(f.assignment.size(), 0)};
  for (std::size_t l = 0; l < f.assignment.size(); ++l)
    for (std::uint64_t a = f.assignment[l]; a != 0; a &= a - 1)
      out.assignment[l] |= std::uint64_t{1} << perm[std::countr_zero(a)];
  return out;
}

/// The C_2 action on Hom(K_2, -) by swapping the two vertices of K_2.
inline MultiHom swap_hom(const MultiHom& f) {
  if (f.assignment.size() != 2) throw std::invalid_argument("swap_hom: source is not K_2");
  return {{f.assignment[1], f.assignment[0]}};
}

struct EquivarianceReport {
  int n = 0;
  int k = 0;
  std::size_t covectors = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Checks covector_to_hom against every element of D_{2m} and negation.
inline EquivarianceReport check_equivariance_combinatorial(int n, int k) {
  const Graph sg = stable_kneser_graph(n, k);
  const int m = 2 * n + k;
  EquivarianceReport rep{n, k, 0, 0, {}};
  const auto covectors = enumerate_covectors(m, k);
  rep.covectors = covectors.size();
  const auto group = dihedral_group(m);
  for (const auto& s : covectors) {
    const MultiHom f = covector_to_hom(s, sg);
    for (const auto& g : group) {
      ++rep.checks;
      if (covector_to_hom(dihedral_act_sign(s, g, k), sg) != act_hom(f, sg, g))
        rep.violations.push_back(s.to_string() + " . " + g.to_string());
    }
    ++rep.checks;
    if (covector_to_hom(-s, sg) != swap_hom(f)) rep.violations.push_back("-" + s.to_string());
  }
  return rep;
}

struct NerveReport {
  bool holds = true;
  std::uint64_t subsets_checked = 0;
  std::vector<std::string> mismatches;
};

/// For each nonempty family of vertices: a covector extends the pattern
/// s_j = (-1)^j on the union iff the family has a common neighbour.
inline NerveReport verify_nerve_report(int n, int k, int max_vertices = 20) {
  const Graph sg = stable_kneser_graph(n, k);
  const int nv = sg.vertex_count();
  if (nv > max_vertices) throw TooLarge("verify_nerve: vertex count exceeds bound", static_cast<std::uint64_t>(nv));
  const int m = 2 * n + k;
  NerveReport rep;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << nv); ++fam) {
    std::uint64_t uni = 0;
    for (std::uint64_t f = fam; f != 0; f &= f - 1) uni |= sg.label(std::countr_zero(f)).bits;
    SignVector fixed(m, 0, 0);
    for (int j = 0; j < m; ++j)
      if ((uni >> j) & 1U) fixed.set(j, j % 2 == 0 ? 1 : -1);
    const bool feasible = covector_extension_feasible({fixed, ~uni & low_mask(m)}, k);
    bool common = false;
    for (int v = 0; v < nv && !common; ++v) common = (sg.label(v).bits & uni) == 0;
    ++rep.subsets_checked;
    if (feasible != common) {
      rep.holds = false;
      if (rep.mismatches.size() < 16) rep.mismatches.push_back(CircularSet(m, uni).to_string());
    }
  }
  return rep;
}

inline bool verify_nerve(int n, int k, int max_vertices = 20) { return verify_nerve_report(n, k, max_vertices).holds; }

}  // namespace sgk
