#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sgk/error.hpp"
#include "sgk/graphs.hpp"

using namespace sgk;

namespace {

bool isomorphic_to_cycle(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  // connected 2-regular graph
  std::vector<int> seen{0};
  std::vector<char> mark(g.vertex_count(), 0);
  mark[0] = 1;
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (int w : g.neighbours(seen[i]))
      if (!mark[w]) {
        mark[w] = 1;
        seen.push_back(w);
      }
  return static_cast<int>(seen.size()) == g.vertex_count();
}

}  // namespace

TEST(CircularSet, Stability) {
  EXPECT_TRUE(CircularSet::from_members(5, {0, 2}).is_stable());
  EXPECT_FALSE(CircularSet::from_members(5, {0, 4}).is_stable());
  EXPECT_FALSE(CircularSet::from_members(5, {1, 2}).is_stable());
  EXPECT_TRUE(CircularSet::from_members(6, {1, 3, 5}).is_stable());
}

TEST(CircularSet, RejectsOutOfRange) {
  EXPECT_THROW(CircularSet::from_members(4, {4}), std::invalid_argument);
  EXPECT_THROW(CircularSet::from_members(4, {-1}), std::invalid_argument);
}

TEST(StableSets, Examples) {
  EXPECT_EQ(enumerate_stable_sets(1, 5).size(), 5U);
  const auto s24 = enumerate_stable_sets(2, 4);
  ASSERT_EQ(s24.size(), 2U);
  EXPECT_EQ(s24[0], CircularSet::from_members(4, {0, 2}));
  EXPECT_EQ(s24[1], CircularSet::from_members(4, {1, 3}));
  EXPECT_EQ(enumerate_stable_sets(2, 6).size(), 9U);
  EXPECT_TRUE(enumerate_stable_sets(3, 5).empty());
}

TEST(StableSets, MatchBruteForceAndCountFormula) {
  for (int m = 2; m <= 14; ++m)
    for (int n = 1; 2 * n <= m; ++n) {
      const auto got = enumerate_stable_sets(n, m);
      auto want = oracle::brute_stable_sets(n, m);
      std::set<std::uint64_t> got_bits;
      for (const auto& s : got) {
        EXPECT_TRUE(s.is_stable());
        got_bits.insert(s.bits);
      }
      EXPECT_EQ(got_bits.size(), got.size()) << "duplicates at n=" << n << " m=" << m;
      EXPECT_EQ(got_bits, std::set<std::uint64_t>(want.begin(), want.end()));
      // m/(m-n) C(m-n, n)
      EXPECT_EQ(got.size() * static_cast<std::size_t>(m - n), static_cast<std::size_t>(m) * oracle::binomial(m - n, n));
    }
}

TEST(StableKneser, SmallCases) {
  for (int k = 0; k <= 5; ++k) {
    const Graph g = stable_kneser_graph(1, k);
    EXPECT_EQ(g, complete_graph(k + 2));
  }
  for (int n = 1; n <= 6; ++n) {
    const Graph g = stable_kneser_graph(n, 1);
    EXPECT_EQ(g.vertex_count(), 2 * n + 1);
    EXPECT_TRUE(isomorphic_to_cycle(g)) << "n=" << n;
  }
  const Graph g = stable_kneser_graph(2, 2);
  EXPECT_EQ(g.vertex_count(), 9);
  EXPECT_EQ(g.edge_count(), 18U);
  EXPECT_TRUE(g.loopless());
  EXPECT_THROW(stable_kneser_graph(0, 2), std::invalid_argument);
}

TEST(StableKneser, AdjacencyIsDisjointness) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const Graph g = stable_kneser_graph(n, k);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        EXPECT_EQ(g.adjacent(u, v), g.label(u).disjoint(g.label(v)));
      }
  }
}

TEST(Kneser, Examples) {
  EXPECT_EQ(kneser_graph(1, 1), complete_graph(3));
  const Graph petersen = kneser_graph(2, 1);
  EXPECT_EQ(petersen.vertex_count(), 10);
  EXPECT_EQ(petersen.edge_count(), 15U);
  const Graph k20 = kneser_graph(2, 0);
  EXPECT_EQ(k20.vertex_count(), 6);
  EXPECT_EQ(k20.edge_count(), 3U);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(k20.degree(v), 1);
  EXPECT_THROW(kneser_graph(0, 1), std::invalid_argument);
}

TEST(Product, TwoByTwo) {
  const Graph p = product(complete_graph(2), complete_graph(2));
  EXPECT_EQ(p.vertex_count(), 4);
  EXPECT_EQ(p.edge_count(), 2U);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(p.degree(v), 1);
}

TEST(Exponential, LoopedVerticesAreHomomorphisms) {
  auto looped = [](const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v) c += g.has_loop(v) ? 1 : 0;
    return c;
  };
  EXPECT_EQ(looped(exponential(complete_graph(2), complete_graph(3))), 6);
  const Graph t = exponential(cycle_graph(5), looped_point());
  EXPECT_EQ(t.vertex_count(), 1);
  EXPECT_TRUE(t.has_loop(0));
  const Graph c5 = cycle_graph(5);
  const Graph k3 = complete_graph(3);
  EXPECT_EQ(static_cast<std::uint64_t>(looped(exponential(c5, k3))), oracle::brute_homomorphisms(c5, k3));
}

TEST(Exponential, ProductAdjunction) {
  // Hom(K x G, H) = Hom(K, [G, H]) on small cases
  const Graph K = complete_graph(2), G = cycle_graph(3), H = complete_graph(3);
  EXPECT_EQ(count_homomorphisms(product(K, G), H), count_homomorphisms(K, exponential(G, H)));
}

TEST(Homomorphisms, MatchBruteForce) {
  const std::vector<Graph> gs{complete_graph(2), complete_graph(3), cycle_graph(5), stable_kneser_graph(2, 1)};
  const std::vector<Graph> hs{complete_graph(3), complete_graph(4), cycle_graph(5), stable_kneser_graph(2, 2)};
  for (const auto& G : gs)
    for (const auto& H : hs)
      if (G.vertex_count() <= 5) {
        EXPECT_EQ(count_homomorphisms(G, H), oracle::brute_homomorphisms(G, H));
      }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(complete_graph(5)).chromatic_number, 5);
  EXPECT_EQ(chromatic_number(cycle_graph(5)).chromatic_number, 3);
  EXPECT_EQ(chromatic_number(stable_kneser_graph(2, 2)).chromatic_number, 4);
  EXPECT_EQ(chromatic_number(kneser_graph(2, 1)).chromatic_number, 3);
  EXPECT_THROW(chromatic_number(looped_point()), std::invalid_argument);
}

TEST(Chromatic, WitnessIsProperAndMatchesBruteForce) {
  std::vector<Graph> graphs{cycle_graph(4), cycle_graph(7), kneser_graph(2, 1), stable_kneser_graph(2, 2),
                            stable_kneser_graph(3, 1), stable_kneser_graph(2, 3)};
  for (const auto& g : graphs) {
    const auto c = chromatic_number(g);
    EXPECT_TRUE(is_proper_colouring(g, c.colours));
    int used = 0;
    for (int x : c.colours) used = std::max(used, x + 1);
    EXPECT_EQ(used, c.chromatic_number);
    if (g.vertex_count() <= 10) {
      EXPECT_EQ(c.chromatic_number, oracle::brute_chromatic(g));
    }
  }
}

TEST(Chromatic, StableKneserIsKPlusTwo) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      const Graph g = stable_kneser_graph(n, k);
      if (g.vertex_count() > 60) continue;
      EXPECT_EQ(chromatic_number(g).chromatic_number, k + 2) << "n=" << n << " k=" << k;
    }
}

TEST(Criticality, Examples) {
  EXPECT_TRUE(vertex_criticality_check(stable_kneser_graph(2, 2)));
  EXPECT_TRUE(vertex_criticality_check(cycle_graph(5)));
  Graph pendant(6);
  for (int i = 0; i < 5; ++i) pendant.add_edge(i, (i + 1) % 5);
  pendant.add_edge(0, 5);
  EXPECT_FALSE(vertex_criticality_check(pendant));
  EXPECT_THROW(vertex_criticality_check(Graph(0)), std::invalid_argument);
}

TEST(Dihedral, GroupLaws) {
  for (int m = 2; m <= 9; ++m) {
    const auto s = DihedralElement::sigma(m), r = DihedralElement::rho(m);
    EXPECT_EQ(r * s, s.inverse() * r);
    EXPECT_TRUE(s.pow(m).is_identity());
    EXPECT_TRUE((r * r).is_identity());
    const auto group = dihedral_group(m);
    EXPECT_EQ(group.size(), static_cast<std::size_t>(2 * m));
    for (const auto& g : group) {
      EXPECT_TRUE((g * g.inverse()).is_identity());
      for (const auto& h : group)
        for (int j = 0; j < m; ++j) EXPECT_EQ(h.apply(g.apply(j)), (g * h).apply(j));
    }
  }
}

TEST(Dihedral, ActionOnSets) {
  const auto S = CircularSet::from_members(5, {0, 2});
  EXPECT_EQ(dihedral_act(S, DihedralElement::sigma(5)), CircularSet::from_members(5, {1, 3}));
  EXPECT_EQ(dihedral_act(S, DihedralElement::rho(5)), CircularSet::from_members(5, {0, 3}));
  for (int m = 4; m <= 8; ++m) {
    const auto s = DihedralElement::sigma(m), r = DihedralElement::rho(m);
    for (const auto& T : enumerate_stable_sets(2, m)) {
      EXPECT_EQ(dihedral_act(dihedral_act(T, s), r), dihedral_act(dihedral_act(T, r), s.inverse()));
      for (const auto& g : dihedral_group(m)) EXPECT_TRUE(dihedral_act(T, g).is_stable());
    }
  }
  EXPECT_THROW(dihedral_act(S, DihedralElement::sigma(6)), std::invalid_argument);
}

TEST(FreeAction, RhoOnSG21) {
  const Graph T = stable_kneser_graph(2, 1);
  const std::vector<DihedralElement> gens{DihedralElement::rho(5)};
  const auto entries = free_action_check(T, gens);
  ASSERT_EQ(entries.size(), 1U);
  ASSERT_TRUE(entries[0].witness.has_value());
  EXPECT_TRUE(is_free_witness(T, DihedralElement::rho(5), entries[0].witness->vertex, entries[0].witness->power));
  const int v13 = *T.index_of(CircularSet::from_members(5, {1, 3}));
  EXPECT_TRUE(is_free_witness(T, DihedralElement::rho(5), v13, 1));
}

TEST(FreeAction, HalfTurnOnSG2s4) {
  for (int s = 1; s <= 2; ++s) {
    const int n = 2 * s, m = 2 * n + 4;
    const Graph T = stable_kneser_graph(n, 4);
    std::vector<int> members;
    for (int j = 0; j < s; ++j) members.push_back(2 * j);
    for (int j = 0; j < s; ++j) members.push_back(2 * j + 2 * s + 3);
    const auto S = CircularSet::from_members(m, members);
    ASSERT_TRUE(S.is_stable());
    const auto half = DihedralElement::sigma(m).pow(m / 2);
    EXPECT_TRUE(is_free_witness(T, half, *T.index_of(S), 1)) << "s=" << s;
    const std::vector<DihedralElement> gens{half};
    const auto entries = free_action_check(T, gens);
    ASSERT_EQ(entries.size(), 1U);
    EXPECT_TRUE(entries[0].witness.has_value());
  }
}

TEST(FreeAction, IdentityExcludedAndBadActionRejected) {
  const Graph T = stable_kneser_graph(2, 1);
  const auto s = DihedralElement::sigma(5);
  const std::vector<DihedralElement> gens{s * s.inverse()};
  EXPECT_TRUE(free_action_check(T, gens).empty());
  const auto full = free_action_check(T, std::vector<DihedralElement>{s, DihedralElement::rho(5)});
  EXPECT_EQ(full.size(), 9U);
  Graph unlabeled = cycle_graph(5);
  EXPECT_THROW(free_action_check(unlabeled, gens), std::invalid_argument);
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_group_order(cycle_graph(5)), 10U);
  EXPECT_EQ(automorphism_group_order(stable_kneser_graph(2, 2)), 12U);
  EXPECT_EQ(automorphism_group_order(complete_graph(4)), 24U);
  EXPECT_EQ(automorphism_group_order(kneser_graph(2, 1)), 120U);
  EXPECT_THROW(automorphism_group_order(complete_graph(17)), TooLarge);
}

TEST(Automorphisms, MatchBruteForce) {
  std::vector<Graph> graphs{cycle_graph(6), stable_kneser_graph(2, 1), stable_kneser_graph(2, 2),
                            product(complete_graph(2), complete_graph(3))};
  for (const auto& g : graphs) EXPECT_EQ(automorphism_group_order(g), oracle::brute_automorphisms(g));
}

TEST(Automorphisms, StableKneserIsDihedral) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}})
    EXPECT_EQ(automorphism_group_order(stable_kneser_graph(n, k)), static_cast<std::uint64_t>(2 * (2 * n + k)));
}

TEST(Graph, InducedAndDeletion) {
  const Graph g = stable_kneser_graph(2, 2);
  const Graph h = g.without_vertex(3);
  EXPECT_EQ(h.vertex_count(), 8);
  EXPECT_EQ(h.edge_count(), g.edge_count() - static_cast<std::size_t>(g.degree(3)));
  EXPECT_EQ(chromatic_number(h).chromatic_number, 3);
}
