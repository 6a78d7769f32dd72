#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sgk/error.hpp"
#include "sgk/matroid.hpp"

using namespace sgk;

namespace {

SignVector sv(const char* s) { return SignVector::parse(s); }

std::vector<SignVector> all_nonzero(int m) {
  std::vector<SignVector> out;
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    SignVector s(m, 0, 0);
    std::uint64_t x = code;
    for (int j = 0; j < m; ++j) {
      s.set(j, static_cast<int>(x % 3) - 1);
      x /= 3;
    }
    if (!s.is_zero()) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(SignVector, ParseAndPrint) {
  const auto s = sv("(+,0,-)");
  EXPECT_EQ(s.m, 3);
  EXPECT_EQ(s.at(0), 1);
  EXPECT_EQ(s.at(1), 0);
  EXPECT_EQ(s.at(2), -1);
  EXPECT_EQ(SignVector::parse(s.to_string()), s);
  EXPECT_EQ(-s, sv("-0+"));
  EXPECT_THROW(sv("+x-"), std::invalid_argument);
}

TEST(MinimalDegree, Examples) {
  EXPECT_EQ(minimal_degree(sv("+0-")), 1);
  EXPECT_EQ(minimal_degree(sv("+0+")), 2);
  EXPECT_EQ(minimal_degree(sv("+++")), 0);
  EXPECT_THROW(minimal_degree(sv("000")), std::invalid_argument);
}

TEST(MinimalDegree, AgreesWithExactOracle) {
  for (int m = 1; m <= 6; ++m)
    for (const auto& s : all_nonzero(m))
      for (int k = 0; k < m; ++k)
        ASSERT_EQ(minimal_degree(s) <= k, oracle::polynomial_realizable(s, k)) << s.to_string() << " k=" << k;
}

TEST(MinimalDegree, SampledPolynomialsAreCovectors) {
  for (int m = 3; m <= 9; ++m)
    for (int k = 0; k <= 4 && k < m; ++k)
      for (auto [p, n] : oracle::sampled_polynomial_signs(m, k, 4000, 17 * m + k)) {
        const SignVector s(m, p, n);
        if (s.is_zero()) continue;
        EXPECT_TRUE(is_covector(s, k)) << s.to_string() << " k=" << k;
      }
}

TEST(MinimalDegree, NegationInvariant) {
  for (const auto& s : all_nonzero(6)) EXPECT_EQ(minimal_degree(s), minimal_degree(-s));
}

TEST(IsCovector, Examples) {
  EXPECT_FALSE(is_covector(sv("+-+"), 1));
  EXPECT_TRUE(is_covector(sv("+0-"), 1));
  for (int m = 1; m <= 6; ++m)
    for (const auto& s : all_nonzero(m)) EXPECT_TRUE(is_covector(s, m - 1));
  EXPECT_FALSE(is_covector(sv("000"), 2));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_covectors(3, 1).size(), 12U);
  EXPECT_EQ(enumerate_cocircuits(3, 1).size(), 6U);
  const auto co51 = enumerate_cocircuits(5, 1);
  EXPECT_NE(std::find(co51.begin(), co51.end(), sv("+++0-")), co51.end());
  EXPECT_EQ(enumerate_covectors(4, 3).size(), 80U);
  EXPECT_EQ(enumerate_covectors(5, 2).size(), 82U);
  EXPECT_THROW(enumerate_covectors(3, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_covectors(21, 2), TooLarge);
}

TEST(Enumerate, CocircuitCountIsTwiceBinomial) {
  for (int m = 1; m <= 10; ++m)
    for (int k = 0; k < m; ++k) {
      const auto co = enumerate_cocircuits(m, k);
      EXPECT_EQ(co.size(), 2 * oracle::binomial(m, k)) << "m=" << m << " k=" << k;
      for (const auto& s : co) {
        EXPECT_EQ(minimal_degree(s), k);
        EXPECT_EQ(s.zero_count(), k);
      }
    }
}

TEST(Enumerate, CompleteSortedAndDuplicateFree) {
  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k < m; ++k) {
      const auto cov = enumerate_covectors(m, k);
      std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
      for (std::size_t i = 0; i < cov.size(); ++i) {
        EXPECT_TRUE(seen.emplace(cov[i].plus, cov[i].minus).second);
        if (i > 0) {
          EXPECT_TRUE(cov[i - 1] < cov[i]);
        }
      }
      std::size_t expect = 0;
      for (const auto& s : all_nonzero(m)) expect += is_covector(s, k) ? 1 : 0;
      EXPECT_EQ(cov.size(), expect);
    }
}

TEST(Enumerate, ClosedUnderNegationAndFaces) {
  const auto cov = enumerate_covectors(6, 2);
  std::set<std::pair<std::uint64_t, std::uint64_t>> set;
  for (const auto& s : cov) set.emplace(s.plus, s.minus);
  for (const auto& s : cov) {
    EXPECT_TRUE(set.count({s.minus, s.plus}));
    // every covector dominates some cocircuit
    bool above = false;
    for (const auto& c : enumerate_cocircuits(6, 2)) above = above || covector_leq(c, s);
    EXPECT_TRUE(above) << s.to_string();
  }
}

TEST(IsVector, Examples) {
  EXPECT_TRUE(is_vector(sv("+-+"), 1));
  for (int k = 0; k <= 3; ++k) EXPECT_FALSE(is_vector(sv("+++"), k));
  EXPECT_THROW(is_vector(sv("00"), 1), std::invalid_argument);
}

TEST(IsVector, OrthogonalToCovectors) {
  const int m = 5, k = 2;
  const auto cov = enumerate_covectors(m, k);
  for (const auto& x : all_nonzero(m)) {
    if (!is_vector(x, k)) continue;
    for (const auto& y : cov) {
      const std::uint64_t common = x.support() & y.support();
      if (common == 0) continue;
      const std::uint64_t agree = (x.plus & y.plus) | (x.minus & y.minus);
      const std::uint64_t oppose = (x.plus & y.minus) | (x.minus & y.plus);
      EXPECT_TRUE(agree != 0 && oppose != 0) << x.to_string() << " vs " << y.to_string();
    }
  }
}

TEST(CovectorLeq, Examples) {
  EXPECT_TRUE(covector_leq(sv("0+0"), sv("-++")));
  EXPECT_FALSE(covector_leq(sv("++"), sv("-+")));
  for (const auto& s : enumerate_covectors(4, 2)) EXPECT_TRUE(covector_leq(s, s));
  EXPECT_THROW(covector_leq(sv("+"), sv("++")), std::invalid_argument);
}

TEST(DihedralSign, SigmaOnLengthFive) {
  const auto s = sv("+++0-");
  ASSERT_TRUE(is_covector(s, 1));
  EXPECT_EQ(dihedral_act_sign(s, DihedralElement::sigma(5), 1), sv("----0"));
  EXPECT_THROW(dihedral_act_sign(sv("+-+-0"), DihedralElement::sigma(5), 1), std::invalid_argument);
}

TEST(DihedralSign, PreservesCovectorsAndIsAnAction) {
  // the action is defined on C^{m,k+1} with m = 2n + k
  for (int m = 2; m <= 8; ++m)
    for (int k = m % 2; k + 2 <= m && k <= 4; k += 2) {
      const auto group = dihedral_group(m);
      for (const auto& s : enumerate_covectors(m, k)) {
        EXPECT_EQ(dihedral_act_sign(s, DihedralElement::sigma(m).pow(m), k), s);
        EXPECT_EQ(dihedral_act_sign(s, DihedralElement::identity(m), k), s);
        for (const auto& g : group) {
          const auto t = dihedral_act_sign(s, g, k);
          ASSERT_TRUE(is_covector(t, k)) << s.to_string() << " . " << g.to_string();
          EXPECT_EQ(-t, act_sign(-s, g));
        }
        for (const auto& g : {DihedralElement::sigma(m), DihedralElement::rho(m)})
          for (const auto& h : {DihedralElement::sigma(m), DihedralElement::rho(m)})
            EXPECT_EQ(act_sign(act_sign(s, g), h), act_sign(s, g * h));
      }
    }
}

TEST(Extension, Examples) {
  EXPECT_TRUE(covector_extension_feasible(PartialSignVector::parse("+-*"), 1));
  EXPECT_FALSE(covector_extension_feasible(PartialSignVector::parse("+-+-*"), 2));
  for (int k = 0; k <= 3; ++k) EXPECT_TRUE(covector_extension_feasible(PartialSignVector::parse("*****"), k));
}

TEST(Extension, AgreesWithBruteForce) {
  for (int m = 1; m <= 7; ++m) {
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
      PartialSignVector p{SignVector(m, 0, 0), 0};
      std::uint64_t x = code;
      for (int j = 0; j < m; ++j) {
        const int c = static_cast<int>(x % 4);
        x /= 4;
        if (c == 3) p.free_mask |= std::uint64_t{1} << j;
        else p.values.set(j, c - 1);
      }
      for (int k = 0; k < m; ++k)
        ASSERT_EQ(covector_extension_feasible(p, k), oracle::brute_extension_feasible(p, k))
            << p.values.to_string() << " free=" << p.free_mask << " k=" << k;
    }
  }
}
