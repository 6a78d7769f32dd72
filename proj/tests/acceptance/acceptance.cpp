// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "sgk/charclasses.hpp"
#include "sgk/complexes.hpp"
#include "sgk/geometry.hpp"
#include "sgk/graphs.hpp"
#include "sgk/matroid.hpp"

using namespace sgk;

namespace {

constexpr double kNumericTol = 1e-9;
constexpr double kDefectThreshold = 0.75;
constexpr int kMaxObservedN0 = 30;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // 0: no bound
  std::function<Outcome()> run;
};

Outcome fail(const std::string& why) { return {false, why}; }

const std::vector<std::pair<int, int>> kSphereInstances{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {2, 2}};

Outcome duality() {
  const auto cov = enumerate_covectors(3, 1);
  const auto co = enumerate_cocircuits(3, 1);
  if (cov.size() != 12 || co.size() != 6)
    return fail("counts " + std::to_string(cov.size()) + "/" + std::to_string(co.size()));
  const Graph k3 = stable_kneser_graph(1, 1);
  const auto P = hom_poset(complete_graph(2), k3);
  std::set<MultiHom> images;
  for (const auto& s : cov) images.insert(covector_to_hom(s, k3));
  if (images != std::set<MultiHom>(P.elements.begin(), P.elements.end())) return fail("not a bijection onto Hom(K_2, K_3)");
  for (const auto& s : cov)
    for (const auto& t : cov)
      if (covector_leq(s, t) != multihom_leq(covector_to_hom(s, k3), covector_to_hom(t, k3)))
        return fail("order mismatch at " + s.to_string() + ", " + t.to_string());
  return {true, "12 covectors, 6 cocircuits, order isomorphism onto 12 cells"};
}

Outcome covector_rule() {
  std::size_t checked = 0;
  for (int m = 1; m <= 7; ++m) {
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      SignVector s(m, 0, 0);
      std::uint64_t x = code;
      for (int j = 0; j < m; ++j) {
        s.set(j, static_cast<int>(x % 3) - 1);
        x /= 3;
      }
      if (s.is_zero()) continue;
      for (int k = 0; k <= 4 && k < m; ++k) {
        ++checked;
        if (is_covector(s, k) != oracle::polynomial_realizable(s, k))
          return fail(s.to_string() + " k=" + std::to_string(k));
      }
    }
  }
  return {true, std::to_string(checked) + " (sign vector, k) pairs agree with the exact LP oracle"};
}

Outcome sphere_homology() {
  std::ostringstream os;
  for (auto [n, k] : kSphereInstances) {
    const auto b = z2_betti(order_complex(hom_poset(complete_graph(2), stable_kneser_graph(n, k))));
    std::vector<std::size_t> want(k + 1, 0);
    want[0] += 1;
    want[k] += 1;
    if (b != want) return fail("(" + std::to_string(n) + "," + std::to_string(k) + ") is not a homology sphere");
    os << "(" << n << "," << k << ") ";
  }
  return {true, os.str() + "have Betti(S^k)"};
}

Outcome chromatic() {
  for (auto [n, k] : kSphereInstances) {
    const Graph g = stable_kneser_graph(n, k);
    const auto c = chromatic_number(g);
    if (c.chromatic_number != k + 2 || !is_proper_colouring(g, c.colours))
      return fail("chi(SG_" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(c.chromatic_number));
    if (!vertex_criticality_check(g)) return fail("not vertex critical");
  }
  return {true, "chi = k+2 and vertex critical on all six instances"};
}

Outcome equivariance() {
  double worst = 0;
  int cases = 0;
  for (int m = 2; m <= 40; ++m)
    for (int n = 1; 2 * n <= m; ++n) {
      const int k = m - 2 * n;
      worst = std::max({worst, moment_identity_deviation(n, k).max(), representation_deviation(representation(n, k)).max()});
      ++cases;
    }
  if (!(worst < kNumericTol)) return fail("max deviation " + std::to_string(worst));
  std::size_t checks = 0;
  for (int m = 2; m <= 9; ++m)
    for (int n = 1; 2 * n <= m; ++n) {
      const auto rep = check_equivariance_combinatorial(n, m - 2 * n);
      checks += rep.checks;
      if (!rep.violations.empty()) return fail("violation " + rep.violations.front());
    }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d numeric cases, max deviation %.3g; %zu combinatorial checks, 0 violations", cases,
                worst, checks);
  return {true, buf};
}

Outcome nerve() {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
    const auto r = verify_nerve_report(n, k);
    if (!r.holds) return fail("mismatch at " + r.mismatches.front());
  }
  return {true, "(2,1) and (2,2) hold on every vertex family"};
}

Outcome sw_cross_check() {
  int cells = 0;
  for (int k = 0; k <= 8; ++k)
    for (int n = 1; n <= 10; ++n, ++cells)
      if (total_sw_class_from_blocks(n, k) != total_sw_class(n, k))
        return fail("blocks differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
  const auto target = GradedPoly::parse(RingCase::Cyclic4, "(1 + x)(1 + u)");
  for (int s = 1; s <= 3; ++s)
    if (restrict(total_sw_class(2 * s, 4), "j") != target) return fail("j(w) wrong for s=" + std::to_string(s));
  return {true, std::to_string(cells) + " (n,k) cells agree; j(w) = (1 + x)(1 + u) for s = 1, 2, 3"};
}

Outcome windows() {
  int windows_checked = 0;
  for (int k = 0; k <= 20; ++k)
    for (int n = 1; n <= 4; ++n) {
      const auto w = total_sw_class(n, k);
      const auto wb = w.invert();
      const auto wb2 = wbar_from_projective_relation(w, k);
      if (wb != wb2) return fail("w-bar routes differ at (" + std::to_string(n) + "," + std::to_string(k) + ")");
      for (const auto& win : vanishing_windows(n, k)) {
        ++windows_checked;
        for (int d = win.lo; d < win.hi; ++d) {
          if (!wb.vanishes_in_degree(d))
            return fail("w-bar_" + std::to_string(d) + " != 0 at (" + std::to_string(n) + "," + std::to_string(k) + ")");
          if (k % 2 == 1 && (oracle::binomial((k - 1) / 2 + d, d) % 2) != 0) return fail("binomial oracle disagrees");
        }
      }
    }
  // first degree past the window is nonzero
  const auto w3 = wbar(1, 3);
  if (vanishing_window(1, 3) != Window{1, 2, ""} || w3.vanishes_in_degree(2)) return fail("k=3 spot case");
  const auto w5 = wbar(1, 5);
  if (vanishing_window(1, 5) != Window{2, 4, ""} || !w5.vanishes_in_degree(2) || !w5.vanishes_in_degree(3) ||
      w5.homogeneous(4) != GradedPoly::parse(RingCase::Odd, "α^4"))
    return fail("k=5 spot case");
  return {true, std::to_string(windows_checked) + " windows vanish; k=5: w-bar_2 = w-bar_3 = 0, w-bar_4 = α^4"};
}

Outcome classification() {
  for (int n = 1; n <= 10; ++n)
    for (int k : {1, 2})
      if (classify(n, k).verdict != Verdict::TestGraphCertified)
        return fail("(" + std::to_string(n) + "," + std::to_string(k) + ") not certified");
  for (int s = 1; s <= 4; ++s)
    if (classify(2 * s, 4).verdict != Verdict::TestGraphCertified) return fail("(2s,4) not certified, s=" + std::to_string(s));
  std::vector<std::pair<int, int>> non_test;
  for (int n = 1; n <= 6; ++n) {
    non_test.push_back({n, 3});
    non_test.push_back({n, 5});
    non_test.push_back({n, 7});
    if (n % 2 == 1) non_test.push_back({n, 6});
  }
  for (auto [n, k] : non_test) {
    const auto r = classify(n, k);
    if (r.verdict != Verdict::NonTestForLargeN || r.caveats.empty())
      return fail("(" + std::to_string(n) + "," + std::to_string(k) + ") is " + to_string(r.verdict));
  }
  return {true, "certified: (n,1), (n,2) n<=10, (2s,4) s<=4; non-test at " + std::to_string(non_test.size()) + " points"};
}

Outcome geometry_sweep_trend() {
  const auto rows = geometry_sweep(2, 2, 30);
  for (std::size_t i = 1; i < rows.size() && rows[i].n <= 20; ++i)
    if (!(rows[i].min_norm > rows[i - 1].min_norm)) return fail("min_norm not increasing at n=" + std::to_string(rows[i].n));
  int n0 = -1;
  for (std::size_t i = rows.size(); i-- > 0;) {
    if (!(rows[i].max_defect < kDefectThreshold)) break;
    n0 = rows[i].n;
  }
  if (n0 < 0 || n0 > kMaxObservedN0) return fail("no n0 <= 30 with defect < 0.75 beyond it");
  auto csv = [](const std::vector<GeometryRow>& rs) {
    std::string s = geometry_csv_header();
    for (const auto& r : rs) s += geometry_csv_line(r);
    return s;
  };
  if (csv(rows) != csv(geometry_sweep(2, 2, 30))) return fail("sweep CSV not reproducible");
  return {true, "min_norm increasing on 2..20; max_defect < 0.75 for n >= " + std::to_string(n0) + "; CSV identical on rerun"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "matroid/complex duality", 1, duality},
      {2, "covector rule vs exact oracle", 60, covector_rule},
      {3, "sphere homology", 300, sphere_homology},
      {4, "chromatic number and criticality", 120, chromatic},
      {5, "equivariance", 0, equivariance},
      {6, "nerve", 0, nerve},
      {7, "Stiefel-Whitney cross-check", 0, sw_cross_check},
      {8, "vanishing windows", 10, windows},
      {9, "classification endpoints", 0, classification},
      {10, "geometry sweep", 0, geometry_sweep_trend},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      o.pass = false;
      o.detail += " (exceeded " + std::to_string(static_cast<int>(c.time_limit_s)) + " s)";
    }
    std::printf("[%s] criterion %d: %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
