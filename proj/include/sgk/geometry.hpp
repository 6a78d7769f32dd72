#pragma once

// The representation W_{n,k}, the (trigonometric) moment curve, and the
// numeric checks built on them.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgk/complexes.hpp"
#include "sgk/graphs.hpp"
#include "sgk/matroid.hpp"
#include "sgk/workers.hpp"

namespace sgk {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kDefaultZeroTol = 1e-9;

inline Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return r;
}

/// Orthogonal right action of D_{2m} on R^{k+1}: x.g = M(g) x with
/// M(sigma^a rho^b) = M(rho)^b M(sigma)^a.
class OrthogonalRep {
 public:
  OrthogonalRep(int m, int k) : m_(m), k_(k) {
    if (m < 1 || k < 0) throw std::invalid_argument("OrthogonalRep: need m >= 1, k >= 0");
    sigma_ = sigma_power(1);
    rho_ = Mat::Identity(k + 1, k + 1);
    const int first = k % 2 == 0 ? 1 : 0;
    for (int i = first + 1; i <= k; i += 2) rho_(i, i) = -1.0;
  }

  int m() const { return m_; }
  int k() const { return k_; }
  int dim() const { return k_ + 1; }
  const Mat& sigma() const { return sigma_; }
  const Mat& rho() const { return rho_; }

  /// M(sigma)^a computed blockwise, without repeated products.
  Mat sigma_power(int a) const {
    const int d = k_ + 1;
    Mat out = Mat::Zero(d, d);
    const double pi = std::numbers::pi;
    int row = 0;
    if (k_ % 2 == 0) {
      out(0, 0) = 1.0;
      row = 1;
      for (int i = 1; row < d; ++i, row += 2) out.block<2, 2>(row, row) = rotation(a * 2.0 * pi * i / m_);
    } else {
      for (int i = 0; row < d; ++i, row += 2) out.block<2, 2>(row, row) = rotation(a * (2.0 * i + 1.0) * pi / m_);
    }
    return a % 2 != 0 ? Mat(-out) : out;
  }

  Mat matrix(const DihedralElement& g) const {
    if (g.m != m_) throw std::invalid_argument("OrthogonalRep: modulus mismatch");
    Mat s = sigma_power(g.shift);
    return g.flip ? Mat(rho_ * s) : s;
  }

  Vec act(const Vec& x, const DihedralElement& g) const { return matrix(g) * x; }

  std::string to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << "sigma =\n" << sigma_ << "\nrho =\n" << rho_ << "\n";
    return os.str();
  }

 private:
  int m_;
  int k_;
  Mat sigma_;
  Mat rho_;
};

/// W_{n,k}.
inline OrthogonalRep representation(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("representation: need n >= 1, k >= 0");
  return {2 * n + k, k};
}

struct RepDeviation {
  double orthogonality = 0;  // max |M^T M - I| over sigma, rho
  double rho_squared = 0;
  double sigma_to_m = 0;
  double sigma_rho_squared = 0;
  double sigma_det = 0;  // |det sigma - expected|
  double rho_det = 0;
  double composition = 0;  // max |M(gh) - M(h) M(g)|
  double max() const {
    return std::max({orthogonality, rho_squared, sigma_to_m, sigma_rho_squared, sigma_det, rho_det, composition});
  }
};

inline double max_abs(const Mat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

inline RepDeviation representation_deviation(const OrthogonalRep& W) {
  const int d = W.dim();
  const int m = W.m();
  const Mat I = Mat::Identity(d, d);
  RepDeviation r;
  r.orthogonality = std::max(max_abs(W.sigma().transpose() * W.sigma() - I), max_abs(W.rho().transpose() * W.rho() - I));
  r.rho_squared = max_abs(W.rho() * W.rho() - I);
  Mat p = I;
  for (int i = 0; i < m; ++i) p = W.sigma() * p;
  r.sigma_to_m = max_abs(p - I);
  const Mat sr = W.matrix({m, 1, true});
  r.sigma_rho_squared = max_abs(sr * sr - I);
  // sigma is (-1)^d times a product of rotations
  const double det_sigma = (d % 2 == 0) ? 1.0 : -1.0;
  r.sigma_det = std::abs(W.sigma().determinant() - det_sigma);
  const double det_rho = ((W.k() + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  r.rho_det = std::abs(W.rho().determinant() - det_rho);
  const std::vector<DihedralElement> sample{{m, 1, false}, {m, 0, true}, {m, m / 2 + 1, true}, {m, 2, false}};
  for (const auto& g : sample)
    for (const auto& h : sample) r.composition = std::max(r.composition, max_abs(W.matrix(g * h) - W.matrix(h) * W.matrix(g)));
  return r;
}

/// Points v_0..v_{m-1} on the moment curve of dimension k+1.
struct MomentConfig {
  int m = 0;
  int k = 0;
  std::vector<Vec> v;

  /// v_j for any integer j, from the closed formula.
  Vec at(long j) const {
    Vec out(k + 1);
    const double pi = std::numbers::pi;
    if (k % 2 == 0) {
      out(0) = 1.0;
      for (int i = 1; 2 * i <= k; ++i) {
        const double t = 2.0 * pi * i * static_cast<double>(j) / m;
        out(2 * i - 1) = std::cos(t);
        out(2 * i) = std::sin(t);
      }
    } else {
      for (int i = 0; 2 * i + 1 <= k; ++i) {
        const double t = (2.0 * i + 1.0) * pi * static_cast<double>(j) / m;
        out(2 * i) = std::cos(t);
        out(2 * i + 1) = std::sin(t);
      }
    }
    return out;
  }
};

inline MomentConfig moment_config(int m, int k) {
  if (k < 0 || m <= k) throw std::invalid_argument("moment_config: need m > k >= 0");
  MomentConfig c{m, k, {}};
  for (int j = 0; j < m; ++j) c.v.push_back(c.at(j));
  return c;
}

inline MomentConfig moment_vectors(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("moment_vectors: need n >= 1, k >= 0");
  return moment_config(2 * n + k, k);
}

struct IdentityDeviation {
  double shift = 0;     // |v_j.sigma + v_{j+1}|
  double reflect = 0;   // |v_j.rho - v_{-j}|
  double period = 0;    // |v_{j+m} - (-1)^m v_j|
  double max() const { return std::max({shift, reflect, period}); }
};

inline IdentityDeviation moment_identity_deviation(int n, int k) {
  const auto W = representation(n, k);
  const auto c = moment_vectors(n, k);
  const int m = c.m;
  const double sign_m = m % 2 == 0 ? 1.0 : -1.0;
  IdentityDeviation d;
  for (int j = 0; j < m; ++j) {
    d.shift = std::max(d.shift, (W.sigma() * c.v[j] + c.at(j + 1)).cwiseAbs().maxCoeff());
    d.reflect = std::max(d.reflect, (W.rho() * c.v[j] - c.at(-j)).cwiseAbs().maxCoeff());
    d.period = std::max(d.period, (c.at(j + m) - sign_m * c.v[j]).cwiseAbs().maxCoeff());
  }
  return d;
}

inline SignVector sign_vector_of_point(const Vec& x, const MomentConfig& c, double zero_tol = kDefaultZeroTol) {
  if (x.size() != c.k + 1) throw std::invalid_argument("sign_vector_of_point: dimension mismatch");
  SignVector s(c.m, 0, 0);
  for (int j = 0; j < c.m; ++j) {
    const double t = x.dot(c.v[j]);
    if (std::abs(t) >= zero_tol) s.set(j, t > 0 ? 1 : -1);
  }
  return s;
}

/// Unit vector spanning the common orthogonal complement of the given
/// config points (a k-subset).
inline Vec null_direction(const MomentConfig& c, const std::vector<int>& rows) {
  const int d = c.k + 1;
  if (rows.empty()) {
    Vec e = Vec::Zero(d);
    e(0) = 1.0;
    return e;
  }
  Mat A(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) A.row(static_cast<Eigen::Index>(i)) = c.v[rows[i]].transpose();
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  return svd.matrixV().col(d - 1).normalized();
}

inline Vec random_unit(std::mt19937_64& rng, int d) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec x(d);
  for (int i = 0; i < d; ++i) x(i) = gauss(rng);
  return x.normalized();
}

struct RealizationReport {
  int m = 0;
  int k = 0;
  std::size_t samples = 0;
  std::size_t non_covector_samples = 0;
  std::size_t topes_expected = 0;
  std::size_t topes_sampled = 0;
  std::size_t topes_constructed = 0;
  std::size_t spurious_topes = 0;
  std::size_t cocircuits = 0;
  std::size_t cocircuits_realized = 0;
  std::vector<std::string> failures;

  bool sampled_complete() const { return topes_sampled == topes_expected; }
  bool pass() const {
    return non_covector_samples == 0 && spurious_topes == 0 && topes_constructed == topes_expected &&
           cocircuits_realized == cocircuits;
  }
};

inline constexpr std::size_t kRealizationChunks = 16;

/// Checks the moment-curve configuration against the combinatorial rule:
/// sampled sign vectors are covectors, topes and cocircuits are all realized.
inline RealizationReport verify_realization(int m, int k, std::size_t samples, std::uint64_t seed,
                                            double zero_tol = kDefaultZeroTol) {
  const auto c = moment_config(m, k);
  RealizationReport rep;
  rep.m = m;
  rep.k = k;
  rep.samples = samples;

  std::set<std::pair<std::uint64_t, std::uint64_t>> topes;
  std::vector<SignVector> cocircuits;
  for (const auto& s : enumerate_covectors(m, k)) {
    if (s.zero_count() == 0) topes.emplace(s.plus, s.minus);
    if (s.zero_count() == k) cocircuits.push_back(s);
  }
  rep.topes_expected = topes.size();
  rep.cocircuits = cocircuits.size();

  // (a), (b): seeded chunks merged in chunk order
  std::vector<std::set<std::pair<std::uint64_t, std::uint64_t>>> seen(kRealizationChunks);
  std::vector<std::size_t> bad(kRealizationChunks, 0);
  std::vector<std::string> first_bad(kRealizationChunks);
  parallel_for(kRealizationChunks, [&](std::size_t chunk) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (chunk + 1));
    const std::size_t lo = samples * chunk / kRealizationChunks;
    const std::size_t hi = samples * (chunk + 1) / kRealizationChunks;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto s = sign_vector_of_point(random_unit(rng, k + 1), c, zero_tol);
      if (!is_covector(s, k)) {
        if (bad[chunk]++ == 0) first_bad[chunk] = s.to_string();
        continue;
      }
      if (s.zero_count() == 0) seen[chunk].emplace(s.plus, s.minus);
    }
  });
  std::set<std::pair<std::uint64_t, std::uint64_t>> sampled;
  for (std::size_t i = 0; i < kRealizationChunks; ++i) {
    rep.non_covector_samples += bad[i];
    if (bad[i] > 0) rep.failures.push_back("non-covector sample " + first_bad[i]);
    sampled.insert(seen[i].begin(), seen[i].end());
  }
  for (const auto& t : sampled)
    if (topes.count(t)) ++rep.topes_sampled;
    else ++rep.spurious_topes;

  // (c): exact nullspace of each zero set
  std::vector<Vec> rays(cocircuits.size());
  for (std::size_t i = 0; i < cocircuits.size(); ++i) {
    const auto& co = cocircuits[i];
    std::vector<int> zs;
    for (int j = 0; j < m; ++j)
      if (co.at(j) == 0) zs.push_back(j);
    Vec x = null_direction(c, zs);
    const double tol = 1e-9;
    auto s = sign_vector_of_point(x, c, tol);
    if (s == -co) {
      x = -x;
      s = co;
    }
    rays[i] = x;
    if (s == co) ++rep.cocircuits_realized;
    else rep.failures.push_back("cocircuit " + co.to_string() + " realized as " + s.to_string());
  }

  // every tope cone is spanned by the cocircuit rays below it
  for (const auto& [p, n] : topes) {
    const SignVector t(m, p, n);
    Vec x = Vec::Zero(k + 1);
    for (std::size_t i = 0; i < cocircuits.size(); ++i)
      if (covector_leq(cocircuits[i], t)) x += rays[i];
    if (x.norm() > 0 && sign_vector_of_point(x.normalized(), c, zero_tol) == t) ++rep.topes_constructed;
    else rep.failures.push_back("tope " + t.to_string() + " not constructed");
  }
  return rep;
}

/// Sum of (-1)^i v_i over i in S, before normalization.
inline Vec alternating_sum(const CircularSet& S, const MomentConfig& c) {
  if (S.m != c.m) throw std::invalid_argument("alternating_sum: modulus mismatch");
  Vec x = Vec::Zero(c.k + 1);
  for (int i : S.members()) x += (i % 2 == 0 ? 1.0 : -1.0) * c.v[i];
  return x;
}

/// v(S): the normalized alternating sum.
inline Vec v_of_set(const CircularSet& S, const MomentConfig& c) {
  const Vec x = alternating_sum(S, c);
  const double nrm = x.norm();
  if (nrm < 1e-12) throw std::domain_error("v_of_set: alternating sum vanishes for " + S.to_string());
  return x / nrm;
}

inline double min_vertex_norm(int n, int k) {
  const auto c = moment_vectors(n, k);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& S : enumerate_stable_sets(n, 2 * n + k)) best = std::min(best, alternating_sum(S, c).norm());
  return best;
}

/// max over edges (S,T) of |v(S) + v(T)|.
inline double max_edge_defect(int n, int k) {
  const auto c = moment_vectors(n, k);
  const Graph sg = stable_kneser_graph(n, k);
  std::vector<Vec> pts;
  for (const auto& S : sg.labels()) pts.push_back(v_of_set(S, c));
  double worst = 0;
  for (auto [u, v] : sg.edges()) worst = std::max(worst, (pts[u] + pts[v]).norm());
  return worst;
}

/// max over vertices S and all g of |v(S.g) - v(S).g|.
inline double v_equivariance_deviation(int n, int k) {
  const auto c = moment_vectors(n, k);
  const auto W = representation(n, k);
  const int m = 2 * n + k;
  double worst = 0;
  for (const auto& g : dihedral_group(m)) {
    const Mat M = W.matrix(g);
    for (const auto& S : enumerate_stable_sets(n, m))
      worst = std::max(worst, (v_of_set(dihedral_act(S, g), c) - M * v_of_set(S, c)).cwiseAbs().maxCoeff());
  }
  return worst;
}

struct SignEquivarianceReport {
  std::size_t checked = 0;
  std::size_t skipped_nongeneric = 0;
  std::size_t mismatches = 0;
};

/// sign(x.g) against the combinatorial action on sign(x), for generic x and
/// every g in D_{2m}.
inline SignEquivarianceReport sign_equivariance_check(int n, int k, std::size_t samples, std::uint64_t seed,
                                                      double zero_tol = kDefaultZeroTol) {
  const auto c = moment_vectors(n, k);
  const auto W = representation(n, k);
  const auto group = dihedral_group(c.m);
  std::vector<Mat> mats;
  for (const auto& g : group) mats.push_back(W.matrix(g));
  std::mt19937_64 rng(seed);
  SignEquivarianceReport rep;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec x = random_unit(rng, k + 1);
    const auto s = sign_vector_of_point(x, c, zero_tol);
    if (s.zero_count() != 0) {
      ++rep.skipped_nongeneric;
      continue;
    }
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      ++rep.checked;
      if (sign_vector_of_point(mats[gi] * x, c, zero_tol) != dihedral_act_sign(s, group[gi], k)) ++rep.mismatches;
    }
  }
  return rep;
}

/// x ~ y iff |x - (-y)| < eps.
inline bool borsuk_adjacent(const Vec& x, const Vec& y, double eps) { return (x + y).norm() < eps; }

/// Lexicographically first stable n-subset of S_l(sign x).
inline CircularSet point_to_vertex(const Vec& x, int l, int n, int k, double zero_tol = kDefaultZeroTol) {
  if (l != 0 && l != 1) throw std::invalid_argument("point_to_vertex: l must be 0 or 1");
  const auto c = moment_vectors(n, k);
  const auto s = sign_vector_of_point(x, c, zero_tol);
  const std::uint64_t cls = sign_class(s, l);
  for (const auto& T : enumerate_stable_sets(n, c.m))
    if ((T.bits & ~cls) == 0) return T;
  throw std::domain_error("point_to_vertex: no stable " + std::to_string(n) + "-subset in S_" + std::to_string(l) +
                          " of " + s.to_string());
}

struct GeometryRow {
  int n = 0;
  int k = 0;
  double min_norm = 0;
  double max_defect = 0;
  double identity_dev = 0;
  double rep_dev = 0;
  double v_equivariance_dev = 0;
};

inline GeometryRow geometry_row(int n, int k) {
  return {n, k, min_vertex_norm(n, k), max_edge_defect(n, k), moment_identity_deviation(n, k).max(),
          representation_deviation(representation(n, k)).max(), v_equivariance_deviation(n, k)};
}

inline std::string geometry_csv_header() { return "n,k,min_norm,max_defect,identity_dev,rep_dev,v_equivariance_dev\n"; }

inline std::string geometry_csv_line(const GeometryRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.n, r.k, r.min_norm, r.max_defect,
                r.identity_dev, r.rep_dev, r.v_equivariance_dev);
  return buf;
}

/// Rows for n in [n_lo, n_hi], computed in parallel and emitted in order.
inline std::vector<GeometryRow> geometry_sweep(int k, int n_lo, int n_hi) {
  if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("geometry_sweep: empty or invalid range");
  std::vector<GeometryRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = geometry_row(n_lo + static_cast<int>(i), k); });
  return rows;
}

}  // namespace sgk
