#pragma once

// Finite root systems from Cartan matrices, Θ-parabolic root combinatorics,
// fundamental coweights and cocharacters.
//
// Coordinate conventions used throughout the project:
//  * roots are integer vectors in the simple-root basis;
//  * coweights are rational vectors in the fundamental-coweight basis
//    {ω_i^∨}, dual to the simple roots, so β(H) is a plain dot product;
//  * weights in h^* are carried in simple-root coordinates ("root coords");
//    the public surface speaks fundamental-weight coordinates and the two
//    are exchanged by the Cartan matrix and its inverse;
//  * restriction of a weight to a_Θ^* keeps the root coordinates at indices
//    outside Θ.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacquet/linalg.hpp"
#include "jacquet/rational.hpp"

namespace jacquet {

using RootCoords = std::vector<int>;        // root in simple-root basis
using WeightCoords = std::vector<Rational>; // weight, simple-root basis
using CoweightCoords = std::vector<Rational>;
using ThetaSubset = std::vector<int>;       // sorted simple-root indices

inline bool theta_contains(const ThetaSubset& theta, int i) {
  return std::binary_search(theta.begin(), theta.end(), i);
}
inline bool theta_subset_of(const ThetaSubset& a, const ThetaSubset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline ThetaSubset theta_normalize(ThetaSubset t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

class RootSystem {
public:
  /// Build from a finite-type Cartan matrix a[i][j] = <alpha_j, alpha_i^vee>,
  /// rank at most 4. Rejects anything that is not finite type.
  explicit RootSystem(std::vector<std::vector<long>> cartan) : cartan_(std::move(cartan)) {
    rank_ = static_cast<int>(cartan_.size());
    validate_cartan();
    enumerate_positive_roots();
    invert_cartan();
  }

  static RootSystem type_a(int n) {  // A_n
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) {
      c[i][i] = 2;
      if (i + 1 < n) c[i][i + 1] = -1;
      if (i > 0) c[i][i - 1] = -1;
    }
    return RootSystem(std::move(c));
  }

  int rank() const { return rank_; }
  const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  int positive_count() const { return static_cast<int>(positive_.size()); }

  int root_index(const RootCoords& r) const {
    auto it = root_index_.find(r);
    return it == root_index_.end() ? -1 : it->second;
  }
  bool is_positive_root(const RootCoords& r) const { return root_index_.count(r) > 0; }

  static int height(const RootCoords& r) {
    int h = 0;
    for (int c : r) h += c;
    return h;
  }
  int max_root_height() const {
    int h = 0;
    for (const auto& r : positive_) h = std::max(h, height(r));
    return h;
  }

  /// <beta, alpha_i^vee> for beta in root coords.
  long coroot_pairing(const RootCoords& beta, int i) const {
    long acc = 0;
    for (int j = 0; j < rank_; ++j) acc += cartan_[i][j] * beta[j];
    return acc;
  }

  /// Coordinates of alpha_i^vee in the fundamental-coweight basis
  /// (row i of the Cartan matrix).
  CoweightCoords coroot(int i) const {
    CoweightCoords out(rank_);
    for (int j = 0; j < rank_; ++j) out[j] = Rational(cartan_[i][j]);
    return out;
  }

  /// Fundamental coweight ω_α: α(ω_α) = 1, β(ω_α) = 0 for other simples.
  CoweightCoords fundamental_coweight(int alpha) const {
    if (alpha < 0 || alpha >= rank_) throw std::invalid_argument("fundamental_coweight: bad index");
    CoweightCoords out(rank_, Rational(0));
    out[alpha] = Rational(1);
    return out;
  }

  /// Value of a root on a coweight: plain dot product in these bases.
  Rational eval_root(const RootCoords& beta, const CoweightCoords& h) const {
    Rational acc(0);
    for (int j = 0; j < rank_; ++j) acc += Rational(beta[j]) * h[j];
    return acc;
  }
  Rational eval_weight(const WeightCoords& mu_root_coords, const CoweightCoords& h) const {
    Rational acc(0);
    for (int j = 0; j < rank_; ++j) acc += mu_root_coords[j] * h[j];
    return acc;
  }

  /// Fundamental-weight coords -> simple-root coords (by A^{-1}).
  WeightCoords fund_to_root(const WeightCoords& fund) const {
    WeightCoords out(rank_, Rational(0));
    for (int j = 0; j < rank_; ++j)
      for (int i = 0; i < rank_; ++i) out[j] += cartan_inv_[j][i] * fund[i];
    return out;
  }
  /// Simple-root coords -> fundamental-weight coords (by A).
  WeightCoords root_to_fund(const WeightCoords& rc) const {
    WeightCoords out(rank_, Rational(0));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) out[i] += Rational(cartan_[i][j]) * rc[j];
    return out;
  }

  /// Restriction of a weight (root coords) to a_Θ^*: coordinates outside Θ.
  WeightCoords restrict(const WeightCoords& mu_root_coords, const ThetaSubset& theta) const {
    WeightCoords out;
    for (int j = 0; j < rank_; ++j)
      if (!theta_contains(theta, j)) out.push_back(mu_root_coords[j]);
    return out;
  }

private:
  void validate_cartan() {
    if (rank_ < 1 || rank_ > 4) throw std::invalid_argument("RootSystem: rank must be between 1 and 4");
    for (int i = 0; i < rank_; ++i) {
      if (static_cast<int>(cartan_[i].size()) != rank_) throw std::invalid_argument("RootSystem: ragged matrix");
      if (cartan_[i][i] != 2) throw std::invalid_argument("RootSystem: diagonal must be 2");
      for (int j = 0; j < rank_; ++j) {
        if (i == j) continue;
        if (cartan_[i][j] > 0) throw std::invalid_argument("RootSystem: positive off-diagonal entry");
        if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
          throw std::invalid_argument("RootSystem: zero pattern not symmetric");
      }
    }
    // Symmetrize: find d_i > 0 with d_i a_ij = d_j a_ji, then require the
    // symmetrized matrix to be positive definite (finite type).
    std::vector<Rational> d(rank_, Rational(0));
    d[0] = Rational(1);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
          if (cartan_[i][j] == 0 || d[i].is_zero() || !d[j].is_zero()) continue;
          d[j] = d[i] * Rational(cartan_[i][j], 1) / Rational(cartan_[j][i], 1);
          progress = true;
        }
    }
    for (int i = 0; i < rank_; ++i)
      if (d[i].is_zero()) d[i] = Rational(1);  // disconnected component
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (d[i] * Rational(cartan_[i][j]) != d[j] * Rational(cartan_[j][i]))
          throw std::invalid_argument("RootSystem: matrix not symmetrizable");
    // leading principal minors of (d_i a_ij)
    std::vector<std::vector<Rational>> b(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) b[i][j] = d[i] * Rational(cartan_[i][j]);
    for (int k = 1; k <= rank_; ++k)
      if (leading_minor(b, k).sign() <= 0)
        throw std::invalid_argument("RootSystem: Cartan matrix is not of finite type");
  }

  static Rational leading_minor(const std::vector<std::vector<Rational>>& b, int k) {
    // fraction-free is unnecessary at rank <= 4; plain elimination
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = b[i][j];
    Rational det(1);
    for (int col = 0; col < k; ++col) {
      int piv = -1;
      for (int r = col; r < k; ++r)
        if (!m[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return Rational(0);
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (int r = col + 1; r < k; ++r) {
        Rational f = m[r][col] / m[col][col];
        for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
      }
    }
    return det;
  }

  void enumerate_positive_roots() {
    std::set<RootCoords> roots;
    for (int i = 0; i < rank_; ++i) {
      RootCoords simple(rank_, 0);
      simple[i] = 1;
      roots.insert(simple);
    }
    // close under root strings: beta + alpha_i is a root iff p - <beta,a_i^vee> > 0
    // where p = max{k : beta - k alpha_i is a root}
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<RootCoords> current(roots.begin(), roots.end());
      for (const auto& beta : current) {
        for (int i = 0; i < rank_; ++i) {
          int p = 0;
          RootCoords down = beta;
          while (true) {
            down[i] -= 1;
            bool nonneg = true;
            for (int c : down) nonneg = nonneg && c >= 0;
            if (!nonneg || roots.count(down) == 0) break;
            ++p;
          }
          long pairing = coroot_pairing(beta, i);
          if (p - pairing > 0) {
            RootCoords up = beta;
            up[i] += 1;
            if (roots.insert(up).second) grew = true;
          }
        }
      }
      if (roots.size() > 64) throw std::logic_error("RootSystem: enumeration runaway");
    }
    positive_.assign(roots.begin(), roots.end());
    std::sort(positive_.begin(), positive_.end(), [](const RootCoords& a, const RootCoords& b) {
      int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    for (int idx = 0; idx < static_cast<int>(positive_.size()); ++idx) root_index_[positive_[idx]] = idx;
  }

  void invert_cartan() {
    // Gauss-Jordan on [A | I]
    int n = rank_;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = Rational(cartan_[i][j]);
      m[i][n + i] = Rational(1);
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!m[r][col].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::logic_error("RootSystem: singular Cartan matrix");
      std::swap(m[piv], m[col]);
      Rational inv = Rational(1) / m[col][col];
      for (auto& x : m[col]) x *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        Rational f = m[r][col];
        if (f.is_zero()) continue;
        for (int c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
      }
    }
    cartan_inv_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cartan_inv_[i][j] = m[i][n + j];
  }

  int rank_;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<RootCoords> positive_;
  std::map<RootCoords, int> root_index_;
};

inline RootSystem build_root_system(const std::vector<std::vector<long>>& cartan) { return RootSystem(cartan); }

/// Σ_Θ⁺ / n_Θ split of the positive roots plus the exact a_Θ data.
struct ParabolicRootData {
  ThetaSubset theta;
  std::vector<int> sigma_theta_positive;  // indices into positive_roots()
  std::vector<int> n_theta_roots;         // complement
  std::vector<CoweightCoords> a_theta_basis;
  std::vector<CoweightCoords> coweights;  // ω_α for α in Π
};

inline bool root_supported_on(const RootCoords& beta, const ThetaSubset& theta) {
  for (int j = 0; j < static_cast<int>(beta.size()); ++j)
    if (beta[j] != 0 && !theta_contains(theta, j)) return false;
  return true;
}

inline ParabolicRootData parabolic_data(const RootSystem& rs, const ThetaSubset& theta_in) {
  ThetaSubset theta = theta_normalize(theta_in);
  for (int i : theta)
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("parabolic_data: index outside Pi");
  ParabolicRootData out;
  out.theta = theta;
  for (int idx = 0; idx < rs.positive_count(); ++idx) {
    if (root_supported_on(rs.positive_roots()[idx], theta))
      out.sigma_theta_positive.push_back(idx);
    else
      out.n_theta_roots.push_back(idx);
  }
  for (int j = 0; j < rs.rank(); ++j)
    if (!theta_contains(theta, j)) out.a_theta_basis.push_back(rs.fundamental_coweight(j));
  for (int j = 0; j < rs.rank(); ++j) out.coweights.push_back(rs.fundamental_coweight(j));
  return out;
}

struct Cocharacter {
  std::vector<long> exponents;  // n_alpha per simple root
  CoweightCoords h;             // derivative dν(1)

  /// Simple roots annihilated by ν.
  ThetaSubset vanishing_set() const {
    ThetaSubset out;
    for (int i = 0; i < static_cast<int>(exponents.size()); ++i)
      if (exponents[i] == 0) out.push_back(i);
    return out;
  }
};

/// ν with α(H) = n_α on Θ1\Θ2, α(H) = 0 on Θ2 and on Π\Θ1.
/// Requires Θ2 ⊆ Θ1 and n_α ≥ 1 on Θ1\Θ2.
inline Cocharacter cocharacter_from_exponents(const RootSystem& rs, const ThetaSubset& theta1_in,
                                              const ThetaSubset& theta2_in, const std::map<int, long>& n) {
  ThetaSubset theta1 = theta_normalize(theta1_in);
  ThetaSubset theta2 = theta_normalize(theta2_in);
  if (!theta_subset_of(theta2, theta1)) throw std::invalid_argument("cocharacter: need Theta2 inside Theta1");
  Cocharacter nu;
  nu.exponents.assign(rs.rank(), 0);
  for (int alpha = 0; alpha < rs.rank(); ++alpha) {
    bool in1 = theta_contains(theta1, alpha), in2 = theta_contains(theta2, alpha);
    if (in1 && !in2) {
      auto it = n.find(alpha);
      if (it == n.end() || it->second < 1)
        throw std::invalid_argument("cocharacter: exponent must be >= 1 on Theta1 minus Theta2");
      nu.exponents[alpha] = it->second;
    }
  }
  nu.h.assign(rs.rank(), Rational(0));
  for (int alpha = 0; alpha < rs.rank(); ++alpha) nu.h[alpha] = Rational(nu.exponents[alpha]);
  return nu;
}

/// Membership of μ in Λ - Z_{≥0}·Π|_{a_Θ}. All vectors are a_Θ^*-vectors,
/// i.e. root coordinates at the indices outside Θ. Decided by the bounded
/// search certified by coordinate positivity: the restricted simple roots
/// are the coordinate unit vectors (for α outside Θ) and 0 (for α in Θ), so
/// μ = λ - Σ n_α α| forces n_α = λ_c - μ_c coordinatewise.
inline bool weight_in_cone(const WeightCoords& mu, const std::vector<WeightCoords>& lambda_set) {
  for (const auto& lam : lambda_set) {
    if (lam.size() != mu.size()) throw std::invalid_argument("weight_in_cone: dimension mismatch");
    bool ok = true;
    for (size_t c = 0; c < mu.size() && ok; ++c) {
      Rational diff = lam[c] - mu[c];
      ok = diff.is_integer() && diff.sign() >= 0;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace jacquet
