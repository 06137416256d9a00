#pragma once

// Split semisimple Lie algebras in the type-A matrix realization:
// sl_n with the elementary-matrix Chevalley basis, the Cartan involution
// θ = -transpose, and the Θ-subalgebras m, a, n, n̄, l, k, c(Θ1,Θ2) used by
// the stabilizer and Jacquet computations.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacquet/linalg.hpp"
#include "jacquet/root_system.hpp"

namespace jacquet {

enum class SubalgebraLabel { m, a, n, nbar, l, k, c };

inline std::string subalgebra_label_name(SubalgebraLabel l) {
  switch (l) {
    case SubalgebraLabel::m: return "m";
    case SubalgebraLabel::a: return "a";
    case SubalgebraLabel::n: return "n";
    case SubalgebraLabel::nbar: return "nbar";
    case SubalgebraLabel::l: return "l";
    case SubalgebraLabel::k: return "k";
    case SubalgebraLabel::c: return "c";
  }
  return "?";
}

struct SubalgebraBasis {
  std::string label;
  std::vector<SparseVector> vectors;  // coordinates in the LieAlgebra basis
  int dim() const { return static_cast<int>(vectors.size()); }
};

class LieAlgebra {
public:
  /// sl_n, 2 <= n <= 5. Basis order: e_beta for beta in Σ⁺ (root-system
  /// enumeration order), then f_beta, then h_1..h_{n-1}.
  explicit LieAlgebra(int n) : n_(n), rs_(RootSystem::type_a(n - 1)) {
    if (n < 2 || n > 5) throw std::invalid_argument("LieAlgebra: sl_n needs 2 <= n <= 5");
    num_pos_ = rs_.positive_count();
    dim_ = 2 * num_pos_ + rs_.rank();
    build_basis_matrices();
    build_bracket_table();
    build_theta();
  }

  int dim() const { return dim_; }
  int matrix_size() const { return n_; }
  const RootSystem& roots() const { return rs_; }
  int num_positive() const { return num_pos_; }

  int e_index(int root_idx) const { return root_idx; }
  int f_index(int root_idx) const { return num_pos_ + root_idx; }
  int h_index(int i) const { return 2 * num_pos_ + i; }

  bool is_e(int b) const { return b < num_pos_; }
  bool is_f(int b) const { return b >= num_pos_ && b < 2 * num_pos_; }
  bool is_h(int b) const { return b >= 2 * num_pos_; }
  int root_of(int b) const {  // positive-root index of an e/f basis element
    if (is_e(b)) return b;
    if (is_f(b)) return b - num_pos_;
    throw std::invalid_argument("root_of: Cartan element");
  }

  std::string basis_label(int b) const {
    auto root_name = [&](int r) {
      std::string s;
      const RootCoords& rc = rs_.positive_roots()[r];
      for (size_t i = 0; i < rc.size(); ++i)
        for (int k = 0; k < rc[i]; ++k) {
          if (!s.empty()) s += "+";
          s += std::string(1, static_cast<char>('a' + i));
        }
      return s;
    };
    if (is_e(b)) return "e[" + root_name(b) + "]";
    if (is_f(b)) return "f[" + root_name(b - num_pos_) + "]";
    return "h" + std::to_string(b - 2 * num_pos_ + 1);
  }

  /// Root-coordinate shift of a basis element's adjoint action
  /// (zero vector for Cartan elements, -beta for f_beta).
  RootCoords weight_shift(int b) const {
    RootCoords out(rs_.rank(), 0);
    if (is_h(b)) return out;
    const RootCoords& beta = rs_.positive_roots()[root_of(b)];
    for (int j = 0; j < rs_.rank(); ++j) out[j] = is_e(b) ? beta[j] : -beta[j];
    return out;
  }

  const SparseVector& bracket(int a, int b) const { return bracket_[a][b]; }

  SparseVector bracket(const SparseVector& x, const SparseVector& y) const {
    SparseVector out(dim_);
    for (const auto& [a, ca] : x.entries)
      for (const auto& [b, cb] : y.entries) out.axpy(ca * cb, bracket_[a][b]);
    return out;
  }

  SparseVector theta(const SparseVector& x) const {
    SparseVector out(dim_);
    for (const auto& [b, c] : x.entries) out.axpy(c, theta_[b]);
    return out;
  }
  const SparseVector& theta_basis(int b) const { return theta_[b]; }

  SubalgebraBasis subalgebra(const ThetaSubset& theta, SubalgebraLabel label) const {
    if (label == SubalgebraLabel::c)
      throw std::invalid_argument("subalgebra: label c needs the (Theta1,Theta2) overload");
    ParabolicRootData pd = parabolic_data(rs_, theta);
    SubalgebraBasis out;
    out.label = subalgebra_label_name(label) + "_" + theta_string(pd.theta);
    switch (label) {
      case SubalgebraLabel::n:
        for (int r : pd.n_theta_roots) out.vectors.push_back(SparseVector::unit(dim_, e_index(r)));
        break;
      case SubalgebraLabel::nbar:
        for (int r : pd.n_theta_roots) out.vectors.push_back(SparseVector::unit(dim_, f_index(r)));
        break;
      case SubalgebraLabel::m:
        for (int r : pd.sigma_theta_positive) {
          out.vectors.push_back(SparseVector::unit(dim_, e_index(r)));
          out.vectors.push_back(SparseVector::unit(dim_, f_index(r)));
        }
        for (int i : pd.theta) out.vectors.push_back(SparseVector::unit(dim_, h_index(i)));
        break;
      case SubalgebraLabel::a: {
        // {H in h : alpha(H) = 0 for alpha in Theta}; alpha_j(h_i) = a_ij
        SparseMatrix cond(static_cast<int>(pd.theta.size()), rs_.rank());
        int r = 0;
        for (int j : pd.theta) {
          for (int i = 0; i < rs_.rank(); ++i) cond.set(r, i, Rational(rs_.cartan_matrix()[i][j]));
          ++r;
        }
        for (const auto& ker : kernel(cond)) {
          SparseVector v(dim_);
          for (const auto& [i, c] : ker.entries) v.set(h_index(i), c);
          out.vectors.push_back(std::move(v));
        }
        break;
      }
      case SubalgebraLabel::l: {
        SubalgebraBasis m_part = subalgebra(theta, SubalgebraLabel::m);
        SubalgebraBasis a_part = subalgebra(theta, SubalgebraLabel::a);
        out.vectors = m_part.vectors;
        out.vectors.insert(out.vectors.end(), a_part.vectors.begin(), a_part.vectors.end());
        break;
      }
      case SubalgebraLabel::k:
        // k_Theta = span{e_beta + theta(e_beta) : beta in Sigma_Theta^+}
        for (int r : pd.sigma_theta_positive) {
          SparseVector v = SparseVector::unit(dim_, e_index(r));
          v.axpy(Rational(1), theta_[e_index(r)]);
          out.vectors.push_back(std::move(v));
        }
        break;
      case SubalgebraLabel::c:
        break;  // unreachable
    }
    return out;
  }

  /// c(Theta1,Theta2) = m_{Theta1} ∩ n̄_{Theta2} = span{f_beta : beta in Σ_{Θ1}⁺ \ Σ_{Θ2}⁺}.
  SubalgebraBasis subalgebra_c(const ThetaSubset& theta1_in, const ThetaSubset& theta2_in) const {
    ThetaSubset theta1 = theta_normalize(theta1_in), theta2 = theta_normalize(theta2_in);
    if (!theta_subset_of(theta2, theta1)) throw std::invalid_argument("subalgebra_c: need Theta2 inside Theta1");
    SubalgebraBasis out;
    out.label = "c_" + theta_string(theta1) + "_" + theta_string(theta2);
    for (int r = 0; r < num_pos_; ++r) {
      const RootCoords& beta = rs_.positive_roots()[r];
      if (root_supported_on(beta, theta1) && !root_supported_on(beta, theta2))
        out.vectors.push_back(SparseVector::unit(dim_, f_index(r)));
    }
    return out;
  }

  /// Positive-root indices of c(Theta1,Theta2); the tower code lowers by these.
  std::vector<int> c_root_indices(const ThetaSubset& theta1, const ThetaSubset& theta2) const {
    std::vector<int> out;
    for (int r = 0; r < num_pos_; ++r) {
      const RootCoords& beta = rs_.positive_roots()[r];
      if (root_supported_on(beta, theta_normalize(theta1)) && !root_supported_on(beta, theta_normalize(theta2)))
        out.push_back(r);
    }
    return out;
  }

  /// Limit of Ad(ω(t))·Lie(K) at t = t_Θ: span of {X + β(ω(t_Θ))²θ(X)}
  /// over X in the positive root spaces, where β(ω(t_Θ))² is 1 when
  /// supp(β) ⊆ Θ and 0 otherwise. (m vanishes in the split case.)
  SubalgebraBasis stabilizer_limit(const ThetaSubset& theta_in) const {
    ThetaSubset theta = theta_normalize(theta_in);
    SubalgebraBasis out;
    out.label = "stab_" + theta_string(theta);
    for (int r = 0; r < num_pos_; ++r) {
      SparseVector v = SparseVector::unit(dim_, e_index(r));
      if (root_supported_on(rs_.positive_roots()[r], theta)) v.axpy(Rational(1), theta_[e_index(r)]);
      out.vectors.push_back(std::move(v));
    }
    return out;
  }

  static std::string theta_string(const ThetaSubset& theta) {
    if (theta.empty()) return "none";
    std::string s;
    for (int i : theta) s += static_cast<char>('a' + i);
    return s;
  }

private:
  // n x n rational matrices as dense rows; only used during construction
  using Mat = std::vector<std::vector<Rational>>;

  Mat zero_mat() const { return Mat(n_, std::vector<Rational>(n_, Rational(0))); }

  void build_basis_matrices() {
    basis_mat_.resize(dim_);
    // positive root at index r is eps_i - eps_j in matrix terms: recover (i,j)
    // from the simple-root coordinates (consecutive run of ones)
    for (int r = 0; r < num_pos_; ++r) {
      const RootCoords& rc = rs_.positive_roots()[r];
      int first = -1, last = -1;
      for (int k = 0; k < rs_.rank(); ++k) {
        if (rc[k] == 1) {
          if (first < 0) first = k;
          last = k;
        } else if (rc[k] != 0) {
          throw std::logic_error("LieAlgebra: unexpected type-A root coordinates");
        }
      }
      int i = first, j = last + 1;  // root = eps_i - eps_j with i < j
      root_pos_.push_back({i, j});
      Mat e = zero_mat(), f = zero_mat();
      e[i][j] = Rational(1);
      f[j][i] = Rational(1);
      basis_mat_[e_index(r)] = std::move(e);
      basis_mat_[f_index(r)] = std::move(f);
    }
    for (int i = 0; i < rs_.rank(); ++i) {
      Mat h = zero_mat();
      h[i][i] = Rational(1);
      h[i + 1][i + 1] = Rational(-1);
      basis_mat_[h_index(i)] = std::move(h);
    }
  }

  SparseVector express_in_basis(const Mat& m) const {
    SparseVector out(dim_);
    // off-diagonal entries are e/f coordinates
    for (int r = 0; r < num_pos_; ++r) {
      auto [i, j] = root_pos_[r];
      out.set(e_index(r), m[i][j]);
      out.set(f_index(r), m[j][i]);
    }
    // diagonal: diag(d_1..d_n) with trace 0 is sum c_i h_i, c_i = d_1+...+d_i
    Rational trace(0);
    for (int i = 0; i < n_; ++i) trace += m[i][i];
    if (!trace.is_zero()) throw std::logic_error("LieAlgebra: non-traceless matrix");
    Rational acc(0);
    for (int i = 0; i < rs_.rank(); ++i) {
      acc += m[i][i];
      out.set(h_index(i), acc);
    }
    return out;
  }

  void build_bracket_table() {
    bracket_.assign(dim_, std::vector<SparseVector>(dim_, SparseVector(dim_)));
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) {
        Mat comm = zero_mat();
        const Mat& A = basis_mat_[a];
        const Mat& B = basis_mat_[b];
        for (int i = 0; i < n_; ++i)
          for (int k = 0; k < n_; ++k)
            for (int j = 0; j < n_; ++j)
              comm[i][j] += A[i][k] * B[k][j] - B[i][k] * A[k][j];
        bracket_[a][b] = express_in_basis(comm);
      }
  }

  void build_theta() {
    theta_.assign(dim_, SparseVector(dim_));
    for (int b = 0; b < dim_; ++b) {
      Mat t = zero_mat();
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[i][j] = -basis_mat_[b][j][i];
      theta_[b] = express_in_basis(t);
    }
  }

  int n_;
  RootSystem rs_;
  int num_pos_;
  int dim_;
  std::vector<Mat> basis_mat_;
  std::vector<std::pair<int, int>> root_pos_;  // matrix position (i,j) per positive root
  std::vector<std::vector<SparseVector>> bracket_;
  std::vector<SparseVector> theta_;
};

inline std::shared_ptr<const LieAlgebra> build_sl(int n) { return std::make_shared<const LieAlgebra>(n); }

/// All subsets of {0..rank-1}, ordered by size then lexicographically.
inline std::vector<ThetaSubset> all_theta_subsets(int rank) {
  std::vector<ThetaSubset> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    ThetaSubset t;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) t.push_back(i);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const ThetaSubset& a, const ThetaSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace jacquet
