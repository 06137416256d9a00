#pragma once

// Sparse exact linear algebra over the rationals. All pivoting is by lowest
// index, so echelon forms (and everything derived from them) are canonical
// and reproducible bit-for-bit.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacquet/rational.hpp"

namespace jacquet {

struct SparseVector {
  int dim = 0;
  std::map<int, Rational> entries;  // index -> nonzero value

  SparseVector() = default;
  explicit SparseVector(int d) : dim(d) {}

  static SparseVector unit(int dim, int i) {
    SparseVector v(dim);
    v.set(i, Rational(1));
    return v;
  }
  static SparseVector dense(const std::vector<Rational>& coords) {
    SparseVector v(static_cast<int>(coords.size()));
    for (int i = 0; i < v.dim; ++i)
      if (!coords[i].is_zero()) v.entries[i] = coords[i];
    return v;
  }

  bool is_zero() const { return entries.empty(); }

  Rational get(int i) const {
    auto it = entries.find(i);
    return it == entries.end() ? Rational(0) : it->second;
  }
  void set(int i, const Rational& val) {
    if (i < 0 || i >= dim) throw std::out_of_range("SparseVector::set index");
    if (val.is_zero())
      entries.erase(i);
    else
      entries[i] = val;
  }

  /// Lowest nonzero index, or -1.
  int leading_index() const { return entries.empty() ? -1 : entries.begin()->first; }

  SparseVector& axpy(const Rational& c, const SparseVector& w) {
    if (c.is_zero()) return *this;
    for (const auto& [i, val] : w.entries) {
      Rational r = get(i) + c * val;
      set(i, r);
    }
    return *this;
  }
  SparseVector& scale(const Rational& c) {
    if (c.is_zero()) {
      entries.clear();
      return *this;
    }
    for (auto& [i, val] : entries) val *= c;
    return *this;
  }

  std::vector<Rational> to_dense() const {
    std::vector<Rational> out(dim, Rational(0));
    for (const auto& [i, val] : entries) out[i] = val;
    return out;
  }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim == b.dim && a.entries == b.entries;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a.axpy(Rational(1), b); }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a.axpy(Rational(-1), b); }
  friend SparseVector operator*(const Rational& c, SparseVector v) { return v.scale(c); }
};

struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, Rational>> row;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.row[i][i] = Rational(1);
    return m;
  }

  Rational get(int i, int j) const {
    auto it = row[i].find(j);
    return it == row[i].end() ? Rational(0) : it->second;
  }
  void set(int i, int j, const Rational& val) {
    if (i < 0 || i >= rows || j < 0 || j >= cols) throw std::out_of_range("SparseMatrix::set");
    if (val.is_zero())
      row[i].erase(j);
    else
      row[i][j] = val;
  }

  SparseVector row_vector(int i) const {
    SparseVector v(cols);
    v.entries = row[i];
    return v;
  }

  SparseVector apply(const SparseVector& x) const {
    if (x.dim != cols) throw std::invalid_argument("SparseMatrix::apply dimension mismatch");
    SparseVector out(rows);
    for (int i = 0; i < rows; ++i) {
      Rational acc(0);
      for (const auto& [j, val] : row[i]) acc += val * x.get(j);
      if (!acc.is_zero()) out.entries[i] = acc;
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("SparseMatrix::mul dimension mismatch");
    SparseMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
      for (const auto& [k, av] : a.row[i])
        for (const auto& [j, bv] : b.row[k]) {
          Rational r = out.get(i, j) + av * bv;
          out.set(i, j, r);
        }
    return out;
  }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("SparseMatrix::sub shape");
    for (int i = 0; i < a.rows; ++i)
      for (const auto& [j, val] : b.row[i]) a.set(i, j, a.get(i, j) - val);
    return a;
  }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.row == b.row;
  }

  SparseMatrix pow(int k) const {
    if (rows != cols) throw std::invalid_argument("SparseMatrix::pow non-square");
    SparseMatrix acc = identity(rows);
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
  }
};

/// Incrementally maintained reduced row echelon basis of a span.
/// Rows are fully inter-reduced with unit pivots, so `rows()` is the
/// canonical RREF of the spanned subspace.
class SpanBasis {
public:
  SpanBasis() = default;
  explicit SpanBasis(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Residual of v after eliminating all current pivots. Rows are fully
  /// inter-reduced, so eliminating one pivot never creates an entry at
  /// another pivot column and a single upfront pass finds every hit.
  SparseVector reduce(SparseVector v) const {
    if (v.dim != dim_) throw std::invalid_argument("SpanBasis::reduce dimension mismatch");
    std::vector<std::pair<int, Rational>> hits;
    for (const auto& [i, val] : v.entries)
      if (rows_.count(i) > 0) hits.emplace_back(i, val);
    for (const auto& [i, c] : hits) v.axpy(-c, rows_.at(i));
    return v;
  }

  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

  /// Insert v; returns true if the rank grew.
  bool insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.is_zero()) return false;
    int p = r.leading_index();
    r.scale(Rational(1) / r.entries.begin()->second);
    for (auto& [piv, rowv] : rows_) {
      (void)piv;
      Rational c = rowv.get(p);
      if (!c.is_zero()) rowv.axpy(-c, r);
    }
    rows_[p] = std::move(r);
    return true;
  }

  /// Canonical rows ordered by pivot.
  std::vector<SparseVector> rows() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [piv, rowv] : rows_) {
      (void)piv;
      out.push_back(rowv);
    }
    return out;
  }

  std::vector<int> pivots() const {
    std::vector<int> out;
    for (const auto& [piv, rowv] : rows_) {
      (void)rowv;
      out.push_back(piv);
    }
    return out;
  }

  friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
    return a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

private:
  int dim_ = 0;
  std::map<int, SparseVector> rows_;  // pivot index -> row
};

struct RrefResult {
  SparseMatrix reduced;      // canonical rows first, then zero rows
  std::vector<int> pivots;   // strictly increasing
  int rank = 0;
};

inline RrefResult rref(const SparseMatrix& m) {
  SpanBasis basis(m.cols);
  for (int i = 0; i < m.rows; ++i) basis.insert(m.row_vector(i));
  RrefResult out;
  out.reduced = SparseMatrix(m.rows, m.cols);
  int i = 0;
  for (const auto& r : basis.rows()) out.reduced.row[i++] = r.entries;
  out.pivots = basis.pivots();
  out.rank = basis.rank();
  return out;
}

/// Basis of the kernel {x : m x = 0}, canonical (one vector per free column,
/// ordered by free column index).
inline std::vector<SparseVector> kernel(const SparseMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<SparseVector> out;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    SparseVector v(m.cols);
    v.set(j, Rational(1));
    for (int i = 0; i < r.rank; ++i) {
      Rational c = r.reduced.get(i, j);
      if (!c.is_zero()) v.set(r.pivots[i], -c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline int span_rank(const std::vector<SparseVector>& vecs, int dim) {
  SpanBasis b(dim);
  for (const auto& v : vecs) b.insert(v);
  return b.rank();
}

inline bool subspace_equal(const std::vector<SparseVector>& a, const std::vector<SparseVector>& b, int dim) {
  for (const auto& v : a)
    if (v.dim != dim) throw std::invalid_argument("subspace_equal: dimension mismatch");
  for (const auto& v : b)
    if (v.dim != dim) throw std::invalid_argument("subspace_equal: dimension mismatch");
  SpanBasis sa(dim), sb(dim);
  for (const auto& v : a) sa.insert(v);
  for (const auto& v : b) sb.insert(v);
  return sa == sb;
}

/// dim span(ambient) - dim span(sub); requires sub ⊆ span(ambient).
inline int quotient_dim(const std::vector<SparseVector>& ambient, const std::vector<SparseVector>& sub, int dim) {
  SpanBasis amb(dim);
  for (const auto& v : ambient) amb.insert(v);
  SpanBasis s(dim);
  for (const auto& v : sub) {
    if (!amb.contains(v)) throw std::invalid_argument("quotient_dim: sub not contained in ambient span");
    s.insert(v);
  }
  return amb.rank() - s.rank();
}

/// Kernel of (op - eigenvalue·id)^order_bound.
inline std::vector<SparseVector> generalized_eigenspace(const SparseMatrix& op, const Rational& eigenvalue,
                                                        int order_bound) {
  if (op.rows != op.cols) throw std::invalid_argument("generalized_eigenspace: non-square matrix");
  SparseMatrix shifted = op;
  for (int i = 0; i < op.rows; ++i) shifted.set(i, i, shifted.get(i, i) - eigenvalue);
  return kernel(shifted.pow(order_bound));
}

/// Echelon container that also tracks how each row was formed from the
/// inserted generators, so members of the span can be expressed in them.
class ExpressingSpan {
public:
  explicit ExpressingSpan(int dim, int max_generators) : dim_(dim), gen_cap_(max_generators) {}

  int generator_count() const { return gen_count_; }

  /// Insert a generator; returns its index (even if dependent).
  int insert(const SparseVector& v) {
    if (gen_count_ >= gen_cap_) throw std::logic_error("ExpressingSpan: generator capacity exceeded");
    int gi = gen_count_++;
    SparseVector coeff(gen_cap_);
    coeff.set(gi, Rational(1));
    SparseVector r = v;
    reduce_tracked(r, coeff);
    if (!r.is_zero()) {
      Rational lead = r.entries.begin()->second;
      r.scale(Rational(1) / lead);
      coeff.scale(Rational(1) / lead);
      rows_[r.leading_index()] = {r, coeff};
    }
    return gi;
  }

  /// Coefficients c with v = Σ c_i · generator_i, or nullopt.
  std::optional<SparseVector> express(const SparseVector& v) const {
    SparseVector r = v;
    SparseVector coeff(gen_cap_);
    reduce_tracked(r, coeff);
    if (!r.is_zero()) return std::nullopt;
    return coeff.scale(Rational(-1));
  }

private:
  void reduce_tracked(SparseVector& r, SparseVector& coeff) const {
    bool progress = true;
    while (progress && !r.is_zero()) {
      progress = false;
      for (const auto& [i, val] : r.entries) {
        auto rit = rows_.find(i);
        if (rit != rows_.end()) {
          Rational c = val;
          r.axpy(-c, rit->second.first);
          coeff.axpy(-c, rit->second.second);
          progress = true;
          break;
        }
      }
    }
  }

  int dim_;
  int gen_cap_;
  int gen_count_ = 0;
  std::map<int, std::pair<SparseVector, SparseVector>> rows_;
};

}  // namespace jacquet
