#pragma once
#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "algrest/rational.hpp"

namespace algrest {

using Vec = std::vector<Rat>;

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> entries;  // dense, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rat& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  Vec row(std::size_t r) const {
    return Vec(entries.begin() + r * cols, entries.begin() + (r + 1) * cols);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

inline Vec mat_vec(const Matrix& m, const Vec& x) {
  if (x.size() != m.cols) throw Error("matrix/vector dimension mismatch");
  Vec y(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    Rat acc = 0;
    for (std::size_t c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0 && x[c] != 0) acc += m.at(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw Error("matrix dimension mismatch");
  Matrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      if (a.at(i, k) != 0)
        for (std::size_t j = 0; j < b.cols; ++j)
          if (b.at(k, j) != 0) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

// Incremental reduced row echelon form. Rows are added one at a time and kept
// fully reduced; pivots are the first nonzero column of each stored row
// (deterministic output). Optionally tracks each stored row as a combination
// of the raw input rows, which is what back-solving and feasibility tests use.
class Echelon {
 public:
  explicit Echelon(std::size_t width, bool track_history = false)
      : width_(width), track_(track_history) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs_seen() const { return n_inputs_; }

  const std::vector<std::size_t>& pivots() const { return pivot_cols_; }

  // Reduces v against the stored rows. Returns the residual; if `combo` is
  // non-null and history is tracked, *combo receives coefficients expressing
  // v - residual over the previously added input rows.
  Vec reduce(Vec v, Vec* combo = nullptr) const {
    if (v.size() != width_) throw Error("echelon width mismatch");
    if (combo) combo->assign(n_inputs_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& c = v[pivot_cols_[i]];
      if (c == 0) continue;
      Rat f = c;  // rows are normalized to pivot 1
      sub_scaled(v, rows_[i], f);
      if (combo && track_) add_scaled_resize(*combo, hist_[i], f);
    }
    return v;
  }

  // Adds a row; returns true if it increased the rank.
  bool add_row(Vec v) {
    Vec h;
    if (track_) {
      h.assign(n_inputs_ + 1, Rat(0));
      h[n_inputs_] = 1;
    }
    ++n_inputs_;
    // reduce against existing rows, carrying history
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& c = v[pivot_cols_[i]];
      if (c == 0) continue;
      Rat f = c;
      sub_scaled(v, rows_[i], f);
      if (track_) sub_scaled_resize(h, hist_[i], f);
    }
    std::size_t p = first_nonzero(v);
    if (p == width_) return false;
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    if (track_) for (auto& x : h) x *= inv;
    // keep reduced form: eliminate the new pivot from stored rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& c = rows_[i][p];
      if (c == 0) continue;
      Rat f = c;
      sub_scaled(rows_[i], v, f);
      if (track_) sub_scaled_resize(hist_[i], h, f);
    }
    // insert keeping pivot columns sorted
    std::size_t pos = 0;
    while (pos < pivot_cols_.size() && pivot_cols_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_cols_.insert(pivot_cols_.begin() + pos, p);
    if (track_) hist_.insert(hist_.begin() + pos, std::move(h));
    return true;
  }

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<Vec>& history() const { return hist_; }

 private:
  static std::size_t first_nonzero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return v.size();
  }
  static void sub_scaled(Vec& a, const Vec& b, const Rat& f) {
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) a[i] -= f * b[i];
  }
  static void add_scaled_resize(Vec& a, const Vec& b, const Rat& f) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) a[i] += f * b[i];
  }
  static void sub_scaled_resize(Vec& a, const Vec& b, const Rat& f) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) a[i] -= f * b[i];
  }

  std::size_t width_;
  bool track_;
  std::size_t n_inputs_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<Vec> hist_;
};

// ---- spec surface -----------------------------------------------------------

inline std::pair<Matrix, std::vector<std::size_t>> row_reduce(const Matrix& m) {
  Echelon e(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) e.add_row(m.row(r));
  Matrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t c = 0; c < m.cols; ++c) out.at(i, c) = e.rows()[i][c];
  return {out, e.pivots()};
}

inline std::size_t rank(const Matrix& m) {
  Echelon e(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) e.add_row(m.row(r));
  return e.rank();
}

// Exact solution of m x = b, if one exists.
inline std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows) throw Error("solve: rhs length != rows");
  Echelon e(m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    Vec row = m.row(r);
    row.push_back(b[r]);
    e.add_row(std::move(row));
  }
  // infeasible iff some pivot lands in the augmented column
  for (std::size_t p : e.pivots())
    if (p == m.cols) return std::nullopt;
  Vec x(m.cols, Rat(0));
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots()[i]] = e.rows()[i][m.cols];
  return x;
}

inline std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) e.add_row(m.row(r));
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : e.pivots()) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols, Rat(0));
    v[j] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots()[i]] = -e.rows()[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Layered linear system A u = b(p) whose rows arrive in layers and whose right
// hand side is a linear function of a small parameter vector p. One exact
// elimination is shared by every query; a query only evaluates the collected
// inconsistency functionals. Used by the tangency-order searches, where layer
// k holds the order-k jet constraints.
class LayeredSystem {
 public:
  LayeredSystem(std::size_t unknowns, std::size_t params)
      : unknowns_(unknowns), params_(params), ech_(unknowns + params) {}

  std::size_t layers() const { return layer_constraints_.size(); }
  void begin_layer() { layer_constraints_.emplace_back(); }

  // Row: sum_j a[j] u_j = sum_t rp[t] p_t.
  void add_row(Vec a, const Vec& rp) {
    if (a.size() != unknowns_ || rp.size() != params_)
      throw Error("layered system row shape");
    a.insert(a.end(), rp.begin(), rp.end());
    Vec res = ech_.reduce(std::move(a));
    bool zero_u = true;
    for (std::size_t j = 0; j < unknowns_; ++j)
      if (res[j] != 0) { zero_u = false; break; }
    if (!zero_u) {
      ech_.add_row(std::move(res));
      return;
    }
    Vec f(res.begin() + unknowns_, res.end());
    if (!is_zero(f)) layer_constraints_.back().push_back(std::move(f));
  }

  // Largest L such that layers 1..L are simultaneously consistent at p
  // (0 when even the first layer fails).
  std::size_t max_consistent_layer(const Vec& p) const {
    for (std::size_t l = 0; l < layer_constraints_.size(); ++l)
      for (const Vec& f : layer_constraints_[l]) {
        Rat acc = 0;
        for (std::size_t t = 0; t < params_; ++t)
          if (f[t] != 0) acc += f[t] * p[t];
        if (acc != 0) return l;
      }
    return layer_constraints_.size();
  }

 private:
  std::size_t unknowns_, params_;
  Echelon ech_;
  std::vector<std::vector<Vec>> layer_constraints_;
};

}  // namespace algrest
