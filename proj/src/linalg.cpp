#include "hh/linalg.hpp"

#include <algorithm>

namespace hh {

ExactMatrix::ExactMatrix(int rows, int cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)),
      data_(static_cast<size_t>(rows) * cols, RingElem::constant(ring_, 0)) {}

ExactMatrix ExactMatrix::identity(int n, const RingPtr& ring) {
  ExactMatrix m(n, n, ring);
  for (int i = 0; i < n; ++i) m.set(i, i, RingElem::constant(ring, 1));
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw RingError("matrix dimension mismatch in product");
  ExactMatrix out(rows_, o.cols_, ring_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RingElem& a = at(i, k);
      if (a.is_zero()) continue;  // sparse-aware: skip structural zeros
      for (int j = 0; j < o.cols_; ++j) {
        const RingElem& b = o.at(k, j);
        if (b.is_zero()) continue;
        out.set(i, j, out.at(i, j) + a * b);
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix out(rows_, cols_, ring_);
  for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  ExactMatrix out(rows_, cols_, ring_);
  for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::scaled(const RingElem& c) const {
  ExactMatrix out(rows_, cols_, ring_);
  for (int i = 0; i < rows_ * cols_; ++i) out.data_[i] = data_[i] * c;
  return out;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
  ExactMatrix out(rows_ * o.rows_, cols_ * o.cols_, ring_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const RingElem& a = at(i, j);
      if (a.is_zero()) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q) {
          const RingElem& b = o.at(p, q);
          if (b.is_zero()) continue;
          out.set(i * o.rows_ + p, j * o.cols_ + q, a * b);
        }
    }
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_ * cols_; ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const RingElem& e) { return e.is_zero(); });
}

std::vector<std::string> ExactMatrix::serialize() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (const RingElem& e : data_) out.push_back(e.to_string());
  return out;
}

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

int bareiss(IntMat& m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::vector<IntVec> nullspace(const RatMat& m, int cols) {
  RatMat a = m;
  if (a.empty()) a.emplace_back(cols, Rat(0));
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<IntVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    // Clear denominators and make primitive with positive leading entry.
    Int lcm = 1;
    for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    IntVec w(cols);
    Int g = 0;
    for (int i = 0; i < cols; ++i) {
      w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
      g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g > 1)
      for (Int& x : w) x /= g;
    basis.push_back(std::move(w));
  }
  return basis;
}

IntMat hermite_normal_form(IntMat rows) {
  if (rows.empty()) return rows;
  const int cols = static_cast<int>(rows[0].size());
  IntMat h;
  // Column-by-column row reduction by exact gcd steps (Euclidean HNF).
  int row = 0;
  for (int c = 0; c < cols; ++c) {
    // Find a row at or below `row` with nonzero entry in column c and reduce
    // all others against it.
    int p = -1;
    for (size_t i = row; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        p = static_cast<int>(i);
        break;
      }
    if (p < 0) continue;
    std::swap(rows[row], rows[p]);
    for (size_t i = row + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        Int q = rows[row][c] / rows[i][c];
        for (int j = 0; j < cols; ++j) rows[row][j] -= q * rows[i][j];
        std::swap(rows[row], rows[i]);
      }
    }
    if (rows[row][c] < 0)
      for (int j = 0; j < cols; ++j) rows[row][j] = -rows[row][j];
    ++row;
    if (row == static_cast<int>(rows.size())) break;
  }
  rows.resize(row);
  // Reduce entries above each pivot into [0, pivot).
  for (int i = row - 1; i >= 0; --i) {
    int c = 0;
    while (c < cols && rows[i][c] == 0) ++c;
    if (c == cols) continue;
    for (int k = 0; k < i; ++k) {
      Int q = rows[k][c] / rows[i][c];
      if (rows[k][c] - q * rows[i][c] < 0) q -= 1;  // floor division
      if (q == 0) continue;
      for (int j = 0; j < cols; ++j) rows[k][j] -= q * rows[i][j];
    }
  }
  return rows;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.empty()) {
    for (const Rat& x : b)
      if (x != 0) return std::nullopt;
    return RatVec{};
  }
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  RatMat aug = a;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots = rref(aug);
  RatVec x(cols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the b column
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

bool IncrementalSpan::insert(Vec v) {
  const int my_index = n_inserted_;
  std::map<int, Rat> expr;
  expr[my_index] = 1;
  // Reduce against existing rows, tracking the generator combination.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = v.begin(); it != v.end(); ++it) {
      auto row = basis_.find(it->first);
      if (row == basis_.end()) continue;
      Rat f = it->second;
      for (const auto& [k, c] : row->second.vec) v[k] -= f * c;
      for (const auto& [k, c] : row->second.expr) expr[k] -= f * c;
      for (auto jt = v.begin(); jt != v.end();) {
        if (jt->second == 0)
          jt = v.erase(jt);
        else
          ++jt;
      }
      changed = true;
      break;
    }
  }
  n_inserted_++;
  for (auto jt = expr.begin(); jt != expr.end();) {
    if (jt->second == 0)
      jt = expr.erase(jt);
    else
      ++jt;
  }
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  Rat lead = v.begin()->second;
  for (auto& [k, c] : v) c /= lead;
  for (auto& [k, c] : expr) c /= lead;
  basis_[pivot] = Row{std::move(v), std::move(expr)};
  return true;
}

IncrementalSpan::Vec IncrementalSpan::reduce(Vec v) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = v.begin(); it != v.end(); ++it) {
      auto row = basis_.find(it->first);
      if (row == basis_.end()) continue;
      Rat f = it->second;
      for (const auto& [k, c] : row->second.vec) v[k] -= f * c;
      for (auto jt = v.begin(); jt != v.end();) {
        if (jt->second == 0)
          jt = v.erase(jt);
        else
          ++jt;
      }
      changed = true;
      break;
    }
  }
  return v;
}

std::optional<std::map<int, Rat>> IncrementalSpan::express(Vec v) const {
  std::map<int, Rat> expr;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = v.begin(); it != v.end(); ++it) {
      auto row = basis_.find(it->first);
      if (row == basis_.end()) continue;
      Rat f = it->second;
      for (const auto& [k, c] : row->second.vec) v[k] -= f * c;
      for (const auto& [k, c] : row->second.expr) expr[k] += f * c;
      for (auto jt = v.begin(); jt != v.end();) {
        if (jt->second == 0)
          jt = v.erase(jt);
        else
          ++jt;
      }
      changed = true;
      break;
    }
  }
  if (!v.empty()) return std::nullopt;
  for (auto jt = expr.begin(); jt != expr.end();) {
    if (jt->second == 0)
      jt = expr.erase(jt);
    else
      ++jt;
  }
  return expr;
}

}  // namespace hh
