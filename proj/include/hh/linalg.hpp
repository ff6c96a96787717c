#pragma once

/**
 * Exact linear algebra.
 *
 * Two layers:
 *  - ExactMatrix: a dense matrix with entries in an arbitrary CoeffRing,
 *    used for operator/braiding identities (multiplication, Kronecker
 *    products, exact equality).
 *  - Elimination over the rationals and integers: fraction-free (Bareiss)
 *    elimination, rational RREF, nullspace, linear solving, Hermite normal
 *    form, and an incremental echelon span with certificate tracking.
 */

#include <map>
#include <optional>
#include <vector>

#include "hh/rings.hpp"

namespace hh {

/// Dense matrix over a CoeffRing.  Entries are canonical RingElems.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols, RingPtr ring);
  static ExactMatrix identity(int n, const RingPtr& ring);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }

  const RingElem& at(int r, int c) const { return data_[r * cols_ + c]; }
  void set(int r, int c, RingElem v) { data_[r * cols_ + c] = std::move(v); }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const RingElem& c) const;
  /// Kronecker (tensor) product, row-major block convention.
  ExactMatrix kron(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  /// Row-major serialization of entries as strings (report format).
  std::vector<std::string> serialize() const;

 private:
  int rows_ = 0, cols_ = 0;
  RingPtr ring_;
  std::vector<RingElem> data_;
};

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& m);
int rank(RatMat m);

/// Fraction-free Gaussian elimination (Bareiss) in place; returns the rank.
/// The resulting matrix is upper echelon with integer entries.
int bareiss(IntMat& m);

/// Basis of the rational nullspace of m (cols(m)-dimensional vectors),
/// scaled to primitive integer vectors.
std::vector<IntVec> nullspace(const RatMat& m, int cols);

/// Row-style Hermite normal form of the lattice spanned by the input rows:
/// deterministic canonical basis (pivots positive, entries above pivots
/// reduced into [0, pivot)).  Zero rows dropped.
IntMat hermite_normal_form(IntMat rows);

/// Solve A x = b over the rationals; returns a solution if one exists.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/**
 * Growing echelonized subspace of a sparse coordinate space, with the
 * expression of every basis vector in terms of the inserted generators.
 * Coordinates are arbitrary (map keys); certificates index the insertion
 * order of accepted generators.
 */
class IncrementalSpan {
 public:
  using Vec = std::map<int, Rat>;  ///< sparse coordinate -> value

  /// Insert a generator; returns true if it enlarged the span.
  bool insert(Vec v);
  /// Reduce v against the span; returns the residual.
  Vec reduce(Vec v) const;
  /// If v lies in the span, the combination of inserted generators producing
  /// it (index -> coefficient); otherwise nullopt.
  std::optional<std::map<int, Rat>> express(Vec v) const;
  int dimension() const { return static_cast<int>(basis_.size()); }
  int generators_seen() const { return n_inserted_; }

 private:
  struct Row {
    Vec vec;                     // echelon vector, leading coeff 1
    std::map<int, Rat> expr;     // combination of generators giving vec
  };
  std::map<int, Row> basis_;     // pivot coordinate -> row
  int n_inserted_ = 0;
};

}  // namespace hh
