#pragma once

/**
 * Sparse linear combinations of words over indexed noncommuting generators,
 * over any CoeffRing.  Substrate for the D-part of the Hecke-Hopf algebra,
 * Taft-type algebras, and Fomin-Kirillov-type quadratic algebras.
 */

#include <map>
#include <vector>

#include "hh/rings.hpp"

namespace hh {

/// A word in noncommuting generators; empty = unit word.
using NCWord = std::vector<int>;

/// Words ordered by (length, lexicographic) for deterministic iteration.
struct NCWordOrder {
  bool operator()(const NCWord& a, const NCWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

class NCElement {
 public:
  NCElement() = default;
  explicit NCElement(RingPtr ring) : ring_(std::move(ring)) {}
  static NCElement unit(const RingPtr& ring);
  static NCElement generator(const RingPtr& ring, int g);
  static NCElement monomial(const RingPtr& ring, NCWord w, RingElem c);

  const RingPtr& ring() const { return ring_; }
  const std::map<NCWord, RingElem, NCWordOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NCElement operator+(const NCElement& o) const;
  NCElement operator-(const NCElement& o) const;
  NCElement operator-() const;
  NCElement operator*(const NCElement& o) const;  ///< concatenation product
  NCElement scaled(const RingElem& c) const;
  bool operator==(const NCElement& o) const;
  bool operator!=(const NCElement& o) const { return !(*this == o); }

  void add_term(const NCWord& w, const RingElem& c);  ///< collecting insert

 private:
  RingPtr ring_;
  std::map<NCWord, RingElem, NCWordOrder> terms_;
};

inline NCElement nc_mul(const NCElement& a, const NCElement& b) { return a * b; }

/// Rewrite every adjacent equal pair g g -> g to fixpoint (idempotent
/// generator reduction); the result has square-free words only.
NCElement nc_reduce_idempotent(const NCElement& a);

/// Contract adjacent equal letters in a single word.
NCWord squarefree_contract(const NCWord& w);

}  // namespace hh
