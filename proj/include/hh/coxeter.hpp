#pragma once

/**
 * Finite Coxeter systems.
 *
 * A system is built from a Coxeter matrix (optionally with a Cartan matrix
 * for crystallographic types) by breadth-first enumeration over an exact
 * faithful representation:
 *   - rank <= 2: dihedral rotation/flip pairs (covers I2(m) for every m),
 *   - simply-laced chains (type A): permutations,
 *   - other crystallographic matrices: the integral geometric representation
 *     derived from the Cartan matrix.
 *
 * Elements are dense ids 0..|W|-1, id 0 the identity, ordered by
 * (length, ShortLex reduced word).  All queries are pure; the system is
 * immutable after construction.
 */

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hh {

struct CoxeterError : std::runtime_error {
  explicit CoxeterError(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidMatrix : CoxeterError {
  explicit InvalidMatrix(const std::string& what) : CoxeterError("invalid matrix: " + what) {}
};
struct InfiniteGroup : CoxeterError {
  InfiniteGroup() : CoxeterError("group enumeration exceeded the element cap") {}
};
struct SystemMismatch : CoxeterError {
  SystemMismatch() : CoxeterError("elements belong to different systems") {}
};
struct OutOfRange : CoxeterError {
  explicit OutOfRange(const std::string& what) : CoxeterError("out of range: " + what) {}
};

class CoxeterSystem;
using CoxPtr = std::shared_ptr<const CoxeterSystem>;

class CoxeterSystem {
 public:
  /// Enumerate the finite group defined by the matrix.  Throws InvalidMatrix
  /// on malformed input and InfiniteGroup past the element cap.
  static CoxPtr build(const std::vector<std::vector<int>>& coxeter_matrix,
                      const std::optional<std::vector<std::vector<int>>>& cartan = std::nullopt,
                      int element_cap = 50000);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(length_.size()); }
  int m(int i, int j) const { return matrix_[i][j]; }
  const std::optional<std::vector<std::vector<int>>>& cartan() const { return cartan_; }

  int identity() const { return 0; }
  /// w * s_i (table lookup).
  int mult_gen(int w, int i) const { return mult_gen_[w][i]; }
  int generator(int i) const { return gen_elem_[i]; }
  int length(int w) const { return length_[w]; }
  /// ShortLex-minimal reduced word.
  const std::vector<int>& word(int w) const { return word_[w]; }
  int multiply(int w, int v) const;
  int inverse(int w) const { return inverse_[w]; }
  /// w t w^{-1}.
  int conjugate(int w, int t) const;
  bool has_right_descent(int w, int i) const { return length_[mult_gen_[w][i]] < length_[w]; }

  /// All reflections w s_i w^{-1}, deduplicated, ordered by (length, id).
  const std::vector<int>& reflections() const { return reflections_; }
  /// Position of element t in reflections(), or -1.
  int reflection_index(int t) const { return refl_index_[t]; }
  bool is_reflection(int t) const { return refl_index_[t] >= 0; }

  /// (chi, sigma) of the conjugation cocycle: chi = +1 iff l(wt) > l(w),
  /// sigma = (1 - chi)/2.  chi is a 2-cocycle: chi_{w1 w2, t} =
  /// chi_{w2, t} * chi_{w1, w2 t w2^-1} (checked in tests).
  std::pair<int, int> chi_sigma(int w, int t) const;

  /// True iff v <= w in the strong Bruhat order (subword property).
  bool bruhat_leq(int v, int w) const;

  /// The reflection with alternating word s_i s_j s_i ... of 2k-1 letters
  /// (reduced in the group); requires 1 <= k <= m(i,j).
  int dihedral_dk(int i, int j, int k) const;

  /// All reduced words of w (exhaustive; oracle for the Bruhat subword test).
  std::vector<std::vector<int>> all_reduced_words(int w) const;

  std::string describe(int w) const;  ///< e.g. "s1*s2" or "e"

 private:
  CoxeterSystem() = default;
  int rank_ = 0;
  std::vector<std::vector<int>> matrix_;
  std::optional<std::vector<std::vector<int>>> cartan_;
  std::vector<std::vector<int>> mult_gen_;
  std::vector<int> gen_elem_;
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<int> inverse_;
  std::vector<int> reflections_;
  std::vector<int> refl_index_;
};

/// Convenience wrapper with the default element cap.
inline CoxPtr build_system(const std::vector<std::vector<int>>& coxeter_matrix,
                           const std::optional<std::vector<std::vector<int>>>& cartan = std::nullopt) {
  return CoxeterSystem::build(coxeter_matrix, cartan);
}

/// Coxeter matrix entry implied by a Cartan pair (a_ij, a_ji):
/// product 0,1,2,3 -> m = 2,3,4,6; anything larger is non-finite here.
int cartan_product_to_m(int prod);

/// Standard Coxeter matrices for the named types used throughout the tests.
std::vector<std::vector<int>> coxeter_matrix_a(int n);      ///< A_n chain
std::vector<std::vector<int>> coxeter_matrix_i2(int m);     ///< I2(m)
std::vector<std::vector<int>> coxeter_matrix_a1a1();        ///< A1 x A1
std::vector<std::vector<int>> cartan_a(int n);
std::vector<std::vector<int>> cartan_b2();                  ///< [[2,-1],[-2,2]]
std::vector<std::vector<int>> cartan_g2();                  ///< [[2,-1],[-3,2]]

}  // namespace hh
