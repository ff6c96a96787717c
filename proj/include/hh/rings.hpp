#pragma once

/**
 * Exact coefficient arithmetic.
 *
 * One sparse representation covers every coefficient ring the verifier
 * needs: arbitrary-precision integers and rationals, multivariate Laurent
 * polynomials, and univariate quotient rings (cyclotomic rings for roots of
 * unity, the golden-ratio ring Z[x]/(x^2-x-1)), optionally with extra
 * polynomial variables adjoined (e.g. (Z[a]/Phi_n)[b]).
 *
 * Elements are immutable value types: every operation returns a new,
 * canonically reduced element.  No floating point anywhere.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct RingError : std::runtime_error {
  explicit RingError(const std::string& what) : std::runtime_error(what) {}
};
/// Thrown when two operands live in different rings.
struct RingMismatch : RingError {
  RingMismatch() : RingError("ring mismatch between operands") {}
};
/// Thrown when a substitution would raise a non-unit to a negative power.
struct NonUnitSubstitution : RingError {
  NonUnitSubstitution() : RingError("negative power of a non-unit image in substitution") {}
};
/// Thrown when an exact division leaves a remainder (an internal bug if the
/// carrier invariants hold).
struct NonExactDivision : RingError {
  NonExactDivision() : RingError("division expected to be exact left a remainder") {}
};

enum class RingKind { Integers, Rationals, Laurent, Quotient };

/**
 * Descriptor of a coefficient ring.  Quotient rings reduce vars[0] by a monic
 * modulus; any further vars are plain polynomial variables.
 */
class CoeffRing {
 public:
  RingKind kind = RingKind::Integers;
  std::vector<std::string> vars;  ///< empty for Integers/Rationals
  std::vector<Int> modulus;       ///< monic coefficients c0..cn (cn = 1); Quotient only

  bool same(const CoeffRing& o) const {
    return kind == o.kind && vars == o.vars && modulus == o.modulus;
  }
  /// Degree of the quotient modulus (Quotient only).
  int modulus_degree() const { return static_cast<int>(modulus.size()) - 1; }
  bool negative_exponents_allowed() const { return kind == RingKind::Laurent; }
};

using RingPtr = std::shared_ptr<const CoeffRing>;

RingPtr ring_integers();
RingPtr ring_rationals();
RingPtr ring_laurent(std::vector<std::string> vars);
/// Z[vars[0]]/(modulus) with vars[1..] adjoined as polynomial variables.
RingPtr ring_quotient(std::vector<std::string> vars, std::vector<Int> modulus);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic(int n);
/// x^2 - x - 1 (minimal polynomial of the golden ratio).
std::vector<Int> golden_modulus();

using Expo = std::vector<int>;  ///< exponent vector, one signed entry per variable

/**
 * An element of a CoeffRing: sorted sparse terms, no zero coefficients,
 * quotient exponents reduced below the modulus degree.
 */
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingPtr ring, std::map<Expo, Rat> terms);

  /// The constant c in the given ring.
  static RingElem constant(const RingPtr& ring, const Rat& c);
  /// The monomial vars[v]^e.
  static RingElem variable(const RingPtr& ring, int v, int e = 1);

  const RingPtr& ring() const { return ring_; }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term's coefficient (zero if absent).
  Rat constant_coeff() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem scaled(const Rat& c) const;
  RingElem pow(int e) const;  ///< e >= 0, or e < 0 for a unit monomial
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }
  /// Total order compatible with canonical forms (for use as a map key).
  bool operator<(const RingElem& o) const { return terms_ < o.terms_; }

  /// Substitute images[v] for vars[v]; images must cover every variable that
  /// occurs in this element and live in a common ring.
  RingElem substitute(const std::vector<RingElem>& images) const;

  /// Largest/smallest exponent of variable v occurring (0 if v absent).
  int max_exponent(int v) const;
  int min_exponent(int v) const;

  /// Exact division by (1 - vars[v]); throws NonExactDivision on remainder.
  RingElem divide_by_one_minus_var(int v) const;
  /// Exact division by (vars[v] - r), where r does not involve vars[v].
  RingElem divide_by_var_minus(int v, const RingElem& r) const;
  /// Coefficient of vars[v]^k (an element of the same ring, v-free).
  RingElem coefficient_of(int v, int k) const;

  std::string to_string() const;

 private:
  void reduce();  ///< quotient reduction + zero-term removal
  RingPtr ring_;
  std::map<Expo, Rat> terms_;
};

/// Free-function aliases for the arithmetic entry points.
inline RingElem ring_add(const RingElem& a, const RingElem& b) { return a + b; }
inline RingElem ring_mul(const RingElem& a, const RingElem& b) { return a * b; }
RingElem laurent_substitute(const RingElem& p, const std::vector<RingElem>& images);

}  // namespace hh
