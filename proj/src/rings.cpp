#include "hh/rings.hpp"

#include <algorithm>
#include <sstream>

namespace hh {

namespace {

RingPtr make_ring(RingKind kind, std::vector<std::string> vars, std::vector<Int> modulus) {
  auto r = std::make_shared<CoeffRing>();
  r->kind = kind;
  r->vars = std::move(vars);
  r->modulus = std::move(modulus);
  return r;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) throw RingMismatch();
}

/// Exact univariate polynomial division over Z; throws if not exact.
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Int> d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw NonExactDivision();
  if (num.empty()) return {};
  if (num.size() < d.size()) throw NonExactDivision();
  std::vector<Int> q(num.size() - d.size() + 1, 0);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Int lead = num[k + d.size() - 1];
    if (lead % d.back() != 0) throw NonExactDivision();
    Int c = lead / d.back();
    q[k] = c;
    for (size_t j = 0; j < d.size(); ++j) num[k + j] -= c * d[j];
  }
  for (const Int& c : num)
    if (c != 0) throw NonExactDivision();
  return q;
}

}  // namespace

RingPtr ring_integers() { return make_ring(RingKind::Integers, {}, {}); }
RingPtr ring_rationals() { return make_ring(RingKind::Rationals, {}, {}); }
RingPtr ring_laurent(std::vector<std::string> vars) {
  return make_ring(RingKind::Laurent, std::move(vars), {});
}
RingPtr ring_quotient(std::vector<std::string> vars, std::vector<Int> modulus) {
  if (vars.empty()) throw RingError("quotient ring needs at least one variable");
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1)
    throw RingError("quotient modulus must be monic of degree >= 1");
  return make_ring(RingKind::Quotient, std::move(vars), std::move(modulus));
}

std::vector<Int> cyclotomic(int n) {
  if (n < 1) throw RingError("cyclotomic index must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_div_exact(num, cyclotomic(d));
  }
  return num;
}

std::vector<Int> golden_modulus() { return {-1, -1, 1}; }

RingElem::RingElem(RingPtr ring, std::map<Expo, Rat> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  reduce();
}

RingElem RingElem::constant(const RingPtr& ring, const Rat& c) {
  std::map<Expo, Rat> t;
  if (c != 0) t[Expo(ring->vars.size(), 0)] = c;
  return RingElem(ring, std::move(t));
}

RingElem RingElem::variable(const RingPtr& ring, int v, int e) {
  if (v < 0 || v >= static_cast<int>(ring->vars.size()))
    throw RingError("variable index out of range");
  Expo ex(ring->vars.size(), 0);
  ex[v] = e;
  std::map<Expo, Rat> t;
  t[ex] = 1;
  return RingElem(ring, std::move(t));
}

bool RingElem::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat RingElem::constant_coeff() const {
  if (!ring_) return 0;
  auto it = terms_.find(Expo(ring_->vars.size(), 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

void RingElem::reduce() {
  if (!ring_) return;
  if (ring_->kind == RingKind::Quotient) {
    const int n = ring_->modulus_degree();
    // Rewrite x0^n -> -(c_{n-1} x0^{n-1} + ... + c_0) until all exponents of
    // the quotient variable lie below n.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->first[0] < 0) throw RingError("negative exponent in quotient ring");
        if (it->first[0] < n) continue;
        Expo base = it->first;
        Rat c = it->second;
        base[0] -= n;
        terms_.erase(it);
        for (int k = 0; k < n; ++k) {
          if (ring_->modulus[k] == 0) continue;
          Expo e = base;
          e[0] = base[0] + k;
          terms_[e] -= c * Rat(ring_->modulus[k]);
        }
        changed = true;
        break;
      }
    }
  }
  if (!ring_->negative_exponents_allowed() && ring_->kind != RingKind::Quotient) {
    for (const auto& [e, c] : terms_)
      for (int k : e)
        if (k < 0) throw RingError("negative exponent in non-Laurent ring");
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same_ring(ring_, o.ring_);
  std::map<Expo, Rat> t = terms_;
  for (const auto& [e, c] : o.terms_) t[e] += c;
  return RingElem(ring_, std::move(t));
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator-() const {
  std::map<Expo, Rat> t;
  for (const auto& [e, c] : terms_) t[e] = -c;
  return RingElem(ring_, std::move(t));
}

RingElem RingElem::operator*(const RingElem& o) const {
  check_same_ring(ring_, o.ring_);
  std::map<Expo, Rat> t;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e = e1;
      for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      t[e] += c1 * c2;
    }
  return RingElem(ring_, std::move(t));
}

RingElem RingElem::scaled(const Rat& c) const {
  std::map<Expo, Rat> t;
  if (c != 0)
    for (const auto& [e, k] : terms_) t[e] = k * c;
  return RingElem(ring_, std::move(t));
}

RingElem RingElem::pow(int e) const {
  if (e < 0) {
    // Only unit monomials are invertible in our rings.
    if (terms_.size() != 1) throw NonUnitSubstitution();
    const auto& [ex, c] = *terms_.begin();
    if (!ring_->negative_exponents_allowed()) {
      for (int k : ex)
        if (k != 0) throw NonUnitSubstitution();
    }
    Expo inv = ex;
    for (int& k : inv) k = -k;
    std::map<Expo, Rat> t;
    t[inv] = Rat(1) / c;
    return RingElem(ring_, std::move(t)).pow(-e);
  }
  RingElem acc = constant(ring_, 1);
  for (int k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

bool RingElem::operator==(const RingElem& o) const {
  check_same_ring(ring_, o.ring_);
  return terms_ == o.terms_;
}

RingElem RingElem::substitute(const std::vector<RingElem>& images) const {
  if (terms_.empty()) {
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    return RingElem::constant(target, 0);
  }
  if (images.size() != ring_->vars.size())
    throw RingError("substitution must cover every variable");
  RingPtr target = images.empty() ? ring_ : images.front().ring();
  RingElem out = RingElem::constant(target, 0);
  for (const auto& [e, c] : terms_) {
    RingElem term = RingElem::constant(target, c);
    for (size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term = term * images[v].pow(e[v]);
    out = out + term;
  }
  return out;
}

int RingElem::max_exponent(int v) const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e[v]);
  return m;
}

int RingElem::min_exponent(int v) const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::min(m, e[v]);
  return m;
}

RingElem RingElem::coefficient_of(int v, int k) const {
  std::map<Expo, Rat> t;
  for (const auto& [e, c] : terms_) {
    if (e[v] != k) continue;
    Expo r = e;
    r[v] = 0;
    t[r] = c;
  }
  return RingElem(ring_, std::move(t));
}

RingElem RingElem::divide_by_one_minus_var(int v) const {
  // Shift so that all v-exponents are >= 0, write p = sum_k c_k x_v^k and use
  // p = (1 - x_v) q  <=>  q_k = c_0 + ... + c_k with the full sum vanishing.
  const int lo = min_exponent(v);
  const int hi = max_exponent(v);
  RingElem shifted = lo < 0 ? *this * RingElem::variable(ring_, v, -lo) : *this;
  const int deg = hi - std::min(lo, 0);
  RingElem out = RingElem::constant(ring_, 0);
  RingElem prefix = RingElem::constant(ring_, 0);
  for (int k = 0; k <= deg; ++k) {
    prefix = prefix + shifted.coefficient_of(v, k);
    if (k < deg) out = out + prefix * RingElem::variable(ring_, v, k);
  }
  if (!prefix.is_zero()) throw NonExactDivision();
  if (lo < 0) out = out * RingElem::variable(ring_, v, lo);
  return out;
}

RingElem RingElem::divide_by_var_minus(int v, const RingElem& r) const {
  // Synthetic (Horner) division of a polynomial in x_v by (x_v - r):
  // q_{k} = c_{k+1} + r * q_{k+1}; remainder = c_0 + r * q_0 must vanish.
  if (min_exponent(v) < 0) throw NonExactDivision();
  const int deg = max_exponent(v);
  RingElem out = RingElem::constant(ring_, 0);
  RingElem carry = RingElem::constant(ring_, 0);
  for (int k = deg; k >= 1; --k) {
    carry = coefficient_of(v, k) + r * carry;
    out = out + carry * RingElem::variable(ring_, v, k - 1);
  }
  RingElem rem = coefficient_of(v, 0) + r * carry;
  if (!rem.is_zero()) throw NonExactDivision();
  return out;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::ostringstream mono;
    bool any_var = false;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (any_var) mono << "*";
      any_var = true;
      mono << ring_->vars[v];
      if (e[v] != 1) mono << "^" << e[v];
    }
    if (!any_var) {
      os << a;
    } else if (a == 1) {
      os << mono.str();
    } else if (a == -1) {
      os << "-" << mono.str();
    } else {
      os << a << "*" << mono.str();
    }
  }
  return os.str();
}

RingElem laurent_substitute(const RingElem& p, const std::vector<RingElem>& images) {
  return p.substitute(images);
}

}  // namespace hh
