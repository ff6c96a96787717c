#include "hh/taft.hpp"

#include <sstream>

#include "hh/coxeter.hpp"  // OutOfRange

namespace hh {

namespace {

using Dense = std::vector<Rat>;  // univariate, index = degree

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Dense dense_div(Dense num, const Dense& den) {
  Dense out(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
  for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k) {
    const Rat c = num[k + den.size() - 1] / den.back();
    out[k] = c;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (const Rat& r : num)
    if (r != 0) throw NonExactDivision();
  return out;
}

}  // namespace

RingElem qbinom(int n, int k, const RingPtr& ring, int var) {
  if (k < 0 || k > n) throw OutOfRange("qbinom needs 0 <= k <= n");
  Dense num{Rat(1)}, den{Rat(1)};
  for (int i = 1; i <= k; ++i) {
    Dense fn(n + 2 - i, Rat(0)), fd(i + 1, Rat(0));
    fn[0] = -1;
    fn[n + 1 - i] = 1;
    fd[0] = -1;
    fd[i] = 1;
    num = dense_mul(num, fn);
    den = dense_mul(den, fd);
  }
  const Dense q = dense_div(std::move(num), den);
  std::map<Expo, Rat> terms;
  const int nv = static_cast<int>(ring->vars.size());
  for (size_t e = 0; e < q.size(); ++e)
    if (q[e] != 0) {
      Expo ex(nv, 0);
      ex[var] = static_cast<int>(e);
      terms[ex] = q[e];
    }
  return RingElem(ring, std::move(terms));
}

std::vector<RingElem> f_nab(int n, const RingPtr& ring, int avar, int bvar) {
  if (n < 1) throw OutOfRange("f_nab needs n >= 1");
  const RingElem a = RingElem::variable(ring, avar), b = RingElem::variable(ring, bvar);
  const RingElem one = RingElem::constant(ring, 1);
  std::vector<RingElem> poly{RingElem::constant(ring, 0), one};  // x
  RingElem bracket = RingElem::constant(ring, 0);                // 1 + a + ... + a^{k-1}
  RingElem apow = one;
  for (int k = 1; k < n; ++k) {
    bracket = bracket + apow;
    apow = apow * a;
    const RingElem root = b * bracket;
    std::vector<RingElem> next(poly.size() + 1, RingElem::constant(ring, 0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * root;
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<NCElement> functional_coeffs(const std::vector<RingElem>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const RingPtr& ring = f.at(0).ring();
  const NCElement s = NCElement::generator(ring, 0), d = NCElement::generator(ring, 1);
  // pows[k] = coefficient of t^k in (ts + D)^i, updated per power i.
  std::vector<NCElement> pows{NCElement::unit(ring)};
  std::vector<NCElement> y(n + 1, NCElement(ring));
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k <= i; ++k) y[k] = y[k] + pows[k].scaled(f[i]);
    std::vector<NCElement> next(i + 2, NCElement(ring));
    for (int k = 0; k <= i; ++k) {
      next[k + 1] = next[k + 1] + pows[k] * s;
      next[k] = next[k] + pows[k] * d;
    }
    pows = std::move(next);
  }
  return y;
}

VerificationReport generalized_binomial_check(int n) {
  const RingPtr ring = ring_laurent({"t", "x", "p", "q"});
  const RingElem t = RingElem::variable(ring, 0), x = RingElem::variable(ring, 1);
  const RingElem p = RingElem::variable(ring, 2), q = RingElem::variable(ring, 3);
  const RingElem one = RingElem::constant(ring, 1);

  // f_m with the t and/or x slots switched off.
  const auto f = [&](int m, bool with_t, bool with_x) {
    RingElem out = one, qpow = one, bracket = RingElem::constant(ring, 0);
    for (int i = 0; i < m; ++i) {
      RingElem factor = p * bracket;
      if (with_t) factor = factor + t;
      if (with_x) factor = factor + qpow * x;
      out = out * factor;
      bracket = bracket + qpow;
      qpow = qpow * q;
    }
    return out;
  };

  const RingElem lhs = f(n, true, true);
  RingElem rhs = RingElem::constant(ring, 0);
  for (int k = 0; k <= n; ++k)
    rhs = rhs + qbinom(n, k, ring, 3) * f(k, false, true) * f(n - k, true, false);

  VerificationReport rep;
  rep.add("generalized binomial identity", "n = " + std::to_string(n), lhs == rhs,
          (lhs - rhs).to_string());
  return rep;
}

TaftAlgebra::TaftAlgebra(int n) : n_(n) {
  if (n < 2) throw OutOfRange("TaftAlgebra needs n >= 2");
  ring_ = ring_quotient({"a", "b"}, cyclotomic(n));

  // Expand prod_{i<n} (a^i D + b (1 + ... + a^{i-1})) as a polynomial in D,
  // then solve for D^n (the leading coefficient a^{n(n-1)/2} is a unit).
  std::vector<RingElem> rel{RingElem::constant(ring_, 1)};
  RingElem apow = RingElem::constant(ring_, 1), bracket = RingElem::constant(ring_, 0);
  for (int i = 0; i < n; ++i) {
    const RingElem c0 = b() * bracket;
    std::vector<RingElem> next(rel.size() + 1, RingElem::constant(ring_, 0));
    for (size_t k = 0; k < rel.size(); ++k) {
      next[k + 1] = next[k + 1] + rel[k] * apow;
      next[k] = next[k] + rel[k] * c0;
    }
    rel = std::move(next);
    bracket = bracket + apow;
    apow = apow * a();
  }
  const int lead_exp = n * (n - 1) / 2;
  const RingElem lead_inv = a_pow(-lead_exp);
  if (rel[n] * lead_inv != RingElem::constant(ring_, 1))
    throw RingError("leading coefficient of the D-relation is not a^{n(n-1)/2}");
  for (int i = 0; i < n; ++i) dred_.push_back(-(rel[i] * lead_inv));
}

RingElem TaftAlgebra::a_pow(int e) const {
  return RingElem::variable(ring_, 0).pow(((e % n_) + n_) % n_);
}

RingElem TaftAlgebra::bracket(int j) const {
  RingElem out = RingElem::constant(ring_, 0);
  for (int i = 0; i < j; ++i) out = out + a_pow(i);
  return out;
}

TaftAlgebra::Elem TaftAlgebra::monomial(int i, int j, const RingElem& c) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw OutOfRange("Taft monomial exponents");
  if (c.is_zero()) return {};
  return {{{i, j}, c}};
}

TaftAlgebra::Elem TaftAlgebra::add(const Elem& x, const Elem& y) const {
  Elem out = x;
  for (const auto& [k, c] : y) {
    auto it = out.find(k);
    if (it == out.end()) {
      out.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

TaftAlgebra::Elem TaftAlgebra::sub(const Elem& x, const Elem& y) const {
  return add(x, scaled(y, RingElem::constant(ring_, -1)));
}

TaftAlgebra::Elem TaftAlgebra::scaled(const Elem& x, const RingElem& c) const {
  Elem out;
  for (const auto& [k, v] : x) {
    const RingElem cv = v * c;
    if (!cv.is_zero()) out.emplace(k, cv);
  }
  return out;
}

bool TaftAlgebra::is_zero(const Elem& x) const { return x.empty(); }
bool TaftAlgebra::equal(const Elem& x, const Elem& y) const { return is_zero(sub(x, y)); }

TaftAlgebra::Elem TaftAlgebra::left_mul_d(const Elem& x) const {
  Elem out;
  for (const auto& [k, c] : x) {
    const auto [i, j] = k;
    if (i + 1 < n_) {
      out = add(out, monomial(i + 1, j, c));
    } else {
      for (int i2 = 0; i2 < n_; ++i2) out = add(out, monomial(i2, j, c * dred_[i2]));
    }
  }
  return out;
}

TaftAlgebra::Elem TaftAlgebra::left_mul_s(const Elem& x, int j) const {
  const int js = ((j % n_) + n_) % n_;
  Elem out;
  for (const auto& [k, c] : x) {
    const auto [i, j2] = k;
    for (const auto& [k2, c2] : conj_pow(js, i))
      out = add(out, monomial(k2.first, (k2.second + js + j2) % n_, c * c2));
  }
  return out;
}

const TaftAlgebra::Elem& TaftAlgebra::conj_pow(int j, int i) const {
  const auto key = std::make_pair(j, i);
  auto it = conj_cache_.find(key);
  if (it != conj_cache_.end()) return it->second;
  Elem out;
  if (i == 0) {
    out = unit();
  } else {
    // phi^j(D)^i = (a^j D + b [j]_a (1 - s)) * phi^j(D)^{i-1}.
    const Elem& prev = conj_pow(j, i - 1);
    const RingElem beta = b() * bracket(j);
    out = scaled(left_mul_d(prev), a_pow(j));
    out = add(out, scaled(prev, beta));
    out = sub(out, scaled(left_mul_s(prev, 1), beta));
  }
  return conj_cache_.emplace(key, std::move(out)).first->second;
}

TaftAlgebra::Elem TaftAlgebra::mul(const Elem& x, const Elem& y) const {
  Elem out;
  for (const auto& [k1, c1] : x)
    for (const auto& [k2, c2] : y) {
      const auto [i1, j1] = k1;
      const auto [i2, j2] = k2;
      // D^{i1} s^{j1} D^{i2} s^{j2} = D^{i1} (s^{j1} D s^{-j1})^{i2} s^{j1+j2}.
      Elem part;
      for (const auto& [k3, c3] : conj_pow(j1, i2))
        part = add(part, monomial(k3.first, (k3.second + j1 + j2) % n_, c3));
      for (int rep = 0; rep < i1; ++rep) part = left_mul_d(part);
      out = add(out, scaled(part, c1 * c2));
    }
  return out;
}

TaftAlgebra::Elem TaftAlgebra::eval_word(const NCWord& w) const {
  Elem out = unit();
  for (int g : w) {
    if (g != 0 && g != 1) throw OutOfRange("Taft words use generators 0 (s) and 1 (D)");
    out = mul(out, g == 0 ? s() : d());
  }
  return out;
}

TaftAlgebra::Elem TaftAlgebra::eval(const NCElement& x) const {
  if (!x.ring()->same(*ring_)) throw RingMismatch();
  Elem out = zero();
  for (const auto& [w, c] : x.terms()) out = add(out, scaled(eval_word(w), c));
  return out;
}

std::string TaftAlgebra::to_string(const Elem& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.first) os << "*D^" << k.first;
    if (k.second) os << "*s^" << k.second;
  }
  return os.str();
}

}  // namespace hh
