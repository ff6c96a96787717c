#include "hh/freealg.hpp"

namespace hh {

NCElement NCElement::unit(const RingPtr& ring) {
  return monomial(ring, {}, RingElem::constant(ring, 1));
}

NCElement NCElement::generator(const RingPtr& ring, int g) {
  return monomial(ring, {g}, RingElem::constant(ring, 1));
}

NCElement NCElement::monomial(const RingPtr& ring, NCWord w, RingElem c) {
  NCElement e(ring);
  e.add_term(w, c);
  return e;
}

void NCElement::add_term(const NCWord& w, const RingElem& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCElement NCElement::operator+(const NCElement& o) const {
  NCElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

NCElement NCElement::operator-(const NCElement& o) const { return *this + (-o); }

NCElement NCElement::operator-() const {
  NCElement out(ring_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NCElement NCElement::operator*(const NCElement& o) const {
  NCElement out(ring_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      NCWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(w, c1 * c2);
    }
  return out;
}

NCElement NCElement::scaled(const RingElem& c) const {
  NCElement out(ring_);
  if (!c.is_zero())
    for (const auto& [w, k] : terms_) out.add_term(w, k * c);
  return out;
}

bool NCElement::operator==(const NCElement& o) const {
  return terms_ == o.terms_;
}

NCWord squarefree_contract(const NCWord& w) {
  NCWord out;
  for (int g : w) {
    if (!out.empty() && out.back() == g) continue;  // g g -> g
    out.push_back(g);
  }
  return out;
}

NCElement nc_reduce_idempotent(const NCElement& a) {
  NCElement out(a.ring());
  for (const auto& [w, c] : a.terms()) out.add_term(squarefree_contract(w), c);
  return out;
}

}  // namespace hh
