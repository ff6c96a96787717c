#include "hh/demazure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace hh {

namespace {

std::vector<std::string> numbered_vars(const std::string& stem, int n) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(stem + std::to_string(i));
  return vars;
}

std::string expo_string(const Expo& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

}  // namespace

int ModuleAction::nvars() const { return static_cast<int>(carrier_->vars.size()); }

ModuleAction ModuleAction::polynomial(CoxPtr sys) {
  const int r = sys->rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (sys->m(i, j) != (i - j == 1 ? 3 : 2))
        throw InvalidGenerator("polynomial carrier needs a type-A chain");
  ModuleAction a;
  a.sys_ = std::move(sys);
  a.poly_ = true;
  a.carrier_ = ring_laurent(numbered_vars("x", r + 1));
  for (int t : a.sys_->reflections()) {
    int found = -1, gen = -1;
    for (int v = 0; v < a.sys_->size() && found < 0; ++v)
      for (int i = 0; i < r; ++i)
        if (2 * a.sys_->length(v) + 1 == a.sys_->length(t) &&
            a.sys_->length(a.sys_->mult_gen(v, i)) == a.sys_->length(v) + 1 &&
            a.sys_->conjugate(v, a.sys_->generator(i)) == t) {
          found = v;
          gen = i;
          break;
        }
    a.refl_decomp_.emplace_back(found, gen);
  }
  return a;
}

ModuleAction ModuleAction::laurent(CoxPtr sys, std::vector<std::vector<int>> cartan) {
  const int r = sys->rank();
  if (static_cast<int>(cartan.size()) != r)
    throw InvalidMatrix("Cartan size must equal the rank");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(cartan[i].size()) != r) throw InvalidMatrix("Cartan must be square");
    if (cartan[i][i] != 2) throw InvalidMatrix("Cartan diagonal must be 2");
    for (int j = 0; j < r; ++j)
      if (i != j) {
        if (cartan[i][j] > 0) throw InvalidMatrix("off-diagonal Cartan entries must be <= 0");
        if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
          throw InvalidMatrix("Cartan zero pattern must be symmetric");
        if (cartan_product_to_m(cartan[i][j] * cartan[j][i]) != sys->m(i, j))
          throw InvalidMatrix("Cartan incompatible with the Coxeter matrix");
      }
  }
  ModuleAction a;
  a.sys_ = std::move(sys);
  a.poly_ = false;
  a.cartan_ = std::move(cartan);
  a.carrier_ = ring_laurent(numbered_vars("t", r));
  for (int t : a.sys_->reflections()) {
    int found = -1, gen = -1;
    for (int v = 0; v < a.sys_->size() && found < 0; ++v)
      for (int i = 0; i < r; ++i)
        if (2 * a.sys_->length(v) + 1 == a.sys_->length(t) &&
            a.sys_->length(a.sys_->mult_gen(v, i)) == a.sys_->length(v) + 1 &&
            a.sys_->conjugate(v, a.sys_->generator(i)) == t) {
          found = v;
          gen = i;
          break;
        }
    a.refl_decomp_.emplace_back(found, gen);
  }
  return a;
}

RingElem ModuleAction::monomial(const Expo& e) const {
  if (static_cast<int>(e.size()) != nvars()) throw OutOfRange("monomial exponent size");
  return RingElem(carrier_, {{e, Rat(1)}});
}

RingElem ModuleAction::apply_s(int i, const RingElem& p) const {
  if (i < 0 || i >= sys_->rank()) throw InvalidGenerator("generator index");
  std::map<Expo, Rat> out;
  for (const auto& [e, c] : p.terms()) {
    Expo f = e;
    if (poly_) {
      std::swap(f[i], f[i + 1]);
    } else {
      int shift = 0;
      for (int j = 0; j < nvars(); ++j) shift += cartan_[i][j] * e[j];
      f[i] = e[i] - shift;
    }
    out[f] += c;
  }
  return RingElem(carrier_, std::move(out));
}

RingElem ModuleAction::apply_d(int i, const RingElem& p) const {
  const RingElem diff = p - apply_s(i, p);
  if (poly_) {
    // (1 - s_i)/(1 - x_i x_{i+1}^{-1}) = -x_{i+1} (1 - s_i)/(x_i - x_{i+1}).
    const RingElem num = diff * RingElem::variable(carrier_, i + 1);
    return (-num).divide_by_var_minus(i, RingElem::variable(carrier_, i + 1));
  }
  return diff.divide_by_one_minus_var(i);
}

RingElem ModuleAction::apply_group(int w, const RingElem& p) const {
  const auto& word = sys_->word(w);
  RingElem out = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_s(*it, out);
  return out;
}

RingElem ModuleAction::apply_d_reflection(int t, const RingElem& p) const {
  const int idx = sys_->reflection_index(t);
  if (idx < 0) throw OutOfRange("apply_d_reflection needs a reflection");
  const auto [v, i] = refl_decomp_[idx];
  RingElem out = RingElem::constant(carrier_, 0);
  for (const auto& [e, c] : p.terms()) {
    auto key = std::make_pair(t, e);
    auto it = d_cache_.find(key);
    if (it == d_cache_.end()) {
      RingElem img = monomial(e);
      if (v == sys_->identity()) {
        img = apply_d(i, img);
      } else {
        img = apply_group(v, apply_d(i, apply_group(sys_->inverse(v), img)));
      }
      it = d_cache_.emplace(std::move(key), std::move(img)).first;
    }
    out = out + it->second.scaled(c);
  }
  return out;
}

RingElem ModuleAction::act(const HHElement& x, const RingElem& p) const {
  if (x.system() != sys_) throw SystemMismatch();
  RingElem out = RingElem::constant(carrier_, 0);
  for (const auto& [key, coeff] : x.terms()) {
    if (!coeff.is_constant())
      throw HHError("act requires constant coefficients on the acting element");
    RingElem q = apply_group(key.w, p);
    for (auto it = key.u.rbegin(); it != key.u.rend(); ++it)
      q = apply_d_reflection(sys_->reflections()[*it], q);
    out = out + q.scaled(coeff.constant_coeff());
  }
  return out;
}

RingElem act_generator(const ModuleAction& a, GenKind kind, int i, const RingElem& p) {
  return kind == GenKind::S ? a.apply_s(i, p) : a.apply_d(i, p);
}

std::vector<Expo> invariant_window(const ModuleAction& a, const std::vector<Expo>& seeds) {
  std::set<Expo> seen(seeds.begin(), seeds.end());
  std::deque<Expo> todo(seeds.begin(), seeds.end());
  while (!todo.empty()) {
    const Expo e = std::move(todo.front());
    todo.pop_front();
    const RingElem mono = a.monomial(e);
    for (int i = 0; i < a.system()->rank(); ++i) {
      for (const RingElem& img : {a.apply_s(i, mono), a.apply_d(i, mono)})
        for (const auto& [f, c] : img.terms())
          if (seen.insert(f).second) todo.push_back(f);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Expo> window_through_degree(const ModuleAction& a, int maxdeg) {
  std::vector<Expo> seeds;
  Expo e(a.nvars(), 0);
  const std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == a.nvars()) {
      seeds.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[pos] = k;
      rec(pos + 1, left - k);
    }
    e[pos] = 0;
  };
  rec(0, maxdeg);
  return invariant_window(a, seeds);
}

GradedMatrix operator_matrix(const ModuleAction& a, const HHElement& x,
                             const std::vector<Expo>& window) {
  std::map<Expo, int> index;
  for (size_t k = 0; k < window.size(); ++k) index[window[k]] = static_cast<int>(k);
  const RingPtr q = ring_rationals();
  GradedMatrix g;
  g.basis = window;
  g.matrix = ExactMatrix(static_cast<int>(window.size()), static_cast<int>(window.size()), q);
  for (const Expo& e : window) {
    int deg = 0;
    for (int v : e) deg += std::max(v, 0);
    g.degree = std::max(g.degree, deg);
  }
  for (size_t c = 0; c < window.size(); ++c) {
    const RingElem img = a.act(x, a.monomial(window[c]));
    for (const auto& [f, coeff] : img.terms()) {
      auto it = index.find(f);
      if (it == index.end())
        throw WindowNotInvariant("image monomial " + expo_string(f) + " outside the window");
      g.matrix.set(it->second, static_cast<int>(c), RingElem::constant(q, coeff));
    }
  }
  return g;
}

std::vector<FreeRelation> defining_relations(const CoxPtr& sys) {
  std::vector<FreeRelation> rels;
  const auto S = [](int i) { return FreeGen{GenKind::S, i}; };
  const auto D = [](int i) { return FreeGen{GenKind::D, i}; };
  for (int i = 0; i < sys->rank(); ++i) {
    const std::string si = "s" + std::to_string(i + 1), di = "D" + std::to_string(i + 1);
    rels.push_back({si + "^2 = 1", {{1, {S(i), S(i)}}, {-1, {}}}});
    rels.push_back({di + "^2 = " + di, {{1, {D(i), D(i)}}, {-1, {D(i)}}}});
    rels.push_back({si + " " + di + " + " + di + " " + si + " = " + si + " - 1",
                    {{1, {S(i), D(i)}}, {1, {D(i), S(i)}}, {-1, {S(i)}}, {1, {}}}});
  }
  for (int i = 0; i < sys->rank(); ++i)
    for (int j = 0; j < sys->rank(); ++j) {
      if (i == j) continue;
      const int m = sys->m(i, j);
      if (i < j) {
        std::vector<FreeGen> pw;
        for (int k = 0; k < m; ++k) {
          pw.push_back(S(i));
          pw.push_back(S(j));
        }
        rels.push_back({"(s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) + ")^" +
                            std::to_string(m) + " = 1",
                        {{1, pw}, {-1, {}}}});
      }
      // D_i (s_j s_i ...)_{m-1} = (s_j s_i ...)_{m-1} D_{i'}, i' = i for even m.
      std::vector<FreeGen> pi;
      for (int k = 0; k < m - 1; ++k) pi.push_back(S(k % 2 == 0 ? j : i));
      const int ip = (m % 2 == 0) ? i : j;
      std::vector<FreeGen> lhs{D(i)};
      lhs.insert(lhs.end(), pi.begin(), pi.end());
      std::vector<FreeGen> rhs = pi;
      rhs.push_back(D(ip));
      rels.push_back({"linear braid D" + std::to_string(i + 1) + " / D" + std::to_string(ip + 1) +
                          " across m = " + std::to_string(m),
                      {{1, lhs}, {-1, rhs}}});
    }
  return rels;
}

namespace {

RingElem eval_free(const ModuleAction& a, const std::vector<FreeGen>& word, const RingElem& p) {
  RingElem out = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = act_generator(a, it->kind, it->i, out);
  return out;
}

}  // namespace

std::vector<RelationCheck> verify_defining_relations(const ModuleAction& a, int maxdeg) {
  const std::vector<Expo> window = window_through_degree(a, maxdeg);
  std::vector<RelationCheck> out;
  for (const FreeRelation& rel : defining_relations(a.system())) {
    RelationCheck check{rel.label, true, ""};
    for (const Expo& e : window) {
      const RingElem mono = a.monomial(e);
      RingElem sum = RingElem::constant(a.carrier(), 0);
      for (const auto& [c, word] : rel.terms) sum = sum + eval_free(a, word, mono).scaled(c);
      if (!sum.is_zero()) {
        check.pass = false;
        check.witness = "monomial " + expo_string(e);
        break;
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<RelationCheck> verify_relations(const ModuleAction& a,
                                            const std::vector<HHElement>& rels, int maxdeg) {
  const std::vector<Expo> window = window_through_degree(a, maxdeg);
  const int n = static_cast<int>(window.size());
  std::map<Expo, int> index;
  for (int k = 0; k < n; ++k) index[window[k]] = k;

  // The window is invariant, so every generator map restricts to it; working
  // with sparse index vectors avoids rebuilding Laurent polynomials per step.
  using SparseCol = std::vector<std::pair<int, Rat>>;
  const auto to_indices = [&](const RingElem& p) {
    SparseCol col;
    for (const auto& [f, c] : p.terms()) col.emplace_back(index.at(f), c);
    return col;
  };
  std::map<int, std::vector<SparseCol>> d_cols;   // reflection id -> columns
  std::map<int, std::vector<int>> group_perm;     // element id -> permutation
  for (const HHElement& x : rels)
    for (const auto& [key, coeff] : x.terms()) {
      (void)coeff;
      for (int letter : key.u) {
        const int t = a.system()->reflections()[letter];
        if (!d_cols.count(t)) {
          auto& cols = d_cols[t];
          cols.reserve(n);
          for (const Expo& e : window)
            cols.push_back(to_indices(a.apply_d_reflection(t, a.monomial(e))));
        }
      }
      if (!group_perm.count(key.w)) {
        auto& perm = group_perm[key.w];
        for (const Expo& e : window) {
          const RingElem img = a.apply_group(key.w, a.monomial(e));
          perm.push_back(to_indices(img).at(0).first);
        }
      }
    }

  std::vector<RelationCheck> out;
  for (size_t k = 0; k < rels.size(); ++k) {
    RelationCheck check{"annihilation of element " + std::to_string(k + 1), true, ""};
    for (int j = 0; j < n && check.pass; ++j) {
      std::map<int, Rat> total;
      for (const auto& [key, coeff] : rels[k].terms()) {
        std::map<int, Rat> cur{{group_perm.at(key.w)[j], Rat(1)}};
        for (auto it = key.u.rbegin(); it != key.u.rend(); ++it) {
          const auto& cols = d_cols.at(a.system()->reflections()[*it]);
          std::map<int, Rat> next;
          for (const auto& [idx, val] : cur)
            for (const auto& [idx2, val2] : cols[idx]) next[idx2] += val * val2;
          cur = std::move(next);
        }
        const Rat c = coeff.constant_coeff();
        for (const auto& [idx, val] : cur) total[idx] += c * val;
      }
      for (const auto& [idx, val] : total)
        if (val != 0) {
          check.pass = false;
          check.witness = "monomial " + expo_string(window[j]);
          break;
        }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace hh
