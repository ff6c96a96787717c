#include "hh/coxeter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hh {

namespace {

/// Abstract exact faithful representation used only during enumeration.
/// States are flattened integer vectors, comparable and hashable via std::map.
struct Representation {
  std::vector<int> start;
  std::function<std::vector<int>(const std::vector<int>&, int)> apply;  // state * s_i
};

Representation dihedral_rep(int m) {
  // Element r^k f^eps with r = s0 s1, f = s0; state = {k, eps}.
  Representation rep;
  rep.start = {0, 0};
  rep.apply = [m](const std::vector<int>& st, int i) {
    int k = st[0], eps = st[1];
    if (i == 0) return std::vector<int>{k, 1 - eps};
    // right-multiply by s1 = s0 r: r^k f^eps s1 = (k-1,1) if eps==0 else (k+1,0)
    if (eps == 0) return std::vector<int>{(k - 1 + m) % m, 1};
    return std::vector<int>{(k + 1) % m, 0};
  };
  return rep;
}

Representation permutation_rep(int n_points) {
  Representation rep;
  rep.start.resize(n_points);
  std::iota(rep.start.begin(), rep.start.end(), 0);
  rep.apply = [](const std::vector<int>& st, int i) {
    std::vector<int> out = st;
    std::swap(out[i], out[i + 1]);
    return out;
  };
  return rep;
}

Representation cartan_rep(const std::vector<std::vector<int>>& a) {
  // Integral geometric representation on the root lattice: the state is the
  // matrix of w acting on simple roots, flattened row-major; right
  // multiplication composes with s_i(alpha_j) = alpha_j - a_ij alpha_i.
  const int n = static_cast<int>(a.size());
  Representation rep;
  rep.start.assign(n * n, 0);
  for (int i = 0; i < n; ++i) rep.start[i * n + i] = 1;
  rep.apply = [a, n](const std::vector<int>& st, int i) {
    // out = M * S_i where S_i is the reflection matrix (columns = images of
    // simple roots): S_i e_j = e_j - a_ij e_i.
    std::vector<int> out = st;
    for (int r = 0; r < n; ++r) {
      // column j of S_i differs from e_j only in row i.
      for (int j = 0; j < n; ++j) {
        int v = 0;
        for (int k = 0; k < n; ++k) {
          int s = (k == j ? 1 : 0) - (k == i ? a[i][j] : 0);
          if (s != 0) v += st[r * n + k] * s;
        }
        out[r * n + j] = v;
      }
    }
    return out;
  };
  return rep;
}

bool is_type_a_chain(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int expect = (j == i + 1) ? 3 : 2;
      if (m[i][j] != expect) return false;
    }
  return n >= 2;
}

}  // namespace

int cartan_product_to_m(int prod) {
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InvalidMatrix("Cartan product " + std::to_string(prod) + " is not finite type");
  }
}

CoxPtr CoxeterSystem::build(const std::vector<std::vector<int>>& coxeter_matrix,
                            const std::optional<std::vector<std::vector<int>>>& cartan,
                            int element_cap) {
  const int n = static_cast<int>(coxeter_matrix.size());
  if (n == 0) throw InvalidMatrix("empty matrix");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(coxeter_matrix[i].size()) != n) throw InvalidMatrix("not square");
    if (coxeter_matrix[i][i] != 1) throw InvalidMatrix("diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (coxeter_matrix[i][j] != coxeter_matrix[j][i]) throw InvalidMatrix("not symmetric");
      if (i != j && coxeter_matrix[i][j] < 2)
        throw InvalidMatrix("off-diagonal entries must be >= 2 (infinite orders rejected)");
    }
  }
  if (cartan) {
    const auto& a = *cartan;
    if (static_cast<int>(a.size()) != n) throw InvalidMatrix("Cartan rank mismatch");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(a[i].size()) != n) throw InvalidMatrix("Cartan not square");
      if (a[i][i] != 2) throw InvalidMatrix("Cartan diagonal must be 2");
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a[i][j] > 0) throw InvalidMatrix("Cartan off-diagonal must be <= 0");
        if ((a[i][j] == 0) != (a[j][i] == 0)) throw InvalidMatrix("Cartan zero pattern asymmetric");
        if (cartan_product_to_m(a[i][j] * a[j][i]) != coxeter_matrix[i][j])
          throw InvalidMatrix("Cartan does not match the Coxeter matrix");
      }
    }
  }

  Representation rep;
  if (n == 1) {
    rep = dihedral_rep(2);  // order-2 pair state still works with one generator
    rep.apply = [base = rep.apply](const std::vector<int>& st, int) { return base(st, 0); };
  } else if (n == 2) {
    rep = dihedral_rep(coxeter_matrix[0][1]);
  } else if (is_type_a_chain(coxeter_matrix)) {
    rep = permutation_rep(n + 1);
  } else {
    std::vector<std::vector<int>> a;
    if (cartan) {
      a = *cartan;
    } else {
      // Derive a standard Cartan matrix when the type is crystallographic.
      a.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          switch (coxeter_matrix[i][j]) {
            case 2: a[i][j] = 0; break;
            case 3: a[i][j] = -1; break;
            case 4: a[i][j] = (i < j) ? -1 : -2; break;
            case 6: a[i][j] = (i < j) ? -1 : -3; break;
            default:
              throw InvalidMatrix("non-crystallographic entries need rank <= 2");
          }
        }
    }
    rep = cartan_rep(a);
  }

  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->rank_ = n;
  sys->matrix_ = coxeter_matrix;
  sys->cartan_ = cartan;

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> states;
  ids[rep.start] = 0;
  states.push_back(rep.start);
  sys->length_.push_back(0);
  sys->word_.push_back({});
  sys->mult_gen_.push_back(std::vector<int>(n, -1));

  // Breadth-first search in (length, ShortLex) order: the frontier is kept in
  // discovery order, which is lexicographic within each length level, so the
  // first word reaching an element is its ShortLex-minimal reduced word.
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier) {
      for (int i = 0; i < n; ++i) {
        std::vector<int> st = rep.apply(states[w], i);
        auto [it, inserted] = ids.emplace(st, static_cast<int>(states.size()));
        if (inserted) {
          if (static_cast<int>(states.size()) >= element_cap) throw InfiniteGroup();
          states.push_back(std::move(st));
          sys->length_.push_back(sys->length_[w] + 1);
          std::vector<int> word = sys->word_[w];
          word.push_back(i);
          sys->word_.push_back(std::move(word));
          sys->mult_gen_.push_back(std::vector<int>(n, -1));
          next.push_back(it->second);
        }
        sys->mult_gen_[w][i] = it->second;
      }
    }
    frontier = std::move(next);
  }
  // Resolve lengths of descents: mult_gen entries pointing backwards were
  // discovered later; fill any remaining -1 (none should remain).
  const int size = static_cast<int>(states.size());
  for (int w = 0; w < size; ++w)
    for (int i = 0; i < n; ++i)
      if (sys->mult_gen_[w][i] < 0) throw CoxeterError("enumeration left a hole");

  sys->gen_elem_.resize(n);
  for (int i = 0; i < n; ++i) sys->gen_elem_[i] = sys->mult_gen_[0][i];

  sys->inverse_.assign(size, -1);
  for (int w = 0; w < size; ++w) {
    int v = 0;
    const auto& wd = sys->word_[w];
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = sys->mult_gen_[v][*it];
    sys->inverse_[w] = v;
  }

  // Reflections: all conjugates of generators, ordered by (length, id).
  std::vector<char> seen(size, 0);
  for (int w = 0; w < size; ++w)
    for (int i = 0; i < n; ++i) {
      int t = sys->conjugate(w, sys->gen_elem_[i]);
      seen[t] = 1;
    }
  std::vector<int> refl;
  for (int t = 0; t < size; ++t)
    if (seen[t]) refl.push_back(t);
  std::sort(refl.begin(), refl.end(), [&](int a, int b) {
    return std::make_pair(sys->length_[a], a) < std::make_pair(sys->length_[b], b);
  });
  sys->reflections_ = refl;
  sys->refl_index_.assign(size, -1);
  for (size_t k = 0; k < refl.size(); ++k) sys->refl_index_[refl[k]] = static_cast<int>(k);
  return sys;
}

int CoxeterSystem::multiply(int w, int v) const {
  if (w < 0 || w >= size() || v < 0 || v >= size()) throw OutOfRange("element id");
  int out = w;
  for (int i : word_[v]) out = mult_gen_[out][i];
  return out;
}

int CoxeterSystem::conjugate(int w, int t) const {
  return multiply(multiply(w, t), inverse_[w]);
}

std::pair<int, int> CoxeterSystem::chi_sigma(int w, int t) const {
  if (!is_reflection(t)) throw OutOfRange("chi_sigma needs a reflection");
  // chi_{w,t} = +1 iff l(wt) > l(w), i.e. iff w maps the root of t to a
  // positive root.  This is the conjugation cocycle forced by the linear
  // braid relations (in particular D_i and s_j commute when m_ij = 2).
  int chi = length_[multiply(w, t)] > length_[w] ? 1 : -1;
  return {chi, (1 - chi) / 2};
}

bool CoxeterSystem::bruhat_leq(int v, int w) const {
  if (v == identity()) return true;
  if (length_[v] > length_[w]) return false;
  // Standard recursion on a left descent of w.
  int i = word_[w].front();
  int si = gen_elem_[i];
  int sw = multiply(si, w);
  int sv = multiply(si, v);
  if (length_[sv] < length_[v]) return bruhat_leq(sv, sw);
  return bruhat_leq(v, sw);
}

int CoxeterSystem::dihedral_dk(int i, int j, int k) const {
  if (i < 0 || i >= rank_ || j < 0 || j >= rank_ || i == j) throw OutOfRange("generator index");
  const int mij = matrix_[i][j];
  if (k < 1 || k > mij) throw OutOfRange("dihedral index k");
  int w = identity();
  for (int p = 0; p < 2 * k - 1; ++p) w = mult_gen_[w][(p % 2 == 0) ? i : j];
  return w;
}

std::vector<std::vector<int>> CoxeterSystem::all_reduced_words(int w) const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int u) {
    if (u == identity()) {
      std::vector<int> word(cur.rbegin(), cur.rend());
      out.push_back(word);
      return;
    }
    for (int i = 0; i < rank_; ++i) {
      if (!has_right_descent(u, i)) continue;
      cur.push_back(i);
      rec(mult_gen_[u][i]);
      cur.pop_back();
    }
  };
  rec(w);
  return out;
}

std::string CoxeterSystem::describe(int w) const {
  if (w == identity()) return "e";
  std::ostringstream os;
  bool first = true;
  for (int i : word_[w]) {
    if (!first) os << "*";
    first = false;
    os << "s" << (i + 1);
  }
  return os.str();
}

std::vector<std::vector<int>> coxeter_matrix_a(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
  return m;
}
std::vector<std::vector<int>> coxeter_matrix_i2(int m) { return {{1, m}, {m, 1}}; }
std::vector<std::vector<int>> coxeter_matrix_a1a1() { return {{1, 2}, {2, 1}}; }
std::vector<std::vector<int>> cartan_a(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  return a;
}
std::vector<std::vector<int>> cartan_b2() { return {{2, -1}, {-2, 2}}; }
std::vector<std::vector<int>> cartan_g2() { return {{2, -1}, {-3, 2}}; }

}  // namespace hh
