#pragma once
// Truncated K-type series of Zuckerman cells and the nilpotent cone character.
//
// Everything lives on t = the theta_f-fixed part of X* (x) Q, where theta_f is a maximally compact
// frame reached from the cell's frame by Cayley transforms inside l. Norms use the invariant form
// B(x, y) = sum over all roots of <x, a^v><y, a^v>.

#include "pu/unipotent.hpp"

namespace pu {

struct KTypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using WeightMap = std::map<QVec, Int>;

struct FormalCharacter {
  int n = 0;
  int truncation = 0;
  std::vector<WeightMap> graded;  // graded[d] = degree-d piece

  WeightMap total() const {
    WeightMap t;
    for (auto& g : graded)
      for (auto& [w, m] : g) t[w] += m;
    std::erase_if(t, [](auto& kv) { return kv.second == 0; });
    return t;
  }
};

inline void add_into(WeightMap& m, const QVec& w, Int c) {
  auto& x = m[w];
  x += c;
  if (x == 0) m.erase(w);
}

inline FormalCharacter constant_character(int n, int D) {
  FormalCharacter c{n, D, std::vector<WeightMap>(D + 1)};
  c.graded[0][QVec(n, Q(0))] = 1;
  return c;
}

// S(V) for V with the given weights, through degree D.
inline FormalCharacter sym_character(int n, const std::vector<QVec>& weights, int D) {
  auto c = constant_character(n, D);
  for (auto& w : weights) {
    // multiply by 1 / (1 - q e^w)
    for (int d = 1; d <= D; ++d)
      for (auto& [v, m] : WeightMap(c.graded[d - 1])) add_into(c.graded[d], v + w, m);
  }
  return c;
}

// multiply by (1 - q^k)
inline void divide_out_invariant(FormalCharacter& c, int k) {
  for (int d = c.truncation; d >= k; --d)
    for (auto& [v, m] : c.graded[d - k]) add_into(c.graded[d], v, -m);
}

inline FormalCharacter shift(FormalCharacter c, const QVec& s) {
  for (auto& g : c.graded) {
    WeightMap h;
    for (auto& [v, m] : g) h[v + s] = m;
    g = std::move(h);
  }
  return c;
}

inline FormalCharacter product(const FormalCharacter& a, const FormalCharacter& b) {
  int D = std::min(a.truncation, b.truncation);
  FormalCharacter c{a.n, D, std::vector<WeightMap>(D + 1)};
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j)
      for (auto& [v, m] : a.graded[i])
        for (auto& [u, k] : b.graded[j]) add_into(c.graded[i + j], v + u, m * k);
  return c;
}

// ----------------------------------------------------------- Levi structure

// Connected components of the subsystem S, each as a list of its simple roots.
inline std::vector<std::vector<int>> components(const BasedRootDatum& D, const std::vector<int>& S) {
  auto simple = subsystem_simple(D, S);
  std::vector<int> comp(simple.size(), -1);
  int nc = 0;
  for (size_t i = 0; i < simple.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<size_t> st{i};
    comp[i] = nc;
    while (!st.empty()) {
      size_t a = st.back();
      st.pop_back();
      for (size_t b = 0; b < simple.size(); ++b)
        if (comp[b] < 0 && D.pair(simple[a], simple[b]) != 0) comp[b] = nc, st.push_back(b);
    }
    ++nc;
  }
  std::vector<std::vector<int>> out(nc);
  for (size_t i = 0; i < simple.size(); ++i) out[comp[i]].push_back(simple[i]);
  return out;
}

// Degrees of basic invariants of an irreducible Weyl group from (rank, number of roots).
inline std::vector<int> weyl_degrees(int l, int nroots) {
  std::vector<int> d;
  if (nroots == l * (l + 1)) {
    for (int i = 2; i <= l + 1; ++i) d.push_back(i);
  } else if (nroots == 2 * l * l) {
    for (int i = 1; i <= l; ++i) d.push_back(2 * i);
  } else if (l >= 4 && nroots == 2 * l * (l - 1)) {
    for (int i = 1; i < l; ++i) d.push_back(2 * i);
    d.push_back(l);
  } else if (l == 2 && nroots == 12) {
    d = {2, 6};
  } else if (l == 4 && nroots == 48) {
    d = {2, 6, 8, 12};
  } else if (l == 6 && nroots == 72) {
    d = {2, 5, 6, 8, 9, 12};
  } else if (l == 7 && nroots == 126) {
    d = {2, 6, 8, 10, 12, 14, 18};
  } else if (l == 8 && nroots == 240) {
    d = {2, 8, 12, 14, 18, 20, 24, 30};
  } else
    throw KTypeError("cannot identify the type of a Levi component");
  std::sort(d.begin(), d.end());
  return d;
}

inline std::vector<int> levi_degrees(const BasedRootDatum& D, const std::vector<int>& levi) {
  std::vector<int> out;
  for (auto& c : components(D, levi)) {
    int cnt = 0;
    for (int r : levi) {
      // components are mutually orthogonal
      bool in = std::any_of(c.begin(), c.end(), [&](int s) { return D.pair(r, s) != 0; });
      if (in) ++cnt;
    }
    for (int d : weyl_degrees(int(c.size()), cnt)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -------------------------------------------------------------- K structure

struct KStructure {
  CartanFrame frame;  // maximally compact, theta_f
  int n = 0;
  std::vector<QVec> coroot_rows;  // for the invariant form
  std::vector<QVec> k_roots, k_positive, k_simple;
  QVec rho_c;

  QVec restrict(const IVec& v) const {
    QVec out = to_q(v) + to_q(frame.theta * v);
    return Q(1, 2) * out;
  }
  Q form(const QVec& x, const QVec& y) const {
    Q s = 0;
    for (auto& c : coroot_rows) s += dot(x, c) * dot(y, c);
    return s;
  }
  QVec reflect(const QVec& v, const QVec& b) const { return v - (Q(2) * form(v, b) / form(b, b)) * b; }
};

inline bool lex_positive(const QVec& v) {
  for (auto& x : v)
    if (x != Q(0)) return x > Q(0);
  return false;
}

// K roots at theta_f, positive system chosen by <., x> with lexicographic ties.
inline KStructure k_structure(const InnerClass& ic, const CartanFrame& fund, const QVec& x) {
  const auto& D = ic.D();
  KStructure K;
  K.frame = fund;
  K.n = D.n;
  for (auto& c : D.coroots) K.coroot_rows.push_back(to_q(c));
  std::set<QVec> roots;
  for (int r = 0; r < D.nroots(); ++r) {
    RootClass c = classify_root(ic, fund, r);
    if (c == RootClass::Real) throw KTypeError("frame is not maximally compact");
    if (c == RootClass::Imaginary && fund.eps[r] == 0) roots.insert(to_q(D.roots[r]));
    if (c == RootClass::Complex) roots.insert(K.restrict(D.roots[r]));
  }
  K.k_roots.assign(roots.begin(), roots.end());
  for (auto& v : K.k_roots) {
    Q s = K.form(v, x);
    if (s > Q(0) || (s == Q(0) && lex_positive(v))) K.k_positive.push_back(v);
  }
  std::set<QVec> pos(K.k_positive.begin(), K.k_positive.end());
  for (auto& v : K.k_positive) {
    bool decomposable = false;
    for (auto& a : K.k_positive)
      if (a != v && pos.count(v - a)) decomposable = true;
    if (!decomposable) K.k_simple.push_back(v);
  }
  K.rho_c = QVec(D.n, Q(0));
  for (auto& v : K.k_positive) K.rho_c = K.rho_c + Q(1, 2) * v;
  return K;
}

// (w, w.lambda) with w.lambda dominant; nullopt on a wall. Returns the sign (-1)^l(w).
inline std::optional<std::pair<int, QVec>> straighten(const KStructure& K, const QVec& lambda) {
  QVec v = lambda + K.rho_c;
  int sign = 1;
  for (;;) {
    bool moved = false;
    for (auto& b : K.k_simple)
      if (K.form(v, b) < Q(0)) {
        v = K.reflect(v, b);
        sign = -sign;
        moved = true;
        break;
      }
    if (!moved) break;
  }
  for (auto& b : K.k_simple)
    if (K.form(v, b) == Q(0)) return std::nullopt;
  return std::make_pair(sign, v - K.rho_c);
}

// ------------------------------------------------------------- Levi data

struct LeviData {
  std::vector<QVec> p_weights;  // nonzero weights of p cap [l,l] on t
  int zero_weights = 0;
  std::vector<int> degrees;
};

struct CellData {
  KStructure K;
  LeviData levi;
  std::vector<QVec> u_p_weights;  // weights of u cap p
  QVec shift;  // 2 rho(u cap p) - rho(u)
};

inline CellData cell_data(const InnerClass& ic, const ZParameter& z, const std::vector<int>& catalog_degrees) {
  const auto& D = ic.D();
  CartanFrame f = fundamental_frame(ic, z.frame);
  std::set<int> U(z.nilradical.begin(), z.nilradical.end());
  for (int r : z.nilradical)
    if (!U.count(theta_root(ic, f.theta, r))) throw KTypeError("u is not stable under theta_f");
  QVec rho_u = rho_of(D, z.nilradical);
  CellData c;
  c.K = k_structure(ic, f, rho_u);
  auto p_weights_of = [&](const std::vector<int>& roots) {
    std::vector<QVec> out;
    for (int r : roots) {
      RootClass cl = classify_root(ic, f, r);
      if (cl == RootClass::Imaginary) {
        if (f.eps[r] == 1) out.push_back(to_q(D.roots[r]));
      } else {
        int t = theta_root(ic, f.theta, r);
        if (r < t) out.push_back(c.K.restrict(D.roots[r]));  // one p-weight per pair {r, theta r}
      }
    }
    return out;
  };
  c.levi.p_weights = p_weights_of(z.levi);
  if (!z.levi.empty()) {
    auto simple = subsystem_simple(D, z.levi);
    std::vector<IVec> cols;
    for (int s : simple) cols.push_back(D.coroots[s]);
    IMat C = IMat::from_cols(cols, D.n);
    c.levi.zero_weights = rank_of(one_minus(f.theta.transpose()) * C);
    c.levi.degrees = levi_degrees(D, z.levi);
    if (int(z.levi.size()) == D.nroots() && !catalog_degrees.empty()) {
      auto cd = catalog_degrees;
      std::sort(cd.begin(), cd.end());
      if (cd != c.levi.degrees) throw KTypeError("catalog invariant degrees disagree with the root system");
      c.levi.degrees = cd;
    }
  }
  c.u_p_weights = p_weights_of(z.nilradical);
  c.shift = -rho_u;  // theta_f-fixed already
  for (auto& w : c.u_p_weights) c.shift = c.shift + w;
  return c;
}

inline FormalCharacter nilcone_character(int n, const LeviData& L, int D) {
  std::vector<QVec> w = L.p_weights;
  for (int i = 0; i < L.zero_weights; ++i) w.push_back(QVec(n, Q(0)));
  auto c = sym_character(n, w, D);
  for (int d : L.degrees) divide_out_invariant(c, d);
  return c;
}

// ----------------------------------------------------------- K-type series

struct KType {
  QVec highest;
  Int mult;
  Q norm;  // |mu + rho_c|^2
  bool certified;
};

struct KTypeSeries {
  int truncation = 0;
  std::optional<Q> cutoff;  // certified iff |mu + rho_c|^2 < cutoff (none: all certified)
  std::vector<KType> types;  // sorted by norm then weight
  std::vector<std::map<QVec, Int>> by_degree;

  std::map<QVec, Int> certified() const {
    std::map<QVec, Int> m;
    for (auto& t : types)
      if (t.certified) m[t.highest] = t.mult;
    return m;
  }
};

// Decompose a graded weight character into V(mu) multiplicities by the alternating sum.
inline KTypeSeries decompose(const KStructure& K, const FormalCharacter& ch) {
  KTypeSeries s;
  s.truncation = ch.truncation;
  std::map<QVec, Int> total;
  for (auto& g : ch.graded) {
    std::map<QVec, Int> deg;
    for (auto& [w, m] : g) {
      auto st = straighten(K, w);
      if (!st) continue;
      auto& x = deg[st->second];
      x += st->first * m;
    }
    std::erase_if(deg, [](auto& kv) { return kv.second == 0; });
    for (auto& [w, m] : deg) total[w] += m;
    s.by_degree.push_back(deg);
  }
  std::erase_if(total, [](auto& kv) { return kv.second == 0; });
  auto norm = [&](const QVec& mu) { return K.form(mu + K.rho_c, mu + K.rho_c); };
  int D = ch.truncation;
  for (int d = std::max(0, D - 1); d <= D; ++d)
    for (auto& [w, m] : s.by_degree[d])
      if (!s.cutoff || norm(w) < *s.cutoff) s.cutoff = norm(w);
  for (auto& [w, m] : total) s.types.push_back({w, m, norm(w), !s.cutoff || norm(w) < *s.cutoff});
  std::stable_sort(s.types.begin(), s.types.end(), [](auto& a, auto& b) { return a.norm < b.norm; });
  return s;
}

inline FormalCharacter cell_character(const CellData& c, int D) {
  int n = c.K.n;
  auto ch = product(nilcone_character(n, c.levi, D), sym_character(n, c.u_p_weights, D));
  return shift(ch, c.shift);
}

inline KTypeSeries ktype_series(const InnerClass& ic, const ZParameter& z, const std::vector<int>& degrees, int D) {
  if (D < 1) throw KTypeError("cutoff must be at least 1");
  auto c = cell_data(ic, z, degrees);
  auto s = decompose(c.K, cell_character(c, D));
  if (std::none_of(s.types.begin(), s.types.end(), [](auto& t) { return t.certified; }))
    throw KTypeError("cutoff " + std::to_string(D) + " certifies no K-type");
  return s;
}

// Certified multiplicities (including certified zeros) must not move when D is raised by 2.
inline bool stable_under_extension(const InnerClass& ic, const ZParameter& z, const std::vector<int>& degrees, int D) {
  auto a = ktype_series(ic, z, degrees, D);
  auto b = ktype_series(ic, z, degrees, D + 2);
  auto ca = a.certified();
  std::map<QVec, Int> all;
  for (auto& t : b.types) all[t.highest] = t.mult;
  for (auto& [w, m] : ca) {
    auto it = all.find(w);
    if (it == all.end() || it->second != m) return false;
  }
  for (auto& t : b.types)
    if (!ca.count(t.highest) && (!a.cutoff || t.norm < *a.cutoff)) return false;
  return true;
}

struct AVReport {
  bool full;
  std::optional<int> dimension;
};

inline AVReport associated_variety_report(const InnerClass& ic, const ZParameter& z) {
  bool full = is_unipotent_z(ic, z);
  return {full, full ? std::optional<int>(ic.D().nroots() / 2) : std::nullopt};
}

}  // namespace pu
