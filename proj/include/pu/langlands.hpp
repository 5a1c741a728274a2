#pragma once
// Dual side: the dual based datum, Tits representatives, (y, lambda) pairs with lambda = 0, and the
// matrix-realization oracle for involution classes.
//
// H^v has cocharacter lattice X*, so torus elements are points of X* (x) Q/Z. The dual Weyl
// element with word (i1..ik) acts there as the G-side matrix of the same word.

#include "pu/unipotent.hpp"

namespace pu {

struct LanglandsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline QVec mod_one(QVec v) {
  for (auto& x : v) x = frac(x);
  return v;
}

struct DualDatum {
  InnerClass ic;  // dual datum with delta_v
  IMat delta_t;  // delta transposed, on X_*
};

inline DualDatum make_dual(const InnerClass& ic) {
  auto Dv = dual_datum(ic.D());
  auto tmp = make_inner_class(Dv, ic.delta.transpose());
  IMat dv = -tmp.W().mat(tmp.W().longest) * ic.delta.transpose();
  DualDatum out{make_inner_class(Dv, dv), ic.delta.transpose()};
  return out;
}

// --------------------------------------------------------------------- Tits

struct TitsElement {
  QVec torus;  // mod 1
  int w = 0;  // index in the G-side Weyl group
  bool operator==(const TitsElement&) const = default;
};

// sigma_s * (t, w)
inline TitsElement sigma_left(const InnerClass& ic, int s, const TitsElement& x) {
  const auto& W = ic.W();
  const auto& D = ic.D();
  int sw = W.mul(W.simple(s), x.w);
  QVec t = W.mat(W.simple(s)) * x.torus;
  if (W.length(sw) < W.length(x.w)) t = t + Q(1, 2) * to_q(D.simple_roots[s]);  // sigma_s^2 = alpha^v(-1)
  return {mod_one(t), sw};
}

inline TitsElement tits_from_word(const InnerClass& ic, const std::vector<int>& word) {
  TitsElement x{QVec(ic.D().n, Q(0)), 0};
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = sigma_left(ic, *it, x);
  return x;
}

inline TitsElement tits_sigma(const InnerClass& ic, int w) {
  const auto& word = ic.W().elts[w].word;
  auto x = tits_from_word(ic, word);
  if (x.w != w) throw LanglandsError("word does not spell the element");
  return x;
}

// (t_a sigma_wa)(t_b sigma_wb) = t_a wa(t_b) sigma_wa sigma_wb
inline TitsElement tits_mul(const InnerClass& ic, const TitsElement& a, const TitsElement& b) {
  TitsElement x = b;
  const auto& word = ic.W().elts[a.w].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = sigma_left(ic, *it, x);
  x.torus = mod_one(x.torus + a.torus);
  return x;
}

inline std::vector<std::vector<int>> reduced_words(const InnerClass& ic, int w) {
  const auto& W = ic.W();
  if (W.length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int s = 0; s < W.nsimple; ++s) {
    int sw = W.mul(W.simple(s), w);
    if (W.length(sw) >= W.length(w)) continue;
    for (auto& r : reduced_words(ic, sw)) {
      std::vector<int> x{s};
      x.insert(x.end(), r.begin(), r.end());
      out.push_back(x);
    }
  }
  return out;
}

// ------------------------------------------------------------------- LPairs

struct LPair {
  std::vector<int> word;  // lex-minimal reduced word of w (0-based)
  QVec torus_class;  // invariant coordinates modulo H^v conjugation
  bool twist = true;  // y lies in the theta_0^v coset
  auto operator<=>(const LPair&) const = default;
};

struct LanglandsData {
  LPair pair;
  IMat theta_std;  // theta after moving b to the standard Borel
  IMat theta_dual;  // -theta_std^t on X_*
  int w = 0;
  QVec torus;  // mu_std / 2 mod 1
  bool order2 = false;
};

inline LanglandsData langlands_parameter(const InnerClass& ic, const DualDatum& dual, const BBParameter& p) {
  if (!is_unipotent_bb(ic, p)) throw LanglandsError("parameter is not unipotent");
  const auto& W = ic.W();
  BBParameter q = transport(ic, p, W.inverse(p.borel));
  if (q.borel != 0) throw LanglandsError("transport failed");
  LanglandsData L;
  L.theta_std = q.frame.theta;
  L.theta_dual = -q.frame.theta.transpose();
  const auto& Wv = dual.ic.W();
  int wv = Wv.find(L.theta_dual * dual.ic.delta);
  if (wv < 0) throw LanglandsError("theta^v is not in the inner class of delta^v");
  const auto& word = Wv.elts[wv].word;
  IMat m = IMat::identity(ic.D().n);
  for (int i : word) m = m * ic.D().simple_reflection(i);
  L.w = W.find(m);
  if (coweight_action(m) != Wv.mat(wv)) throw LanglandsError("dual Weyl element disagrees with its G-side action");
  L.torus = mod_one(Q(1, 2) * to_q(q.mu));
  // y^2 = (v + w delta^v v + tors(sigma_w sigma_w^-1), 1); w delta^v acts on X* as -theta_std
  TitsElement c = tits_mul(ic, tits_sigma(ic, L.w), tits_sigma(ic, W.inverse(L.w)));
  QVec sq = mod_one(L.torus - q.frame.theta * L.torus + c.torus);
  L.order2 = c.w == 0 && is_zero(sq);
  L.pair.word = W.elts[L.w].word;
  L.pair.torus_class = QuotientReducer(one_plus(q.frame.theta)).torus_class(L.torus);
  return L;
}

struct AdYFlags {
  bool order2, small, large, typeL;
};

// Ad(y) on the dual datum: involution theta^v, imaginary dual roots graded by the torus part.
inline AdYFlags principal_unipotent_y_check(const DualDatum& dual, const LanglandsData& L) {
  const auto& Dv = dual.ic.D();
  CartanFrame f{L.theta_dual, std::vector<int>(Dv.nroots(), -1), {}};
  for (int r = 0; r < Dv.nroots(); ++r)
    if (L.theta_dual * Dv.roots[r] == Dv.roots[r]) {
      // e^{2 pi i <v, a>} with v = mu/2
      Q x = dot(L.torus, Dv.roots[r]);
      f.eps[r] = frac(x) == Q(0) ? 0 : 1;
    }
  Flags fl = positive_system_flags(dual.ic, f, 0);
  return {L.order2, fl.small, fl.large, fl.typeL};
}

// ------------------------------------------------------------------- oracle

// Conjugacy classes of y with y^2 = 1 (identity included), by brute force over diagonal sign
// matrices in a matrix realization. Eigenvalue multisets classify semisimple classes in these
// groups; for PGL, y^2 scalar reduces to y^2 = 1 up to the center {+-1}.
inline int order2_oracle(const std::string& realization) {
  struct Spec {
    int n;
    std::function<bool(const std::vector<int>&)> member;
    bool mod_sign;
  };
  auto det1 = [](const std::vector<int>& s) { return std::count(s.begin(), s.end(), -1) % 2 == 0; };
  auto any = [](const std::vector<int>&) { return true; };
  // diag(a, b, 1/b, 1/a) in Sp4 and diag(a, b, 1, 1/b, 1/a) in SO5: entries paired
  auto paired = [](const std::vector<int>& s) {
    int n = int(s.size());
    for (int i = 0; i < n / 2; ++i)
      if (s[i] != s[n - 1 - i]) return false;
    return n % 2 == 0 || s[n / 2] == 1;
  };
  std::map<std::string, Spec> specs{
      {"SL2", {2, det1, false}}, {"PGL2", {2, any, true}}, {"SL3", {3, det1, false}},
      {"PGL3", {3, any, true}},  {"Sp4", {4, paired, false}}, {"SO5", {5, paired, false}},
  };
  if (realization == "G2") {
    // G2 in SO7: weights of the 7-dimensional representation are 0 and the short roots. Torus
    // involutions are x(-1) for x in X_* mod 2; the eigenvalue of x(-1) on weight r is (-1)^<r, x>.
    auto D = datum_from_string("G2");
    std::vector<IVec> shorts;
    for (int r = 0; r < D.nroots(); ++r) {
      bool is_long = false;
      for (int c = 0; c < D.nroots(); ++c) is_long = is_long || std::abs(D.pair(r, c)) == 3;
      if (!is_long) shorts.push_back(D.roots[r]);
    }
    std::set<std::vector<int>> classes;
    for (int m = 0; m < 4; ++m) {
      IVec x{m & 1, m >> 1};
      std::vector<int> ev{1};
      for (auto& r : shorts) ev.push_back(mod(dot(r, x), 2) ? -1 : 1);
      std::sort(ev.begin(), ev.end());
      classes.insert(ev);
    }
    return int(classes.size());
  }
  auto it = specs.find(realization);
  if (it == specs.end()) throw LanglandsError("unsupported realization '" + realization + "'");
  const auto& sp = it->second;
  std::set<std::vector<int>> classes;
  for (int m = 0; m < (1 << sp.n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < sp.n; ++i) s.push_back((m >> i) & 1 ? -1 : 1);
    if (!sp.member(s)) continue;
    auto key = s;
    std::sort(key.begin(), key.end());
    if (sp.mod_sign) {
      auto neg = s;
      for (auto& x : neg) x = -x;
      std::sort(neg.begin(), neg.end());
      key = std::min(key, neg);
    }
    classes.insert(key);
  }
  return int(classes.size());
}

// ------------------------------------------------------------------ packets

struct Packet {
  LPair pair;
  std::vector<int> members;  // BB*0 vertex ids
  AdYFlags flags;
};

struct LanglandsReport {
  std::vector<Packet> packets;
  bool all_order2 = true;
  int small_typeL = 0, large_typeL = 0;  // packets satisfying each reading
  std::optional<int> oracle;
};

inline LanglandsReport langlands_report(const Group& g, const ClassificationReport& R) {
  LanglandsReport out;
  auto dual = make_dual(g.ic);
  std::map<LPair, size_t> pos;
  for (int v : R.bb_star) {
    auto L = langlands_parameter(g.ic, dual, R.graph.vertices[v]);
    auto fl = principal_unipotent_y_check(dual, L);
    out.all_order2 = out.all_order2 && L.order2;
    auto it = pos.find(L.pair);
    if (it == pos.end()) {
      pos[L.pair] = out.packets.size();
      out.packets.push_back({L.pair, {v}, fl});
    } else
      out.packets[it->second].members.push_back(v);
  }
  std::sort(out.packets.begin(), out.packets.end(), [](auto& a, auto& b) { return a.pair < b.pair; });
  for (auto& p : out.packets) {
    out.small_typeL += p.flags.small && p.flags.typeL;
    out.large_typeL += p.flags.large && p.flags.typeL;
  }
  if (!g.entry.dual_realization.empty()) {
    try {
      out.oracle = order2_oracle(g.entry.dual_realization);
    } catch (const LanglandsError&) {
    }
  }
  return out;
}

}  // namespace pu
