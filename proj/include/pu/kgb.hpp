#pragma once
// Parameters [h, b, chi] at infinitesimal character 0, cross actions, real Cayley transforms and
// the closure graph.
//
// chi|_T is stored as a class mu in X*/(1-theta)X* (the character group of H^theta); the
// differential is forced: (1+theta)mu = -(1+theta)rho(n).

#include "pu/realform.hpp"

#include <deque>
#include "json.hpp"

namespace pu {

struct BBParameter {
  CartanFrame frame;
  int borel = 0;
  IVec mu;
  int id = -1;  // assigned by the graph

  bool same_class(const BBParameter& o) const { return frame == o.frame && borel == o.borel && mu == o.mu; }
};

struct CharacterData {
  std::vector<int> real_grading;  // per root index: -1 if not real, 0 even, 1 odd
  std::vector<int> extra_values;  // parity of chi on the extra generators
};

inline CharacterData character_data(const InnerClass& ic, const BBParameter& p) {
  CharacterData c;
  const auto& D = ic.D();
  for (int r = 0; r < D.nroots(); ++r)
    c.real_grading.push_back(classify_root(ic, p.frame, r) == RootClass::Real ? int(mod(dot(p.mu, D.coroots[r]), 2))
                                                                               : -1);
  for (auto& v : p.frame.extra) c.extra_values.push_back(int(mod(dot(p.mu, v), 2)));
  return c;
}

inline bool is_odd(const InnerClass& ic, const BBParameter& p, int r) {
  if (classify_root(ic, p.frame, r) != RootClass::Real) throw RealFormError("parity of a non-real root");
  return mod(dot(p.mu, ic.D().coroots[r]), 2) == 1;
}

// Multiplicativity of the real grading: gamma^v = alpha^v + beta^v forces g(gamma) = g(alpha) + g(beta).
inline bool character_additive(const InnerClass& ic, const BBParameter& p) {
  const auto& D = ic.D();
  auto c = character_data(ic, p);
  for (int a = 0; a < D.nroots(); ++a)
    for (int b = 0; b < D.nroots(); ++b) {
      if (c.real_grading[a] < 0 || c.real_grading[b] < 0) continue;
      IVec s = D.coroots[a] + D.coroots[b];
      for (int g = 0; g < D.nroots(); ++g)
        if (D.coroots[g] == s && c.real_grading[g] >= 0 && c.real_grading[g] != (c.real_grading[a] ^ c.real_grading[b]))
          return false;
    }
  return true;
}

inline QVec rho_n(const InnerClass& ic, int borel) { return rho_of(ic.D(), positive_set(ic, borel)); }

inline bool differential_ok(const InnerClass& ic, const BBParameter& p) {
  IMat P = one_plus(p.frame.theta);
  return P * to_q(p.mu) == -(P * rho_n(ic, p.borel));
}

inline int d_invariant(const InnerClass& ic, const BBParameter& p) {
  int dim_t = rank_of(one_plus(p.frame.theta));
  int compact = 0, pairs = 0;
  for (int r : positive_set(ic, p.borel)) {
    RootClass c = classify_root(ic, p.frame, r);
    if (c == RootClass::Imaginary && p.frame.eps[r] == 0) ++compact;
    if (c == RootClass::Complex && in_positive(ic, p.borel, theta_root(ic, p.frame.theta, r))) ++pairs;
  }
  return dim_t + compact + pairs / 2;
}

// ----------------------------------------------------------- canonical form

using ParamKey = std::tuple<FrameKey, int, IVec>;
inline ParamKey param_key(const InnerClass& ic, const BBParameter& p) {
  return {frame_key(ic, p.frame), p.borel, p.mu};
}

inline BBParameter transport(const InnerClass& ic, const BBParameter& p, int u) {
  BBParameter q;
  q.frame = conjugate_frame(ic, p.frame, u);
  q.borel = ic.W().mul(u, p.borel);
  q.mu = ic.W().mat(u) * p.mu;
  q.mu = QuotientReducer(one_minus(q.frame.theta)).reduce(q.mu);
  return q;
}

inline BBParameter canonical(const InnerClass& ic, const BBParameter& p) {
  auto [fc, u] = canonical_frame(ic, p.frame);
  const auto& W = ic.W();
  QuotientReducer red(one_minus(fc.theta));
  int b0 = W.mul(u, p.borel);
  IVec m0 = W.mat(u) * p.mu;
  std::optional<std::pair<int, IVec>> best;
  for (int w : real_weyl_group(ic, fc)) {
    std::pair<int, IVec> k{W.mul(w, b0), red.reduce(W.mat(w) * m0)};
    if (!best || k < *best) best = k;
  }
  return BBParameter{fc, best->first, best->second, -1};
}

// -------------------------------------------------------------- operations

inline void require_simple(const InnerClass& ic, const BBParameter& p, int a) {
  auto s = simple_set(ic, p.borel);
  if (std::find(s.begin(), s.end(), a) == s.end()) throw RealFormError("root is not simple for the positive system");
}

inline BBParameter cross_action(const InnerClass& ic, const BBParameter& p, int a) {
  require_simple(ic, p, a);
  const auto& D = ic.D();
  BBParameter q = p;
  q.borel = ic.W().mul(ic.W().find(D.reflection(a)), p.borel);
  q.mu = QuotientReducer(one_minus(p.frame.theta)).reduce(p.mu + D.roots[a]);
  q.id = -1;
  return q;
}

// All mu classes in X*/(1-theta)X* with (1+theta)mu = -(1+theta)rho.
inline std::vector<IVec> characters_with_differential(const CartanFrame& f, const QVec& rho) {
  IMat P = one_plus(f.theta);
  QVec rhs = -(P * rho);
  if (!is_integral(rhs)) return {};
  auto sol = solve_int(P, to_int(rhs));
  if (!sol) return {};
  QuotientReducer red(one_minus(f.theta));
  std::set<IVec> out;
  // 2 ker(1+theta) lies in (1-theta)X*, so 0/1 coefficients reach every class
  size_t k = sol->kernel.size();
  for (size_t m = 0; m < (size_t(1) << k); ++m) {
    IVec v = sol->particular;
    for (size_t j = 0; j < k; ++j)
      if ((m >> j) & 1) v = v + sol->kernel[j];
    out.insert(red.reduce(v));
  }
  return {out.begin(), out.end()};
}

inline std::vector<IVec> characters_for(const InnerClass& ic, const CartanFrame& f, int borel) {
  return characters_with_differential(f, rho_n(ic, borel));
}

// c+ keeps the labels of Delta+, c- uses s_alpha Delta+.
inline std::pair<BBParameter, BBParameter> cayley_real(const InnerClass& ic, const BBParameter& p, int a) {
  require_simple(ic, p, a);
  const auto& D = ic.D();
  if (classify_root(ic, p.frame, a) != RootClass::Real) throw RealFormError("Cayley transform needs a real root");
  if (!is_odd(ic, p, a)) throw RealFormError("Cayley transform needs an odd real root");
  CartanFrame f2 = cayley_frame(ic, p.frame, a);
  const IMat& th = p.frame.theta;
  const IMat& th2 = f2.theta;
  // chi' agrees with chi on H^theta cap H^theta' cap ker(alpha)
  std::vector<IVec> gens;
  IMat A = one_minus(th), B = one_minus(th2);
  for (int j = 0; j < D.n; ++j) gens.push_back(A.col(j)), gens.push_back(B.col(j));
  gens.push_back(D.roots[a]);
  IMat L = IMat::from_cols(gens, D.n);
  IMat P2 = one_plus(th2);
  QuotientReducer red(B);
  auto lift = [&](int borel) {
    QVec rhs = -(P2 * rho_n(ic, borel)) - P2 * to_q(p.mu);
    if (!is_integral(rhs)) throw std::logic_error("Cayley: non-integral differential");
    auto sol = solve_int(P2 * L, to_int(rhs));
    if (!sol) throw std::logic_error("Cayley: no compatible character");
    for (auto& k : sol->kernel)
      if (!red.contains(L * k)) throw std::logic_error("Cayley: character not unique");
    BBParameter q{f2, borel, red.reduce(p.mu + L * sol->particular), -1};
    return q;
  };
  int sa = ic.W().find(D.reflection(a));
  return {lift(p.borel), lift(ic.W().mul(sa, p.borel))};
}

struct Normalized {
  BBParameter param;
  int sign = 1;
  int steps = 0;
};

// Cross through lex-least complex simple roots with theta(alpha) negative (to_Z) or positive.
inline Normalized normalize(const InnerClass& ic, BBParameter p, bool to_Z) {
  Normalized n{p, 1, 0};
  for (;;) {
    int pick = -1;
    auto simple = simple_set(ic, n.param.borel);
    std::sort(simple.begin(), simple.end());
    for (int a : simple) {
      if (classify_root(ic, n.param.frame, a) != RootClass::Complex) continue;
      bool tpos = in_positive(ic, n.param.borel, theta_root(ic, n.param.frame.theta, a));
      if (tpos != to_Z) {
        pick = a;
        break;
      }
    }
    if (pick < 0) return n;
    n.param = cross_action(ic, n.param, pick);
    n.sign = -n.sign;
    if (++n.steps > ic.D().nroots()) throw std::logic_error("normalization does not terminate");
  }
}
inline Normalized normalize_typeZ(const InnerClass& ic, const BBParameter& p) { return normalize(ic, p, true); }
inline Normalized normalize_typeL(const InnerClass& ic, const BBParameter& p) { return normalize(ic, p, false); }

// ------------------------------------------------------------------- graph

enum class EdgeKind { Cross, CayleyPlus, CayleyMinus };
inline const char* to_string(EdgeKind k) {
  return k == EdgeKind::Cross ? "cross" : k == EdgeKind::CayleyPlus ? "cayley+" : "cayley-";
}

struct Edge {
  int from, to;
  EdgeKind kind;
  int root;  // root index in the source labeling
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterGraph {
  std::vector<BBParameter> vertices;
  std::vector<Edge> edges;
  std::vector<int> cartan_class;  // per vertex: index into frames
  std::vector<CartanFrame> frames;
  std::map<ParamKey, int> index;

  int find(const InnerClass& ic, const BBParameter& p) const {
    auto it = index.find(param_key(ic, canonical(ic, p)));
    return it == index.end() ? -1 : it->second;
  }
};

inline std::vector<BBParameter> seeds_for(const InnerClass& ic, const CartanFrame& f) {
  std::map<ParamKey, BBParameter> uniq;
  for (int b = 0; b < ic.W().size(); ++b)
    for (auto& mu : characters_for(ic, f, b)) {
      auto c = canonical(ic, BBParameter{f, b, mu, -1});
      uniq.emplace(param_key(ic, c), c);
    }
  std::vector<BBParameter> out;
  for (auto& [k, v] : uniq) out.push_back(v);
  return out;
}

inline ParameterGraph close_graph(const InnerClass& ic, const std::vector<BBParameter>& seeds, size_t max_size = 100000) {
  ParameterGraph g;
  std::map<FrameKey, int> frame_ids;
  std::deque<int> todo;
  auto add = [&](const BBParameter& raw) {
    BBParameter c = canonical(ic, raw);
    auto key = param_key(ic, c);
    auto it = g.index.find(key);
    if (it != g.index.end()) return it->second;
    if (g.vertices.size() >= max_size) throw GraphError("parameter graph exceeds size bound " + std::to_string(max_size));
    c.id = int(g.vertices.size());
    auto fk = frame_key(ic, c.frame);
    auto fit = frame_ids.find(fk);
    if (fit == frame_ids.end()) {
      fit = frame_ids.emplace(fk, int(g.frames.size())).first;
      g.frames.push_back(c.frame);
    }
    g.cartan_class.push_back(fit->second);
    g.index[key] = c.id;
    g.vertices.push_back(c);
    todo.push_back(c.id);
    return c.id;
  };
  for (auto& s : seeds) add(s);
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop_front();
    BBParameter p = g.vertices[v];
    auto simple = simple_set(ic, p.borel);
    std::sort(simple.begin(), simple.end());
    for (int a : simple) {
      int t = add(cross_action(ic, p, a));
      g.edges.push_back({v, t, EdgeKind::Cross, a});
    }
    for (int a : simple) {
      if (classify_root(ic, p.frame, a) != RootClass::Real || !is_odd(ic, p, a)) continue;
      auto [cp, cm] = cayley_real(ic, p, a);
      int tp = add(cp);
      int tm = add(cm);
      g.edges.push_back({v, tp, EdgeKind::CayleyPlus, a});
      g.edges.push_back({v, tm, EdgeKind::CayleyMinus, a});
    }
  }
  return g;
}

// Edges where d moves the wrong way: Cayley must raise it by one, a complex cross action must change
// it by one in the direction fixed by whether theta(alpha) is positive.
inline std::vector<Edge> monotonicity_violations(const InnerClass& ic, const ParameterGraph& G) {
  std::vector<Edge> bad;
  for (auto& e : G.edges) {
    const auto& p = G.vertices[e.from];
    int dd = d_invariant(ic, G.vertices[e.to]) - d_invariant(ic, p);
    bool ok = true;
    if (e.kind != EdgeKind::Cross) ok = dd == 1;
    else if (classify_root(ic, p.frame, e.root) == RootClass::Complex)
      ok = dd == (in_positive(ic, p.borel, theta_root(ic, p.frame.theta, e.root)) ? -1 : 1);
    if (!ok) bad.push_back(e);
  }
  return bad;
}

// --------------------------------------------------------------- export

inline nlohmann::ordered_json frame_json(const InnerClass& ic, const CartanFrame& f) {
  nlohmann::ordered_json j;
  int w = theta_weyl_index(ic, f.theta);
  std::vector<int> word;
  for (int i : ic.W().elts[w].word) word.push_back(i + 1);
  j["theta_word"] = word;
  j["delta"] = ic.distinguished ? "id" : "outer";
  std::string bits;
  for (int b : grading_bits(ic, f)) bits += char('0' + b);
  j["grading"] = bits;
  return j;
}

inline nlohmann::ordered_json param_json(const InnerClass& ic, const ParameterGraph& g, int v) {
  const auto& D = ic.D();
  const auto& p = g.vertices[v];
  nlohmann::ordered_json j;
  j["id"] = p.id;
  j["cartan"] = g.cartan_class[v];
  j["frame"] = frame_json(ic, p.frame);
  std::vector<int> word;
  for (int i : ic.W().elts[p.borel].word) word.push_back(i + 1);
  j["positive_system"] = word;
  std::vector<IVec> simple;
  for (int a : simple_set(ic, p.borel)) simple.push_back(D.roots[a]);
  j["simple_roots"] = simple;
  j["mu"] = p.mu;
  auto c = character_data(ic, p);
  nlohmann::ordered_json rg = nlohmann::ordered_json::array();
  for (int r = 0; r < D.nroots(); ++r)
    if (c.real_grading[r] >= 0 && D.positive[r])
      rg.push_back({{"root", D.roots[r]}, {"parity", c.real_grading[r] ? "odd" : "even"}});
  j["real_grading"] = rg;
  j["d"] = d_invariant(ic, p);
  return j;
}

inline nlohmann::ordered_json graph_json(const InnerClass& ic, const ParameterGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (size_t v = 0; v < g.vertices.size(); ++v) j["vertices"].push_back(param_json(ic, g, int(v)));
  j["edges"] = nlohmann::ordered_json::array();
  for (auto& e : g.edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}, {"root", ic.D().roots[e.root]}});
  return j;
}

}  // namespace pu
