#pragma once
// Principal unipotent BB parameters, Zuckerman parameters, the map Z and the decomposition algorithm.

#include "pu/catalog.hpp"
#include "pu/kgb.hpp"

namespace pu {

inline bool all_simple_real_even(const InnerClass& ic, const BBParameter& p) {
  for (int a : simple_set(ic, p.borel))
    if (classify_root(ic, p.frame, a) == RootClass::Real && is_odd(ic, p, a)) return false;
  return true;
}

inline bool is_unipotent_bb(const InnerClass& ic, const BBParameter& p) {
  Flags f = positive_system_flags(ic, p.frame, p.borel);
  return f.large && f.typeZ && all_simple_real_even(ic, p);
}

inline bool is_nonzero(const InnerClass& ic, const BBParameter& p) {
  auto n = normalize_typeL(ic, p);
  return positive_system_flags(ic, n.param.frame, n.param.borel).large;
}

// ------------------------------------------------------------ Z parameters

struct ZParameter {
  CartanFrame frame;
  std::vector<int> levi;  // root indices, all real for the frame
  std::vector<int> nilradical;  // sorted root indices
  QVec differential;  // -rho(u)
  IVec mu;  // chi# on T, class mod (1-theta)X*
  int id = -1;
};

using ZKey = std::tuple<FrameKey, std::vector<int>, IVec>;
inline ZKey z_key(const InnerClass& ic, const ZParameter& z) { return {frame_key(ic, z.frame), z.nilradical, z.mu}; }

inline ZParameter make_z(const InnerClass& ic, const CartanFrame& f, std::vector<int> nil, const IVec& mu) {
  std::sort(nil.begin(), nil.end());
  ZParameter z{f, roots_of_class(ic, f, RootClass::Real), nil, -rho_of(ic.D(), nil), mu, -1};
  return z;
}

inline ZParameter canonical(const InnerClass& ic, const ZParameter& z) {
  auto [fc, u] = canonical_frame(ic, z.frame);
  const auto& W = ic.W();
  QuotientReducer red(one_minus(fc.theta));
  std::optional<std::pair<std::vector<int>, IVec>> best;
  for (int w : real_weyl_group(ic, fc)) {
    int x = W.mul(w, u);
    std::vector<int> nil;
    for (int r : z.nilradical) nil.push_back(W.act_root(x, r));
    std::sort(nil.begin(), nil.end());
    std::pair<std::vector<int>, IVec> k{nil, red.reduce(W.mat(x) * z.mu)};
    if (!best || k < *best) best = k;
  }
  return make_z(ic, fc, best->first, best->second);
}

inline ZParameter zuckerman_of(const InnerClass& ic, const BBParameter& p) {
  if (!is_unipotent_bb(ic, p)) throw std::invalid_argument("zuckerman_of needs a unipotent parameter");
  std::vector<int> nil;
  for (int r : positive_set(ic, p.borel))
    if (classify_root(ic, p.frame, r) != RootClass::Real) nil.push_back(r);
  // |rho(n cap l)| is trivial on T, so chi# restricts to chi there
  return make_z(ic, p.frame, nil, p.mu);
}

// Some positive system containing u that is large and type Z.
inline bool is_unipotent_z(const InnerClass& ic, const ZParameter& z) {
  for (int b = 0; b < ic.W().size(); ++b) {
    bool contains = std::all_of(z.nilradical.begin(), z.nilradical.end(), [&](int r) { return in_positive(ic, b, r); });
    if (!contains) continue;
    Flags f = positive_system_flags(ic, z.frame, b);
    if (f.large && f.typeZ) return true;
  }
  return false;
}

inline bool z_structure_ok(const InnerClass& ic, const ZParameter& z) {
  std::set<int> u(z.nilradical.begin(), z.nilradical.end());
  for (int r : z.nilradical)
    if (!u.count(theta_root(ic, z.frame.theta, r))) return false;
  IMat P = one_plus(z.frame.theta);
  return z.differential == -rho_of(ic.D(), z.nilradical) && P * to_q(z.mu) == P * z.differential;
}

// Independent enumeration over the given frames: theta-stable q with l = real roots, chi# with all
// real roots even, kept when unipotent.
inline std::vector<ZParameter> enumerate_z(const InnerClass& ic, const std::vector<CartanFrame>& frames) {
  std::map<ZKey, ZParameter> uniq;
  const auto& D = ic.D();
  for (auto& f : frames) {
    auto real = roots_of_class(ic, f, RootClass::Real);
    std::set<std::vector<int>> seen;
    for (int b = 0; b < ic.W().size(); ++b) {
      std::vector<int> nil;
      for (int r : positive_set(ic, b))
        if (classify_root(ic, f, r) != RootClass::Real) nil.push_back(r);
      std::set<int> u(nil.begin(), nil.end());
      bool stable = std::all_of(nil.begin(), nil.end(), [&](int r) { return u.count(theta_root(ic, f.theta, r)); });
      if (!stable || !seen.insert(nil).second) continue;
      for (auto& mu : characters_with_differential(f, rho_of(D, nil))) {
        bool even = std::all_of(real.begin(), real.end(), [&](int r) { return mod(dot(mu, D.coroots[r]), 2) == 0; });
        if (!even) continue;
        auto z = canonical(ic, make_z(ic, f, nil, mu));
        if (is_unipotent_z(ic, z)) uniq.emplace(z_key(ic, z), z);
      }
    }
  }
  std::vector<ZParameter> out;
  for (auto& [k, z] : uniq) out.push_back(z);
  return out;
}

// ------------------------------------------------------------- decomposition

struct SignedTerm {
  BBParameter param;  // canonical
  int coeff;
};

inline std::vector<SignedTerm> decompose_to_unipotent(const InnerClass& ic, const BBParameter& p0) {
  std::map<ParamKey, SignedTerm> acc;
  std::vector<std::pair<BBParameter, int>> stack{{p0, 1}};
  int guard = 0;
  while (!stack.empty()) {
    auto [p, sign] = stack.back();
    stack.pop_back();
    if (++guard > 100000) throw std::logic_error("decomposition does not terminate");
    if (!is_nonzero(ic, p)) continue;
    if (is_unipotent_bb(ic, p)) {
      auto c = canonical(ic, p);
      auto k = param_key(ic, c);
      auto it = acc.find(k);
      if (it == acc.end()) acc.emplace(k, SignedTerm{c, sign});
      else it->second.coeff += sign;
      continue;
    }
    auto simple = simple_set(ic, p.borel);
    std::sort(simple.begin(), simple.end());
    int odd = -1;
    for (int a : simple)
      if (classify_root(ic, p.frame, a) == RootClass::Real && is_odd(ic, p, a)) {
        odd = a;
        break;
      }
    if (odd >= 0) {
      auto [cp, cm] = cayley_real(ic, p, odd);
      if (real_root_type(ic, p.frame, odd) == RealType::Type1) {
        stack.push_back({cm, -sign});
        stack.push_back({cp, -sign});
      } else {
        if (param_key(ic, canonical(ic, cp)) != param_key(ic, canonical(ic, cm)))
          throw std::logic_error("type 2 Cayley transforms differ");
        stack.push_back({cp, -sign});
      }
      continue;
    }
    int cx = -1;
    for (int a : simple)
      if (classify_root(ic, p.frame, a) == RootClass::Complex &&
          !in_positive(ic, p.borel, theta_root(ic, p.frame.theta, a))) {
        cx = a;
        break;
      }
    if (cx < 0) throw std::logic_error("nonzero parameter is type Z with even real roots but not large");
    stack.push_back({cross_action(ic, p, cx), -sign});
  }
  std::vector<SignedTerm> out;
  for (auto& [k, t] : acc)
    if (t.coeff != 0) out.push_back(t);
  return out;
}

// ----------------------------------------------------------- classification

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct ClassificationReport {
  std::string group;
  bool quasisplit = false;
  ParameterGraph graph;
  std::vector<int> bb_star;  // vertex ids
  std::vector<ZParameter> z_star;  // ids = positions
  std::vector<std::pair<int, int>> z_map;  // (bb id, z id)
  bool surjective = false, injective = false;
  std::vector<Check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

inline ClassificationReport classify(const Group& g, size_t max_graph = 100000) {
  const auto& ic = g.ic;
  ClassificationReport R;
  R.group = g.entry.name;
  R.quasisplit = is_quasisplit(ic, fundamental_frame(ic, g.seed));
  R.graph = close_graph(ic, seeds_for(ic, g.seed), max_graph);
  const auto& G = R.graph;
  for (auto& p : G.vertices)
    if (is_unipotent_bb(ic, p)) R.bb_star.push_back(p.id);
  R.z_star = enumerate_z(ic, G.frames);
  std::map<ZKey, int> zid;
  for (size_t i = 0; i < R.z_star.size(); ++i) {
    R.z_star[i].id = int(i);
    zid[z_key(ic, R.z_star[i])] = int(i);
  }
  bool lands = true, unip_z = true;
  std::string lands_detail;
  std::set<int> hit;
  for (int v : R.bb_star) {
    auto z = canonical(ic, zuckerman_of(ic, G.vertices[v]));
    if (!is_unipotent_z(ic, z)) unip_z = false;
    auto it = zid.find(z_key(ic, z));
    if (it == zid.end()) {
      lands = false;
      lands_detail += "bb " + std::to_string(v) + " has no Z match; ";
      continue;
    }
    R.z_map.push_back({v, it->second});
    hit.insert(it->second);
  }
  R.surjective = hit.size() == R.z_star.size();
  R.injective = hit.size() == R.z_map.size();
  R.checks.push_back({"z_map lands in Z*0", lands, lands_detail});
  R.checks.push_back({"zuckerman_of is unipotent", unip_z, ""});
  R.checks.push_back({"z_map surjective", R.surjective, ""});
  R.checks.push_back({"|BB*0| = |Z*0|", R.bb_star.size() == R.z_star.size(),
                      std::to_string(R.bb_star.size()) + " vs " + std::to_string(R.z_star.size())});
  R.checks.push_back({"empty iff not quasi-split", R.bb_star.empty() == !R.quasisplit, ""});

  bool additive = true, differential = true;
  for (auto& p : G.vertices) {
    additive = additive && character_additive(ic, p);
    differential = differential && differential_ok(ic, p);
  }
  R.checks.push_back({"character additivity", additive, ""});
  R.checks.push_back({"differential = -rho(n)", differential, ""});

  bool decomp = true;
  std::string ddetail;
  for (auto& p : G.vertices) {
    if (!is_nonzero(ic, p)) continue;
    auto terms = decompose_to_unipotent(ic, p);
    for (auto& t : terms)
      if (!is_unipotent_bb(ic, t.param) || G.find(ic, t.param) < 0) {
        decomp = false;
        ddetail += "vertex " + std::to_string(p.id) + "; ";
      }
    if (is_unipotent_bb(ic, p) && (terms.size() != 1 || terms[0].coeff != 1 || G.find(ic, terms[0].param) != p.id)) {
      decomp = false;
      ddetail += "vertex " + std::to_string(p.id) + " not fixed; ";
    }
  }
  R.checks.push_back({"decomposition lands in BB*0", decomp, ddetail});

  std::string mdetail;
  auto bad = monotonicity_violations(ic, G);
  for (auto& e : bad) mdetail += std::to_string(e.from) + "->" + std::to_string(e.to) + "; ";
  bool mono = bad.empty();
  R.checks.push_back({"d monotone along edges", mono, mdetail});

  bool types = true;
  for (auto& f : G.frames)
    for (int r : roots_of_class(ic, f, RootClass::Real))
      types = types && real_root_type(ic, f, r) == real_root_type_exact(ic, f.theta, r);
  R.checks.push_back({"component model matches lattice", types, ""});
  return R;
}

}  // namespace pu
