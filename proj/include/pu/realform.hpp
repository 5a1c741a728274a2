#pragma once
// Involutions theta = w.delta, root trichotomy, imaginary gradings, positive-system flags.

#include "pu/rootdata.hpp"

#include <functional>
#include <set>

namespace pu {

struct RealFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InnerClass {
  std::shared_ptr<const BasedRootDatum> datum;
  std::shared_ptr<const WeylGroup> weyl;
  IMat delta;
  bool distinguished = true;  // delta == identity

  const BasedRootDatum& D() const { return *datum; }
  const WeylGroup& W() const { return *weyl; }
};

inline InnerClass make_inner_class(BasedRootDatum D, IMat delta) {
  InnerClass ic;
  auto d = std::make_shared<BasedRootDatum>(std::move(D));
  ic.weyl = std::make_shared<WeylGroup>(make_weyl(*d));
  ic.datum = d;
  if (delta.rows == 0) delta = IMat::identity(d->n);
  if (delta * delta != IMat::identity(d->n)) throw RealFormError("delta is not an involution");
  std::set<IVec> simple(d->simple_roots.begin(), d->simple_roots.end());
  for (auto& a : d->simple_roots)
    if (!simple.count(delta * a)) throw RealFormError("delta does not permute the simple roots");
  ic.delta = delta;
  ic.distinguished = delta == IMat::identity(d->n);
  return ic;
}

// -w0 as a lattice map; a valid delta whenever it permutes the simple roots.
inline IMat minus_w0(const InnerClass& ic) { return -ic.W().mat(ic.W().longest); }

enum class RootClass { Real, Imaginary, Complex };
inline const char* to_string(RootClass c) {
  return c == RootClass::Real ? "real" : c == RootClass::Imaginary ? "imaginary" : "complex";
}

struct CartanFrame {
  IMat theta;
  std::vector<int> eps;  // per root index: -1 off the imaginary roots, 0 compact, 1 noncompact
  std::vector<IVec> extra;  // declared extra component generators (cocharacters)
  bool operator==(const CartanFrame&) const = default;
};

inline int theta_root(const InnerClass& ic, const IMat& theta, int r) {
  int i = ic.D().find(theta * ic.D().roots[r]);
  if (i < 0) throw RealFormError("theta does not preserve the roots");
  return i;
}

inline RootClass classify_root(const InnerClass& ic, const CartanFrame& f, int r) {
  if (r < 0 || r >= ic.D().nroots()) throw RealFormError("not a root");
  int t = theta_root(ic, f.theta, r);
  if (t == r) return RootClass::Imaginary;
  if (t == ic.D().neg(r)) return RootClass::Real;
  return RootClass::Complex;
}

inline std::vector<int> roots_of_class(const InnerClass& ic, const CartanFrame& f, RootClass c) {
  std::vector<int> out;
  for (int r = 0; r < ic.D().nroots(); ++r)
    if (classify_root(ic, f, r) == c) out.push_back(r);
  return out;
}

inline int grading(const CartanFrame& f, int r) {
  if (f.eps.at(r) < 0) throw RealFormError("grading queried on a non-imaginary root");
  return f.eps[r];
}

// Positive imaginary roots (standard positivity) in lexicographic order.
inline std::vector<int> canonical_imaginary(const InnerClass& ic, const IMat& theta) {
  std::vector<int> out;
  for (int r = 0; r < ic.D().nroots(); ++r)
    if (ic.D().positive[r] && theta_root(ic, theta, r) == r) out.push_back(r);
  return out;
}

inline std::vector<int> grading_bits(const InnerClass& ic, const CartanFrame& f) {
  std::vector<int> b;
  for (int r : canonical_imaginary(ic, f.theta)) b.push_back(f.eps[r]);
  return b;
}

// theta = w.delta; returns the W index of w or -1.
inline int theta_weyl_index(const InnerClass& ic, const IMat& theta) { return ic.W().find(theta * ic.delta); }

// ----------------------------------------------------- subsystem gradings

// Simple roots of a closed subsystem S (given by root indices), standard positivity.
inline std::vector<int> subsystem_simple(const BasedRootDatum& D, const std::vector<int>& S) {
  std::set<int> in(S.begin(), S.end());
  std::vector<int> out;
  for (int r : S) {
    if (!D.positive[r]) continue;
    bool decomposable = false;
    for (int a : S) {
      if (!D.positive[a] || a == r) continue;
      int b = D.find(D.roots[r] - D.roots[a]);
      if (b >= 0 && in.count(b) && D.positive[b]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(r);
  }
  return out;
}

// Additive Z/2 grading on S extended from values on its simple roots; result per root index, -1 off S.
inline std::vector<int> extend_grading(const BasedRootDatum& D, const std::vector<int>& S,
                                       const std::vector<int>& simple, const std::vector<int>& bits) {
  std::vector<int> g(D.nroots(), -1);
  std::set<int> in(S.begin(), S.end());
  for (size_t i = 0; i < simple.size(); ++i) g[simple[i]] = g[D.neg(simple[i])] = bits[i];
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r : S) {
      if (g[r] >= 0 || !D.positive[r]) continue;
      for (int s : simple) {
        int b = D.find(D.roots[r] - D.roots[s]);
        if (b >= 0 && in.count(b) && g[b] >= 0) {
          g[r] = g[D.neg(r)] = (g[s] + g[b]) % 2;
          progress = true;
          break;
        }
      }
    }
  }
  for (int r : S)
    if (g[r] < 0) throw std::logic_error("grading extension incomplete");
  return g;
}

inline bool is_additive(const BasedRootDatum& D, const std::vector<int>& S, const std::vector<int>& g) {
  std::set<int> in(S.begin(), S.end());
  for (int a : S)
    for (int b : S) {
      int c = D.find(D.roots[a] + D.roots[b]);
      if (c >= 0 && in.count(c) && g[c] != (g[a] + g[b]) % 2) return false;
    }
  return true;
}

// Build a frame from theta and grading bits over canonical_imaginary order.
inline CartanFrame make_frame(const InnerClass& ic, const IMat& theta, const std::vector<int>& bits,
                              std::vector<IVec> extra = {}) {
  const auto& D = ic.D();
  if (theta.rows != D.n || theta * theta != IMat::identity(D.n)) throw RealFormError("theta is not an involution");
  if (theta_weyl_index(ic, theta) < 0) throw RealFormError("theta is not in the inner class");
  auto imag = canonical_imaginary(ic, theta);
  if (bits.size() != imag.size())
    throw RealFormError("grading has " + std::to_string(bits.size()) + " bits, expected " +
                        std::to_string(imag.size()));
  CartanFrame f{theta, std::vector<int>(D.nroots(), -1), std::move(extra)};
  for (size_t i = 0; i < imag.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw RealFormError("grading bits must be 0/1");
    f.eps[imag[i]] = f.eps[D.neg(imag[i])] = bits[i];
  }
  std::vector<int> S;
  for (int r = 0; r < D.nroots(); ++r)
    if (f.eps[r] >= 0) S.push_back(r);
  if (!is_additive(D, S, f.eps)) throw RealFormError("grading is not additive");
  for (auto& v : f.extra)
    if (int(v.size()) != D.n) throw RealFormError("extra generator has wrong length");
  return f;
}

inline CartanFrame frame_from_word(const InnerClass& ic, const std::vector<int>& word, const std::vector<int>& bits,
                                   std::vector<IVec> extra = {}) {
  IMat w = IMat::identity(ic.D().n);
  for (int i : word) {
    if (i < 0 || i >= ic.D().ss_rank()) throw RealFormError("bad simple reflection index in theta word");
    w = w * ic.D().simple_reflection(i);
  }
  return make_frame(ic, w * ic.delta, bits, std::move(extra));
}

// ------------------------------------------------------- positive systems
// A positive system is stored as the W index b with Delta+ = b(Delta+_std).

inline bool in_positive(const InnerClass& ic, int borel, int r) {
  // r in b(Delta+) iff b^{-1} r is positive
  const auto& W = ic.W();
  int binv = W.inverse(borel);
  return ic.D().positive[W.act_root(binv, r)];
}

inline std::vector<int> positive_set(const InnerClass& ic, int borel) {
  std::vector<int> out;
  for (int r = 0; r < ic.D().nroots(); ++r)
    if (in_positive(ic, borel, r)) out.push_back(r);
  return out;
}

inline std::vector<int> simple_set(const InnerClass& ic, int borel) {
  std::vector<int> out;
  for (int i = 0; i < ic.D().ss_rank(); ++i) out.push_back(ic.W().act_root(borel, ic.D().simple_index[i]));
  return out;
}

inline int borel_of(const InnerClass& ic, const std::vector<bool>& pos) {
  for (int w = 0; w < ic.W().size(); ++w) {
    bool ok = true;
    for (int r = 0; r < ic.D().nroots() && ok; ++r) ok = in_positive(ic, w, r) == pos[r];
    if (ok) return w;
  }
  throw RealFormError("not a positive system");
}

struct Flags {
  bool large = true, small = true, typeZ = true, typeL = true;
  bool operator==(const Flags&) const = default;
};

inline Flags positive_system_flags(const InnerClass& ic, const CartanFrame& f, int borel) {
  Flags fl;
  for (int a : simple_set(ic, borel)) {
    switch (classify_root(ic, f, a)) {
      case RootClass::Imaginary:
        if (f.eps[a] == 0) fl.large = false;
        else fl.small = false;
        break;
      case RootClass::Complex:
        if (in_positive(ic, borel, theta_root(ic, f.theta, a))) fl.typeL = false;
        else fl.typeZ = false;
        break;
      case RootClass::Real:
        break;
    }
  }
  return fl;
}

struct Parabolic {
  std::vector<int> levi, nilradical;
  bool stable = false;
};
struct StandardParabolics {
  Parabolic qZ, qL;  // qZ.stable: theta-stable; qL.stable: sigma-stable (sigma = -theta on roots)
};

inline StandardParabolics standard_parabolics(const InnerClass& ic, const CartanFrame& f, int borel) {
  StandardParabolics sp;
  std::set<int> uZ, uL;
  for (int r = 0; r < ic.D().nroots(); ++r) {
    RootClass c = classify_root(ic, f, r);
    if (c == RootClass::Real) sp.qZ.levi.push_back(r);
    if (c == RootClass::Imaginary) sp.qL.levi.push_back(r);
    if (!in_positive(ic, borel, r)) continue;
    if (c != RootClass::Real) uZ.insert(r);
    if (c != RootClass::Imaginary) uL.insert(r);
  }
  sp.qZ.nilradical.assign(uZ.begin(), uZ.end());
  sp.qL.nilradical.assign(uL.begin(), uL.end());
  sp.qZ.stable = std::all_of(uZ.begin(), uZ.end(), [&](int r) { return uZ.count(theta_root(ic, f.theta, r)); });
  sp.qL.stable = std::all_of(uL.begin(), uL.end(),
                             [&](int r) { return uL.count(ic.D().neg(theta_root(ic, f.theta, r))); });
  return sp;
}

// --------------------------------------------------------- real root types

enum class RealType { Type1, Type2 };

// Component generators: m_beta for real beta plus declared extras; type2 iff alpha(m) = -1 for one of them.
inline RealType real_root_type(const InnerClass& ic, const CartanFrame& f, int a) {
  if (classify_root(ic, f, a) != RootClass::Real) throw RealFormError("real_root_type needs a real root");
  const auto& D = ic.D();
  for (int b = 0; b < D.nroots(); ++b)
    if (classify_root(ic, f, b) == RootClass::Real && D.pair(a, b) % 2) return RealType::Type2;
  for (auto& v : f.extra)
    if (dot(D.roots[a], v) % 2) return RealType::Type2;
  return RealType::Type1;
}

inline IMat one_minus(const IMat& t) { return IMat::identity(t.rows) - t; }
inline IMat one_plus(const IMat& t) { return IMat::identity(t.rows) + t; }

// Character-lattice version: alpha restricted to H^theta is trivial iff alpha in (1-theta)X*.
inline RealType real_root_type_exact(const InnerClass& ic, const IMat& theta, int a) {
  QuotientReducer q(one_minus(theta));
  return q.contains(ic.D().roots[a]) ? RealType::Type1 : RealType::Type2;
}

// ------------------------------------------------------ grading transport

inline bool sum_or_difference_is_root(const BasedRootDatum& D, int a, int b) {
  return D.find(D.roots[a] + D.roots[b]) >= 0 || D.find(D.roots[a] - D.roots[b]) >= 0;
}

// (d_alpha eps)(beta) for beta imaginary and orthogonal to the noncompact imaginary alpha.
inline int grading_transport_d(const InnerClass& ic, const CartanFrame& f, int a, int b) {
  const auto& D = ic.D();
  if (classify_root(ic, f, a) != RootClass::Imaginary || f.eps[a] != 1)
    throw RealFormError("alpha must be noncompact imaginary");
  if (classify_root(ic, f, b) != RootClass::Imaginary) throw RealFormError("beta must be imaginary");
  if (D.pair(b, a) != 0) throw RealFormError("beta is not orthogonal to alpha");
  return f.eps[b] ^ int(sum_or_difference_is_root(D, a, b));
}

// Gradings for the Cayley transform through the real root a: theta' = s_a theta.
inline std::vector<CartanFrame> cayley_frame_candidates(const InnerClass& ic, const CartanFrame& f, int a) {
  const auto& D = ic.D();
  if (classify_root(ic, f, a) != RootClass::Real) throw RealFormError("Cayley needs a real root");
  IMat th = D.reflection(a) * f.theta;
  auto imag = canonical_imaginary(ic, th);
  std::vector<int> S;
  for (int r = 0; r < D.nroots(); ++r)
    if (theta_root(ic, th, r) == r) S.push_back(r);
  auto simple = subsystem_simple(D, S);
  std::vector<CartanFrame> out;
  for (int m = 0; m < (1 << simple.size()); ++m) {
    std::vector<int> bits;
    for (size_t i = 0; i < simple.size(); ++i) bits.push_back((m >> i) & 1);
    auto g = extend_grading(D, S, simple, bits);
    bool ok = g[a] == 1;
    for (int r : S) {
      if (!ok) break;
      if (D.pair(r, a) != 0 || r == a || r == D.neg(a)) continue;
      ok = g[r] == (f.eps[r] ^ int(sum_or_difference_is_root(D, a, r)));
    }
    if (!ok) continue;
    std::vector<int> cb;
    for (int r : imag) cb.push_back(g[r]);
    out.push_back(make_frame(ic, th, cb, f.extra));
  }
  std::sort(out.begin(), out.end(), [&](auto& x, auto& y) { return grading_bits(ic, x) < grading_bits(ic, y); });
  if (out.empty() || out.size() > 2) throw RealFormError("Cayley grading transport is not determined");
  if (out.size() == 2) {
    // the two candidates must differ by s_a
    auto& g0 = out[0].eps;
    auto& g1 = out[1].eps;
    int sa = ic.W().find(D.reflection(a));
    for (int r = 0; r < D.nroots(); ++r)
      if (g0[r] >= 0 && g1[ic.W().act_root(sa, r)] != g0[r])
        throw RealFormError("Cayley grading candidates are not related by s_alpha");
  }
  return out;
}

inline CartanFrame cayley_frame(const InnerClass& ic, const CartanFrame& f, int a) {
  return cayley_frame_candidates(ic, f, a).front();
}

// Repeated Cayley transforms through lex-least real roots until none remain.
inline CartanFrame fundamental_frame(const InnerClass& ic, CartanFrame f) {
  for (;;) {
    auto real = roots_of_class(ic, f, RootClass::Real);
    if (real.empty()) return f;
    int a = *std::find_if(real.begin(), real.end(), [&](int r) { return ic.D().positive[r]; });
    f = cayley_frame(ic, f, a);
  }
}

inline bool has_large_positive_system(const InnerClass& ic, const CartanFrame& f) {
  for (int b = 0; b < ic.W().size(); ++b)
    if (positive_system_flags(ic, f, b).large) return true;
  return false;
}

inline bool is_quasisplit(const InnerClass& ic, const CartanFrame& fundamental) {
  return has_large_positive_system(ic, fundamental);
}

// ----------------------------------------------------- conjugation of frames

// contragredient action on X_*
inline IMat coweight_action(const IMat& w) {
  return unimodular_inverse(w).transpose();
}

inline CartanFrame conjugate_frame(const InnerClass& ic, const CartanFrame& f, int u) {
  const auto& W = ic.W();
  const IMat& m = W.mat(u);
  int uinv = W.inverse(u);
  CartanFrame g{m * f.theta * W.mat(uinv), std::vector<int>(ic.D().nroots(), -1), {}};
  for (int r = 0; r < ic.D().nroots(); ++r)
    if (f.eps[r] >= 0) g.eps[W.act_root(u, r)] = f.eps[r];
  IMat cw = coweight_action(m);
  for (auto& v : f.extra) g.extra.push_back(cw * v);
  return g;
}

using FrameKey = std::pair<IMat, std::vector<int>>;
inline FrameKey frame_key(const InnerClass& ic, const CartanFrame& f) { return {f.theta, grading_bits(ic, f)}; }

// Lex-least (theta, grading bits) over the W-orbit; u is the first conjugator in W order reaching it.
inline std::pair<CartanFrame, int> canonical_frame(const InnerClass& ic, const CartanFrame& f) {
  std::optional<FrameKey> best;
  int bu = 0;
  for (int u = 0; u < ic.W().size(); ++u) {
    const IMat& m = ic.W().mat(u);
    IMat th = m * f.theta * ic.W().mat(ic.W().inverse(u));
    if (best && th > best->first) continue;
    auto g = conjugate_frame(ic, f, u);
    auto k = frame_key(ic, g);
    if (!best || k < *best) best = k, bu = u;
  }
  return {conjugate_frame(ic, f, bu), bu};
}

// ---------------------------------------------------------- W(G,H) model

inline bool preserves_grading(const InnerClass& ic, const CartanFrame& f, int w) {
  for (int r = 0; r < ic.D().nroots(); ++r)
    if (f.eps[r] >= 0 && f.eps[ic.W().act_root(w, r)] != f.eps[r]) return false;
  return true;
}

// Noncompact imaginary beta whose Cayley-partner real root is type2.
inline bool is_type_II(const InnerClass& ic, const CartanFrame& f, int b) {
  return real_root_type_exact(ic, ic.D().reflection(b) * f.theta, b) == RealType::Type2;
}

inline std::vector<int> real_weyl_group(const InnerClass& ic, const CartanFrame& f) {
  const auto& D = ic.D();
  const auto& W = ic.W();
  std::vector<int> gens;
  auto add = [&](int w) {
    if (preserves_grading(ic, f, w)) gens.push_back(w);
  };
  for (int r = 0; r < D.nroots(); ++r) {
    if (!D.positive[r]) continue;
    RootClass c = classify_root(ic, f, r);
    int s = W.find(D.reflection(r));
    if (c == RootClass::Real) add(s);
    else if (c == RootClass::Imaginary && (f.eps[r] == 0 || is_type_II(ic, f, r))) add(s);
  }
  std::vector<int> pr, pi;
  for (int r = 0; r < D.nroots(); ++r) {
    if (!D.positive[r]) continue;
    RootClass c = classify_root(ic, f, r);
    if (c == RootClass::Real) pr.push_back(r);
    if (c == RootClass::Imaginary) pi.push_back(r);
  }
  QVec rr = rho_of(D, pr), ri = rho_of(D, pi);
  for (int w = 0; w < W.size(); ++w) {
    const IMat& m = W.mat(w);
    if (m * f.theta == f.theta * m && m * rr == rr && m * ri == ri) add(w);
  }
  std::set<int> grp{0};
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int g : gens) {
      int y = W.mul(g, x);
      if (grp.insert(y).second) todo.push_back(y);
    }
  }
  return {grp.begin(), grp.end()};
}

}  // namespace pu
