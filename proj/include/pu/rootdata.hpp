#pragma once
// Based root data, Weyl groups, rho and the dot action.

#include "pu/lattice.hpp"

#include <map>
#include <memory>
#include <numeric>

namespace pu {

struct RootDatumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// X* = Z^n, X_* = Z^n, pairing = dot product.
struct BasedRootDatum {
  std::string name;
  int n = 0;  // lattice rank
  std::vector<IVec> simple_roots, simple_coroots;
  std::vector<IVec> roots, coroots;  // lexicographic order of roots, coroots parallel
  std::vector<bool> positive;
  std::vector<IVec> coeffs;  // root in simple-root coordinates
  std::vector<int> simple_index;  // root index of simple root i
  std::map<IVec, int> index;

  int ss_rank() const { return int(simple_roots.size()); }
  int nroots() const { return int(roots.size()); }
  int npos() const { return nroots() / 2; }
  int find(const IVec& r) const {
    auto it = index.find(r);
    return it == index.end() ? -1 : it->second;
  }
  int neg(int i) const { return find(-roots[i]); }
  Int cartan(int i, int j) const { return dot(simple_roots[i], simple_coroots[j]); }
  Int pair(int root, int coroot) const { return dot(roots[root], coroots[coroot]); }

  // s_beta on X*: lambda - <lambda,beta^v> beta
  IMat reflection(int r) const {
    IMat m = IMat::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) -= roots[r][i] * coroots[r][j];
    return m;
  }
  IMat simple_reflection(int i) const { return reflection(simple_index[i]); }

  std::vector<int> positive_roots() const {
    std::vector<int> r;
    for (int i = 0; i < nroots(); ++i)
      if (positive[i]) r.push_back(i);
    return r;
  }
};

inline BasedRootDatum make_datum(std::string name, std::vector<IVec> sr, std::vector<IVec> sc) {
  BasedRootDatum D;
  D.name = std::move(name);
  if (sr.size() != sc.size()) throw RootDatumError("simple roots and coroots differ in number");
  int l = int(sr.size());
  D.n = sr.empty() ? (sc.empty() ? 0 : int(sc[0].size())) : int(sr[0].size());
  for (auto& v : sr)
    if (int(v.size()) != D.n) throw RootDatumError("simple root of wrong length");
  for (auto& v : sc)
    if (int(v.size()) != D.n) throw RootDatumError("simple coroot of wrong length");
  D.simple_roots = sr;
  D.simple_coroots = sc;
  for (int i = 0; i < l; ++i) {
    if (dot(sr[i], sc[i]) != 2) throw RootDatumError("<alpha_i, alpha_i^v> != 2");
    for (int j = 0; j < l; ++j)
      if (i != j && (dot(sr[i], sc[j]) > 0 || (dot(sr[i], sc[j]) == 0) != (dot(sr[j], sc[i]) == 0)))
        throw RootDatumError("not a Cartan matrix");
  }
  // closure under simple reflections, tracking coroots and coefficients
  std::map<IVec, std::pair<IVec, IVec>> found;
  std::vector<IVec> todo;
  for (int i = 0; i < l; ++i) {
    IVec c(l, 0);
    c[i] = 1;
    found[sr[i]] = {sc[i], c};
    todo.push_back(sr[i]);
  }
  while (!todo.empty()) {
    IVec r = todo.back();
    todo.pop_back();
    auto [cr, cf] = found[r];
    for (int i = 0; i < l; ++i) {
      Int k = dot(r, sc[i]);
      IVec r2 = r - k * sr[i];
      IVec c2 = cr - dot(sr[i], cr) * sc[i];
      IVec f2 = cf;
      f2[i] -= k;
      if (!found.count(r2)) {
        found[r2] = {c2, f2};
        todo.push_back(r2);
        if (found.size() > 100000) throw RootDatumError("root system too large");
      }
    }
  }
  for (auto& [r, v] : found) {
    D.index[r] = int(D.roots.size());
    D.roots.push_back(r);
    D.coroots.push_back(v.first);
    D.coeffs.push_back(v.second);
    bool pos = std::all_of(v.second.begin(), v.second.end(), [](Int x) { return x >= 0; });
    bool neg = std::all_of(v.second.begin(), v.second.end(), [](Int x) { return x <= 0; });
    if (pos == neg) throw RootDatumError("root neither positive nor negative");
    D.positive.push_back(pos);
  }
  for (int i = 0; i < l; ++i) D.simple_index.push_back(D.index.at(sr[i]));
  return D;
}

// Cartan matrix C(i,j) = <alpha_i, alpha_j^v> of an irreducible type.
inline IMat cartan_matrix(char type, int l) {
  IMat C(l, l);
  for (int i = 0; i < l; ++i) C(i, i) = 2;
  auto link = [&](int i, int j) { C(i, j) = C(j, i) = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (l < 2) throw RootDatumError("B/C need rank >= 2");
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      // B: last root short, C: last root long
      if (type == 'B') C(l - 2, l - 1) = -2;
      else C(l - 1, l - 2) = -2;
      break;
    case 'D':
      if (l < 3) throw RootDatumError("D needs rank >= 3");
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case 'G':
      if (l != 2) throw RootDatumError("G has rank 2");
      C(0, 1) = -1;
      C(1, 0) = -3;
      break;
    default:
      throw RootDatumError(std::string("unknown Cartan type ") + type);
  }
  return C;
}

// "A2", "A1.sc", "C2.ad", "A1xA1", "A2.scxA1"; factors are block-stacked.
inline BasedRootDatum datum_from_string(const std::string& spec) {
  std::vector<std::string> factors;
  {
    std::string cur;
    for (char c : spec) {
      if (c == 'x' || c == 'X') {
        factors.push_back(cur);
        cur.clear();
      } else
        cur += c;
    }
    factors.push_back(cur);
  }
  std::vector<std::pair<IMat, bool>> blocks;  // (Cartan, simply connected)
  int n = 0;
  for (auto& f : factors) {
    std::string body = f;
    bool sc = false;
    auto dotpos = f.find('.');
    if (dotpos != std::string::npos) {
      std::string suf = f.substr(dotpos + 1);
      body = f.substr(0, dotpos);
      if (suf == "sc") sc = true;
      else if (suf != "ad") throw RootDatumError("unknown lattice suffix '" + suf + "'");
    }
    if (body.size() < 2 || !std::isalpha((unsigned char)body[0]))
      throw RootDatumError("bad factor '" + f + "'");
    int l = 0;
    try {
      l = std::stoi(body.substr(1));
    } catch (...) {
      throw RootDatumError("bad rank in '" + f + "'");
    }
    if (l < 1 || l > 8) throw RootDatumError("rank out of range in '" + f + "'");
    blocks.push_back({cartan_matrix(char(std::toupper((unsigned char)body[0])), l), sc});
    n += l;
  }
  std::vector<IVec> sr, scr;
  int off = 0;
  for (auto& [C, sc] : blocks) {
    int l = C.rows;
    for (int i = 0; i < l; ++i) {
      IVec r(n, 0), c(n, 0);
      for (int j = 0; j < l; ++j) {
        if (sc) {
          r[off + j] = C(i, j);
        } else {
          c[off + j] = C(j, i);
        }
      }
      if (sc) c[off + i] = 1;
      else r[off + i] = 1;
      sr.push_back(r);
      scr.push_back(c);
    }
    off += l;
  }
  return make_datum(spec, sr, scr);
}

inline BasedRootDatum dual_datum(const BasedRootDatum& D) {
  return make_datum(D.name + "^v", D.simple_coroots, D.simple_roots);
}

// ---------------------------------------------------------------- Weyl group

struct WeylGroup {
  struct Elt {
    IMat m;  // action on X*
    std::vector<int> word;  // lex-minimal reduced word (0-based simple indices)
    std::vector<int> perm;  // action on root indices
  };
  std::vector<Elt> elts;  // sorted by (length, word); elts[0] = identity
  std::map<IMat, int> lookup;
  int longest = 0;
  int nsimple = 0;

  int size() const { return int(elts.size()); }
  int length(int w) const { return int(elts[w].word.size()); }
  const IMat& mat(int w) const { return elts[w].m; }
  int act_root(int w, int r) const { return elts[w].perm[r]; }
  int find(const IMat& m) const {
    auto it = lookup.find(m);
    return it == lookup.end() ? -1 : it->second;
  }
  int mul(int a, int b) const { return lookup.at(elts[a].m * elts[b].m); }
  int inverse(int a) const { return inv[a]; }
  int simple(int i) const { return simple_ids[i]; }
  std::vector<int> simple_ids;
  std::vector<int> inv;
};

inline WeylGroup make_weyl(const BasedRootDatum& D, long long bound = 1000000) {
  WeylGroup W;
  int l = D.ss_rank();
  W.nsimple = l;
  std::vector<IMat> s;
  for (int i = 0; i < l; ++i) s.push_back(D.simple_reflection(i));
  std::map<IMat, int> len;
  std::vector<IMat> order{IMat::identity(D.n)};
  len[order[0]] = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    for (int i = 0; i < l; ++i) {
      IMat m = s[i] * order[k];
      if (!len.count(m)) {
        len[m] = len[order[k]] + 1;
        order.push_back(m);
        if ((long long)order.size() > bound) throw RootDatumError("Weyl group exceeds bound");
      }
    }
  }
  std::map<IMat, std::vector<int>> words;
  for (auto& m : order) {  // BFS order: lengths nondecreasing
    int L = len[m];
    if (L == 0) {
      words[m] = {};
      continue;
    }
    for (int i = 0; i < l; ++i) {
      IMat sm = s[i] * m;
      if (len[sm] < L) {
        std::vector<int> w{i};
        auto& rest = words[sm];
        w.insert(w.end(), rest.begin(), rest.end());
        words[m] = w;
        break;
      }
    }
  }
  std::vector<std::pair<std::vector<int>, IMat>> sorted;
  for (auto& [m, w] : words) sorted.push_back({w, m});
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [w, m] : sorted) {
    WeylGroup::Elt e{m, w, {}};
    for (int r = 0; r < D.nroots(); ++r) e.perm.push_back(D.index.at(m * D.roots[r]));
    W.lookup[m] = int(W.elts.size());
    W.elts.push_back(std::move(e));
  }
  for (int i = 0; i < l; ++i) W.simple_ids.push_back(W.lookup.at(s[i]));
  for (auto& e : W.elts) {
    // inverse = reversed word
    IMat m = IMat::identity(D.n);
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) m = m * s[*it];
    W.inv.push_back(W.lookup.at(m));
  }
  for (int w = 0; w < W.size(); ++w)
    if (W.length(w) > W.length(W.longest)) W.longest = w;
  return W;
}

inline std::string fmt_word(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + std::to_string(w[i] + 1);
  return s;
}

// ----------------------------------------------------------------- weights

inline QVec rho_of(const BasedRootDatum& D, const std::vector<int>& roots) {
  QVec r(D.n, Q(0));
  for (int i : roots)
    for (int k = 0; k < D.n; ++k) r[k] += Q(D.roots[i][k], 2);
  return r;
}
inline QVec rho(const BasedRootDatum& D) { return rho_of(D, D.positive_roots()); }

inline QVec dot_action(const WeylGroup& W, int w, const QVec& lambda, const QVec& rho) {
  return W.mat(w) * (lambda + rho) - rho;
}

inline bool is_dominant_regular(const BasedRootDatum& D, const QVec& v) {
  for (auto& c : D.simple_coroots)
    if (dot(v, c) <= 0) return false;
  return true;
}

// (w, w.lambda) with w.lambda + rho dominant; nullopt when lambda + rho is singular.
inline std::optional<std::pair<int, QVec>> dominance_witness(const BasedRootDatum& D, const WeylGroup& W,
                                                             const QVec& lambda) {
  QVec r = rho(D), v = lambda + r;
  for (int i = 0; i < D.nroots(); ++i)
    if (dot(v, D.coroots[i]) == Q(0)) return std::nullopt;
  for (int w = 0; w < W.size(); ++w)
    if (is_dominant_regular(D, W.mat(w) * v)) return std::make_pair(w, W.mat(w) * v - r);
  throw std::logic_error("no dominant chamber");
}

}  // namespace pu
