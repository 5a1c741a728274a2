#pragma once
// Independent reference computations used by the unit tests and the acceptance runner.

#include "pu/report.hpp"
#include "pu/suites.hpp"

namespace oracle {

using namespace pu;

// V(mu) multiplicities of a finite K-character via the Weyl denominator: for dominant mu the
// multiplicity is the coefficient of e^mu in ch * prod_{beta > 0} (1 - e^{-beta}).
inline std::map<QVec, Int> denominator_decomposition(const KStructure& K, const WeightMap& ch) {
  WeightMap prod = ch;
  for (auto& b : K.k_positive) {
    WeightMap next;
    for (auto& [w, m] : prod) {
      add_into(next, w, m);
      add_into(next, w - b, -m);
    }
    prod = std::move(next);
  }
  std::map<QVec, Int> out;
  for (auto& [w, m] : prod) {
    bool dominant = std::all_of(K.k_positive.begin(), K.k_positive.end(), [&](auto& b) { return !(K.form(w, b) < Q(0)); });
    if (dominant && m != 0) out[w] = m;
  }
  return out;
}

// K-multiplicity of the functions on the nilpotent cone.
// SL(2,R), K = SO(2): weight n (fundamental weight units) occurs once iff n is even.
inline Int sl2_nilcone(Int n) { return n % 2 == 0 ? 1 : 0; }
// SL(3,R), K = SO(3): V of highest weight j (in units of the K-root) occurs (j+2)/2 times for even j,
// (j-1)/2 times for odd j.
inline Int sl3_nilcone(Int j) { return j % 2 == 0 ? (j + 2) / 2 : (j - 1) / 2; }

// Involution classes in a connected dual group: W-orbits on the 2-torsion X* / 2X* of its torus.
inline int involution_orbits(const InnerClass& ic) {
  const auto& W = ic.W();
  int n = ic.D().n;
  std::set<IVec> seen;
  int orbits = 0;
  for (int m = 0; m < (1 << n); ++m) {
    IVec x(n);
    for (int i = 0; i < n; ++i) x[i] = (m >> i) & 1;
    if (seen.count(x)) continue;
    ++orbits;
    for (int w = 0; w < W.size(); ++w) {
      IVec y = W.mat(w) * x;
      for (auto& c : y) c = mod(c, 2);
      seen.insert(y);
    }
  }
  return orbits;
}

inline Group builtin(const std::string& name) { return build_group(find_entry(builtin_catalog(), name)); }

// The BB*0 vertex whose Zuckerman image is the cell with l = g.
inline const ZParameter& full_levi_cell(const Group& g, const ClassificationReport& R) {
  for (auto& z : R.z_star)
    if (int(z.levi.size()) == g.ic.D().nroots()) return z;
  throw std::logic_error("no l = g cell");
}

}  // namespace oracle
