#pragma once
// Exhaustive property sweeps over small graded root systems.

#include "pu/realform.hpp"

#include <numeric>

namespace pu {

struct SweepResult {
  long cases = 0;
  std::vector<std::string> failures;
};

// Simple roots of S for an arbitrary positive set.
inline std::vector<int> simple_of(const BasedRootDatum& D, const std::vector<int>& S, const std::set<int>& pos) {
  std::set<int> in(S.begin(), S.end());
  std::vector<int> out;
  for (int r : S) {
    if (!pos.count(r)) continue;
    bool dec = false;
    for (int a : S)
      if (a != r && pos.count(a)) {
        int b = D.find(D.roots[r] - D.roots[a]);
        if (b >= 0 && in.count(b) && pos.count(b)) dec = true;
      }
    if (!dec) out.push_back(r);
  }
  return out;
}

inline const std::vector<std::string>& rank3_types() {
  static const std::vector<std::string> t{"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3",
                                          "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1"};
  return t;
}

// For every type of rank <= 3, every grading, every positive system and every noncompact simple
// alpha: the transported grading d_alpha eps on the roots orthogonal to alpha is additive, and a
// large triple stays large after transport.
inline SweepResult grading_transport_sweep(const std::vector<std::string>& types = rank3_types()) {
  SweepResult res;
  for (auto& t : types) {
    auto ic = make_inner_class(datum_from_string(t), IMat());
    const auto& D = ic.D();
    std::vector<int> all(D.nroots());
    std::iota(all.begin(), all.end(), 0);
    auto simple = subsystem_simple(D, all);
    auto imag = canonical_imaginary(ic, ic.delta);
    for (int m = 0; m < (1 << simple.size()); ++m) {
      std::vector<int> sb;
      for (size_t i = 0; i < simple.size(); ++i) sb.push_back((m >> i) & 1);
      auto g = extend_grading(D, all, simple, sb);
      std::vector<int> bits;
      for (int r : imag) bits.push_back(g[r]);
      auto f = make_frame(ic, ic.delta, bits);
      for (int b = 0; b < ic.W().size(); ++b) {
        auto pos_v = positive_set(ic, b);
        std::set<int> pos(pos_v.begin(), pos_v.end());
        bool large = positive_system_flags(ic, f, b).large;
        for (int a : simple_set(ic, b)) {
          if (f.eps[a] != 1) continue;
          ++res.cases;
          std::vector<int> perp;
          for (int r = 0; r < D.nroots(); ++r)
            if (D.pair(r, a) == 0) perp.push_back(r);
          std::vector<int> dg(D.nroots(), -1);
          for (int r : perp) dg[r] = grading_transport_d(ic, f, a, r);
          std::string where = t + " grading " + std::to_string(m) + " borel " + std::to_string(b) + " alpha " +
                              fmt_vec(D.roots[a]);
          if (!is_additive(D, perp, dg)) res.failures.push_back(where + ": transported grading not additive");
          auto sub_simple = simple_of(D, perp, pos);
          bool sub_large = std::all_of(sub_simple.begin(), sub_simple.end(), [&](int r) { return dg[r] == 1; });
          if (large && !sub_large) res.failures.push_back(where + ": large triple not large after transport");
        }
      }
    }
  }
  return res;
}

}  // namespace pu
