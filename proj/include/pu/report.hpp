#pragma once
// JSON and table emitters shared by the CLI and the acceptance runner.

#include "pu/ktypes.hpp"
#include "pu/langlands.hpp"

#include <iomanip>
#include <sstream>

namespace pu {

using ojson = nlohmann::ordered_json;

inline std::vector<std::string> q_strings(const QVec& v) {
  std::vector<std::string> out;
  for (auto& x : v) out.push_back(fmt_q(x));
  return out;
}

inline ojson z_json(const InnerClass& ic, const ZParameter& z) {
  const auto& D = ic.D();
  ojson j;
  j["id"] = z.id;
  j["frame"] = frame_json(ic, z.frame);
  std::vector<IVec> levi, nil;
  for (int r : z.levi) levi.push_back(D.roots[r]);
  for (int r : z.nilradical) nil.push_back(D.roots[r]);
  j["levi_roots"] = levi;
  j["nilradical_roots"] = nil;
  j["chi_sharp_differential"] = q_strings(z.differential);
  j["chi_sharp_mu"] = z.mu;
  return j;
}

inline ojson classification_json(const Group& g, const ClassificationReport& R, const LanglandsReport* L) {
  ojson j;
  j["group"] = R.group;
  j["quasisplit"] = R.quasisplit;
  j["counts"] = {{"bb0", R.graph.vertices.size()}, {"bb_star", R.bb_star.size()}, {"z_star", R.z_star.size()}};
  j["bb_star"] = ojson::array();
  for (int v : R.bb_star) j["bb_star"].push_back(param_json(g.ic, R.graph, v));
  j["z_star"] = ojson::array();
  for (auto& z : R.z_star) j["z_star"].push_back(z_json(g.ic, z));
  j["z_map"] = ojson::array();
  for (auto [b, z] : R.z_map) j["z_map"].push_back({b, z});
  j["surjective"] = R.surjective;
  j["injective"] = R.injective;
  if (L) {
    j["packets"] = ojson::array();
    for (auto& p : L->packets) j["packets"].push_back({{"w", fmt_word(p.pair.word)}, {"members", p.members}});
  }
  j["checks"] = ojson::array();
  for (auto& c : R.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return j;
}

inline std::string classification_table(const Group& g, const ClassificationReport& R) {
  std::ostringstream o;
  o << "group " << R.group << "  quasi-split " << (R.quasisplit ? "yes" : "no") << "\n";
  o << "|BB0| = " << R.graph.vertices.size() << "  |BB*0| = " << R.bb_star.size() << "  |Z*0| = " << R.z_star.size()
    << "\n\n";
  o << std::left << std::setw(6) << "bb" << std::setw(16) << "theta-word" << std::setw(10) << "borel" << std::setw(14)
    << "mu" << "z\n";
  std::map<int, int> zmap(R.z_map.begin(), R.z_map.end());
  for (int v : R.bb_star) {
    const auto& p = R.graph.vertices[v];
    int tw = theta_weyl_index(g.ic, p.frame.theta);
    o << std::setw(6) << v << std::setw(16) << fmt_word(g.ic.W().elts[tw].word) << std::setw(10)
      << fmt_word(g.ic.W().elts[p.borel].word) << std::setw(14) << fmt_vec(p.mu)
      << (zmap.count(v) ? std::to_string(zmap[v]) : "-") << "\n";
  }
  o << "\n" << std::setw(4) << "z" << std::setw(8) << "|levi|" << "nilradical\n";
  for (auto& z : R.z_star) {
    o << std::setw(4) << z.id << std::setw(8) << z.levi.size();
    for (int r : z.nilradical) o << fmt_vec(g.ic.D().roots[r]) << " ";
    o << "\n";
  }
  o << "\nbijection check " << (R.surjective && R.injective ? "PASS" : "FAIL") << "\n";
  for (auto& c : R.checks)
    o << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  return o.str();
}

inline ojson langlands_json(const LanglandsReport& L) {
  ojson j;
  j["packets"] = ojson::array();
  for (auto& p : L.packets)
    j["packets"].push_back({{"w", fmt_word(p.pair.word)},
                            {"torus_class", q_strings(p.pair.torus_class)},
                            {"twist", p.pair.twist},
                            {"members", p.members},
                            {"order2", p.flags.order2},
                            {"small_for_Ady", p.flags.small},
                            {"large_for_Ady", p.flags.large},
                            {"typeL_for_Ady", p.flags.typeL}});
  j["all_order2"] = L.all_order2;
  j["small_typeL_packets"] = L.small_typeL;
  j["large_typeL_packets"] = L.large_typeL;
  if (L.oracle) j["order2_oracle"] = *L.oracle;
  else j["order2_oracle"] = nullptr;
  return j;
}

inline std::string langlands_table(const LanglandsReport& L) {
  std::ostringstream o;
  o << std::left << std::setw(16) << "w" << std::setw(14) << "torus" << std::setw(10) << "size" << std::setw(22)
    << "small/large/typeL" << "members\n";
  for (auto& p : L.packets) {
    std::string fl = std::string(p.flags.small ? "y" : "n") + "/" + (p.flags.large ? "y" : "n") + "/" +
                     (p.flags.typeL ? "y" : "n");
    o << std::setw(16) << fmt_word(p.pair.word) << std::setw(14) << fmt_vec(p.pair.torus_class)
      << std::setw(10) << p.members.size() << std::setw(22) << fl;
    for (int m : p.members) o << m << " ";
    o << "\n";
  }
  o << "\n" << L.packets.size() << " packets; all y^2 = 1: " << (L.all_order2 ? "yes" : "no")
    << "; order-2 oracle: " << (L.oracle ? std::to_string(*L.oracle) : "n/a") << "\n";
  return o.str();
}

inline ojson ktype_json(const KTypeSeries& s, const AVReport& av) {
  ojson j;
  j["cutoff_degree"] = s.truncation;
  j["certified_norm_below"] = s.cutoff ? ojson(fmt_q(*s.cutoff)) : ojson(nullptr);
  j["ktypes"] = ojson::array();
  for (auto& t : s.types)
    j["ktypes"].push_back({{"highest_weight", q_strings(t.highest)}, {"multiplicity", t.mult}, {"certified", t.certified}});
  j["associated_variety"] = {{"full_nilcone", av.full}};
  if (av.dimension) j["associated_variety"]["dimension"] = *av.dimension;
  return j;
}

inline std::string ktype_table(const KTypeSeries& s, const AVReport& av) {
  std::ostringstream o;
  o << std::left << std::setw(24) << "highest weight" << std::setw(8) << "mult" << "certified\n";
  for (auto& t : s.types) o << std::setw(24) << fmt_vec(t.highest) << std::setw(8) << t.mult << (t.certified ? "yes" : "no") << "\n";
  o << "\nassociated variety: " << (av.full ? "full nilpotent cone, dimension " + std::to_string(*av.dimension) : "proper")
    << "\n";
  return o.str();
}

// Group-level invariant suite used by `verify`.
inline std::vector<Check> verify_group(const Group& g, int cutoff, size_t max_graph) {
  auto R = classify(g, max_graph);
  std::vector<Check> out = R.checks;
  auto L = langlands_report(g, R);
  out.push_back({"every LPair has y^2 = 1", L.all_order2, ""});
  // the packet count is compared with the oracle only for split inner classes (delta^v trivial)
  auto dual = make_dual(g.ic);
  bool split = dual.ic.delta == IMat::identity(dual.ic.D().n);
  if (split && L.oracle && !R.bb_star.empty())
    out.push_back({"LPair count = order-2 oracle", int(L.packets.size()) == *L.oracle,
                   std::to_string(L.packets.size()) + " vs " + std::to_string(*L.oracle)});
  bool nonneg = true, stable = true;
  std::string nd, sd;
  for (auto& z : R.z_star) {
    auto s = ktype_series(g.ic, z, g.entry.invariant_degrees, cutoff);
    for (auto& t : s.types)
      if (t.certified && t.mult < 0) nonneg = false, nd += "z" + std::to_string(z.id) + " " + fmt_vec(t.highest) + "; ";
    if (!stable_under_extension(g.ic, z, g.entry.invariant_degrees, cutoff)) stable = false, sd += "z" + std::to_string(z.id) + "; ";
  }
  out.push_back({"certified K-multiplicities >= 0", nonneg, nd});
  out.push_back({"K-types stable under D -> D+2", stable, sd});
  return out;
}

}  // namespace pu
