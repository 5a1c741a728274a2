// punip: command-line front end.
#include "pu/report.hpp"

#include <CLI11.hpp>
#include <iostream>

using namespace pu;

namespace {

struct Options {
  std::string group, catalog, format = "table";
  int param = -1, cutoff = 10;
  size_t max_graph = 100000;
};

void emit(const Options& o, const ojson& j, const std::string& table) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << table;
}

int run(const std::string& cmd, const Options& o) {
  auto cat = o.catalog.empty() ? builtin_catalog() : load_catalog_file(o.catalog);
  if (cmd == "catalog") {
    std::ostringstream t;
    for (auto& e : cat)
      t << std::left << std::setw(10) << e.name << std::setw(10) << (e.datum.empty() ? "explicit" : e.datum)
        << e.description << "\n";
    emit(o, catalog_to_json(cat), t.str());
    return 0;
  }
  if (o.group.empty()) throw CLI::ValidationError("--group", "a group is required");
  Group g = build_group(find_entry(cat, o.group));
  if (cmd == "kgb") {
    auto G = close_graph(g.ic, seeds_for(g.ic, g.seed), o.max_graph);
    std::ostringstream t;
    t << std::left << std::setw(5) << "id" << std::setw(7) << "cartan" << std::setw(14) << "theta-word" << std::setw(8)
      << "grading" << std::setw(12) << "borel" << std::setw(12) << "mu" << "d\n";
    for (auto& p : G.vertices) {
      int tw = theta_weyl_index(g.ic, p.frame.theta);
      std::string bits;
      for (int b : grading_bits(g.ic, p.frame)) bits += char('0' + b);
      t << std::setw(5) << p.id << std::setw(7) << G.cartan_class[p.id] << std::setw(14)
        << fmt_word(g.ic.W().elts[tw].word) << std::setw(8) << (bits.empty() ? "-" : bits) << std::setw(12)
        << fmt_word(g.ic.W().elts[p.borel].word) << std::setw(12) << fmt_vec(p.mu) << d_invariant(g.ic, p)
        << "\n";
    }
    t << "\nedges:\n";
    for (auto& e : G.edges)
      t << "  " << e.from << " -> " << e.to << "  " << to_string(e.kind) << " " << fmt_vec(g.ic.D().roots[e.root]) << "\n";
    emit(o, graph_json(g.ic, G), t.str());
    return 0;
  }
  auto R = classify(g, o.max_graph);
  if (cmd == "classify") {
    auto L = langlands_report(g, R);
    emit(o, classification_json(g, R, &L), classification_table(g, R));
    return R.ok() ? 0 : 1;
  }
  if (cmd == "langlands") {
    auto L = langlands_report(g, R);
    emit(o, langlands_json(L), langlands_table(L));
    return L.all_order2 ? 0 : 1;
  }
  if (cmd == "ktypes") {
    if (o.param < 0 || o.param >= int(R.z_star.size()))
      throw CLI::ValidationError("--param", "unknown Z-parameter id " + std::to_string(o.param) + " (group has " +
                                                std::to_string(R.z_star.size()) + ")");
    const auto& z = R.z_star[o.param];
    auto s = ktype_series(g.ic, z, g.entry.invariant_degrees, o.cutoff);
    auto av = associated_variety_report(g.ic, z);
    emit(o, ktype_json(s, av), ktype_table(s, av));
    bool ok = std::all_of(s.types.begin(), s.types.end(), [](auto& t) { return !t.certified || t.mult >= 0; });
    return ok ? 0 : 1;
  }
  if (cmd == "verify") {
    auto checks = verify_group(g, o.cutoff, o.max_graph);
    ojson j = ojson::array();
    std::ostringstream t;
    bool ok = true;
    for (auto& c : checks) {
      ok = ok && c.pass;
      j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      t << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
    t << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, ojson{{"group", g.entry.name}, {"checks", j}, {"pass", ok}}, t.str());
    return ok ? 0 : 1;
  }
  throw CLI::ValidationError("command", "unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"principal unipotent representations of real reductive groups"};
  app.require_subcommand(1);
  Options o;
  std::string positional;
  app.add_option("--catalog", o.catalog, "group catalog JSON file (default: built-ins)");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--max-graph-size", o.max_graph, "bound on the parameter graph")->check(CLI::PositiveNumber);
  for (auto name : {"catalog", "kgb", "classify", "ktypes", "langlands", "verify"}) {
    auto* sub = app.add_subcommand(name);
    if (std::string(name) != "catalog") {
      sub->add_option("name", positional, "group name (same as --group)");
      sub->add_option("--group", o.group, "group name");
    }
    if (std::string(name) == "ktypes") {
      sub->add_option("--param", o.param, "Z-parameter id")->required();
    }
    if (std::string(name) == "ktypes" || std::string(name) == "verify")
      sub->add_option("--cutoff", o.cutoff, "degree cutoff D")->check(CLI::PositiveNumber);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (o.group.empty()) o.group = positional;
  std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  }
}
