// twochar: command-line front end.
//
// Exit codes: 0 pass, 1 verification failure, 2 parse error, 3 validation
// error, 4 size cap.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "twochar/io.hpp"
#include "twochar/suite.hpp"

using namespace twochar;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kInvalid = 3, kCap = 4 };

struct Options {
  std::string format = "text";
  int modulus = 2;
  std::uint64_t seed = 1;
  int cap = kDefaultH2Cap;
  std::string out;
  std::string group_file;
  std::string subgroup;
  std::string rep_file;
  bool suite = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// A generating set picked greedily in element order.
std::vector<int> generators_of(const Subgroup& h) {
  std::vector<int> gens;
  std::vector<int> span{h.parent()->identity()};
  for (int x : h.members()) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    gens.push_back(x);
    span = Subgroup::generated_by(h.parent(), gens).members();
  }
  return gens;
}

std::string generator_list(const Subgroup& h) {
  std::string s;
  for (int x : generators_of(h)) s += (s.empty() ? "" : ", ") + h.parent()->label(x);
  return s.empty() ? "1" : s;
}

Json two_char_json(const TwoClassFunction& chi) {
  const auto& g = *chi.group();
  const auto& pairs = g.commuting_pairs().pairs;
  Json rows = Json::array();
  for (int i : chi.orbit_representatives()) {
    auto [a, b] = pairs[i];
    rows.push_back(Json{{"g", g.label(a)}, {"h", g.label(b)}, {"chi", format_cyclotomic(chi.values()[i])}});
  }
  return Json{{"level", chi.level()}, {"orbit_representatives", std::move(rows)}, {"all_pairs", to_json(chi)["values"]}};
}

void print_two_char(const TwoClassFunction& chi) {
  const auto& g = *chi.group();
  const auto& pairs = g.commuting_pairs().pairs;
  size_t wg = 1, wh = 1;
  for (int i : chi.orbit_representatives()) {
    wg = std::max(wg, g.label(pairs[i].first).size());
    wh = std::max(wh, g.label(pairs[i].second).size());
  }
  std::cout << "chi(g, h) over commuting-pair orbit representatives\n";
  for (int i : chi.orbit_representatives()) {
    const std::string& a = g.label(pairs[i].first);
    const std::string& b = g.label(pairs[i].second);
    std::cout << "  " << a << std::string(wg - a.size(), ' ') << "  " << b << std::string(wh - b.size(), ' ') << "  "
              << format_cyclotomic(chi.values()[i]) << "\n";
  }
}

int cmd_group_info(const Options& o) {
  const GroupPtr g = load_group(o.group_file);
  const auto& cc = g->conjugacy_classes();
  const int pairs = static_cast<int>(g->commuting_pairs().pairs.size());
  if (json_out(o)) {
    Json classes = Json::array();
    for (const auto& c : cc.classes) {
      classes.push_back(Json{{"representative", g->label(c.front())},
                             {"size", c.size()},
                             {"centralizer_order", g->order() / static_cast<int>(c.size())},
                             {"element_order", g->element_order(c.front())}});
    }
    emit(Json{{"order", g->order()}, {"abelian", g->is_abelian()}, {"classes", std::move(classes)},
              {"commuting_pairs", pairs}});
    return kPass;
  }
  std::cout << "order " << g->order() << (g->is_abelian() ? " (abelian)" : "") << "\n";
  std::cout << cc.classes.size() << " conjugacy classes\n";
  for (const auto& c : cc.classes) {
    std::cout << "  " << g->label(c.front()) << "  size " << c.size() << "  centralizer order "
              << g->order() / static_cast<int>(c.size()) << "  element order " << g->element_order(c.front()) << "\n";
  }
  std::cout << pairs << " commuting pairs\n";
  return kPass;
}

int cmd_h2(const Options& o) {
  if (o.modulus < 1) throw ParameterError("--modulus must be positive");
  const GroupPtr g = load_group(o.group_file);
  const CohomologyGroup h = h2(*g, o.modulus, o.cap);
  if (json_out(o)) {
    emit(Json{{"modulus", o.modulus}, {"h2", to_json(h)}});
  } else {
    std::cout << h.to_string() << "\n" << "order " << h.order() << "\n";
  }
  return kPass;
}

int cmd_two_char(const Options& o) {
  const GroupPtr g = load_group(o.group_file);
  const TwoRep rho = parse_two_rep_file(g, read_file(o.rep_file));
  const TwoClassFunction chi = two_character(rho);
  if (json_out(o)) {
    emit(two_char_json(chi));
  } else {
    print_two_char(chi);
  }
  return kPass;
}

int cmd_induce(const Options& o) {
  const GroupPtr g = load_group(o.group_file);
  const Subgroup h = parse_subgroup_spec(g, o.subgroup);
  const TwoRep rho = parse_two_rep_file(h.as_group(), read_file(o.rep_file));
  const TwoRep ind = induce_two_rep(h, rho);
  const std::string text = format_two_rep_file(ind, o.group_file);

  // the emitted file must reload to a valid 2-rep with the same data
  Report reload = Report::pass();
  try {
    const TwoRep back = parse_two_rep_file(g, text);
    if (!(back.sigmas() == ind.sigmas() && back.coh_table() == ind.coh_table() && back.units() == ind.units())) {
      reload = Report::fail("reloaded 2-rep differs from the induced one");
    }
  } catch (const Error& e) {
    reload = Report::fail(std::string("reload failed: ") + e.what());
  }
  if (!o.out.empty()) write_file(o.out, text);

  const TwoClassFunction chi = two_character(ind);
  if (json_out(o)) {
    Json j{{"subgroup_order", h.order()}, {"n", ind.n()}, {"reload_ok", reload.ok}};
    if (!reload.ok) j["reload_error"] = reload.witness;
    if (o.out.empty()) j["two_rep"] = to_json(ind);
    j["two_character"] = two_char_json(chi);
    emit(j);
  } else {
    if (o.out.empty()) {
      std::cout << text << "\n";
    } else {
      std::cout << "wrote " << o.out << " (n = " << ind.n() << ")\n";
    }
    std::cout << "reload check: " << (reload.ok ? "ok" : reload.witness) << "\n";
    print_two_char(chi);
  }
  return reload.ok ? kPass : kFail;
}

int cmd_decompose(const Options& o) {
  const GroupPtr g = load_group(o.group_file);
  const TwoRep rho = parse_two_rep_file(g, read_file(o.rep_file));
  const Decomposition d = decompose(rho);
  if (json_out(o)) {
    Json parts = Json::array();
    for (const DecompositionPart& p : d.parts) {
      Json gens = Json::array();
      for (int x : generators_of(p.subgroup)) gens.push_back(g->label(x));
      Json orbit = Json::array();
      for (int j : p.orbit) orbit.push_back(j + 1);
      Json part{{"subgroup_generators", std::move(gens)},
                {"subgroup_order", p.subgroup.order()},
                {"base_point", p.base_point + 1},
                {"orbit", std::move(orbit)}};
      if (p.cocycle) {
        part["cocycle"] = to_json(*p.cocycle);
      } else {
        Json scalars = Json::array();
        for (const CycNumber& s : p.scalars) scalars.push_back(format_cyclotomic(s));
        part["scalars"] = std::move(scalars);
      }
      parts.push_back(std::move(part));
    }
    Json j{{"parts", std::move(parts)}, {"torsion", d.torsion}, {"verified", d.verification.ok}};
    if (!d.verification.ok) j["counterexample"] = d.verification.witness;
    emit(j);
  } else {
    std::cout << d.parts.size() << " orbit" << (d.parts.size() == 1 ? "" : "s") << "\n";
    for (const DecompositionPart& p : d.parts) {
      std::cout << "H = <" << generator_list(p.subgroup) << ">  order " << p.subgroup.order() << "  base point "
                << p.base_point + 1 << "  orbit size " << p.orbit.size() << "\n";
      const int k = p.subgroup.order();
      if (p.cocycle) {
        std::cout << "  cocycle mod " << p.cocycle->modulus() << "\n";
        for (int a = 0; a < k; ++a) {
          std::cout << "    ";
          for (int b = 0; b < k; ++b) std::cout << (b ? " " : "") << p.cocycle->exponent(a, b);
          std::cout << "   # " << p.subgroup.as_group()->label(a) << "\n";
        }
      } else {
        std::cout << "  scalars (not all roots of unity)\n";
        for (int a = 0; a < k; ++a) {
          std::cout << "    ";
          for (int b = 0; b < k; ++b) std::cout << (b ? ", " : "") << format_cyclotomic(p.scalars[a * k + b]);
          std::cout << "\n";
        }
      }
    }
    std::cout << "character reconstruction: " << (d.verification.ok ? "ok" : d.verification.witness) << "\n";
  }
  return d.verification.ok ? kPass : kFail;
}

int cmd_verify(const Options& o) {
  std::vector<SuiteEntry> entries;
  if (o.suite) {
    entries = run_suite(o.seed);
  } else {
    if (o.group_file.empty() || o.subgroup.empty() || o.rep_file.empty()) {
      throw CLI::ValidationError("verify needs GROUP SUBGROUP REP, or --suite");
    }
    const GroupPtr g = load_group(o.group_file);
    const Subgroup h = parse_subgroup_spec(g, o.subgroup);
    const TwoRep rho = parse_two_rep_file(h.as_group(), read_file(o.rep_file));
    const InductionReport r = verify_induction_theorem(h, rho);
    entries.push_back({"Lambda(G) characters of Tr(ind rho) and ind Tr(rho)", r.classes, 0});
    entries.push_back({"2-character of ind rho against the transfer formula", r.pairs, 0});
    const TwoRep ind = induce_two_rep(h, rho);
    entries.push_back({"induced 2-rep axioms", check_two_rep(ind), 0});
    entries.push_back({"decomposition of ind rho", decompose(ind).verification, 0});
  }
  bool ok = true;
  for (const auto& e : entries) ok = ok && e.report.ok;
  if (json_out(o)) {
    emit(to_json(entries));
  } else {
    for (const auto& e : entries) {
      std::cout << (e.report.ok ? "PASS  " : "FAIL  ") << e.name;
      if (!e.report.ok) std::cout << "  -- " << e.report.witness;
      std::cout << "\n";
    }
    std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
  }
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-characters of finite-group 2-representations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* info = app.add_subcommand("group-info", "Order, conjugacy classes and commuting pairs");
  info->add_option("group", o.group_file, "Group file")->required()->check(CLI::ExistingFile);

  auto* h2c = app.add_subcommand("h2", "H^2(G, Z/M)");
  h2c->add_option("group", o.group_file, "Group file")->required()->check(CLI::ExistingFile);
  h2c->add_option("--modulus,-m", o.modulus, "Coefficient modulus M")->required();
  h2c->add_option("--cap", o.cap, "Largest group order accepted");

  auto* chi = app.add_subcommand("two-char", "2-character table");
  chi->add_option("group", o.group_file, "Group file")->required()->check(CLI::ExistingFile);
  chi->add_option("rep", o.rep_file, "2-rep file")->required()->check(CLI::ExistingFile);

  auto* ind = app.add_subcommand("induce", "Induce a 2-rep from a subgroup");
  ind->add_option("group", o.group_file, "Group file")->required()->check(CLI::ExistingFile);
  ind->add_option("subgroup", o.subgroup, "Comma-separated generator labels")->required();
  ind->add_option("rep", o.rep_file, "2-rep file of the subgroup")->required()->check(CLI::ExistingFile);
  ind->add_option("--out,-o", o.out, "Write the induced 2-rep file here");

  auto* dec = app.add_subcommand("decompose", "Orbits, stabilizers and base-point cocycles");
  dec->add_option("group", o.group_file, "Group file")->required()->check(CLI::ExistingFile);
  dec->add_option("rep", o.rep_file, "2-rep file")->required()->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify", "Check the induction theorem, or run the built-in suite");
  ver->add_option("group", o.group_file, "Group file")->check(CLI::ExistingFile);
  ver->add_option("subgroup", o.subgroup, "Comma-separated generator labels");
  ver->add_option("rep", o.rep_file, "2-rep file of the subgroup")->check(CLI::ExistingFile);
  ver->add_flag("--suite", o.suite, "Run the built-in matrix and property suites");
  ver->add_option("--seed", o.seed, "Seed for the randomized suites");

  for (auto* sub : {info, h2c, chi, ind, dec, ver}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kParse;
  }

  try {
    if (*info) return cmd_group_info(o);
    if (*h2c) return cmd_h2(o);
    if (*chi) return cmd_two_char(o);
    if (*ind) return cmd_induce(o);
    if (*dec) return cmd_decompose(o);
    return cmd_verify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
}
