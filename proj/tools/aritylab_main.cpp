#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aritylab/aritylab.hpp"
#include "aritylab/report.hpp"

namespace al = aritylab;

namespace {

struct CommonOpts {
  std::string in_path;
  std::string out_path;
  std::string config_path;
  bool json = false;
  std::optional<std::uint64_t> cap;
  std::optional<int> size_cap;
  std::optional<std::uint64_t> seed;
  std::optional<int> kmax;
};

al::Config effective_config(const CommonOpts& o) {
  al::Config c;
  if (!o.config_path.empty()) {
    c = al::load_config(o.config_path);
  } else {
    std::ifstream probe("aritylab.toml");
    if (probe) c = al::load_config("aritylab.toml");
  }
  if (o.cap) c.lim.work_cap = *o.cap;
  if (o.size_cap) c.lim.size_cap = *o.size_cap;
  if (o.seed) c.seed = *o.seed;
  if (o.kmax) c.kmax_default = *o.kmax;
  return c;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_in = true) {
  auto* in = cmd->add_option("--in", o.in_path, "input structure file");
  if (needs_in) in->required();
  cmd->add_option("--out", o.out_path, "write the main output to this file");
  cmd->add_option("--config", o.config_path, "config file (default: ./aritylab.toml if present)");
  cmd->add_flag("--json", o.json, "emit a JSON report on stdout");
  cmd->add_option("--cap", o.cap, "work cap in cells");
  cmd->add_option("--size-cap", o.size_cap, "universe size cap");
  cmd->add_option("--seed", o.seed, "seed for generated structures");
  cmd->add_option("--kmax", o.kmax, "largest tuple length (0: universe size)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw al::validation_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw al::validation_error("cannot write '" + path + "'");
  out << text;
}

al::FinStructure load_structure(const CommonOpts& o, const al::Limits& lim) {
  return al::parse_structure_text(slurp(o.in_path), lim);
}

void emit(const CommonOpts& o, const al::ojson& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// returns the relation to analyze: --rel if given, else the unique
// relation matching pred
int pick_relation(const al::FinStructure& s, const std::string& rel, int min_arity) {
  if (!rel.empty()) {
    auto ri = s.rel_index(rel);
    if (!ri) throw al::validation_error("unknown relation '" + rel + "'");
    return *ri;
  }
  int found = -1;
  for (int i = 0; i < s.rel_count(); ++i) {
    if (s.symbol(i).arity < min_arity) continue;
    if (found >= 0)
      throw al::validation_error("several candidate relations; pick one with --rel");
    found = i;
  }
  if (found < 0) throw al::validation_error("no relation of arity >= " + std::to_string(min_arity));
  return found;
}

int run_build(const CommonOpts& o, const std::vector<int>& pure, const std::vector<int>& linear,
              const std::vector<int>& circular, const std::vector<int>& spherical,
              const std::vector<int>& random_mi, const std::string& variant) {
  al::Config cfg = effective_config(o);
  int sources = !o.in_path.empty();
  sources += !pure.empty();
  sources += !linear.empty();
  sources += !circular.empty();
  sources += !spherical.empty();
  sources += !random_mi.empty();
  if (sources != 1)
    throw al::validation_error("build wants exactly one of --in or a builder flag");
  al::FinStructure s = [&] {
    if (!o.in_path.empty()) return load_structure(o, cfg.lim);
    if (!pure.empty()) return al::pure_set(pure[0], cfg.lim);
    if (!linear.empty()) return al::linear_order(linear[0], cfg.lim);
    if (!circular.empty()) return al::circular_order(circular[0], cfg.lim);
    if (!spherical.empty()) {
      auto v = al::variant_from(variant);
      if (!v) throw al::validation_error("unknown chain variant '" + variant + "'");
      return al::spherical_chain(spherical[0], spherical[1], *v, cfg.lim);
    }
    return al::random_structure(random_mi[0],
                                cfg.seed * 1000003ull +
                                    static_cast<std::uint64_t>(random_mi[0]) * 101ull +
                                    static_cast<std::uint64_t>(random_mi[1]),
                                cfg.lim);
  }();
  std::string text = al::serialize_structure(s);
  if (!o.out_path.empty()) spill(o.out_path, text);
  al::ojson j = al::report_envelope("build");
  j["structure"] = s.name();
  j["result"] = al::json_of(s);
  emit(o, j, o.out_path.empty() ? text : "");
  return 0;
}

int run_check_axioms(const CommonOpts& o, const std::string& rel) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  int ri = pick_relation(s, rel, 3);
  std::vector<al::AxiomVerdict> vs = al::check_axioms(s, s.symbol(ri).name, cfg.lim);
  al::DensityVerdict dv = al::check_density(s, s.symbol(ri).name, cfg.lim);
  al::ojson j = al::report_envelope("check-axioms");
  j["structure"] = s.name();
  j["relation"] = s.symbol(ri).name;
  al::ojson arr = al::ojson::array();
  for (const auto& v : vs) arr.push_back(al::json_of(v));
  j["axioms"] = std::move(arr);
  al::ojson dj;
  dj["formula"] = dv.formula;
  dj["holds"] = dv.holds;
  if (!dv.holds) dj["cex"] = dv.cex;
  j["density"] = std::move(dj);
  std::ostringstream t;
  for (const auto& v : vs) {
    t << v.axiom << ": full=" << (v.holds_full ? "yes" : "no")
      << " distinct=" << (v.holds_distinct ? "yes" : "no");
    if (!v.holds_full) {
      t << " cex=(";
      for (std::size_t i = 0; i < v.cex_full.size(); ++i) t << (i ? "," : "") << v.cex_full[i];
      t << ")";
    }
    t << "\n";
  }
  t << "density: " << (dv.holds ? "holds" : "fails");
  if (!dv.holds) {
    t << " cex=(";
    for (std::size_t i = 0; i < dv.cex.size(); ++i) t << (i ? "," : "") << dv.cex[i];
    t << ")";
  }
  t << "\n";
  emit(o, j, t.str());
  return 0;
}

int run_aut(const CommonOpts& o) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  al::AutGroup g = al::automorphism_group(s, cfg.lim);
  al::ojson j = al::report_envelope("aut");
  j["structure"] = s.name();
  j["group"] = al::json_of(g);
  std::ostringstream t;
  t << "structure " << s.name() << "\n|Aut| = " << g.order << "\ngenerators:\n";
  for (const al::Perm& p : g.generators) {
    t << " ";
    for (int v : p) t << " " << v;
    t << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int run_orbits(const CommonOpts& o) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  int kmax = cfg.kmax_default > 0 ? cfg.kmax_default : 2;
  al::AutGroup g = al::automorphism_group(s, cfg.lim);
  al::ojson j = al::report_envelope("orbits");
  j["structure"] = s.name();
  al::ojson per = al::ojson::array();
  std::ostringstream t;
  t << "structure " << s.name() << "\n";
  for (int k = 1; k <= kmax; ++k) {
    al::TuplePartition p = al::orbit_partition(g, k, cfg.lim);
    per.push_back(al::json_of(p));
    t << "k=" << k << ": " << p.class_count << " classes\n";
  }
  j["orbits"] = std::move(per);
  emit(o, j, t.str());
  return 0;
}

int run_arity(const CommonOpts& o, const std::string& rel) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  al::ArityContext ctx(s, cfg.lim);
  al::ojson j = al::report_envelope("arity");
  j["structure"] = s.name();
  std::ostringstream t;
  if (!rel.empty()) {
    auto ri = s.rel_index(rel);
    if (!ri) throw al::validation_error("unknown relation '" + rel + "'");
    al::DefSet r = s.relation(*ri);
    int n = al::relation_arity(ctx, r);
    j["relation"] = rel;
    j["ar"] = n;
    t << "ar(" << rel << " on " << s.name() << ") = " << n << "\n";
  } else {
    al::StructureArityReport rep = al::structure_arity(ctx, cfg.kmax_default);
    j["ar"] = rep.value;
    j["detail"] = al::json_of(rep);
    t << "ar(" << s.name() << ") = " << rep.value << "  (k_max " << rep.k_max << ")\n";
  }
  emit(o, j, t.str());
  return 0;
}

int run_formula_arity(const CommonOpts& o, const std::string& formula) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  al::Formula f = al::parse_formula(formula);
  al::DefSet r = al::evaluate(s, f, cfg.lim);
  al::ArityContext ctx(s, cfg.lim);
  int n = al::relation_arity(ctx, r);
  al::ojson j = al::report_envelope("formula-arity");
  j["structure"] = s.name();
  j["formula"] = al::to_string(f);
  j["free_variables"] = al::free_variables(f);
  j["defined_count"] = r.size();
  j["ar"] = n;
  std::ostringstream t;
  t << "ar(" << al::to_string(f) << " on " << s.name() << ") = " << n << "\n";
  emit(o, j, t.str());
  return 0;
}

int run_almost(const CommonOpts& o, int n, int m_count, int r) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  al::ArityContext ctx(s, cfg.lim);
  bool yes = al::almost_at_degree(ctx, n, {m_count, r}, cfg.kmax_default);
  al::ojson j = al::report_envelope("almost");
  j["structure"] = s.name();
  j["n"] = n;
  j["degree"] = {m_count, r};
  j["almost_n_ary"] = yes;
  std::ostringstream t;
  t << s.name() << " almost " << n << "-ary at degree (" << m_count << "," << r
    << "): " << (yes ? "yes" : "no") << "\n";
  emit(o, j, t.str());
  return 0;
}

int run_degree(const CommonOpts& o, int n, int rmax) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  al::ArityContext ctx(s, cfg.lim);
  al::WitnessReport rep = al::witness_degree_search(ctx, n, rmax, cfg.kmax_default);
  al::ojson j = al::report_envelope("degree");
  j["structure"] = s.name();
  j["n"] = n;
  j["r_max"] = rmax;
  j["report"] = al::json_of(rep);
  std::ostringstream t;
  if (!rep.found) {
    t << "no witness set within bounds\n";
  } else {
    t << "degree = (" << rep.degree.m << "," << rep.degree.r << ")"
      << (rep.optimal ? "" : " (greedy upper bound)") << "\nwitnesses:";
    for (const std::string& w : rep.names) t << " " << w;
    t << "\n";
  }
  emit(o, j, t.str());
  return rep.found ? 0 : 2;
}

int run_pairing(const CommonOpts& o, const std::string& in2, bool compose) {
  al::Config cfg = effective_config(o);
  al::FinStructure a = load_structure(o, cfg.lim);
  al::FinStructure b = al::parse_structure_text(slurp(in2), cfg.lim);
  al::FinStructure out =
      compose ? al::composition(a, b, cfg.lim) : al::disjoint_union(a, b, cfg.lim);
  std::string text = al::serialize_structure(out);
  if (!o.out_path.empty()) spill(o.out_path, text);
  al::ojson j = al::report_envelope(compose ? "compose" : "union");
  j["structure"] = out.name();
  j["inputs"] = {a.name(), b.name()};
  j["result"] = al::json_of(out);
  emit(o, j, o.out_path.empty() ? text : "");
  return 0;
}

int run_eval(const CommonOpts& o, const std::string& formula, const std::string& vars_csv) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  al::Formula f = al::parse_formula(formula);
  std::vector<std::string> vars;
  if (!vars_csv.empty()) {
    std::istringstream vs(vars_csv);
    std::string v;
    while (std::getline(vs, v, ',')) vars.push_back(v);
  } else {
    vars = al::free_variables(f);
  }
  al::DefSet r = al::evaluate(s, f, vars, cfg.lim);
  al::ojson j = al::report_envelope("eval");
  j["structure"] = s.name();
  j["formula"] = al::to_string(f);
  j["vars"] = vars;
  std::ostringstream t;
  if (vars.empty()) {
    bool truth = !r.empty();
    j["sentence"] = true;
    j["holds"] = truth;
    t << "sentence " << (truth ? "true" : "false") << "\n";
  } else {
    j["sentence"] = false;
    j["result"] = al::json_of(r);
    t << r.size() << " tuples satisfy\n";
    for (const std::vector<int>& tup : r.tuples()) {
      t << "(";
      for (std::size_t i = 0; i < tup.size(); ++i) t << (i ? "," : " ") << (i ? " " : "") << tup[i];
      t << " )\n";
    }
  }
  emit(o, j, t.str());
  return 0;
}

int run_oracle_check(const CommonOpts& o, int nmax) {
  al::Config cfg = effective_config(o);
  al::FinStructure s = load_structure(o, cfg.lim);
  int kmax = cfg.kmax_default > 0 ? cfg.kmax_default : 3;
  al::AutGroup fast = al::automorphism_group(s, cfg.lim);
  std::vector<al::Perm> autos = al::naive_automorphisms(s, cfg.lim);
  al::ArityContext ctx(s, cfg.lim);
  std::vector<std::string> mismatches;
  if (fast.order != autos.size())
    mismatches.push_back("group order: fast " + std::to_string(fast.order) + " naive " +
                         std::to_string(autos.size()));
  long checks = 0;
  for (int k = 1; k <= kmax && mismatches.empty(); ++k) {
    al::TuplePartition no = al::naive_orbit_partition(autos, s.size(), k, cfg.lim);
    if (no.class_of != ctx.orbits(k).class_of) {
      mismatches.push_back("orbit partition differs at k=" + std::to_string(k));
      break;
    }
    for (int n = 0; n <= nmax; ++n) {
      al::TuplePartition ns = al::naive_subtype_partition(autos, s.size(), k, n, cfg.lim);
      if (ns.class_of != ctx.subtypes(k, n).class_of) {
        mismatches.push_back("subtype partition differs at k=" + std::to_string(k) +
                             " n=" + std::to_string(n));
        break;
      }
      for (int c = 0; c < no.class_count; ++c) {
        al::DefSet orb = al::DefSet::from_mask(k, s.size(), [&] {
          std::vector<char> mk(no.class_of.size(), 0);
          for (std::size_t i = 0; i < no.class_of.size(); ++i) mk[i] = no.class_of[i] == c;
          return mk;
        }());
        bool a = al::is_n_ary(ctx, orb, n);
        bool b = al::naive_is_n_ary(autos, s.size(), orb, n, cfg.lim);
        ++checks;
        if (a != b) {
          mismatches.push_back("is_n_ary differs on orbit " + std::to_string(c) +
                               " at k=" + std::to_string(k) + " n=" + std::to_string(n));
          break;
        }
      }
    }
  }
  al::ojson j = al::report_envelope("oracle-check");
  j["structure"] = s.name();
  j["k_max"] = kmax;
  j["n_max"] = nmax;
  j["checks"] = checks;
  j["mismatches"] = mismatches;
  j["ok"] = mismatches.empty();
  std::ostringstream t;
  t << s.name() << ": " << checks << " checks, "
    << (mismatches.empty() ? "all agree" : "MISMATCH") << "\n";
  for (const std::string& msg : mismatches) t << "  " << msg << "\n";
  emit(o, j, t.str());
  return mismatches.empty() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite structure arity toolkit"};
  app.require_subcommand(1);

  CommonOpts o_build;
  std::vector<int> b_pure, b_linear, b_circular, b_spherical, b_random;
  std::string b_variant = "cyclic";
  auto* c_build = app.add_subcommand("build", "evaluate a DSL file or builder to canonical form");
  add_common(c_build, o_build, false);
  c_build->add_option("--pure", b_pure, "pure set of this size")->expected(1);
  c_build->add_option("--linear", b_linear, "linear order of this size")->expected(1);
  c_build->add_option("--circular", b_circular, "circular order of this size")->expected(1);
  c_build->add_option("--spherical", b_spherical, "spherical order: size and arity")->expected(2);
  c_build->add_option("--random", b_random, "seeded random structure: size and index")->expected(2);
  c_build->add_option("--variant", b_variant, "chain variant: cyclic, literal, allwindows");

  CommonOpts o_ax;
  std::string ax_rel;
  auto* c_ax = app.add_subcommand("check-axioms", "order axioms and density for one relation");
  add_common(c_ax, o_ax);
  c_ax->add_option("--rel", ax_rel, "relation name (default: the unique arity >= 3 relation)");

  CommonOpts o_aut;
  auto* c_aut = app.add_subcommand("aut", "automorphism group");
  add_common(c_aut, o_aut);

  CommonOpts o_orb;
  auto* c_orb = app.add_subcommand("orbits", "orbit partitions of k-tuples");
  add_common(c_orb, o_orb);

  CommonOpts o_ar;
  std::string ar_rel;
  auto* c_ar = app.add_subcommand("arity", "arity of the structure or one relation");
  add_common(c_ar, o_ar);
  c_ar->add_option("--rel", ar_rel, "relation name (default: whole structure)");

  CommonOpts o_fa;
  std::string fa_formula;
  auto* c_fa = app.add_subcommand("formula-arity", "arity of a defined relation");
  add_common(c_fa, o_fa);
  c_fa->add_option("--formula", fa_formula, "first order formula")->required();

  CommonOpts o_al;
  int al_n = 1, al_m = 0, al_r = 0;
  auto* c_al = app.add_subcommand("almost", "almost n-arity at a given degree");
  add_common(c_al, o_al);
  c_al->add_option("--n", al_n, "target arity level")->required();
  c_al->add_option("--m", al_m, "witness count")->required();
  c_al->add_option("--r", al_r, "witness arity bound")->required();

  CommonOpts o_dg;
  int dg_n = 1, dg_rmax = 3;
  auto* c_dg = app.add_subcommand("degree", "least witness degree for almost n-arity");
  add_common(c_dg, o_dg);
  c_dg->add_option("--n", dg_n, "target arity level")->required();
  c_dg->add_option("--rmax", dg_rmax, "witness arity bound");

  CommonOpts o_un, o_co;
  std::string un_in2, co_in2;
  auto* c_un = app.add_subcommand("union", "disjoint union of two structures");
  add_common(c_un, o_un);
  c_un->add_option("--in2", un_in2, "second structure file")->required();
  auto* c_co = app.add_subcommand("compose", "composition of two structures");
  add_common(c_co, o_co);
  c_co->add_option("--in2", co_in2, "second structure file")->required();

  CommonOpts o_ev;
  std::string ev_formula, ev_vars;
  auto* c_ev = app.add_subcommand("eval", "evaluate a formula");
  add_common(c_ev, o_ev);
  c_ev->add_option("--formula", ev_formula, "first order formula")->required();
  c_ev->add_option("--vars", ev_vars, "result columns, comma separated (default: free variables)");

  CommonOpts o_oc;
  int oc_nmax = 3;
  auto* c_oc = app.add_subcommand("oracle-check", "compare fast path against the brute force oracle");
  add_common(c_oc, o_oc);
  c_oc->add_option("--nmax", oc_nmax, "largest arity level to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (c_build->parsed())
      return run_build(o_build, b_pure, b_linear, b_circular, b_spherical, b_random, b_variant);
    if (c_ax->parsed()) return run_check_axioms(o_ax, ax_rel);
    if (c_aut->parsed()) return run_aut(o_aut);
    if (c_orb->parsed()) return run_orbits(o_orb);
    if (c_ar->parsed()) return run_arity(o_ar, ar_rel);
    if (c_fa->parsed()) return run_formula_arity(o_fa, fa_formula);
    if (c_al->parsed()) return run_almost(o_al, al_n, al_m, al_r);
    if (c_dg->parsed()) return run_degree(o_dg, dg_n, dg_rmax);
    if (c_un->parsed()) return run_pairing(o_un, un_in2, false);
    if (c_co->parsed()) return run_pairing(o_co, co_in2, true);
    if (c_ev->parsed()) return run_eval(o_ev, ev_formula, ev_vars);
    if (c_oc->parsed()) return run_oracle_check(o_oc, oc_nmax);
  } catch (const al::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const al::cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const al::validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const al::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
