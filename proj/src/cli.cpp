#include "heckeforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "heckeforge/hecke.hpp"
#include "heckeforge/hochschild.hpp"
#include "heckeforge/json_io.hpp"
#include "heckeforge/ncalg.hpp"

namespace heckeforge {

namespace {

// Input problems detected after parsing; mapped to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

long double group_order(int r, int p, int n) {
  long double o = 1;
  for (int i = 1; i <= n; ++i) o *= static_cast<long double>(r) * i;
  return o / p;
}

struct Options {
  RunConfig cfg;
  std::string rep = "faithful";
  std::string format = "json";
  int cohdeg = 2;
  bool closed_form = false;
  bool compare = false;
  bool validate_skipped = false;
  std::string preset;
  std::string file;
  std::string expr;
  std::string forms;
};

void add_group_flags(CLI::App* sub, Options& o, bool with_p = true, bool with_rep = true) {
  sub->add_option("--r", o.cfg.r, "order of the roots of unity")->required();
  if (with_p) sub->add_option("--p", o.cfg.p, "p with p | r")->capture_default_str();
  sub->add_option("--n", o.cfg.n, "rank")->required();
  if (with_rep)
    sub->add_option("--rep", o.rep, "faithful or permutation")
        ->check(CLI::IsMember({"faithful", "permutation"}, CLI::ignore_case))
        ->capture_default_str();
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  sub->add_option("--seed", o.cfg.seed, "seed for randomized checks")->capture_default_str();
}

void finish_config(Options& o) {
  o.cfg.rep = parse_rep(o.rep);
  o.cfg.format = o.format == "text" ? OutputFormat::Text : OutputFormat::Json;
  o.cfg.budget = default_budget();
}

std::string dims_row(const Json& dims) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, v] : dims.items()) {
    os << (first ? "" : " ") << v.get<std::uint64_t>();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
  Group group(cfg.r, cfg.p, cfg.n, cfg.budget);
  Json classes = Json::array();
  bool all_match = true;
  for (const auto& cls : group.classes()) {
    const GroupElement& g = cls.representative;
    const std::uint64_t brute = group.centralizer(g).size();
    Json row{{"representative", element_to_json(g)},
             {"label", g.to_string()},
             {"size", cls.size},
             {"cycle_type", cycle_type_string(cycle_type(g))},
             {"centralizer_order", brute}};
    if (brute * cls.size != group.order()) all_match = false;
    if (cfg.p == 1) {
      const std::uint64_t f = centralizer_order_formula(g);
      row["centralizer_formula"] = f;
      row["formula_matches"] = f == brute;
      all_match = all_match && f == brute;
    } else {
      row["centralizer_formula"] = nullptr;
      row["formula_matches"] = nullptr;
    }
    classes.push_back(row);
  }
  Json doc{{"r", cfg.r}, {"p", cfg.p}, {"n", cfg.n}, {"order", group.order()},
           {"class_count", group.classes().size()}, {"classes", classes}};
  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "G(" << cfg.r << "," << cfg.p << "," << cfg.n << "): order " << group.order() << ", "
        << group.classes().size() << " classes\n";
    for (const auto& c : classes) {
      out << std::left << std::setw(28) << c["label"].get<std::string>() << " size " << std::setw(6)
          << c["size"].get<std::size_t>() << " type " << std::setw(22) << c["cycle_type"].get<std::string>()
          << " |Z| " << c["centralizer_order"].get<std::uint64_t>();
      if (!c["centralizer_formula"].is_null()) out << " formula " << c["centralizer_formula"].get<std::uint64_t>();
      out << "\n";
    }
  }
  return all_match ? exit_code::ok : exit_code::check_failed;
}

int cmd_hh(const RunConfig& cfg, const Options& o, std::ostream& out) {
  if (o.cohdeg < 0) throw InputError("--cohdeg must be non-negative");
  if (cfg.max_poly_degree < 0) throw InputError("--max-degree must be non-negative");
  if ((o.closed_form || o.compare) && o.cohdeg != 2) throw InputError("closed forms exist only for --cohdeg 2");
  const int D = cfg.max_poly_degree;
  Group group(cfg.r, cfg.p, cfg.n, cfg.budget);

  std::vector<CatalogEntry> catalog;
  if (o.closed_form || o.compare) {
    try {
      catalog = closed_form_catalog(group, cfg.rep);
    } catch (const NotApplicable& e) {
      throw InputError(std::string("closed forms not applicable: ") + e.what());
    }
  }

  Json components = Json::array();
  std::vector<ClassComponent> brute;
  bool skips_ok = true;
  if (!o.closed_form || o.compare) {
    TotalOptions opts;
    opts.validate_skipped = o.validate_skipped;
    for (auto& rep : hh_total(group, cfg.rep, o.cohdeg, D, opts)) {
      Json row = component_to_json(rep.component, "brute", D);
      if (rep.skipped) {
        row["skipped"] = rep.skip_reason;
        if (rep.skip_validated) {
          row["skip_validated"] = *rep.skip_validated;
          skips_ok = skips_ok && *rep.skip_validated;
        }
      }
      components.push_back(row);
      brute.push_back(std::move(rep.component));
    }
  }

  Json doc{{"r", cfg.r}, {"p", cfg.p}, {"n", cfg.n}, {"rep", to_string(cfg.rep)}, {"cohdeg", o.cohdeg},
           {"max_degree", D}};
  int code = skips_ok ? exit_code::ok : exit_code::check_failed;
  if (o.compare) {
    CompareReport report = compare(brute, catalog, D);
    std::set<GroupElement> bad;
    Json mism = Json::array();
    for (const auto& m : report.mismatches) {
      bad.insert(m.representative);
      mism.push_back({{"class", element_to_json(m.representative)}, {"label", m.label}, {"degree", m.degree},
                      {"brute", m.brute}, {"closed", m.closed}});
    }
    for (auto& row : components) row["match"] = !bad.count(element_from_json(row["class"]));
    doc["classes_checked"] = report.classes_checked;
    doc["mismatches"] = mism;
    doc["match"] = report.ok();
    if (!report.ok()) code = exit_code::check_failed;
  } else if (o.closed_form) {
    for (const auto& e : catalog) {
      int codim = cfg.n - static_cast<int>(fixed_space(e.representative, cfg.rep).size());
      components.push_back(catalog_entry_to_json(e, codim, D));
    }
  }
  doc["components"] = components;

  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "HH^" << o.cohdeg << " of S(V)#G(" << cfg.r << "," << cfg.p << "," << cfg.n << "), " << to_string(cfg.rep)
        << ", degrees 0.." << D << "\n";
    for (const auto& c : components) {
      out << std::left << std::setw(28) << element_from_json(c["class"]).to_string() << " codim "
          << c["codim"].get<int>() << "  " << c["source"].get<std::string>() << "  [" << dims_row(c["dims"]) << "]";
      if (c.contains("match")) out << (c["match"].get<bool>() ? "  match" : "  MISMATCH");
      if (c.contains("skipped")) out << "  (skipped)";
      out << "\n";
    }
    if (o.compare) out << (doc["match"].get<bool>() ? "all classes match\n" : "mismatches found\n");
  }
  return code;
}

int cmd_gha_dim(const RunConfig& cfg, std::ostream& out) {
  GHAParamReport rep = param_space(cfg.r, cfg.p, cfg.n, cfg.rep);
  Json doc = param_report_to_json(rep);
  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "graded Hecke parameters for G(" << cfg.r << "," << cfg.p << "," << cfg.n << "), " << to_string(cfg.rep)
        << "\n  d = " << rep.d << "\n";
    for (const auto& [g, d] : rep.lambda2_dims) out << "  Lambda^2 at " << g.to_string() << ": " << d << "\n";
    out << "  total = " << rep.total << "\n";
    if (rep.paper_count) out << "  published count = " << *rep.paper_count << "\n";
    if (rep.discrepancy_flag) out << "  discrepancy: diagonal classes carry degree-0 parameters\n";
  }
  return exit_code::ok;
}

std::map<GroupElement, CycloNum> random_scalars(int r, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 9);
  std::map<GroupElement, CycloNum> out;
  for (const auto& g : diagonal_three_cycle_classes(r, n)) {
    long a = num(rng);
    if (rng() % 2) a = -a;
    out[g] = CycloNum(make_rational(a, num(rng)));
  }
  return out;
}

int cmd_gha_build(const RunConfig& cfg, const Options& o, std::ostream& out) {
  if (cfg.n < 3) throw InputError("presets need n >= 3");
  SkewFormFamily fam = o.preset == "a_r1n" ? build_preset(Preset::AR1n, cfg.r, cfg.n)
                                           : build_preset(Preset::Generic, cfg.r, cfg.n,
                                                          random_scalars(cfg.r, cfg.n, cfg.seed));
  Json doc = forms_to_json(fam);
  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "# " << fam.support.size() << " nonzero forms, G(" << fam.r << ",1," << fam.n << "), "
        << to_string(fam.rep) << "\n";
    for (const auto& [g, a] : fam.support) {
      out << g.to_string() << "\n";
      for (int i = 0; i < a.n(); ++i) {
        out << " ";
        for (int k = 0; k < a.n(); ++k) out << " " << a.entry(i, k).to_string();
        out << "\n";
      }
    }
  }
  return exit_code::ok;
}

Json read_json(const std::string& file, std::istream& in) {
  try {
    if (file == "-") return Json::parse(in);
    std::ifstream f(file);
    if (!f) throw InputError("cannot open " + file);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  } catch (const Json::type_error& e) {
    throw InputError(std::string("JSON type error: ") + e.what());
  }
}

SkewFormFamily load_forms(const std::string& file, std::istream& in) {
  Json j = read_json(file, in);
  try {
    return forms_from_json(j);
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad forms file: ") + e.what());
  }
}

int cmd_pbw_check(const Options& o, std::istream& in, std::ostream& out) {
  SkewFormFamily fam = load_forms(o.file, in);
  if (group_order(fam.r, fam.p, fam.n) > static_cast<long double>(default_budget()))
    throw InputError("group order exceeds enumeration budget");
  PBWReport rep = pbw_check(fam);
  Json w = Json::array();
  for (const auto& x : rep.witnesses) w.push_back(x.to_string());
  Json doc{{"r", fam.r}, {"p", fam.p}, {"n", fam.n}, {"rep", to_string(fam.rep)},
           {"support_size", fam.support.size()}, {"invariance", rep.invariance}, {"jacobi", rep.jacobi},
           {"ok", rep.ok()}, {"witnesses", w}};
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "invariance: " << (rep.invariance ? "ok" : "FAILED") << "\njacobi: " << (rep.jacobi ? "ok" : "FAILED")
        << "\n";
    for (const auto& x : rep.witnesses) out << "  witness: " << x.to_string() << "\n";
  }
  return rep.ok() ? exit_code::ok : exit_code::check_failed;
}

int cmd_nc_verify(const RunConfig& cfg, const Options& o, std::ostream& out) {
  if (o.preset != "hstar-iso") throw InputError("unknown preset " + o.preset);
  if (cfg.n < 3) throw InputError("hstar-iso needs n >= 3");
  Presentation hs = Presentation::hstar(cfg.r, cfg.n);
  std::size_t reln_checks = 0, reln_failures = 0;
  Json failures = Json::array();
  for (int j = 1; j <= cfg.n; ++j)
    for (int k = j + 1; k <= cfg.n; ++k)
      for (int m = 1; m <= cfg.n; ++m) {
        ++reln_checks;
        if (!verify_reln4(j, k, m, hs).ok) {
          ++reln_failures;
          failures.push_back("reln4 (" + std::to_string(j) + "," + std::to_string(k) + ") v" + std::to_string(m));
        }
      }
  IsoReport iso = verify_iso(cfg.r, cfg.n);
  for (const auto& f : iso.failures) failures.push_back(f);
  auto pair = [](std::size_t c, std::size_t f) { return Json{{"checks", c}, {"failures", f}}; };
  const bool ok = reln_failures == 0 && iso.ok();
  Json doc{{"preset", o.preset},
           {"r", cfg.r},
           {"n", cfg.n},
           {"reln4", pair(reln_checks, reln_failures)},
           {"xi", pair(iso.xi_checks, iso.xi_failures)},
           {"commute", pair(iso.commute_checks, iso.commute_failures)},
           {"action", pair(iso.action_checks, iso.action_failures)},
           {"bracket", pair(iso.bracket_checks, iso.bracket_failures)},
           {"drinfeld", pair(iso.drinfeld_checks, iso.drinfeld_failures)},
           {"scaled", pair(iso.scaled_checks, iso.scaled_failures)},
           {"scaling_ratio_ok", iso.scaling_ratio_ok},
           {"failures", failures},
           {"ok", ok}};
  if (cfg.format == OutputFormat::Json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const char* key : {"reln4", "xi", "commute", "action", "bracket", "drinfeld", "scaled"})
      out << std::left << std::setw(10) << key << doc[key]["checks"].get<std::size_t>() << " checks, "
          << doc[key]["failures"].get<std::size_t>() << " failures\n";
    out << "scaling ratio " << (iso.scaling_ratio_ok ? "ok" : "FAILED") << "\n" << (ok ? "verified" : "FAILED") << "\n";
  }
  return ok ? exit_code::ok : exit_code::check_failed;
}

int cmd_nc_normal_form(const RunConfig& cfg, const Options& o, std::istream& in, std::ostream& out) {
  std::optional<Presentation> pres;
  if (!o.forms.empty()) {
    pres = Presentation::drinfeld(load_forms(o.forms, in));
  } else if (o.preset == "hstar") {
    pres = Presentation::hstar(cfg.r, cfg.n);
  } else if (o.preset == "a_r1n") {
    if (cfg.n < 3) throw InputError("presets need n >= 3");
    pres = Presentation::drinfeld(build_a_r1n(cfg.r, cfg.n));
  } else {
    throw InputError("unknown preset " + o.preset);
  }
  NCElement x = parse_expression(o.expr, *pres);
  Json doc = nc_to_json(x);
  doc["presentation"] = pres->name();
  doc["trusted"] = pres->trusted();
  if (cfg.format == OutputFormat::Json)
    out << doc.dump(2) << "\n";
  else
    out << x.to_string() << "\n";
  return exit_code::ok;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.r < 1) throw InputError("r must be positive");
  if (cfg.p < 1 || cfg.r % cfg.p != 0) throw InputError("p must divide r");
  if (cfg.n < 1) throw InputError("n must be at least 1");
  if (cfg.budget < 1) throw InputError("budget must be positive");
  if (group_order(cfg.r, cfg.p, cfg.n) > static_cast<long double>(cfg.budget))
    throw InputError("|G(" + std::to_string(cfg.r) + "," + std::to_string(cfg.p) + "," + std::to_string(cfg.n) +
                     ")| exceeds the enumeration budget " + std::to_string(cfg.budget));
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"heckeforge: Hochschild cohomology and graded Hecke algebras of G(r,p,n)"};
  app.require_subcommand(1);
  Options o;

  auto* classes = app.add_subcommand("classes", "conjugacy classes with centralizer orders");
  add_group_flags(classes, o, true, false);
  add_output_flags(classes, o);

  auto* hh = app.add_subcommand("hh", "Hochschild cohomology of S(V)#G by conjugacy class");
  add_group_flags(hh, o);
  add_output_flags(hh, o);
  hh->add_option("--cohdeg", o.cohdeg, "cohomological degree")->capture_default_str();
  hh->add_option("--max-degree", o.cfg.max_poly_degree, "maximal polynomial degree")->capture_default_str();
  hh->add_flag("--closed-form", o.closed_form, "print the closed-form catalog instead of brute force");
  hh->add_flag("--compare", o.compare, "compare brute force with the closed-form catalog");
  hh->add_flag("--validate-skipped", o.validate_skipped, "recompute classes skipped by the determinant filter");

  auto* gha_dim = app.add_subcommand("gha-dim", "dimension of the graded Hecke parameter space");
  add_group_flags(gha_dim, o);
  add_output_flags(gha_dim, o);

  auto* gha_build = app.add_subcommand("gha-build", "write a defining family of skew forms");
  add_group_flags(gha_build, o, false, false);
  add_output_flags(gha_build, o);
  gha_build->add_option("--preset", o.preset, "a_r1n or generic")
      ->required()
      ->check(CLI::IsMember({"a_r1n", "generic"}));

  auto* pbw = app.add_subcommand("pbw-check", "check the PBW conditions of a forms file");
  pbw->add_option("file", o.file, "forms JSON file, or - for stdin")->required();
  pbw->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* nc_verify = app.add_subcommand("nc-verify", "verify the H* presentation against A_{r,1,n}");
  add_group_flags(nc_verify, o, false, false);
  add_output_flags(nc_verify, o);
  nc_verify->add_option("--preset", o.preset, "hstar-iso")->required()->check(CLI::IsMember({"hstar-iso"}));

  auto* nc_nf = app.add_subcommand("nc-normal-form", "normal form of an expression");
  add_group_flags(nc_nf, o, false, false);
  add_output_flags(nc_nf, o);
  nc_nf->add_option("--preset", o.preset, "hstar or a_r1n")->check(CLI::IsMember({"hstar", "a_r1n"}));
  nc_nf->add_option("--forms", o.forms, "forms JSON file defining the Drinfeld relations");
  nc_nf->add_option("expr", o.expr, "expression, e.g. \"s1 v2 - v1 s1\"")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::input_error;
  }

  try {
    finish_config(o);
    if (pbw->parsed()) return cmd_pbw_check(o, in, out);
    if (nc_nf->parsed() && !o.forms.empty()) return cmd_nc_normal_form(o.cfg, o, in, out);
    if (nc_nf->parsed() && o.preset.empty()) throw InputError("nc-normal-form needs --preset or --forms");
    validate(o.cfg);
    if (classes->parsed()) return cmd_classes(o.cfg, out);
    if (hh->parsed()) return cmd_hh(o.cfg, o, out);
    if (gha_dim->parsed()) return cmd_gha_dim(o.cfg, out);
    if (gha_build->parsed()) return cmd_gha_build(o.cfg, o, out);
    if (nc_verify->parsed()) return cmd_nc_verify(o.cfg, o, out);
    if (nc_nf->parsed()) return cmd_nc_normal_form(o.cfg, o, in, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const IllDefinedExtension& e) {
    err << "check failed: " << e.what() << "\n";
    return exit_code::check_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::check_failed;
  }
  return exit_code::input_error;
}

}  // namespace heckeforge
