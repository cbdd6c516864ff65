// galtour: command-line front end over instance files and presets.
//
// Exit codes: 0 ok, 2 usage or input error, 3 internal theorem violation
// (including any oracle disagreement).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <galtour.hpp>

namespace {

using namespace galtour;
using ojson = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_user = 2;
constexpr int exit_theorem = 3;

struct Options
{
  std::string instance;
  std::string field;
  std::vector<std::string> towers;
  bool strict = false;
  bool json = false;
  std::string dot;
  std::optional<std::size_t> bound;
};

GaloisContext load(Options const &o)
{
  Bounds b;
  if (o.bound)
    b.subgroups = *o.bound;
  static const std::vector<std::string> kinds{"radical:",   "cyclo-radical:", "selmer-serre:",
                                              "cyclotomic:", "group:",        "file:"};
  for (auto const &k : kinds)
    if (o.instance.rfind(k, 0) == 0)
      return load_selector(o.instance, b);
  return load_instance_file(o.instance, b);
}

char const *yn(bool b) { return b ? "yes" : "no"; }

std::string names_line(Tower const &t)
{
  std::string s;
  for (auto const &n : tower_names(t))
    s += (s.empty() ? "" : ", ") + n;
  return s;
}

std::string sigma_line(std::vector<std::size_t> const &sigma)
{
  std::string s;
  for (auto x : sigma)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

FieldRef field_or_l(GaloisContext const &ctx, Options const &o)
{ return o.field.empty() ? ctx.distinguished() : ctx.resolve(o.field); }

std::vector<Tower> towers_of(GaloisContext const &ctx, Options const &o, std::size_t n,
                             char const *verb)
{
  if (o.towers.size() != n)
    throw PreconditionError(std::string(verb) + " needs exactly " + std::to_string(n) +
                            " --tower argument" + (n == 1 ? "" : "s"));
  std::vector<Tower> r;
  for (auto const &t : o.towers)
    r.push_back(parse_tower_json(ctx, t));
  return r;
}

void print_notes(GaloisContext const &ctx)
{
  for (auto const &n : ctx.notes())
    std::cout << "note: " << n << "\n";
}

int cmd_analyze(Options const &o)
{
  auto ctx = load(o);
  FieldRef k = ctx.base();
  std::vector<FieldRef> fields;
  if (!o.field.empty()) {
    fields.push_back(ctx.resolve(o.field));
  } else {
    for (auto const &[name, f] : ctx.names())
      if (std::find(fields.begin(), fields.end(), f) == fields.end())
        fields.push_back(f);
  }
  ojson arr = ojson::array();
  if (!o.json) {
    std::cout << "instance: " << ctx.id() << "\n";
    std::cout << "group order: " << ctx.group().order() << "\n";
    print_notes(ctx);
  }
  for (auto f : fields) {
    auto rep = intourability_field(ctx, f, k);
    bool gal = is_galois(ctx, f, k), gt = is_galtourable(ctx, f, k);
    bool sim = is_simple_ext(ctx, f, k), gs = is_galsimple(ctx, f, k);
    if (o.json) {
      ojson j;
      j["field"] = ctx.label(f);
      j["degree"] = degree(ctx, f, k);
      j["galois"] = gal;
      j["galtourable"] = gt;
      j["simple"] = sim;
      j["galsimple"] = gs;
      j["M"] = ctx.label(rep.M);
      j["tour_degree"] = {rep.degrees.gal, rep.degrees.int_};
      arr.push_back(std::move(j));
      continue;
    }
    std::cout << "\nfield: " << ctx.label(f) << " over " << ctx.label(k) << "\n"
              << "degree: " << degree(ctx, f, k) << "\n"
              << "galois: " << yn(gal) << "\n"
              << "galtourable: " << yn(gt) << "\n"
              << "simple: " << yn(sim) << "\n"
              << "galsimple: " << yn(gs) << "\n"
              << "M: " << ctx.label(rep.M) << "\n"
              << "tour-degree: (" << rep.degrees.gal << "," << rep.degrees.int_ << ")\n";
  }
  if (o.json) {
    ojson j;
    j["instance"] = ctx.id();
    j["notes"] = ctx.notes();
    j["fields"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  }
  return exit_ok;
}

int cmd_mfield(Options const &o)
{
  auto ctx = load(o);
  FieldRef l = field_or_l(ctx, o);
  auto rep = intourability_field(ctx, l, ctx.base());
  auto bf = bf_intourability(ctx, l, ctx.base());
  if (bf.count != 1 || bf.field != rep.M)
    throw TheoremViolation("m-field: oracle found " + std::to_string(bf.count) +
                           " candidate fields");
  if (o.json) {
    auto j = report_json(ctx, rep);
    j["oracle_candidates"] = bf.count;
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "extension: " << ctx.label(l) << "/" << ctx.label(ctx.base()) << "\n"
            << "M: " << ctx.label(rep.M) << "\n"
            << "tour-degree: (" << rep.degrees.gal << "," << rep.degrees.int_ << ")\n"
            << "L/M: " << to_string(rep.sub_kind) << "\n"
            << "witness: " << render_tower(rep.witness_tower) << "\n"
            << "oracle candidates: " << bf.count << "\n";
  return exit_ok;
}

int cmd_tower_check(Options const &o)
{
  auto ctx = load(o);
  auto t = towers_of(ctx, o, 1, "tower-check").front();
  bool strict = is_strict(t), gal = is_galois_tower(t);
  std::optional<bool> bound;
  if (strict)
    bound = height_bound_check(t);
  std::optional<bool> comp;
  if (gal)
    comp = is_composition_tower_galois(t);
  bool general = is_composition_tower(t);
  if (o.json) {
    ojson j;
    j["tower"] = tower_json(t);
    j["height"] = t.height();
    j["strict"] = strict;
    j["galois"] = gal;
    j["galtourable"] = is_galtourable_tower(t);
    j["height_bound"] = bound ? ojson(*bound) : ojson(nullptr);
    j["composition_galois"] = comp ? ojson(*comp) : ojson(nullptr);
    j["composition_general"] = general;
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "tower: " << render_tower(t) << "\n"
            << "height: " << t.height() << "\n"
            << "strict: " << yn(strict) << "\n"
            << "galois: " << yn(gal) << "\n"
            << "galtourable: " << yn(is_galtourable_tower(t)) << "\n";
  if (bound)
    std::cout << "height bound: " << yn(*bound) << "\n";
  if (comp)
    std::cout << "galois composition tower: " << yn(*comp) << "\n";
  std::cout << "composition tower: " << yn(general) << "\n";
  return exit_ok;
}

int cmd_refine(Options const &o)
{
  auto ctx = load(o);
  auto ts = towers_of(ctx, o, 2, "refine");
  auto r = o.strict ? schreier_refine_strict(ts[0], ts[1]) : schreier_refine(ts[0], ts[1]);
  if (!verify_equivalence(r.first, r.second, r.witness))
    throw TheoremViolation("refine: witness does not verify");
  auto g1 = marche_groups(r.first);
  if (o.json) {
    ojson j;
    j["first"] = tower_json(r.first);
    j["second"] = tower_json(r.second);
    j["sigma"] = r.witness.sigma;
    ojson m = ojson::array();
    for (std::size_t i = 0; i < g1.size(); ++i)
      m.push_back({{"marche", i + 1}, {"image", r.witness.sigma[i]},
                   {"order", g1[i].order()}, {"element_orders", g1[i].order_statistics()}});
    j["marches"] = std::move(m);
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "first: " << render_tower(r.first) << "\n"
            << "second: " << render_tower(r.second) << "\n"
            << "sigma: " << sigma_line(r.witness.sigma) << "\n";
  for (std::size_t i = 0; i < g1.size(); ++i) {
    std::string stats;
    for (auto x : g1[i].order_statistics())
      stats += (stats.empty() ? "" : ",") + std::to_string(x);
    std::cout << "marche " << i + 1 << " -> " << r.witness.sigma[i] << ": order "
              << g1[i].order() << ", element orders [" << stats << "]\n";
  }
  return exit_ok;
}

int cmd_compose(Options const &o)
{
  auto ctx = load(o);
  FieldRef l = field_or_l(ctx, o);
  auto t = composition_tower_general(ctx, l, ctx.base());
  if (o.json) {
    ojson j;
    j["tower"] = tower_json(t);
    j["M"] = ctx.label(intourability_field(ctx, l, ctx.base()).M);
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "composition tower: " << render_tower(t) << "\n";
  return exit_ok;
}

int cmd_elevate(Options const &o)
{
  auto ctx = load(o);
  auto t = towers_of(ctx, o, 1, "elevate").front();
  auto e = elevation_tower(t);
  if (o.json) {
    ojson j;
    j["tower"] = tower_json(t);
    j["elevation"] = tower_json(e.elevation);
    j["induced"] = tower_json(e.induced);
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "tower: " << names_line(t) << "\n"
            << "M-tower: " << names_line(e.elevation) << "\n"
            << "induced: " << names_line(e.induced) << "\n";
  return exit_ok;
}

int cmd_check_equiv(Options const &o)
{
  auto ctx = load(o);
  auto ts = towers_of(ctx, o, 2, "check-equiv");
  auto w = is_galois_tower(ts[0]) && is_galois_tower(ts[1])
               ? equivalence_witness(ts[0], ts[1])
               : equivalence_general(ts[0], ts[1]);
  if (o.json) {
    ojson j;
    j["equivalent"] = w.has_value();
    j["sigma"] = w ? ojson(w->sigma) : ojson(nullptr);
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "equivalent: " << yn(w.has_value()) << "\n";
  if (w)
    std::cout << "sigma: " << sigma_line(w->sigma) << "\n";
  return exit_ok;
}

int cmd_lattice(Options const &o)
{
  auto ctx = load(o);
  if (!o.dot.empty()) {
    auto dot = to_dot(ctx);
    if (o.dot == "-") {
      std::cout << dot;
    } else {
      std::ofstream out(o.dot);
      if (!out)
        throw PreconditionError("cannot write '" + o.dot + "'");
      out << dot;
    }
  }
  if (o.json) {
    ojson arr = ojson::array();
    for (auto f : ctx.fields())
      arr.push_back({{"id", f.id},
                     {"label", ctx.label(f)},
                     {"degree", degree(ctx, f, ctx.base())},
                     {"galois", is_galois(ctx, f, ctx.base())}});
    ojson j;
    j["instance"] = ctx.id();
    j["group_order"] = ctx.group().order();
    j["fields"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  if (o.dot == "-")
    return exit_ok;
  std::cout << "instance: " << ctx.id() << "\n"
            << "group order: " << ctx.group().order() << "\n"
            << "fields: " << ctx.field_count() << "\n";
  for (auto f : ctx.fields())
    std::cout << "  " << ctx.label(f) << " degree " << degree(ctx, f, ctx.base())
              << (is_galois(ctx, f, ctx.base()) ? " galois" : "") << "\n";
  return exit_ok;
}

int cmd_oracle(Options const &o)
{
  std::vector<GaloisContext> ctxs;
  if (o.instance.empty()) {
    Bounds b;
    if (o.bound)
      b.subgroups = *o.bound;
    for (auto const &sel : shipped_selectors())
      ctxs.push_back(load_selector(sel, b));
  } else {
    ctxs.push_back(load(o));
  }
  std::vector<OracleReport> all;
  ojson scans = ojson::array();
  std::size_t para_failures = 0;
  for (auto const &ctx : ctxs) {
    auto reps = agreement_suite(ctx);
    all.insert(all.end(), reps.begin(), reps.end());
    auto s = quadrilateral_question_scan(ctx);
    para_failures += s.parallelogram_failures;
    ojson j;
    j["instance"] = ctx.id();
    j["quadrilaterals"] = s.quadrilaterals;
    j["parallelograms"] = s.parallelograms;
    for (auto const &[q, t] : s.tally)
      j["questions"][q] = {{"tested", t.first},
                           {"counterexamples", t.second},
                           {"first", s.first_counterexample.count(q)
                                         ? ojson(s.first_counterexample.at(q))
                                         : ojson(nullptr)}};
    scans.push_back(std::move(j));
  }
  bool ok = para_failures == 0;
  for (auto const &r : all)
    ok = ok && r.agreement;
  if (o.json) {
    ojson j;
    j["agreement"] = agreement_json(all);
    j["quadrilateral_questions"] = std::move(scans);
    j["all_agree"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto const &r : all) {
      std::cout << (r.agreement ? "agree    " : "DISAGREE ") << r.instance << " " << r.operation
                << " (" << r.checks << " checks)";
      if (r.counterexample)
        std::cout << ": " << *r.counterexample;
      std::cout << "\n";
    }
    for (auto const &s : scans) {
      std::cout << "questions " << s["instance"].get<std::string>() << ": "
                << s["quadrilaterals"] << " galtourable quadrilaterals, "
                << s["parallelograms"] << " parallelograms;";
      if (s.contains("questions"))
        for (auto it = s["questions"].begin(); it != s["questions"].end(); ++it)
          std::cout << " (" << it.key() << ") " << it.value()["counterexamples"] << "/"
                    << it.value()["tested"];
      std::cout << "\n";
    }
    std::cout << "oracle: " << (ok ? "all agree" : "disagreement found") << "\n";
  }
  return ok ? exit_ok : exit_theorem;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Galois towers, galtourability and dissociation over finite permutation "
               "models"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](char const *name, char const *desc, bool field, int towers,
                 bool instance_required = true) {
    auto *s = app.add_subcommand(name, desc);
    auto *inst = s->add_option("instance", o.instance,
                               "preset selector (radical:a=2,n=6, ...) or instance file");
    if (instance_required)
      inst->required();
    if (field)
      s->add_option("--field", o.field, "field name (default: the distinguished field L)");
    if (towers > 0)
      // Raw values via each(): CLI11 would otherwise read "[...]" as its own list syntax.
      s->add_option("--tower", "tower as a JSON list of field names")
          ->expected(1)
          ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
          ->each([&o](std::string const &v) { o.towers.push_back(v); });
    s->add_flag("--json", o.json, "JSON output");
    s->add_option("--bound", o.bound, "subgroup enumeration bound (group order)");
    return s;
  };

  add("analyze", "per-field verdicts and tourability degrees", true, 0);
  add("m-field", "intourability field M(L/K)", true, 0);
  add("tower-check", "properties of one tower", false, 1);
  add("refine", "Galois Schreier refinement of two Galois towers", false, 2)
      ->add_flag("--strict", o.strict, "strict associated towers of the refinements");
  add("compose", "general composition tower of L/K", true, 0);
  add("elevate", "elevation tower and induced tower", false, 1);
  add("check-equiv", "equivalence of two towers", false, 2);
  add("lattice", "intermediate field lattice", false, 0)
      ->add_option("--dot", o.dot, "write the named-field lattice as DOT ('-' for stdout)");
  add("oracle", "brute-force agreement suite (all shipped instances by default)", false, 0,
      false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_user;
  }

  std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "analyze")
      return cmd_analyze(o);
    if (verb == "m-field")
      return cmd_mfield(o);
    if (verb == "tower-check")
      return cmd_tower_check(o);
    if (verb == "refine")
      return cmd_refine(o);
    if (verb == "compose")
      return cmd_compose(o);
    if (verb == "elevate")
      return cmd_elevate(o);
    if (verb == "check-equiv")
      return cmd_check_equiv(o);
    if (verb == "lattice")
      return cmd_lattice(o);
    return cmd_oracle(o);
  } catch (TheoremViolation const &e) {
    std::cerr << "internal error (theorem violation): " << e.what() << "\n";
    return exit_theorem;
  } catch (galtour::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_user;
  }
}
