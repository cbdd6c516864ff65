// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include <galtour.hpp>

using namespace galtour;

namespace {

struct Outcome
{
  bool ok = true;
  std::string detail;

  void expect(bool cond, std::string const &what)
  {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

GaloisContext const &ctx_of(std::string const &sel)
{
  static std::map<std::string, GaloisContext> cache;
  auto it = cache.find(sel);
  if (it == cache.end())
    it = cache.emplace(sel, load_selector(sel)).first;
  return it->second;
}

std::vector<GaloisContext const *> contexts_up_to(std::size_t max_order)
{
  std::vector<GaloisContext const *> r;
  for (auto const &sel : shipped_selectors()) {
    auto const &c = ctx_of(sel);
    if (c.group().order() <= max_order)
      r.push_back(&c);
  }
  return r;
}

std::string where(GaloisContext const &c, FieldRef l, FieldRef k)
{ return c.id() + " " + c.label(l) + "/" + c.label(k); }

Outcome sixth_root()
{
  Outcome o;
  auto const &c = ctx_of("radical:a=2,n=6");
  auto l = c.resolve("Q(6rt2)"), k = c.resolve("Q");
  o.expect(!is_galtourable(c, l, k), "Q(6rt2)/Q reported galtourable");
  auto rep = intourability_field(c, l, k);
  o.expect(rep.M == c.resolve("Q(sqrt2)"), "M is " + c.label(rep.M));
  o.expect(rep.degrees == TourabilityDegree{2, 3}, "tourability degree is not (2,3)");
  auto bf = bf_intourability(c, l, k);
  o.expect(bf.count == 1, "oracle count " + std::to_string(bf.count));
  o.expect(bf.field == rep.M, "oracle field differs from M");
  return o;
}

Outcome fourth_root()
{
  Outcome o;
  auto const &c = ctx_of("radical:a=2,n=4");
  auto l = c.resolve("Q(4rt2)"), k = c.resolve("Q");
  o.expect(is_galtourable(c, l, k), "Q(4rt2)/Q not galtourable");
  auto w = make_tower(c, std::vector<std::string>{"Q", "Q(sqrt2)", "Q(4rt2)"});
  o.expect(galois_tower_witness(c, l, k) == w, "witness is " + render_tower(galois_tower_witness(c, l, k)));
  o.expect(is_galois_tower(w), "witness tower not Galois");
  auto comp = composition_tower_galois(c, l, k);
  o.expect(comp == w, "composition tower is " + render_tower(comp));
  o.expect(comp.height() == 2, "composition tower height");
  for (auto const &g : marche_groups(comp))
    o.expect(g.order() == 2, "marche of order " + std::to_string(g.order()));
  o.expect(is_composition_tower(comp), "is_composition_tower false");
  return o;
}

Outcome ninth_root()
{
  Outcome o;
  auto const &c = ctx_of("radical:a=2,n=9");
  auto l = c.resolve("L"), k = c.resolve("K");
  o.expect(c.group().order() == 54, "closure order " + std::to_string(c.group().order()));
  o.expect(is_galsimple(c, l, k), "not galsimple");
  o.expect(!is_simple_ext(c, l, k), "reported simple");
  o.expect(!is_galois(c, l, k), "reported Galois");
  auto rep = intourability_field(c, l, k);
  o.expect(rep.M == k, "M is " + c.label(rep.M));
  o.expect(rep.degrees == TourabilityDegree{1, 9}, "degrees are not (1,9)");
  return o;
}

Outcome selmer_serre()
{
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    auto const &c = ctx_of("selmer-serre:n=" + std::to_string(n));
    auto l = c.resolve("L"), k = c.resolve("K");
    auto tag = "n=" + std::to_string(n) + ": ";
    o.expect(is_simple_ext(c, l, k), tag + "not simple");
    o.expect(!is_galois(c, l, k), tag + "reported Galois");
    auto rep = intourability_field(c, l, k);
    o.expect(rep.degrees == TourabilityDegree{1, static_cast<std::size_t>(n)},
             tag + "degrees are not (1,n)");
  }
  auto const &c5 = ctx_of("selmer-serre:n=5");
  o.expect(c5.interval(c5.base(), c5.resolve("L")).size() == 2, "n=5 interval size");
  auto cl = subnormal_closure(c5.subgroup(c5.resolve("L")), c5.subgroup(c5.base())).closure;
  o.expect(cl.order() == 120, "n=5 subnormal closure order " + std::to_string(cl.order()));
  return o;
}

Outcome cyclo_radical()
{
  Outcome o;
  auto const &c = ctx_of("cyclo-radical:n=2,d=3,l=3");
  auto l = c.resolve("L"), k = c.resolve("K");
  auto rep = intourability_field(c, l, k);
  o.expect(rep.degrees == TourabilityDegree{2, 3}, "degrees are not (2,3)");
  auto bf = bf_intourability(c, l, k);
  o.expect(bf.count == 1 && bf.field == rep.M, "oracle disagrees with main path");
  o.expect(degree(c, *bf.field, k) == 2 && degree(c, l, *bf.field) == 3,
           "oracle field degrees are not (2,3)");
  return o;
}

// Random Galois tower from k to l, assuming l/k galtourable.
Tower random_galois_tower(GaloisContext const &ctx, FieldRef k, FieldRef l, std::mt19937 &rng)
{
  std::vector<FieldRef> f{k};
  while (f.back() != l) {
    FieldRef cur = f.back();
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
      f.push_back(cur);
      continue;
    }
    std::vector<FieldRef> next;
    for (auto m : ctx.interval(cur, l))
      if (m != cur && is_galois(ctx, m, cur) && is_galtourable(ctx, l, m))
        next.push_back(m);
    f.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
  }
  return Tower(ctx, std::move(f));
}

Outcome galschreier()
{
  Outcome o;
  std::vector<std::size_t> expected{1, 3, 5, 2, 4, 6};
  o.expect(schreier_sigma(2, 3) == expected, "sigma for (2,3) differs");
  std::mt19937 rng(20240611);
  auto ctxs = contexts_up_to(60);
  std::size_t pairs = 0;
  for (int round = 0; pairs < 300 && round < 4000; ++round) {
    auto const &ctx = *ctxs[rng() % ctxs.size()];
    auto fs = ctx.fields();
    FieldRef k = fs[rng() % fs.size()], l = fs[rng() % fs.size()];
    if (!ctx.is_subfield(k, l) || !is_galtourable(ctx, l, k))
      continue;
    auto t1 = random_galois_tower(ctx, k, l, rng);
    auto t2 = random_galois_tower(ctx, k, l, rng);
    if (t1.height() == 0 || t2.height() == 0 || t1.height() * t2.height() > 40)
      continue;
    ++pairs;
    auto r = schreier_refine(t1, t2);
    bool ok = is_galois_tower(r.first) && is_galois_tower(r.second) &&
              is_refinement(r.first, t1) && is_refinement(r.second, t2) &&
              verify_equivalence(r.first, r.second, r.witness);
    o.expect(ok, "refinement failed in " + ctx.id() + ": " + render_tower(t1) + " vs " +
                     render_tower(t2));
  }
  o.expect(pairs >= 200, "only " + std::to_string(pairs) + " pairs");
  o.detail = o.ok ? std::to_string(pairs) + " pairs" : o.detail;
  return o;
}

Outcome jordan_holder()
{
  Outcome o;
  std::size_t pairs = 0;
  for (auto const *cp : contexts_up_to(60)) {
    auto const &ctx = *cp;
    Oracle orc(ctx);
    for (auto k : ctx.fields())
      for (auto l : ctx.interval(k, ctx.top())) {
        if (!is_galtourable(ctx, l, k))
          continue;
        ++pairs;
        auto all = orc.composition_towers(l, k);
        auto mine = composition_tower_galois(ctx, l, k);
        o.expect(std::find(all.begin(), all.end(), mine) != all.end(),
                 "main tower not in oracle set: " + where(ctx, l, k));
        for (auto const &t : all)
          o.expect(equivalence_witness(t, all.front()).has_value(),
                   "inequivalent composition towers: " + where(ctx, l, k));
      }
  }
  o.detail = o.ok ? std::to_string(pairs) + " pairs" : o.detail;
  return o;
}

Outcome theorem_m()
{
  Outcome o;
  std::size_t checked = 0;
  for (auto const *cp : contexts_up_to(120)) {
    auto const &ctx = *cp;
    Oracle orc(ctx);
    for (auto k : ctx.fields())
      for (auto l : ctx.interval(k, ctx.top())) {
        ++checked;
        auto c = orc.intourability_candidates(l, k);
        o.expect(c.size() == 1, std::to_string(c.size()) + " candidates: " + where(ctx, l, k));
        if (c.size() == 1)
          o.expect(c.front() == intourability_field(ctx, l, k).M,
                   "oracle differs from main path: " + where(ctx, l, k));
      }
  }
  o.detail = o.ok ? std::to_string(checked) + " extensions" : o.detail;
  return o;
}

Outcome parallelograms()
{
  Outcome o;
  std::size_t paras = 0, pairs = 0;
  for (auto const *cp : contexts_up_to(60)) {
    auto const &ctx = *cp;
    for (auto k : ctx.fields())
      for (auto l : ctx.fields()) {
        auto q = quadrilateral_of(ctx, k, l);
        if (!is_parallelogram(ctx, q))
          continue;
        ++paras;
        o.expect(diagonal_split_check(ctx, q), "diagonal split: " + ctx.id());
        auto check = [&](FieldRef e, FieldRef f) {
          ++pairs;
          o.expect(ecartele_identities(ctx, k, l, e, f), "ecartele: " + ctx.id());
        };
        for (auto e : ctx.interval(q.j, k))
          for (auto f : ctx.interval(q.j, l))
            check(e, f);
        for (auto e : ctx.interval(k, q.n))
          for (auto f : ctx.interval(l, q.n))
            check(e, f);
      }
  }
  o.detail = o.ok ? std::to_string(paras) + " parallelograms, " + std::to_string(pairs) +
                        " pairs"
                  : o.detail;
  return o;
}

Outcome elevation()
{
  Outcome o;
  auto const &c = ctx_of("radical:a=2,n=6");
  auto l = c.resolve("L"), k = c.resolve("K");
  auto expected = make_tower(c, std::vector<std::string>{"Q", "Q(sqrt2)", "Q(6rt2)"});
  auto got = composition_tower_general(c, l, k);
  o.expect(got == expected, "general composition tower is " + render_tower(got));
  std::size_t compared = 0;
  for (auto const *cp : contexts_up_to(60)) {
    auto const &ctx = *cp;
    Oracle orc(ctx);
    for (auto kk : ctx.fields())
      for (auto ll : ctx.interval(kk, ctx.top())) {
        auto m = intourability_field(ctx, ll, kk).M;
        auto prefixes = orc.composition_towers(m, kk);
        auto first = induced(prefixes.front(), ll);
        for (auto const &p : prefixes) {
          auto ip = induced(p, ll);
          ++compared;
          o.expect(is_composition_tower(ip), "not a composition tower: " + render_tower(ip));
          o.expect(equivalence_general(ip, first).has_value(),
                   "check-equiv false: " + where(ctx, ll, kk));
        }
      }
  }
  o.detail = o.ok ? std::to_string(compared) + " towers compared" : o.detail;
  return o;
}

Outcome oracle_matrix()
{
  Outcome o;
  std::size_t reports = 0;
  for (auto const &sel : shipped_selectors())
    for (auto const &r : agreement_suite(ctx_of(sel))) {
      ++reports;
      o.expect(r.agreement, r.instance + " " + r.operation + ": " +
                                r.counterexample.value_or(""));
      o.expect(r.checks > 0, r.instance + " " + r.operation + ": no checks");
    }
  o.detail = o.ok ? std::to_string(reports) + " reports agree" : o.detail;
  return o;
}

} // namespace

int main()
{
  std::vector<std::pair<char const *, std::function<Outcome()>>> criteria{
      {"Q(6rt2)/Q intourability", sixth_root},
      {"Q(4rt2)/Q galtourable tower", fourth_root},
      {"Q(9rt2)/Q galsimple", ninth_root},
      {"Selmer-Serre n=3..5", selmer_serre},
      {"cyclo-radical (2,3,3)", cyclo_radical},
      {"Galschreier suite", galschreier},
      {"Jordan-Holder suite", jordan_holder},
      {"Theorem M sweep", theorem_m},
      {"ecartele and diagonal split", parallelograms},
      {"elevation and general dissociation", elevation},
      {"oracle agreement matrix", oracle_matrix},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (std::exception const &e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    if (ms > 10000) {
      r.ok = false;
      r.detail = "took longer than 10 s";
    }
    failed += !r.ok;
    std::printf("%s %2zu %s (%.0f ms)%s%s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                ms, r.detail.empty() ? "" : ": ", r.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
