#ifndef GALTOUR_ORACLE_HPP
#define GALTOUR_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dissociation.hpp"
#include "galois.hpp"
#include "towers.hpp"

namespace galtour {

struct OracleReport
{
  std::string instance;
  std::string operation;
  bool agreement = true;
  std::size_t checks = 0;
  std::optional<std::string> counterexample;

  void fail(std::string what)
  {
    if (agreement)
      counterexample = std::move(what);
    agreement = false;
  }
};

/**
 * Brute-force reference implementations.
 *
 * Everything here is computed from the raw subgroup list and element-wise
 * conjugation scans; none of the decision procedures under test are called.
 */
class Oracle
{
public:
  explicit Oracle(GaloisContext ctx)
  : _ctx(std::move(ctx)), _n(_ctx.field_count()), _normal(_n * _n, -1)
  {}

  GaloisContext const &ctx() const noexcept { return _ctx; }

  /// Gal(N/E) ⊆ Gal(N/F), i.e. F ≤ E as fields.
  bool below(FieldRef f, FieldRef e) const
  { return _ctx.subgroup(e).members().is_subset_of(_ctx.subgroup(f).members()); }

  /// Gal(N/E) ⊴ Gal(N/F) by scanning every conjugate. Requires F ≤ E.
  bool normal(FieldRef e, FieldRef f)
  {
    auto &slot = _normal[e.id * _n + f.id];
    if (slot < 0) {
      auto const &G = _ctx.group();
      auto const &a = _ctx.subgroup(e);
      auto const &b = _ctx.subgroup(f);
      bool ok = true;
      for (std::size_t i = 0; ok && i < b.elements().size(); ++i) {
        Elem y = b.elements()[i];
        Elem yi = G.inv(y);
        for (Elem x : a.elements()) {
          if (!a.contains(G.mul(G.mul(yi, x), y))) {
            ok = false;
            break;
          }
        }
      }
      slot = ok ? 1 : 0;
    }
    return slot == 1;
  }

  std::vector<FieldRef> between(FieldRef f, FieldRef e) const
  {
    std::vector<FieldRef> r;
    for (std::uint32_t i = 0; i < _n; ++i) {
      FieldRef m{i};
      if (below(f, m) && below(m, e))
        r.push_back(m);
    }
    return r;
  }

  /// A chain F = S₀ < S₁ < … < E with each step Galois over the previous.
  bool galtourable(FieldRef e, FieldRef f)
  {
    if (!below(f, e))
      throw PreconditionError("bf_galtourable: fields not nested");
    auto key = std::make_pair(e.id, f.id);
    if (auto it = _galtourable.find(key); it != _galtourable.end())
      return it->second;
    bool r = e == f;
    if (!r) {
      for (auto m : between(f, e)) {
        if (m == f || !normal(m, f))
          continue;
        if (galtourable(e, m)) {
          r = true;
          break;
        }
      }
    }
    _galtourable.emplace(key, r);
    return r;
  }

  bool galois(FieldRef e, FieldRef f) { return normal(e, f); }

  bool simple(FieldRef e, FieldRef f) const
  { return e != f && between(f, e).size() == 2; }

  /// E ≠ F and no M with F < M < E and M/F Galois.
  bool galsimple(FieldRef e, FieldRef f)
  {
    if (e == f)
      return false;
    for (auto m : between(f, e))
      if (m != e && m != f && normal(m, f))
        return false;
    return true;
  }

  /// Every M in [K, L] satisfying both defining conditions of M(L/K).
  std::vector<FieldRef> intourability_candidates(FieldRef l, FieldRef k)
  {
    std::vector<FieldRef> r;
    for (auto m : between(k, l)) {
      if (!galtourable(m, k))
        continue;
      if (m == l || (galsimple(l, m) && !galois(l, m)))
        r.push_back(m);
    }
    return r;
  }

  /// All strict Galois towers from K to L with every marche galsimple.
  std::vector<Tower> composition_towers(FieldRef l, FieldRef k, std::size_t cap = 20000)
  {
    auto iv = between(k, l);
    if (iv.size() > 200)
      throw SizeError("bf_composition_towers: interval has more than 200 fields");
    std::vector<Tower> out;
    std::vector<FieldRef> path{k};
    std::function<void(FieldRef)> dfs = [&](FieldRef cur) {
      if (cur == l) {
        out.emplace_back(_ctx, path);
        if (out.size() > cap)
          throw SizeError("bf_composition_towers: too many towers");
        return;
      }
      for (auto m : iv) {
        if (m == cur || !below(cur, m) || !below(m, l))
          continue;
        if (!normal(m, cur) || !galsimple(m, cur))
          continue;
        path.push_back(m);
        dfs(m);
        path.pop_back();
      }
    };
    dfs(k);
    return out;
  }

private:
  GaloisContext _ctx;
  std::size_t _n;
  std::vector<std::int8_t> _normal;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> _galtourable;
};

inline bool bf_galtourable(GaloisContext const &ctx, FieldRef e, FieldRef f)
{ return Oracle(ctx).galtourable(e, f); }

struct IntourabilityOracle
{
  std::optional<FieldRef> field;
  std::size_t count = 0;
};

inline IntourabilityOracle bf_intourability(GaloisContext const &ctx, FieldRef l, FieldRef k)
{
  Oracle o(ctx);
  auto c = o.intourability_candidates(l, k);
  IntourabilityOracle r;
  r.count = c.size();
  if (c.size() == 1)
    r.field = c.front();
  return r;
}

inline std::vector<Tower> bf_composition_towers(GaloisContext const &ctx, FieldRef l,
                                                FieldRef k)
{ return Oracle(ctx).composition_towers(l, k); }

namespace detail {

// All non-decreasing towers from k to l of height ≤ max_height inside the
// interval, in lexicographic order of field ids, at most `cap` of them.
inline std::vector<Tower> enumerate_towers(Oracle &o, FieldRef k, FieldRef l,
                                           std::size_t max_height, std::size_t cap)
{
  auto iv = o.between(k, l);
  std::vector<Tower> out;
  std::vector<FieldRef> path{k};
  std::function<void()> dfs = [&] {
    if (out.size() >= cap)
      return;
    if (path.back() == l)
      out.emplace_back(o.ctx(), path);
    if (path.size() > max_height)
      return;
    for (auto m : iv) {
      if (!o.below(path.back(), m))
        continue;
      path.push_back(m);
      dfs();
      path.pop_back();
      if (out.size() >= cap)
        return;
    }
  };
  dfs();
  return out;
}

// Literal RAF2: some 0 ≤ j₀ < … < j_m ≤ n with E_{j_i} = F_i, by exhaustive search.
inline bool raf2_literal(Tower const &e, Tower const &f)
{
  std::size_t m = f.height(), n = e.height();
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t from) {
    if (i > m)
      return true;
    for (std::size_t j = from; j <= n; ++j)
      if (e[j] == f[i] && go(i + 1, j + 1))
        return true;
    return false;
  };
  return go(0, 0);
}

inline std::string tower_str(Tower const &t)
{
  std::string s = "[";
  for (std::size_t i = 0; i <= t.height(); ++i)
    s += (i ? "," : "") + t.ctx().label(t[i]);
  return s + "]";
}

} // namespace detail

/**
 * Compares the refinement predicates against literal quantifier evaluation
 * over pairs of towers of the distinguished extension (at most `cap` towers).
 */
inline OracleReport bf_refinement_predicates(GaloisContext const &ctx, std::size_t max_height,
                                             std::size_t cap = 60)
{
  Oracle o(ctx);
  OracleReport rep{ctx.id(), "refinement_predicates", true, 0, std::nullopt};
  auto towers = detail::enumerate_towers(o, ctx.base(), ctx.distinguished(), max_height, cap);
  for (auto const &e : towers) {
    for (auto const &f : towers) {
      ++rep.checks;
      std::size_t m = f.height(), n = e.height();
      bool raf = m <= n && detail::raf2_literal(e, f);
      bool main = is_refinement(e, f);
      std::string pair = detail::tower_str(e) + " over " + detail::tower_str(f);
      if (raf != main) {
        rep.fail("refinement: " + pair);
        continue;
      }
      if (!raf)
        continue;
      auto in_f = [&](FieldRef x) {
        for (std::size_t i = 0; i <= m; ++i)
          if (f[i] == x)
            return true;
        return false;
      };
      bool raf3 = false, rafg = true;
      for (std::size_t j = 1; j + 1 <= n; ++j) {
        if (!in_f(e[j])) {
          raf3 = true;
          if (!o.normal(e[j], e[j - 1]))
            rafg = false;
        }
      }
      if (raf3 != is_proper_refinement(e, f))
        rep.fail("proper: " + pair);
      if (!raf3 != is_trivial_refinement(e, f))
        rep.fail("trivial: " + pair);
      if (rafg != is_galois_refinement(e, f))
        rep.fail("galois refinement: " + pair);
    }
  }
  return rep;
}

struct QuadrilateralScan
{
  std::size_t quadrilaterals = 0;
  std::size_t parallelograms = 0;
  /// question id → (instances tested, counterexamples found)
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  std::map<std::string, std::string> first_counterexample;
  /// Counterexamples inside parallelograms; expected to be zero.
  std::size_t parallelogram_failures = 0;
};

/**
 * Empirical scan of the open questions on galtourable quadrilaterals
 * (J, K, N, L):
 *   (1)     J ≤ F ≤ L  ⇒  KF ∩ L = F;
 *   (2-1)   K ≤ E ≤ N  ⇒  E/(E ∩ L) galtourable;
 *   (2-2-1) and E/K galtourable ⇒ K(E ∩ L) = E;
 *   (2-2-2) and E/K galtourable ⇒ (E ∩ L)/J galtourable.
 */
inline QuadrilateralScan quadrilateral_question_scan(GaloisContext const &ctx)
{
  Oracle o(ctx);
  QuadrilateralScan s;
  auto fields = ctx.fields();
  auto record = [&](std::string const &q, bool ok, bool para, std::string const &where) {
    auto &t = s.tally[q];
    ++t.first;
    if (!ok) {
      ++t.second;
      if (!s.first_counterexample.count(q))
        s.first_counterexample[q] = where;
      if (para)
        ++s.parallelogram_failures;
    }
  };
  for (auto k : fields) {
    for (auto l : fields) {
      if (l < k)
        continue;
      FieldRef j = ctx.intersect(k, l), n = ctx.compositum(k, l);
      if (!o.galtourable(k, j) || !o.galtourable(n, k) || !o.galtourable(n, l) ||
          !o.galtourable(l, j))
        continue;
      ++s.quadrilaterals;
      bool para = o.normal(k, j) && o.normal(l, j);
      if (para)
        ++s.parallelograms;
      std::string where = "(" + ctx.label(j) + "," + ctx.label(k) + "," + ctx.label(n) +
                          "," + ctx.label(l) + ")";
      for (auto f : o.between(j, l))
        record("1", ctx.intersect(ctx.compositum(k, f), l) == f, para,
               where + " F=" + ctx.label(f));
      for (auto e : o.between(k, n)) {
        FieldRef el = ctx.intersect(e, l);
        record("2-1", o.galtourable(e, el), para, where + " E=" + ctx.label(e));
        if (!o.galtourable(e, k))
          continue;
        record("2-2-1", ctx.compositum(k, el) == e, para, where + " E=" + ctx.label(e));
        record("2-2-2", o.galtourable(el, j), para, where + " E=" + ctx.label(e));
      }
    }
  }
  return s;
}

/**
 * Agreement of the main decision procedures with the oracle on one context:
 * galtourability, Galois-ness, simplicity and galsimplicity over every nested
 * pair; the intourability field over every pair; refinement predicates.
 */
inline std::vector<OracleReport> agreement_suite(GaloisContext const &ctx,
                                                 std::size_t max_height = 4)
{
  Oracle o(ctx);
  auto id = ctx.id();
  auto mk = [&](char const *op) { return OracleReport{id, op, true, 0, std::nullopt}; };
  auto gt = mk("is_galtourable"), gs = mk("is_galsimple"), sm = mk("is_simple_ext"),
       gl = mk("is_galois"), it = mk("intourability");
  auto fields = ctx.fields();
  for (auto f : fields) {
    for (auto e : fields) {
      if (!o.below(f, e))
        continue;
      std::string pair = ctx.label(e) + "/" + ctx.label(f);
      ++gt.checks;
      if (o.galtourable(e, f) != is_galtourable(ctx, e, f))
        gt.fail(pair);
      ++gs.checks;
      if (o.galsimple(e, f) != is_galsimple(ctx, e, f))
        gs.fail(pair);
      ++sm.checks;
      if (o.simple(e, f) != is_simple_ext(ctx, e, f))
        sm.fail(pair);
      ++gl.checks;
      if (o.galois(e, f) != is_galois(ctx, e, f))
        gl.fail(pair);
      ++it.checks;
      auto c = o.intourability_candidates(e, f);
      if (c.size() != 1 || c.front() != intourability_field(ctx, e, f).M)
        it.fail(pair + " (" + std::to_string(c.size()) + " candidates)");
    }
  }
  return {gt, gs, sm, gl, it, bf_refinement_predicates(ctx, max_height)};
}

inline nlohmann::ordered_json agreement_json(std::vector<OracleReport> const &reports)
{
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto const &r : reports) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["operation"] = r.operation;
    j["agreement"] = r.agreement;
    j["checks"] = r.checks;
    j["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample)
                                           : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

} // namespace galtour

#endif // GALTOUR_ORACLE_HPP
