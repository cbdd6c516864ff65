#ifndef GALTOUR_DISSOCIATION_HPP
#define GALTOUR_DISSOCIATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "galtourability.hpp"
#include "towers.hpp"

namespace galtour {

/// Strict Galois tower from F to E read off the subnormal-closure chain.
inline Tower galois_tower_witness(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  detail::require_subfield(ctx, f, e, "galois_tower_witness");
  auto sc = subnormal_closure(ctx.subgroup(e), ctx.subgroup(f));
  if (!(sc.closure == ctx.subgroup(e)))
    throw PreconditionError("galois_tower_witness: " + ctx.label(e) + "/" +
                            ctx.label(f) + " is not galtourable");
  std::vector<FieldRef> fields;
  for (auto const &s : sc.chain)
    fields.push_back(ctx.field_of(s));
  Tower t = make_tower(ctx, std::move(fields), f, e);
  if (!is_strict(t) || !is_galois_tower(t))
    throw TheoremViolation("galois_tower_witness: chain is not a strict Galois tower");
  return t;
}

// ---------------------------------------------------------------------------
// Intourability field

struct TourabilityDegree
{
  std::size_t gal = 1; ///< [M : K]
  std::size_t int_ = 1; ///< [L : M]

  bool operator==(TourabilityDegree const &) const = default;
};

enum class SubKind
{
  trivial,
  galsimple_non_galois
};

inline char const *to_string(SubKind k)
{ return k == SubKind::trivial ? "trivial" : "galsimple_non_galois"; }

struct DissociationReport
{
  FieldRef M;
  TourabilityDegree degrees;
  bool quotient_is_galtourable = true;
  SubKind sub_kind = SubKind::trivial;
  /// A Galois tower of M/K.
  Tower witness_tower;
};

/// Both defining conditions of M(L/K), checked directly on a candidate.
inline bool satisfies_intourability(GaloisContext const &ctx, FieldRef l, FieldRef k,
                                    FieldRef m)
{
  if (!ctx.is_subfield(k, m) || !ctx.is_subfield(m, l))
    return false;
  if (!is_galtourable(ctx, m, k))
    return false;
  return m == l || (is_galsimple(ctx, l, m) && !is_galois(ctx, l, m));
}

/**
 * M(L/K): the unique K ≤ M ≤ L with M/K galtourable and L/M trivial or
 * galsimple non-Galois. Computed as the subnormal closure of Gal(N/L) in
 * Gal(N/K); both conditions are re-verified and a failure throws
 * TheoremViolation.
 */
inline DissociationReport intourability_field(GaloisContext const &ctx, FieldRef l,
                                              FieldRef k)
{
  detail::require_subfield(ctx, k, l, "intourability_field");
  auto sc = subnormal_closure(ctx.subgroup(l), ctx.subgroup(k));
  FieldRef m = ctx.field_of(sc.closure);
  if (!satisfies_intourability(ctx, l, k, m))
    throw TheoremViolation("intourability_field: " + ctx.label(m) +
                           " fails the defining conditions for " + ctx.label(l) + "/" +
                           ctx.label(k));
  DissociationReport r;
  r.M = m;
  r.degrees = {degree(ctx, m, k), degree(ctx, l, m)};
  r.sub_kind = m == l ? SubKind::trivial : SubKind::galsimple_non_galois;
  r.witness_tower = galois_tower_witness(ctx, m, k);
  return r;
}

// ---------------------------------------------------------------------------
// Group series bridge

/// Gal(N/F_i) for each field of a Galois tower of a Galois extension.
inline std::vector<Subgroup> series_from_tower(Tower const &t)
{
  auto const &ctx = t.ctx();
  if (!is_galois(ctx, t.top(), t.base()))
    throw PreconditionError("series_from_tower: " + ctx.label(t.top()) + "/" +
                            ctx.label(t.base()) + " is not Galois");
  if (!is_galois_tower(t))
    throw PreconditionError("series_from_tower: not a Galois tower");
  std::vector<Subgroup> r;
  for (auto f : t.fields())
    r.push_back(ctx.subgroup(f));
  return r;
}

/// Fixed fields of a descending normal series S₀ ⊵ S₁ ⊵ … with S_k ⊴ S₀.
inline Tower tower_from_series(GaloisContext const &ctx, std::vector<Subgroup> const &chain)
{
  if (chain.empty())
    throw PreconditionError("tower_from_series: empty series");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!chain[i].is_subgroup_of(chain[i - 1]) || !is_normal(chain[i], chain[i - 1]))
      throw PreconditionError("tower_from_series: step " + std::to_string(i) +
                              " is not a normal subgroup of its predecessor");
  }
  if (!is_normal(chain.back(), chain.front()))
    throw PreconditionError("tower_from_series: last term is not normal in the first");
  std::vector<FieldRef> f;
  for (auto const &s : chain)
    f.push_back(ctx.field_of(s));
  return Tower(ctx, std::move(f));
}

// ---------------------------------------------------------------------------
// Galschreier refinement

struct SchreierResult
{
  Tower first;
  Tower second;
  EquivalenceWitness witness;
};

/// σ(l) = r·m + q + 1 where l − 1 = q·n + r, 0 ≤ r < n; images of 1..mn.
inline std::vector<std::size_t> schreier_sigma(std::size_t m, std::size_t n)
{
  std::vector<std::size_t> s(m * n);
  for (std::size_t l = 1; l <= m * n; ++l) {
    std::size_t q = (l - 1) / n, r = (l - 1) % n;
    s[l - 1] = r * m + q + 1;
  }
  return s;
}

namespace detail {

inline void require_galois_pair(Tower const &t1, Tower const &t2, char const *op)
{
  require_same_extension(t1, t2, op);
  for (auto const *t : {&t1, &t2}) {
    for (std::size_t i = 1; i <= t->height(); ++i)
      if (!is_galois(t->ctx(), (*t)[i], (*t)[i - 1]))
        throw PreconditionError(std::string(op) + ": marche " + std::to_string(i) +
                                " (" + t->ctx().label((*t)[i]) + "/" +
                                t->ctx().label((*t)[i - 1]) + ") is not Galois");
  }
}

} // namespace detail

/**
 * Counts quadrilaterals of the butterfly configuration built from two Galois
 * towers that fail to be parallelograms. Zero is expected.
 */
inline std::size_t butterfly_violations(Tower const &t1, Tower const &t2)
{
  detail::require_galois_pair(t1, t2, "butterfly_violations");
  auto const &ctx = t1.ctx();
  std::size_t m = t1.height(), n = t2.height(), bad = 0;
  auto cm = [&](FieldRef a, FieldRef b) { return ctx.compositum(a, b); };
  auto cap = [&](FieldRef a, FieldRef b) { return ctx.intersect(a, b); };
  auto check = [&](FieldRef j, FieldRef k, FieldRef nn, FieldRef l) {
    if (ctx.intersect(k, l) != j || ctx.compositum(k, l) != nn ||
        !is_parallelogram(ctx, Quadrilateral{j, k, nn, l}))
      ++bad;
  };
  for (std::size_t i = 0; i + 1 <= m; ++i)
    for (std::size_t j = 1; j + 1 <= n; ++j)
      for (std::size_t k = 0; k < j; ++k)
        check(cap(cm(t1[i + 1], t2[k]), cm(t1[i], t2[j])),
              cap(cm(t1[i + 1], t2[k + 1]), cm(t1[i], t2[j])),
              cap(cm(t1[i + 1], t2[k + 1]), cm(t1[i], t2[j + 1])),
              cap(cm(t1[i + 1], t2[k]), cm(t1[i], t2[j + 1])));
  for (std::size_t i = 1; i + 1 <= m; ++i)
    for (std::size_t k = 0; k < i; ++k)
      for (std::size_t j = 0; j + 1 <= n; ++j)
        check(cap(cm(t1[k], t2[j + 1]), cm(t1[i], t2[j])),
              cap(cm(t1[k + 1], t2[j + 1]), cm(t1[i], t2[j])),
              cap(cm(t1[k + 1], t2[j + 1]), cm(t1[i + 1], t2[j])),
              cap(cm(t1[k], t2[j + 1]), cm(t1[i + 1], t2[j])));
  return bad;
}

/**
 * Refinements T'¹, T'² of two Galois towers of heights m, n, both of height
 * mn, with l = q n + r (resp. l = q' m + r'):
 *   T'¹_l = T¹_{q+1} ∩ T¹_q T²_r,   T'²_l = T²_{q'+1} ∩ T¹_{r'} T²_{q'},
 * and T'¹_{mn} = T'²_{mn} = L. The witness uses the explicit σ; each marche
 * isomorphism is found by search and verified.
 */
inline SchreierResult schreier_refine(Tower const &t1, Tower const &t2)
{
  detail::require_galois_pair(t1, t2, "schreier_refine");
  std::size_t m = t1.height(), n = t2.height();
  if (m == 0 || n == 0)
    throw PreconditionError("schreier_refine: towers must have height at least 1");
  auto const &ctx = t1.ctx();

  std::vector<FieldRef> a(m * n + 1), b(m * n + 1);
  for (std::size_t l = 0; l < m * n; ++l) {
    std::size_t q = l / n, r = l % n;
    a[l] = ctx.intersect(t1[q + 1], ctx.compositum(t1[q], t2[r]));
    std::size_t q2 = l / m, r2 = l % m;
    b[l] = ctx.intersect(t2[q2 + 1], ctx.compositum(t1[r2], t2[q2]));
  }
  a[m * n] = t1.top();
  b[m * n] = t2.top();

  SchreierResult out{Tower(ctx, std::move(a)), Tower(ctx, std::move(b)), {}};
  if (!is_galois_tower(out.first) || !is_galois_tower(out.second))
    throw TheoremViolation("schreier_refine: a refined tower is not Galois");
  for (std::size_t i = 0; i <= m; ++i)
    if (out.first[i * n] != t1[i])
      throw TheoremViolation("schreier_refine: T'1 does not pass through T1");
  for (std::size_t j = 0; j <= n; ++j)
    if (out.second[j * m] != t2[j])
      throw TheoremViolation("schreier_refine: T'2 does not pass through T2");
  if (!is_galois_refinement(out.first, t1) || !is_galois_refinement(out.second, t2))
    throw TheoremViolation("schreier_refine: output is not a Galois refinement");

  auto g1 = marche_groups(out.first);
  auto g2 = marche_groups(out.second);
  out.witness.sigma = schreier_sigma(m, n);
  std::size_t bound = ctx.bounds().isomorphism;
  for (std::size_t l = 0; l < m * n; ++l) {
    auto phi = are_isomorphic(g1[l], g2[out.witness.sigma[l] - 1], bound);
    if (!phi)
      throw TheoremViolation("schreier_refine: marche " + std::to_string(l + 1) +
                             " has no isomorphic partner under sigma");
    out.witness.isos.push_back(std::move(*phi));
  }
  return out;
}

/// Strict associated towers of the Galschreier refinements, with a fresh
/// equivalence witness.
inline SchreierResult schreier_refine_strict(Tower const &t1, Tower const &t2)
{
  if (!is_strict(t1) || !is_strict(t2))
    throw PreconditionError("schreier_refine_strict: input towers must be strict");
  auto r = schreier_refine(t1, t2);
  SchreierResult out{strict_associated(r.first), strict_associated(r.second), {}};
  auto w = equivalence_witness(out.first, out.second);
  if (!w)
    throw TheoremViolation("schreier_refine_strict: strict refinements not equivalent");
  out.witness = std::move(*w);
  return out;
}

// ---------------------------------------------------------------------------
// Composition towers, Galois case

/// Strict with every marche galsimple. Requires a Galois tower.
inline bool is_composition_tower_galois(Tower const &t)
{
  if (!is_galois_tower(t))
    throw PreconditionError("is_composition_tower_galois: not a Galois tower");
  if (!is_strict(t))
    return false;
  for (std::size_t i = 1; i <= t.height(); ++i)
    if (!is_galsimple(t.ctx(), t[i], t[i - 1]))
      return false;
  return true;
}

namespace detail {

/**
 * Composition series of the Galois marche F ⊴ E, as fields F < … < E (F
 * excluded). Each step takes, among the fields Q with P < Q ≤ E and Q/P
 * Galois and galsimple, the one whose subgroup is least in canonical order.
 */
inline std::vector<FieldRef> refine_marche(GaloisContext const &ctx, FieldRef f, FieldRef e)
{
  std::vector<FieldRef> out;
  FieldRef p = f;
  while (p != e) {
    std::optional<FieldRef> pick;
    for (auto q : ctx.interval(p, e)) {
      if (q == p || !is_normal(ctx.subgroup(q), ctx.subgroup(p)))
        continue;
      if (!is_galsimple(ctx, q, p))
        continue;
      if (!pick || q < *pick)
        pick = q;
    }
    if (!pick)
      throw TheoremViolation("refine_marche: no galsimple Galois step found");
    out.push_back(*pick);
    p = *pick;
  }
  return out;
}

} // namespace detail

/// Refines each marche of a strict Galois tower by a composition series.
inline Tower galjordanholder_refine(Tower const &t)
{
  if (!is_strict(t))
    throw PreconditionError("galjordanholder_refine: tower is not strict");
  if (!is_galois_tower(t))
    throw PreconditionError("galjordanholder_refine: not a Galois tower");
  auto const &ctx = t.ctx();
  std::vector<FieldRef> f{t[0]};
  for (std::size_t i = 1; i <= t.height(); ++i) {
    auto step = detail::refine_marche(ctx, t[i - 1], t[i]);
    f.insert(f.end(), step.begin(), step.end());
  }
  Tower out(ctx, std::move(f));
  if (!is_composition_tower_galois(out) || !is_refinement(out, t))
    throw TheoremViolation("galjordanholder_refine: result is not a composition refinement");
  return out;
}

/// A Galois composition tower of L/K. Requires L/K galtourable.
inline Tower composition_tower_galois(GaloisContext const &ctx, FieldRef l, FieldRef k)
{
  if (!is_galtourable(ctx, l, k))
    throw PreconditionError("composition_tower_galois: " + ctx.label(l) + "/" +
                            ctx.label(k) + " is not galtourable");
  return galjordanholder_refine(galois_tower_witness(ctx, l, k));
}

// ---------------------------------------------------------------------------
// Elevation and general composition towers

struct ElevationResult
{
  Tower elevation; ///< (M(F_i/K))_i
  Tower induced; ///< elevation followed by L when needed
};

inline ElevationResult elevation_tower(Tower const &f)
{
  auto const &ctx = f.ctx();
  FieldRef k = f.base();
  std::vector<FieldRef> ms;
  for (auto fi : f.fields())
    ms.push_back(intourability_field(ctx, fi, k).M);
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (!ctx.is_subfield(ms[i], ctx.intersect(f[i], ms.back())))
      throw TheoremViolation("elevation_tower: M(F/K) not contained in F ∩ M(L/K)");
  Tower el(ctx, std::move(ms));
  if (!is_galtourable_tower(el))
    throw TheoremViolation("elevation_tower: elevation tower is not galtourable");
  return {el, induced(el, f.top())};
}

/**
 * Tower of L/K induced by a Galois composition tower of M(L/K)/K, where
 * K, L are the endpoints of `c`.
 */
inline bool is_composition_tower(Tower const &c)
{
  auto const &ctx = c.ctx();
  FieldRef m = intourability_field(ctx, c.top(), c.base()).M;
  Tower prefix = c;
  if (m != c.top()) {
    if (c.height() == 0 || c[c.height() - 1] != m)
      return false;
    prefix = rat(c, c.height() - 1);
  }
  return is_galois_tower(prefix) && is_composition_tower_galois(prefix);
}

/// induced(composition_tower_galois(M(L/K), K), L).
inline Tower composition_tower_general(GaloisContext const &ctx, FieldRef l, FieldRef k)
{
  FieldRef m = intourability_field(ctx, l, k).M;
  Tower t = induced(composition_tower_galois(ctx, m, k), l);
  if (!is_composition_tower(t))
    throw TheoremViolation("composition_tower_general: result is not a composition tower");
  return t;
}

namespace detail {

inline Tower m_prefix(Tower const &c, FieldRef m, char const *op)
{
  Tower p = c;
  if (m != c.top()) {
    if (c.height() == 0 || c[c.height() - 1] != m)
      throw PreconditionError(std::string(op) + ": tower is not induced from M(L/K)");
    p = rat(c, c.height() - 1);
  }
  if (!is_galois_tower(p))
    throw PreconditionError(std::string(op) + ": M(L/K) part is not a Galois tower");
  return p;
}

} // namespace detail

/// Equivalence of induced towers, compared through their M(L/K) prefixes.
inline std::optional<EquivalenceWitness> equivalence_general(Tower const &c1,
                                                            Tower const &c2)
{
  detail::require_same_extension(c1, c2, "equivalence_general");
  FieldRef m = intourability_field(c1.ctx(), c1.top(), c1.base()).M;
  return equivalence_witness(detail::m_prefix(c1, m, "equivalence_general"),
                             detail::m_prefix(c2, m, "equivalence_general"));
}

// ---------------------------------------------------------------------------
// Galsimple laws

struct LawsReport
{
  std::size_t quotient_checks = 0;
  std::size_t transitivity_checks = 0;
  std::vector<std::string> violations;
};

/**
 * Over all fields of the context:
 *  - K < M < L with L/K galsimple implies M/K galsimple non-Galois;
 *  - F₀ ≤ F₁ ≤ F₂ with both steps galsimple non-Galois implies F₂/F₀ is too.
 */
inline LawsReport galsimple_laws_check(GaloisContext const &ctx)
{
  LawsReport rep;
  auto fields = ctx.fields();
  auto gnng = [&](FieldRef e, FieldRef f) {
    return is_galsimple(ctx, e, f) && !is_galois(ctx, e, f);
  };
  for (auto k : fields) {
    for (auto l : fields) {
      if (l == k || !ctx.is_subfield(k, l))
        continue;
      bool l_gs = is_galsimple(ctx, l, k);
      bool l_gnng = l_gs && !is_galois(ctx, l, k);
      for (auto m : ctx.interval(k, l)) {
        if (m == k || m == l)
          continue;
        if (l_gs) {
          ++rep.quotient_checks;
          if (!gnng(m, k))
            rep.violations.push_back("quotient: " + ctx.label(m) + "/" + ctx.label(k) +
                                     " inside galsimple " + ctx.label(l) + "/" +
                                     ctx.label(k));
        }
        if (gnng(m, k) && gnng(l, m)) {
          ++rep.transitivity_checks;
          if (!l_gnng)
            rep.violations.push_back("transitivity: " + ctx.label(k) + " ≤ " +
                                     ctx.label(m) + " ≤ " + ctx.label(l));
        }
      }
    }
  }
  return rep;
}

} // namespace galtour

#endif // GALTOUR_DISSOCIATION_HPP
