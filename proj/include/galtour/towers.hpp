#ifndef GALTOUR_TOWERS_HPP
#define GALTOUR_TOWERS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "galtourability.hpp"

namespace galtour {

/**
 * A finite non-decreasing sequence F₀ ≤ F₁ ≤ … ≤ F_m of fields of one
 * context. Repetitions are allowed; the height is m.
 */
class Tower
{
public:
  Tower() = default;

  /// Throws PreconditionError if `fields` is empty or not non-decreasing.
  Tower(GaloisContext ctx, std::vector<FieldRef> fields)
  : _ctx(std::move(ctx)), _fields(std::move(fields))
  {
    if (_fields.empty())
      throw PreconditionError("tower has no fields");
    for (std::size_t i = 1; i < _fields.size(); ++i) {
      if (!_ctx.is_subfield(_fields[i - 1], _fields[i]))
        throw PreconditionError("tower is not non-decreasing at index " +
                                std::to_string(i) + ": " + _ctx.label(_fields[i - 1]) +
                                " is not contained in " + _ctx.label(_fields[i]));
    }
  }

  GaloisContext const &ctx() const noexcept { return _ctx; }
  std::vector<FieldRef> const &fields() const noexcept { return _fields; }
  std::size_t height() const noexcept { return _fields.size() - 1; }
  FieldRef operator[](std::size_t i) const { return _fields.at(i); }
  FieldRef base() const { return _fields.front(); }
  FieldRef top() const { return _fields.back(); }

  /// Componentwise; the same set of fields in another arrangement differs.
  bool operator==(Tower const &o) const
  { return _ctx.same_as(o._ctx) && _fields == o._fields; }

private:
  GaloisContext _ctx;
  std::vector<FieldRef> _fields;
};

/// A tower with prescribed endpoints.
inline Tower make_tower(GaloisContext const &ctx, std::vector<FieldRef> fields,
                        FieldRef base, FieldRef top)
{
  Tower t(ctx, std::move(fields));
  if (t.base() != base)
    throw PreconditionError("tower starts at " + ctx.label(t.base()) + ", expected " +
                            ctx.label(base));
  if (t.top() != top)
    throw PreconditionError("tower ends at " + ctx.label(t.top()) + ", expected " +
                            ctx.label(top));
  return t;
}

inline Tower make_tower(GaloisContext const &ctx, std::vector<std::string> const &names)
{
  std::vector<FieldRef> f;
  for (auto const &n : names)
    f.push_back(ctx.resolve(n));
  return Tower(ctx, std::move(f));
}

inline bool is_strict(Tower const &t)
{
  for (std::size_t i = 1; i <= t.height(); ++i)
    if (t[i - 1] == t[i])
      return false;
  return true;
}

inline bool is_galois_tower(Tower const &t)
{
  for (std::size_t i = 1; i <= t.height(); ++i)
    if (!is_galois(t.ctx(), t[i], t[i - 1]))
      return false;
  return true;
}

inline bool is_galtourable_tower(Tower const &t)
{
  for (std::size_t i = 1; i <= t.height(); ++i)
    if (!is_galtourable(t.ctx(), t[i], t[i - 1]))
      return false;
  return true;
}

/// Prime divisors of n counted with multiplicity.
inline std::size_t big_omega(std::size_t n)
{
  std::size_t k = 0;
  for (std::size_t p = 2; p * p <= n; ++p)
    for (; n % p == 0; n /= p)
      ++k;
  return n > 1 ? k + 1 : k;
}

/// height ≤ Ω([top : base]). Requires a strict tower.
inline bool height_bound_check(Tower const &t)
{
  if (!is_strict(t))
    throw PreconditionError("height_bound_check: tower is not strict");
  return t.height() <= big_omega(degree(t.ctx(), t.top(), t.base()));
}

struct RefinementWitness
{
  /// j₀ < j₁ < … < j_m with E_{j_i} = F_i.
  std::vector<std::size_t> indices;

  bool operator==(RefinementWitness const &) const = default;
};

namespace detail {

inline void require_same_extension(Tower const &e, Tower const &f, char const *op)
{
  if (!e.ctx().same_as(f.ctx()))
    throw PreconditionError(std::string(op) + ": towers belong to different contexts");
  if (e.base() != f.base() || e.top() != f.top())
    throw PreconditionError(std::string(op) + ": towers have different endpoints");
}

inline bool occurs_in(Tower const &f, FieldRef x)
{
  auto const &v = f.fields();
  return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace detail

/**
 * Witness that `e` refines `f`, or nullopt.
 *
 * Each F_i is matched to the earliest admissible index; any witness can be
 * shifted down to this one without blocking later matches, so greedy
 * matching finds a witness whenever one exists.
 */
inline std::optional<RefinementWitness> refinement_witness(Tower const &e, Tower const &f)
{
  detail::require_same_extension(e, f, "refinement_witness");
  if (f.height() > e.height())
    return std::nullopt;
  RefinementWitness w;
  std::size_t j = 0;
  for (std::size_t i = 0; i <= f.height(); ++i) {
    while (j <= e.height() && e[j] != f[i])
      ++j;
    if (j > e.height())
      return std::nullopt;
    w.indices.push_back(j++);
  }
  return w;
}

inline bool is_refinement(Tower const &e, Tower const &f)
{ return refinement_witness(e, f).has_value(); }

namespace detail {

inline void require_refinement(Tower const &e, Tower const &f, char const *op)
{
  if (!refinement_witness(e, f))
    throw PreconditionError(std::string(op) + ": not a refinement");
}

} // namespace detail

/// Some E_j with 0 < j < n differs from every F_i.
inline bool is_proper_refinement(Tower const &e, Tower const &f)
{
  detail::require_refinement(e, f, "is_proper_refinement");
  for (std::size_t j = 1; j + 1 <= e.height(); ++j)
    if (!detail::occurs_in(f, e[j]))
      return true;
  return false;
}

inline bool is_trivial_refinement(Tower const &e, Tower const &f)
{ return !is_proper_refinement(e, f); }

/// Every new field E_j (0 < j < n, E_j not among the F_i) is Galois over E_{j-1}.
/// Fields that coincide with some F_i are left unconstrained.
inline bool is_galois_refinement(Tower const &e, Tower const &f)
{
  detail::require_refinement(e, f, "is_galois_refinement");
  for (std::size_t j = 1; j + 1 <= e.height(); ++j)
    if (!detail::occurs_in(f, e[j]) && !is_galois(e.ctx(), e[j], e[j - 1]))
      return false;
  return true;
}

/// Duplicates removed, order kept.
inline Tower strict_associated(Tower const &f)
{
  std::vector<FieldRef> s{f[0]};
  for (std::size_t i = 1; i <= f.height(); ++i)
    if (f[i] != s.back())
      s.push_back(f[i]);
  Tower r(f.ctx(), std::move(s));
  if (!is_refinement(f, r) || is_proper_refinement(f, r))
    throw TheoremViolation("strict_associated: input is not a trivial refinement");
  return r;
}

namespace detail {

inline void require_index(Tower const &t, std::size_t r, char const *op)
{
  if (r > t.height())
    throw PreconditionError(std::string(op) + ": index " + std::to_string(r) +
                            " exceeds height " + std::to_string(t.height()));
}

} // namespace detail

/// F_r ≤ … ≤ F_m.
inline Tower res(Tower const &t, std::size_t r)
{
  detail::require_index(t, r, "res");
  return Tower(t.ctx(), {t.fields().begin() + static_cast<std::ptrdiff_t>(r),
                         t.fields().end()});
}

/// F_0 ≤ … ≤ F_r.
inline Tower rat(Tower const &t, std::size_t r)
{
  detail::require_index(t, r, "rat");
  return Tower(t.ctx(), {t.fields().begin(),
                         t.fields().begin() + static_cast<std::ptrdiff_t>(r) + 1});
}

/// F_0 ≤ … ≤ F_{r-1} ≤ top.
inline Tower inflate(Tower const &t, std::size_t r, FieldRef top)
{
  detail::require_index(t, r, "inflate");
  std::vector<FieldRef> f(t.fields().begin(),
                          t.fields().begin() + static_cast<std::ptrdiff_t>(r));
  f.push_back(top);
  return Tower(t.ctx(), std::move(f));
}

/// Inflation to the context's distinguished field L.
inline Tower inf_top(Tower const &t, std::size_t r)
{ return inflate(t, r, t.ctx().distinguished()); }

/**
 * The unique refinement E of f with rat_{j_r}(E) = R and res_{j_r}(E) = S:
 * R followed by S without its first field, so j_r = height(R).
 */
inline Tower combine(Tower const &f, std::size_t r, Tower const &s, Tower const &rr)
{
  detail::require_index(f, r, "combine");
  Tower fr = res(f, r);
  Tower fl = rat(f, r);
  if (!s.ctx().same_as(f.ctx()) || !rr.ctx().same_as(f.ctx()))
    throw PreconditionError("combine: towers belong to different contexts");
  if (s.base() != fr.base() || s.top() != fr.top() || !is_refinement(s, fr))
    throw PreconditionError("combine: S does not refine res_r(F)");
  if (rr.base() != fl.base() || rr.top() != fl.top() || !is_refinement(rr, fl))
    throw PreconditionError("combine: R does not refine rat_r(F)");

  std::vector<FieldRef> e = rr.fields();
  e.insert(e.end(), s.fields().begin() + 1, s.fields().end());
  Tower out(f.ctx(), std::move(e));
  std::size_t jr = rr.height();
  if (!(rat(out, jr) == rr) || !(res(out, jr) == s) || !is_refinement(out, f))
    throw TheoremViolation("combine: reconstruction check failed");
  return out;
}

/// t itself when it already ends at L, otherwise t followed by L.
inline Tower induced(Tower const &t, FieldRef l)
{
  auto const &ctx = t.ctx();
  if (!ctx.is_subfield(t.top(), l))
    throw PreconditionError("induced: " + ctx.label(t.top()) + " is not contained in " +
                            ctx.label(l));
  if (t.top() == l)
    return t;
  auto f = t.fields();
  f.push_back(l);
  return Tower(ctx, std::move(f));
}

/**
 * σ (1-based images) and, per marche i, an isomorphism
 * Gal(F_i/F_{i-1}) → Gal(E_{σ(i)}/E_{σ(i)-1}) as a label map.
 */
struct EquivalenceWitness
{
  std::vector<std::size_t> sigma;
  std::vector<std::vector<Elem>> isos;
};

inline constexpr std::size_t equivalence_height_cap = 12;

/// Gal(F_i/F_{i-1}) for i = 1..m. Throws if a marche is not Galois.
inline std::vector<AbstractGroup> marche_groups(Tower const &t)
{
  std::vector<AbstractGroup> r;
  for (std::size_t i = 1; i <= t.height(); ++i) {
    if (!is_galois(t.ctx(), t[i], t[i - 1]))
      throw PreconditionError("marche " + std::to_string(i) + " (" +
                              t.ctx().label(t[i]) + "/" + t.ctx().label(t[i - 1]) +
                              ") is not Galois");
    r.push_back(galois_group(t.ctx(), t[i], t[i - 1]));
  }
  return r;
}

inline bool verify_equivalence(Tower const &t1, Tower const &t2,
                               EquivalenceWitness const &w)
{
  if (t1.height() != t2.height() || w.sigma.size() != t1.height() ||
      w.isos.size() != t1.height())
    return false;
  std::vector<char> used(t1.height() + 1, 0);
  for (auto s : w.sigma) {
    if (s < 1 || s > t1.height() || used[s])
      return false;
    used[s] = 1;
  }
  auto g1 = marche_groups(t1);
  auto g2 = marche_groups(t2);
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (!is_isomorphism(g1[i], g2[w.sigma[i] - 1], w.isos[i]))
      return false;
  return true;
}

/**
 * Equivalence of two Galois towers of one extension: a permutation of the
 * marches with isomorphic Galois groups, or nullopt.
 *
 * Marches are bucketed by (order, element-order multiset); isomorphism is
 * transitive, so taking the first isomorphic unused partner never blocks a
 * later match.
 */
inline std::optional<EquivalenceWitness> equivalence_witness(Tower const &t1,
                                                            Tower const &t2)
{
  detail::require_same_extension(t1, t2, "equivalence_witness");
  auto g1 = marche_groups(t1);
  auto g2 = marche_groups(t2);
  if (t1.height() != t2.height())
    return std::nullopt;
  if (t1.height() > equivalence_height_cap)
    throw SizeError("equivalence search is capped at height " +
                    std::to_string(equivalence_height_cap));

  std::size_t m = t1.height();
  std::size_t bound = t1.ctx().bounds().isomorphism;
  std::vector<std::vector<std::size_t>> inv1(m), inv2(m);
  for (std::size_t i = 0; i < m; ++i) {
    inv1[i] = g1[i].order_statistics();
    inv2[i] = g2[i].order_statistics();
  }

  EquivalenceWitness w;
  std::vector<char> used(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < m && !matched; ++j) {
      if (used[j] || inv1[i] != inv2[j])
        continue;
      if (auto phi = are_isomorphic(g1[i], g2[j], bound)) {
        used[j] = 1;
        w.sigma.push_back(j + 1);
        w.isos.push_back(std::move(*phi));
        matched = true;
      }
    }
    if (!matched)
      return std::nullopt;
  }
  return w;
}

/// "K ⊴[2] E <[3] L": ⊴ for Galois marches, < otherwise, = for repetitions.
inline std::string render_tower(Tower const &t)
{
  auto const &ctx = t.ctx();
  std::string s = ctx.label(t[0]);
  for (std::size_t i = 1; i <= t.height(); ++i) {
    std::size_t d = degree(ctx, t[i], t[i - 1]);
    char const *mark = d == 1 ? " =" : is_galois(ctx, t[i], t[i - 1]) ? " ⊴" : " <";
    s += mark;
    s += "[" + std::to_string(d) + "] " + ctx.label(t[i]);
  }
  return s;
}

inline std::vector<std::string> tower_names(Tower const &t)
{
  std::vector<std::string> r;
  for (auto f : t.fields())
    r.push_back(t.ctx().label(f));
  return r;
}

} // namespace galtour

#endif // GALTOUR_TOWERS_HPP
