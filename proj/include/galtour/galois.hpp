#ifndef GALTOUR_GALOIS_HPP
#define GALTOUR_GALOIS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detail/bitset.hpp"
#include "error.hpp"
#include "group.hpp"

namespace galtour {

/**
 * Handle to an intermediate field of N/K inside one GaloisContext.
 *
 * The id is the position of Gal(N/F) in the canonical subgroup order, so two
 * handles are equal iff their subgroups are equal.
 */
struct FieldRef
{
  std::uint32_t id = 0;

  auto operator<=>(FieldRef const &) const = default;
};

namespace detail {

struct ContextData
{
  Group group;
  Bounds bounds;
  std::vector<Subgroup> subgroups;
  std::unordered_map<Bitset, std::uint32_t, BitsetHash> lookup;
  std::vector<Bitset> supergroups; // bit j of row i: S_i ⊆ S_j
  std::vector<Bitset> subgroups_of; // bit j of row i: S_j ⊆ S_i
  FieldRef base;
  FieldRef top;
  FieldRef distinguished;
  std::vector<std::pair<std::string, FieldRef>> names; // registration order
  std::map<std::string, FieldRef> by_name;
  std::vector<std::string> labels;
  std::vector<std::string> notes;
  std::string id;
};

inline std::string digest(Subgroup const &s)
{
  std::uint32_t h = 2166136261u;
  for (Elem e : s.elements()) {
    for (int k = 0; k < 4; ++k) {
      h ^= (e >> (8 * k)) & 0xffu;
      h *= 16777619u;
    }
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", h);
  return std::string("F#") + buf;
}

} // namespace detail

/**
 * The finite Galois correspondence for one closure N/K.
 *
 * Holds G = Gal(N/K), every subgroup of G (one FieldRef each), the base K
 * (subgroup G), the closure N (trivial subgroup) and the distinguished summit
 * L of the extension under study. Immutable; copies share state.
 */
class GaloisContext
{
public:
  GaloisContext() = default;

  explicit GaloisContext(std::shared_ptr<detail::ContextData const> d)
  : _d(std::move(d))
  {}

  Group const &group() const noexcept { return _d->group; }
  Bounds const &bounds() const noexcept { return _d->bounds; }
  std::string const &id() const noexcept { return _d->id; }
  std::vector<std::string> const &notes() const noexcept { return _d->notes; }

  std::size_t field_count() const noexcept { return _d->subgroups.size(); }

  std::vector<FieldRef> fields() const
  {
    std::vector<FieldRef> r(field_count());
    for (std::uint32_t i = 0; i < r.size(); ++i)
      r[i] = FieldRef{i};
    return r;
  }

  FieldRef base() const noexcept { return _d->base; }
  FieldRef top() const noexcept { return _d->top; }
  FieldRef distinguished() const noexcept { return _d->distinguished; }

  Subgroup const &subgroup(FieldRef f) const { return _d->subgroups.at(f.id); }

  FieldRef field_of(Subgroup const &s) const
  {
    if (!s.parent().same_as(group()))
      throw PreconditionError("subgroup belongs to a different group");
    return FieldRef{_d->lookup.at(s.members())};
  }

  /// E ≤ F as fields, i.e. Gal(N/F) ⊆ Gal(N/E).
  bool is_subfield(FieldRef e, FieldRef f) const
  { return _d->supergroups[f.id].test(e.id); }

  /// EF, realized as Gal(N/E) ∩ Gal(N/F).
  FieldRef compositum(FieldRef e, FieldRef f) const
  {
    return FieldRef{_d->lookup.at(subgroup(e).members() & subgroup(f).members())};
  }

  /// E ∩ F, realized as ⟨Gal(N/E), Gal(N/F)⟩: the least common supergroup.
  FieldRef intersect(FieldRef e, FieldRef f) const
  {
    auto common = _d->supergroups[e.id] & _d->supergroups[f.id];
    return FieldRef{static_cast<std::uint32_t>(common.find_first())};
  }

  /// All M with F ≤ M ≤ E, in canonical order (largest field first).
  std::vector<FieldRef> interval(FieldRef f, FieldRef e) const
  {
    std::vector<FieldRef> r;
    auto both = _d->supergroups[e.id] & _d->subgroups_of[f.id];
    for (auto i = both.find_first(); i != detail::Bitset::npos; i = both.find_next(i))
      r.push_back(FieldRef{static_cast<std::uint32_t>(i)});
    return r;
  }

  std::optional<FieldRef> find(std::string const &name) const
  {
    if (auto it = _d->by_name.find(name); it != _d->by_name.end())
      return it->second;
    for (std::uint32_t i = 0; i < field_count(); ++i)
      if (detail::digest(_d->subgroups[i]) == name)
        return FieldRef{i};
    return std::nullopt;
  }

  FieldRef resolve(std::string const &name) const
  {
    if (auto f = find(name))
      return *f;
    throw PreconditionError("unknown field '" + name + "'");
  }

  /// Display label: first registered name, else the subgroup digest.
  std::string label(FieldRef f) const
  {
    auto const &l = _d->labels.at(f.id);
    return l.empty() ? detail::digest(subgroup(f)) : l;
  }

  bool has_label(FieldRef f) const { return !_d->labels.at(f.id).empty(); }

  /// Named fields in registration order (aliases included).
  std::vector<std::pair<std::string, FieldRef>> const &names() const noexcept
  { return _d->names; }

  bool same_as(GaloisContext const &o) const noexcept { return _d == o._d; }

private:
  std::shared_ptr<detail::ContextData const> _d;
};

/**
 * Builds a GaloisContext: enumerates the subgroup lattice eagerly, then lets
 * the caller attach names and pick the distinguished field.
 */
class ContextBuilder
{
public:
  explicit ContextBuilder(Group g, Bounds bounds = {})
  : _d(std::make_shared<detail::ContextData>())
  {
    _d->group = std::move(g);
    _d->bounds = bounds;
    _d->subgroups = all_subgroups(_d->group, bounds.subgroups);
    std::size_t n = _d->subgroups.size();
    for (std::uint32_t i = 0; i < n; ++i)
      _d->lookup.emplace(_d->subgroups[i].members(), i);

    _d->supergroups.assign(n, detail::Bitset(n));
    _d->subgroups_of.assign(n, detail::Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (_d->subgroups[i].is_subgroup_of(_d->subgroups[j])) {
          _d->supergroups[i].set(j);
          _d->subgroups_of[j].set(i);
        }
      }
    }
    _d->labels.assign(n, {});
    _d->top = FieldRef{0};
    _d->base = FieldRef{static_cast<std::uint32_t>(n - 1)};
    _d->distinguished = _d->top;
  }

  Group const &group() const noexcept { return _d->group; }
  FieldRef base() const noexcept { return _d->base; }
  FieldRef top() const noexcept { return _d->top; }

  FieldRef field_of(Subgroup const &s) const
  {
    if (!s.parent().same_as(_d->group))
      throw PreconditionError("subgroup belongs to a different group");
    return FieldRef{_d->lookup.at(s.members())};
  }

  /// Field whose Galois group Gal(N/F) is generated by `perms`.
  FieldRef field_generated_by(std::vector<Permutation> const &perms) const
  { return field_of(subgroup_of_permutations(_d->group, perms)); }

  ContextBuilder &name(std::string const &name, FieldRef f)
  {
    if (name.empty())
      throw PreconditionError("empty field name");
    if (!_d->by_name.emplace(name, f).second)
      throw PreconditionError("duplicate field name '" + name + "'");
    _d->names.emplace_back(name, f);
    if (_d->labels.at(f.id).empty())
      _d->labels[f.id] = name;
    return *this;
  }

  bool has_name(std::string const &name) const
  { return _d->by_name.count(name) != 0; }

  FieldRef resolve_field(std::string const &name) const
  {
    auto it = _d->by_name.find(name);
    if (it == _d->by_name.end())
      throw PreconditionError("unknown field '" + name + "'");
    return it->second;
  }

  ContextBuilder &distinguished(FieldRef f)
  {
    _d->distinguished = f;
    return *this;
  }

  ContextBuilder &note(std::string text)
  {
    _d->notes.push_back(std::move(text));
    return *this;
  }

  ContextBuilder &id(std::string text)
  {
    _d->id = std::move(text);
    return *this;
  }

  /// Freeze. Adds aliases K, L, N for base, distinguished and closure when
  /// those names are still free.
  GaloisContext build() &&
  {
    if (!has_name("K"))
      name("K", _d->base);
    if (!has_name("L"))
      name("L", _d->distinguished);
    if (!has_name("N"))
      name("N", _d->top);
    return GaloisContext(std::move(_d));
  }

private:
  std::shared_ptr<detail::ContextData> _d;
};

namespace detail {

inline void require_subfield(GaloisContext const &ctx, FieldRef small,
                             FieldRef big, char const *op)
{
  if (!ctx.is_subfield(small, big))
    throw PreconditionError(std::string(op) + ": " + ctx.label(small) +
                            " is not contained in " + ctx.label(big));
}

} // namespace detail

/// [E:F] = [Gal(N/F) : Gal(N/E)]. Requires F ≤ E.
inline std::size_t degree(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  detail::require_subfield(ctx, f, e, "degree");
  return ctx.subgroup(f).order() / ctx.subgroup(e).order();
}

inline FieldRef compositum(GaloisContext const &ctx, FieldRef e, FieldRef f)
{ return ctx.compositum(e, f); }

inline FieldRef intersect_fields(GaloisContext const &ctx, FieldRef e, FieldRef f)
{ return ctx.intersect(e, f); }

/// E/F Galois iff Gal(N/E) ⊴ Gal(N/F). Requires F ≤ E.
inline bool is_galois(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  detail::require_subfield(ctx, f, e, "is_galois");
  return is_normal(ctx.subgroup(e), ctx.subgroup(f));
}

/// Gal(E/F) ≅ Gal(N/F)/Gal(N/E).
inline AbstractGroup galois_group(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  if (!is_galois(ctx, e, f))
    throw PreconditionError("galois_group: " + ctx.label(e) + "/" + ctx.label(f) +
                            " is not Galois");
  return quotient(ctx.subgroup(f), ctx.subgroup(e), ctx.bounds().isomorphism);
}

/// (J, K, N, L) with K ∩ L = J and KL = N.
struct Quadrilateral
{
  FieldRef j, k, n, l;

  bool operator==(Quadrilateral const &) const = default;
};

inline Quadrilateral make_quadrilateral(GaloisContext const &ctx, FieldRef j,
                                        FieldRef k, FieldRef n, FieldRef l)
{
  if (ctx.intersect(k, l) != j)
    throw PreconditionError("quadrilateral: K ∩ L is " +
                            ctx.label(ctx.intersect(k, l)) + ", not " + ctx.label(j));
  if (ctx.compositum(k, l) != n)
    throw PreconditionError("quadrilateral: KL is " +
                            ctx.label(ctx.compositum(k, l)) + ", not " + ctx.label(n));
  return Quadrilateral{j, k, n, l};
}

/// The quadrilateral spanned by K and L.
inline Quadrilateral quadrilateral_of(GaloisContext const &ctx, FieldRef k, FieldRef l)
{ return Quadrilateral{ctx.intersect(k, l), k, ctx.compositum(k, l), l}; }

/// Both sides K/J and L/J Galois.
inline bool is_parallelogram(GaloisContext const &ctx, Quadrilateral const &q)
{
  return is_galois(ctx, q.k, q.j) && is_galois(ctx, q.l, q.j);
}

/**
 * Checks Gal(N/J) = Gal(N/K) × Gal(N/L) as an internal direct product inside
 * the quotient Gal(N_G/J)/Gal(N_G/N): trivial intersection, elementwise
 * commuting images and product equal to the whole.
 */
inline bool diagonal_split_check(GaloisContext const &ctx, Quadrilateral const &q)
{
  if (!is_parallelogram(ctx, q))
    throw PreconditionError("diagonal_split_check: not a parallelogram");
  auto const &G = ctx.group();
  auto const &D = ctx.subgroup(q.j);
  auto const &A = ctx.subgroup(q.k);
  auto const &B = ctx.subgroup(q.l);
  auto const &C = ctx.subgroup(q.n);

  if (!is_normal(C, D))
    return false;
  if (!((A.members() & B.members()) == C.members()))
    return false;
  detail::Bitset product(G.order());
  for (Elem a : A.elements()) {
    for (Elem b : B.elements()) {
      Elem ab = G.mul(a, b);
      product.set(ab);
      Elem commutator = G.mul(G.mul(G.inv(a), G.inv(b)), ab);
      if (!C.contains(commutator))
        return false;
    }
  }
  return product == D.members();
}

/**
 * Evaluates the écartelé exchange laws for K, L with K/K∩L and L/K∩L Galois:
 *   KF ∩ EL = EF            when J ≤ E ≤ K and J ≤ F ≤ L;
 *   (K ∩ F)(E ∩ L) = E ∩ F  when K ≤ E ≤ KL and L ≤ F ≤ KL.
 * Returns true iff every applicable law holds. Throws PreconditionError
 * naming the failing hypothesis when neither applies.
 */
inline bool ecartele_identities(GaloisContext const &ctx, FieldRef k, FieldRef l,
                                FieldRef e, FieldRef f)
{
  FieldRef j = ctx.intersect(k, l);
  FieldRef n = ctx.compositum(k, l);
  if (!is_galois(ctx, k, j))
    throw PreconditionError("ecartele: K/(K ∩ L) is not Galois");
  if (!is_galois(ctx, l, j))
    throw PreconditionError("ecartele: L/(K ∩ L) is not Galois");

  bool lower = ctx.is_subfield(j, e) && ctx.is_subfield(e, k) &&
               ctx.is_subfield(j, f) && ctx.is_subfield(f, l);
  bool upper = ctx.is_subfield(k, e) && ctx.is_subfield(e, n) &&
               ctx.is_subfield(l, f) && ctx.is_subfield(f, n);
  if (!lower && !upper)
    throw PreconditionError("ecartele: (E, F) lies neither below (K, L) nor "
                            "between (K, L) and KL");
  bool ok = true;
  if (lower)
    ok = ok && ctx.intersect(ctx.compositum(k, f), ctx.compositum(e, l)) ==
                   ctx.compositum(e, f);
  if (upper)
    ok = ok && ctx.compositum(ctx.intersect(k, f), ctx.intersect(e, l)) ==
                   ctx.intersect(e, f);
  return ok;
}

/// (M, E, N, F) with K ≤ E, L ≤ F, M = E ∩ F, N = EF = KL.
inline bool is_sub_quadrilateral(GaloisContext const &ctx, Quadrilateral const &para,
                                 Quadrilateral const &s)
{
  return s.n == para.n && ctx.is_subfield(para.k, s.k) && ctx.is_subfield(s.k, para.n) &&
         ctx.is_subfield(para.l, s.l) && ctx.is_subfield(s.l, para.n) &&
         ctx.intersect(s.k, s.l) == s.j && ctx.compositum(s.k, s.l) == s.n;
}

/// (J, E, C, F) with J ≤ E ≤ K, J ≤ F ≤ L, E ∩ F = J, C = EF.
inline bool is_quotient_quadrilateral(GaloisContext const &ctx,
                                      Quadrilateral const &para, Quadrilateral const &q)
{
  return q.j == para.j && ctx.is_subfield(para.j, q.k) && ctx.is_subfield(q.k, para.k) &&
         ctx.is_subfield(para.j, q.l) && ctx.is_subfield(q.l, para.l) &&
         ctx.intersect(q.k, q.l) == q.j && ctx.compositum(q.k, q.l) == q.n;
}

inline std::vector<Quadrilateral> sub_quadrilaterals(GaloisContext const &ctx,
                                                     Quadrilateral const &para)
{
  std::vector<Quadrilateral> r;
  for (auto e : ctx.interval(para.k, para.n))
    for (auto f : ctx.interval(para.l, para.n))
      r.push_back(Quadrilateral{ctx.intersect(e, f), e, para.n, f});
  return r;
}

inline std::vector<Quadrilateral> quotient_quadrilaterals(GaloisContext const &ctx,
                                                          Quadrilateral const &para)
{
  std::vector<Quadrilateral> r;
  for (auto e : ctx.interval(para.j, para.k))
    for (auto f : ctx.interval(para.j, para.l))
      r.push_back(Quadrilateral{para.j, e, ctx.compositum(e, f), f});
  return r;
}

/// ℛ: (M, E, N, F) ↦ (J, K ∩ F, M, E ∩ L).
inline Quadrilateral bijection_R(GaloisContext const &ctx, Quadrilateral const &para,
                                 Quadrilateral const &sub)
{
  if (!is_parallelogram(ctx, para))
    throw PreconditionError("bijection_R: not a parallelogram");
  if (!is_sub_quadrilateral(ctx, para, sub))
    throw PreconditionError("bijection_R: argument is not a sub-quadrilateral");
  return Quadrilateral{para.j, ctx.intersect(para.k, sub.l), sub.j,
                       ctx.intersect(sub.k, para.l)};
}

/// 𝒮: (J, E, C, F) ↦ (C, KF, N, EL).
inline Quadrilateral bijection_S(GaloisContext const &ctx, Quadrilateral const &para,
                                 Quadrilateral const &quot)
{
  if (!is_parallelogram(ctx, para))
    throw PreconditionError("bijection_S: not a parallelogram");
  if (!is_quotient_quadrilateral(ctx, para, quot))
    throw PreconditionError("bijection_S: argument is not a quotient quadrilateral");
  return Quadrilateral{quot.n, ctx.compositum(para.k, quot.l), para.n,
                       ctx.compositum(quot.k, para.l)};
}

} // namespace galtour

#endif // GALTOUR_GALOIS_HPP
