#ifndef GALTOUR_GROUP_HPP
#define GALTOUR_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "abstract_group.hpp"
#include "detail/bitset.hpp"
#include "error.hpp"
#include "permutation.hpp"

namespace galtour {

namespace detail {

// Groups above this order keep no multiplication table.
inline constexpr std::size_t table_limit = 2048;

struct GroupData
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements; // sorted; elements[0] is the identity
  std::unordered_map<Permutation, Elem, PermutationHash> index;
  std::vector<Elem> table;
  std::vector<Elem> inverse;
};

} // namespace detail

/**
 * A finite permutation group with its full, canonically ordered element list.
 *
 * Elements are sorted lexicographically by image vector, which puts the
 * identity at index 0. Values are immutable and cheap to copy.
 */
class Group
{
public:
  Group() = default;

  explicit Group(std::shared_ptr<detail::GroupData const> data)
  : _d(std::move(data))
  {}

  std::size_t degree() const noexcept { return _d->degree; }
  std::size_t order() const noexcept { return _d->elements.size(); }

  std::vector<Permutation> const &generators() const noexcept
  { return _d->generators; }
  std::vector<Permutation> const &elements() const noexcept
  { return _d->elements; }
  Permutation const &element(Elem i) const { return _d->elements[i]; }

  static constexpr Elem identity() noexcept { return 0; }

  std::optional<Elem> index_of(Permutation const &p) const
  {
    auto it = _d->index.find(p);
    if (it == _d->index.end())
      return std::nullopt;
    return it->second;
  }

  Elem mul(Elem a, Elem b) const
  {
    if (!_d->table.empty())
      return _d->table[a * order() + b];
    return _d->index.at(compose(element(a), element(b)));
  }

  Elem inv(Elem a) const { return _d->inverse[a]; }

  Elem conj(Elem b, Elem a) const { return mul(mul(inv(b), a), b); }

  std::size_t element_order(Elem a) const
  {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a))
      ++k;
    return k;
  }

  std::shared_ptr<detail::GroupData const> const &data() const noexcept
  { return _d; }

  bool same_as(Group const &o) const noexcept { return _d == o._d; }

  bool operator==(Group const &o) const
  { return _d == o._d || _d->elements == o._d->elements; }

private:
  std::shared_ptr<detail::GroupData const> _d;
};

/**
 * Closure of `generators` in Sym(degree).
 *
 * Throws SizeError once the closure exceeds `bound` elements.
 */
inline Group generate(std::size_t degree,
                      std::vector<Permutation> const &generators,
                      std::size_t bound = Bounds{}.closure)
{
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator " + to_cycles(g) + " has degree " +
                              std::to_string(g.degree()) + ", expected " +
                              std::to_string(degree));

  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  d->generators = generators;

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const &g : generators) {
      Permutation y = compose(queue[k], g);
      if (seen.insert(y).second) {
        if (seen.size() > bound)
          throw SizeError("group closure exceeds bound " + std::to_string(bound));
        queue.push_back(std::move(y));
      }
    }
  }

  std::sort(queue.begin(), queue.end());
  d->elements = std::move(queue);
  std::size_t n = d->elements.size();
  d->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    d->index.emplace(d->elements[i], static_cast<Elem>(i));

  d->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    d->inverse[i] = d->index.at(d->elements[i].inverse());

  if (n <= detail::table_limit) {
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d->table[a * n + b] = d->index.at(compose(d->elements[a], d->elements[b]));
  }
  return Group(std::move(d));
}

/// Regular representation of a permutation group as a table.
inline AbstractGroup to_abstract(Group const &g,
                                 std::size_t verify_bound = Bounds{}.isomorphism)
{
  std::size_t n = g.order();
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      t[a * n + b] = g.mul(a, b);
  return AbstractGroup(n, std::move(t), verify_bound);
}

/**
 * A subgroup of a fixed parent Group.
 *
 * Identity is the canonical sorted list of element indices into the parent's
 * element order; the generator list is incidental and excluded from equality.
 * The canonical subgroup order compares by order first, then lexicographically
 * by element list.
 */
class Subgroup
{
public:
  Subgroup() = default;

  Subgroup(Group parent, detail::Bitset members, std::vector<Elem> gens)
  : _parent(std::move(parent)), _members(std::move(members)), _gens(std::move(gens))
  {
    for (auto i = _members.find_first(); i != detail::Bitset::npos;
         i = _members.find_next(i))
      _elements.push_back(static_cast<Elem>(i));
  }

  Group const &parent() const noexcept { return _parent; }
  std::size_t order() const noexcept { return _elements.size(); }
  bool contains(Elem e) const { return _members.test(e); }
  std::vector<Elem> const &elements() const noexcept { return _elements; }
  std::vector<Elem> const &generators() const noexcept { return _gens; }
  detail::Bitset const &members() const noexcept { return _members; }

  bool is_subgroup_of(Subgroup const &o) const
  { return _members.is_subset_of(o._members); }

  bool is_trivial() const noexcept { return order() == 1; }

  bool operator==(Subgroup const &o) const
  { return _parent.same_as(o._parent) && _members == o._members; }

  std::strong_ordering operator<=>(Subgroup const &o) const
  {
    if (auto c = order() <=> o.order(); c != 0)
      return c;
    return _elements <=> o._elements;
  }

private:
  Group _parent;
  detail::Bitset _members;
  std::vector<Elem> _elements;
  std::vector<Elem> _gens;
};

struct SubgroupHash
{
  std::size_t operator()(Subgroup const &s) const noexcept
  { return s.members().hash(); }
};

namespace detail {

inline Bitset closure_bits(Group const &g, std::span<Elem const> gens)
{
  Bitset in(g.order());
  std::vector<Elem> queue{0};
  in.set(0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Elem x : gens) {
      Elem y = g.mul(queue[k], x);
      if (!in.test(y)) {
        in.set(y);
        queue.push_back(y);
      }
    }
  }
  return in;
}

inline void require_same_parent(Subgroup const &a, Subgroup const &b,
                                char const *op)
{
  if (!a.parent().same_as(b.parent()))
    throw PreconditionError(std::string(op) + ": subgroups of different groups");
}

inline void require_nested(Subgroup const &a, Subgroup const &b, char const *op)
{
  require_same_parent(a, b, op);
  if (!a.is_subgroup_of(b))
    throw PreconditionError(std::string(op) + ": first subgroup is not contained in the second");
}

} // namespace detail

/// ⟨gens⟩ inside `g`. Redundant generators are dropped.
inline Subgroup generated_subgroup(Group const &g, std::span<Elem const> gens)
{
  std::vector<Elem> kept;
  detail::Bitset in(g.order());
  in.set(0);
  for (Elem x : gens) {
    if (x >= g.order())
      throw PreconditionError("element index out of range");
    if (in.test(x))
      continue;
    kept.push_back(x);
    in = detail::closure_bits(g, kept);
  }
  return Subgroup(g, std::move(in), std::move(kept));
}

inline Subgroup generated_subgroup(Group const &g, std::initializer_list<Elem> gens)
{
  std::vector<Elem> v(gens);
  return generated_subgroup(g, std::span<Elem const>(v));
}

/// The subgroup whose members are exactly `members`; throws unless closed.
inline Subgroup subgroup_from_members(Group const &g, detail::Bitset const &members)
{
  std::vector<Elem> elems;
  for (auto i = members.find_first(); i != detail::Bitset::npos; i = members.find_next(i))
    elems.push_back(static_cast<Elem>(i));
  Subgroup s = generated_subgroup(g, std::span<Elem const>(elems));
  if (!(s.members() == members))
    throw PreconditionError("element set is not closed under multiplication");
  return s;
}

inline Subgroup full_subgroup(Group const &g)
{
  std::vector<Elem> gens;
  for (auto const &p : g.generators())
    gens.push_back(*g.index_of(p));
  return generated_subgroup(g, std::span<Elem const>(gens));
}

inline Subgroup trivial_subgroup(Group const &g)
{
  return generated_subgroup(g, std::span<Elem const>());
}

/// Subgroup generated by permutations given explicitly; each must lie in `g`.
inline Subgroup subgroup_of_permutations(Group const &g,
                                         std::vector<Permutation> const &perms)
{
  std::vector<Elem> idx;
  for (auto const &p : perms) {
    auto i = g.index_of(p);
    if (!i)
      throw PreconditionError("permutation " + to_cycles(p) + " is not in the group");
    idx.push_back(*i);
  }
  return generated_subgroup(g, std::span<Elem const>(idx));
}

inline Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  detail::require_same_parent(a, b, "intersection");
  return subgroup_from_members(a.parent(), a.members() & b.members());
}

inline Subgroup join(Subgroup const &a, Subgroup const &b)
{
  detail::require_same_parent(a, b, "join");
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generated_subgroup(a.parent(), std::span<Elem const>(gens));
}

/// g⁻¹ H g.
inline Subgroup conjugate(Subgroup const &h, Elem g)
{
  auto const &G = h.parent();
  std::vector<Elem> gens;
  for (Elem x : h.generators())
    gens.push_back(G.conj(g, x));
  return generated_subgroup(G, std::span<Elem const>(gens));
}

/// True iff b⁻¹ab ∈ A for all a ∈ A, b ∈ B. Requires A ⊆ B.
inline bool is_normal(Subgroup const &a, Subgroup const &b)
{
  detail::require_nested(a, b, "is_normal");
  auto const &G = a.parent();
  for (Elem y : b.generators())
    for (Elem x : a.generators())
      if (!a.contains(G.conj(y, x)))
        return false;
  return true;
}

/// Smallest N with H ⊆ N ⊴ B.
inline Subgroup normal_closure(Subgroup const &h, Subgroup const &b)
{
  detail::require_nested(h, b, "normal_closure");
  auto const &G = h.parent();
  std::vector<Elem> gens = h.generators();
  detail::Bitset in = detail::closure_bits(G, gens);
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem y : b.generators()) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem c = G.conj(y, gens[k]);
        if (!in.test(c)) {
          gens.push_back(c);
          in = detail::closure_bits(G, gens);
          changed = true;
        }
      }
    }
  }
  return Subgroup(G, std::move(in), std::move(gens));
}

struct SubnormalClosure
{
  Subgroup closure;
  /// B = S₀ ⊵ S₁ ⊵ … ⊵ S_k = closure; no repeated entries.
  std::vector<Subgroup> chain;
};

/**
 * Smallest subgroup containing H that is subnormal in B, with the chain of
 * iterated normal closures that witnesses subnormality.
 */
inline SubnormalClosure subnormal_closure(Subgroup const &h, Subgroup const &b)
{
  detail::require_nested(h, b, "subnormal_closure");
  SubnormalClosure r{b, {b}};
  for (;;) {
    Subgroup next = normal_closure(h, r.closure);
    if (next == r.closure)
      break;
    r.chain.push_back(next);
    r.closure = std::move(next);
  }
  return r;
}

/**
 * Every subgroup of `g`, each once, in canonical subgroup order.
 *
 * Starts from the cyclic subgroups and joins each found subgroup with every
 * cyclic subgroup until nothing new appears; every subgroup is a join of
 * cyclic ones, so the fixpoint is complete.
 */
inline std::vector<Subgroup> all_subgroups(Group const &g,
                                           std::size_t bound = Bounds{}.subgroups)
{
  if (g.order() > bound)
    throw SizeError("group of order " + std::to_string(g.order()) +
                    " exceeds subgroup-enumeration bound " + std::to_string(bound));

  std::unordered_map<detail::Bitset, std::size_t, detail::BitsetHash> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup s) -> bool {
    auto [it, inserted] = seen.emplace(s.members(), found.size());
    if (inserted)
      found.push_back(std::move(s));
    return inserted;
  };

  for (Elem x = 0; x < g.order(); ++x)
    add(generated_subgroup(g, {x}));
  std::size_t n_cyclic = found.size();

  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t c = 0; c < n_cyclic; ++c) {
      if (found[c].is_subgroup_of(found[k]))
        continue;
      add(join(found[k], found[c]));
    }
  }

  std::sort(found.begin(), found.end());
  return found;
}

/**
 * B/N as a table over coset labels. Each coset is represented by its least
 * element in the canonical element order; labels follow representative order,
 * so the identity coset is label 0.
 */
inline AbstractGroup quotient(Subgroup const &b, Subgroup const &n,
                              std::size_t verify_bound = Bounds{}.isomorphism)
{
  detail::require_nested(n, b, "quotient");
  if (!is_normal(n, b))
    throw PreconditionError("quotient: subgroup is not normal");
  auto const &G = b.parent();

  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> label(G.order(), unset);
  std::vector<Elem> reps;
  for (Elem x : b.elements()) {
    if (label[x] != unset)
      continue;
    Elem l = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y : n.elements())
      label[G.mul(x, y)] = l;
  }
  std::size_t k = reps.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = label[G.mul(reps[i], reps[j])];
  return AbstractGroup(k, std::move(table), verify_bound);
}

} // namespace galtour

#endif // GALTOUR_GROUP_HPP
