#ifndef GALTOUR_ABSTRACT_GROUP_HPP
#define GALTOUR_ABSTRACT_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace galtour {

using Elem = std::uint32_t;

/// Default size limits; every one can be overridden by the caller.
struct Bounds
{
  std::size_t closure = 10000;
  std::size_t subgroups = 384;
  std::size_t isomorphism = 200;
};

/**
 * A finite group given by its multiplication table over labels 0..order-1,
 * with the identity at label 0.
 *
 * Quotients Gal(E/F) ≅ Gal(N/F)/Gal(N/E) are represented this way. The table
 * is validated on construction; associativity is checked when the order is at
 * most `verify_bound` (the check is cubic).
 */
class AbstractGroup
{
public:
  AbstractGroup()
  : _order(1), _table{0}, _inverse{0}
  {}

  AbstractGroup(std::size_t order, std::vector<Elem> table,
                std::size_t verify_bound = 200)
  : _order(order), _table(std::move(table))
  {
    if (order == 0)
      throw PreconditionError("abstract group of order 0");
    if (_table.size() != order * order)
      throw PreconditionError("multiplication table has wrong size");
    for (auto v : _table)
      if (v >= order)
        throw PreconditionError("multiplication table entry out of range");

    for (Elem a = 0; a < order; ++a)
      if (mul(0, a) != a || mul(a, 0) != a)
        throw PreconditionError("label 0 is not the identity");

    // Latin square rows and columns.
    std::vector<char> seen(order);
    for (Elem a = 0; a < order; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < order; ++b) {
        if (seen[mul(a, b)]++)
          throw PreconditionError("multiplication table row is not a bijection");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem b = 0; b < order; ++b) {
        if (seen[mul(b, a)]++)
          throw PreconditionError("multiplication table column is not a bijection");
      }
    }

    _inverse.assign(order, 0);
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b) {
        if (mul(a, b) == 0) {
          if (mul(b, a) != 0)
            throw PreconditionError("left and right inverses differ");
          _inverse[a] = b;
          break;
        }
      }
    }

    if (order <= verify_bound) {
      for (Elem a = 0; a < order; ++a)
        for (Elem b = 0; b < order; ++b) {
          Elem ab = mul(a, b);
          for (Elem c = 0; c < order; ++c)
            if (mul(ab, c) != mul(a, mul(b, c)))
              throw PreconditionError("multiplication table is not associative");
        }
    }
  }

  std::size_t order() const noexcept { return _order; }

  Elem mul(Elem a, Elem b) const { return _table[a * _order + b]; }
  Elem inv(Elem a) const { return _inverse[a]; }

  std::vector<Elem> const &table() const noexcept { return _table; }

  std::size_t element_order(Elem a) const
  {
    std::size_t k = 1;
    for (Elem x = a; x != 0; x = mul(x, a))
      ++k;
    return k;
  }

  /// Sorted multiset of element orders; an isomorphism invariant.
  std::vector<std::size_t> order_statistics() const
  {
    std::vector<std::size_t> r(_order);
    for (Elem a = 0; a < _order; ++a)
      r[a] = element_order(a);
    std::sort(r.begin(), r.end());
    return r;
  }

  /// Members of the subgroup generated by `gens`, as a membership mask.
  std::vector<char> closure(std::vector<Elem> const &gens) const
  {
    std::vector<char> in(_order, 0);
    std::vector<Elem> queue{0};
    in[0] = 1;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Elem x = queue[k];
      for (Elem g : gens) {
        Elem y = mul(x, g);
        if (!in[y]) {
          in[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return in;
  }

  bool operator==(AbstractGroup const &o) const
  { return _order == o._order && _table == o._table; }

private:
  std::size_t _order;
  std::vector<Elem> _table;
  std::vector<Elem> _inverse;
};

namespace detail {

inline void check_iso_bound(AbstractGroup const &g, std::size_t bound)
{
  if (g.order() > bound)
    throw SizeError("group of order " + std::to_string(g.order()) +
                    " exceeds isomorphism bound " + std::to_string(bound));
}

// Greedy generating set: elements in decreasing element order, each kept only
// if it is outside the subgroup generated so far.
inline std::vector<Elem> greedy_generators(AbstractGroup const &g)
{
  std::vector<Elem> cand;
  for (Elem a = 1; a < g.order(); ++a)
    cand.push_back(a);
  std::vector<std::size_t> ord(g.order());
  for (Elem a = 0; a < g.order(); ++a)
    ord[a] = g.element_order(a);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });

  std::vector<Elem> gens;
  std::vector<char> in = g.closure(gens);
  for (Elem a : cand) {
    if (in[a])
      continue;
    gens.push_back(a);
    in = g.closure(gens);
  }
  return gens;
}

class IsoSearch
{
public:
  IsoSearch(AbstractGroup const &g1, AbstractGroup const &g2)
  : _g1(g1), _g2(g2), _gens(greedy_generators(g1))
  {
    _ord2.resize(g2.order());
    for (Elem a = 0; a < g2.order(); ++a)
      _ord2[a] = g2.element_order(a);
  }

  std::optional<std::vector<Elem>> run()
  {
    _images.clear();
    if (search(0))
      return _map;
    return std::nullopt;
  }

private:
  static constexpr Elem unset = static_cast<Elem>(-1);

  // Extend the map over the subgroup generated by the assigned generators,
  // rejecting conflicts and non-injective assignments.
  bool extend()
  {
    std::size_t n = _g1.order();
    _map.assign(n, unset);
    std::vector<char> used(n, 0);
    _map[0] = 0;
    used[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      Elem x = queue[k];
      for (std::size_t i = 0; i < _images.size(); ++i) {
        Elem y = _g1.mul(x, _gens[i]);
        Elem fy = _g2.mul(_map[x], _images[i]);
        if (_map[y] == unset) {
          if (used[fy])
            return false;
          _map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (_map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t k)
  {
    if (k == _gens.size())
      return extend();
    std::size_t want = _g1.element_order(_gens[k]);
    for (Elem c = 1; c < _g2.order(); ++c) {
      if (_ord2[c] != want)
        continue;
      _images.push_back(c);
      if (extend() && search(k + 1))
        return true;
      _images.pop_back();
    }
    return false;
  }

  AbstractGroup const &_g1;
  AbstractGroup const &_g2;
  std::vector<Elem> _gens;
  std::vector<std::size_t> _ord2;
  std::vector<Elem> _images;
  std::vector<Elem> _map;
};

} // namespace detail

/// True iff `phi` (indexed by labels of `g1`) is an isomorphism onto `g2`.
inline bool is_isomorphism(AbstractGroup const &g1, AbstractGroup const &g2,
                           std::vector<Elem> const &phi)
{
  if (g1.order() != g2.order() || phi.size() != g1.order())
    return false;
  std::vector<char> used(g2.order(), 0);
  for (auto v : phi) {
    if (v >= g2.order() || used[v])
      return false;
    used[v] = 1;
  }
  for (Elem a = 0; a < g1.order(); ++a)
    for (Elem b = 0; b < g1.order(); ++b)
      if (phi[g1.mul(a, b)] != g2.mul(phi[a], phi[b]))
        return false;
  return true;
}

/**
 * Explicit isomorphism g1 → g2 as a label map, or nullopt.
 *
 * Backtracks over images of a greedy generating set of g1, pruned by element
 * order and by consistency on the partially generated subgroup. The first
 * isomorphism found in label order is returned, so results are deterministic.
 */
inline std::optional<std::vector<Elem>>
are_isomorphic(AbstractGroup const &g1, AbstractGroup const &g2,
               std::size_t bound = Bounds{}.isomorphism)
{
  detail::check_iso_bound(g1, bound);
  detail::check_iso_bound(g2, bound);
  if (g1.order() != g2.order())
    return std::nullopt;
  if (g1.order_statistics() != g2.order_statistics())
    return std::nullopt;

  auto phi = detail::IsoSearch(g1, g2).run();
  if (phi && !is_isomorphism(g1, g2, *phi))
    throw TheoremViolation("isomorphism search produced a non-homomorphism");
  return phi;
}

inline bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// No proper nontrivial normal subgroup. The trivial group is not simple.
inline bool is_simple(AbstractGroup const &g,
                      std::size_t bound = Bounds{}.isomorphism)
{
  detail::check_iso_bound(g, bound);
  std::size_t n = g.order();
  if (n == 1)
    return false;
  if (is_prime(n))
    return true;

  std::vector<char> done(n, 0);
  for (Elem x = 1; x < n; ++x) {
    if (done[x])
      continue;
    std::vector<Elem> cls;
    std::vector<char> in_cls(n, 0);
    for (Elem h = 0; h < n; ++h) {
      Elem c = g.mul(g.mul(h, x), g.inv(h));
      if (!in_cls[c]) {
        in_cls[c] = 1;
        cls.push_back(c);
        done[c] = 1;
      }
    }
    auto in = g.closure(cls);
    std::size_t size = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
    if (size != n)
      return false;
  }
  return true;
}

} // namespace galtour

#endif // GALTOUR_ABSTRACT_GROUP_HPP
