#ifndef GALTOUR_TESTS_SUPPORT_HPP
#define GALTOUR_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include <galtour.hpp>

namespace galtour::testing {

/// Permutation on `degree` points from 1-based cycle text.
inline Permutation cyc(std::size_t degree, std::string const &text)
{ return parse_cycles(text, degree); }

inline Permutation rotation(std::size_t n)
{
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<Point>((i + 1) % n);
  return Permutation(im);
}

inline Permutation reflection(std::size_t n)
{
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<Point>((n - i) % n);
  return Permutation(im);
}

inline Group dihedral(std::size_t n) { return generate(n, {rotation(n), reflection(n)}); }
inline Group cyclic(std::size_t n) { return generate(n, {rotation(n)}); }
inline Group symmetric(std::size_t n)
{
  if (n == 1)
    return generate(1, {});
  return generate(n, {rotation(n), cyc(n, "(1 2)")});
}

inline Elem elem(Group const &g, Permutation const &p) { return *g.index_of(p); }

/// Every shipped context whose group order is at most `max_order`.
inline std::vector<GaloisContext> contexts_up_to(std::size_t max_order)
{
  std::vector<GaloisContext> r;
  for (auto const &sel : shipped_selectors()) {
    auto c = load_selector(sel);
    if (c.group().order() <= max_order)
      r.push_back(std::move(c));
  }
  return r;
}

} // namespace galtour::testing

#endif
