#ifndef GALTOUR_PERMUTATION_HPP
#define GALTOUR_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace galtour {

using Point = std::uint32_t;

/**
 * A bijection of {0, ..., degree-1}, stored as its image vector.
 *
 * Points are 0-based internally. The textual cycle notation used for I/O is
 * 1-based: `(1 2 3)(4 5)`, with `()` for the identity.
 */
class Permutation
{
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree)
  : _images(degree)
  {
    for (std::size_t i = 0; i < degree; ++i)
      _images[i] = static_cast<Point>(i);
  }

  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images)
  : _images(std::move(images))
  {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x])
        throw PreconditionError("image vector is not a bijection");
      seen[x] = true;
    }
  }

  Permutation(std::initializer_list<Point> images)
  : Permutation(std::vector<Point>(images))
  {}

  std::size_t degree() const noexcept { return _images.size(); }

  Point operator()(Point x) const { return _images[x]; }

  std::vector<Point> const &images() const noexcept { return _images; }

  bool is_identity() const noexcept
  {
    for (std::size_t i = 0; i < _images.size(); ++i)
      if (_images[i] != i)
        return false;
    return true;
  }

  Permutation inverse() const
  {
    Permutation r;
    r._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i)
      r._images[_images[i]] = static_cast<Point>(i);
    return r;
  }

  auto operator<=>(Permutation const &) const = default;
  bool operator==(Permutation const &) const = default;

private:
  std::vector<Point> _images;
};

/// (p∘q)(x) = p(q(x)).
inline Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw PreconditionError("compose: degree mismatch (" +
                            std::to_string(p.degree()) + " vs " +
                            std::to_string(q.degree()) + ")");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = p(q(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// 1-based disjoint cycle notation; fixed points omitted.
inline std::string to_cycles(Permutation const &p)
{
  std::ostringstream os;
  std::vector<bool> done(p.degree(), false);
  bool any = false;
  for (Point i = 0; i < p.degree(); ++i) {
    if (done[i] || p(i) == i)
      continue;
    any = true;
    os << '(';
    Point x = i;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first)
        os << ' ';
      os << x + 1;
      first = false;
      x = p(x);
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

inline std::ostream &operator<<(std::ostream &os, Permutation const &p)
{ return os << to_cycles(p); }

/**
 * Parse 1-based cycle notation such as `(1 2 3)(4 5)` or `(1,2)`.
 *
 * Cycles need not be disjoint; they are composed right to left, so
 * `(1 2)(2 3)` means (1 2)∘(2 3).
 */
inline Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  std::vector<std::vector<Point>> cycles;
  skip_ws();
  if (pos == text.size())
    throw ParseError("empty permutation text");

  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: '" + std::string(text) + "'");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("malformed cycle notation: '" + std::string(text) + "'");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > 1000000)
          throw ParseError("point out of range in '" + std::string(text) + "'");
        ++pos;
      }
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " outside 1.." +
                         std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (std::find(cycle.begin(), cycle.end(), p) != cycle.end())
        throw ParseError("repeated point in cycle: '" + std::string(text) + "'");
      cycle.push_back(p);
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    auto const &c = *it;
    if (c.size() < 2)
      continue;
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i)
      img[i] = static_cast<Point>(i);
    for (std::size_t k = 0; k < c.size(); ++k)
      img[c[k]] = c[(k + 1) % c.size()];
    result = compose(Permutation(std::move(img)), result);
  }
  return result;
}

} // namespace galtour

#endif // GALTOUR_PERMUTATION_HPP
