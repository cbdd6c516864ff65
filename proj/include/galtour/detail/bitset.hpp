#ifndef GALTOUR_DETAIL_BITSET_HPP
#define GALTOUR_DETAIL_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace galtour::detail {

// Fixed-size bitset whose size is chosen at runtime.
class Bitset
{
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;

  explicit Bitset(std::size_t size)
  : _size(size), _words((size + 63) / 64, 0)
  {}

  std::size_t size() const noexcept { return _size; }

  bool test(std::size_t i) const
  { return (_words[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i)
  { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(std::size_t i)
  { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept
  {
    std::size_t n = 0;
    for (auto w : _words)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const noexcept
  {
    for (auto w : _words)
      if (w)
        return false;
    return true;
  }

  bool is_subset_of(Bitset const &other) const noexcept
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      if (_words[k] & ~other._words[k])
        return false;
    return true;
  }

  Bitset &operator&=(Bitset const &other) noexcept
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] &= other._words[k];
    return *this;
  }

  Bitset &operator|=(Bitset const &other) noexcept
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] |= other._words[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, Bitset const &b) { return a &= b; }
  friend Bitset operator|(Bitset a, Bitset const &b) { return a |= b; }

  std::size_t find_first() const noexcept { return find_next_from(0); }

  std::size_t find_next(std::size_t i) const noexcept
  { return find_next_from(i + 1); }

  bool operator==(Bitset const &) const = default;

  std::size_t hash() const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto w : _words) {
      h ^= std::hash<std::uint64_t>{}(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::vector<std::uint64_t> const &words() const noexcept { return _words; }

private:
  std::size_t find_next_from(std::size_t i) const noexcept
  {
    if (i >= _size)
      return npos;
    std::size_t k = i >> 6;
    std::uint64_t w = _words[k] & (~std::uint64_t{0} << (i & 63));
    for (;;) {
      if (w)
        return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == _words.size())
        return npos;
      w = _words[k];
    }
  }

  std::size_t _size = 0;
  std::vector<std::uint64_t> _words;
};

struct BitsetHash
{
  std::size_t operator()(Bitset const &b) const noexcept { return b.hash(); }
};

} // namespace galtour::detail

#endif // GALTOUR_DETAIL_BITSET_HPP
