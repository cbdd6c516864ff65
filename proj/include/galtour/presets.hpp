#ifndef GALTOUR_PRESETS_HPP
#define GALTOUR_PRESETS_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "group.hpp"
#include "permutation.hpp"

namespace galtour {

namespace nt {

using i64 = std::int64_t;

/// Prime factorization of n > 0 as (prime, exponent) pairs.
inline std::vector<std::pair<i64, int>> factorize(i64 n)
{
  std::vector<std::pair<i64, int>> r;
  for (i64 p = 2; p * p <= n; ++p) {
    int e = 0;
    for (; n % p == 0; n /= p)
      ++e;
    if (e)
      r.emplace_back(p, e);
  }
  if (n > 1)
    r.emplace_back(n, 1);
  return r;
}

inline i64 phi(i64 n)
{
  i64 r = n;
  for (auto [p, e] : factorize(n))
    r = r / p * (p - 1);
  return r;
}

inline bool is_prime(i64 n) { return n >= 2 && factorize(n).size() == 1 && factorize(n)[0].second == 1; }

inline std::vector<i64> divisors(i64 n)
{
  std::vector<i64> r;
  for (i64 d = 1; d <= n; ++d)
    if (n % d == 0)
      r.push_back(d);
  return r;
}

inline i64 mod(i64 a, i64 m) { return ((a % m) + m) % m; }

/// Units of ℤ/m in increasing order; {0} stands for the unit of ℤ/1.
inline std::vector<i64> units(i64 m)
{
  std::vector<i64> r;
  if (m == 1)
    return {0};
  for (i64 s = 1; s < m; ++s)
    if (std::gcd(s, m) == 1)
      r.push_back(s);
  return r;
}

/// A nonzero rational num/den in lowest terms with den > 0.
struct Rational
{
  i64 num = 1;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d)
  {
    if (d == 0 || n == 0)
      throw PreconditionError("radical parameter must be a nonzero rational");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
  }

  std::string str() const
  { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational parse_rational(std::string const &s)
{
  auto slash = s.find('/');
  char *end = nullptr;
  auto num_s = s.substr(0, slash);
  i64 n = std::strtoll(num_s.c_str(), &end, 10);
  if (num_s.empty() || *end)
    throw ParseError("bad rational '" + s + "'");
  i64 d = 1;
  if (slash != std::string::npos) {
    auto den_s = s.substr(slash + 1);
    d = std::strtoll(den_s.c_str(), &end, 10);
    if (den_s.empty() || *end)
      throw ParseError("bad rational '" + s + "'");
  }
  return Rational(n, d);
}

inline bool is_pth_power_int(i64 n, i64 p)
{
  for (auto [q, e] : factorize(n))
    if (e % p)
      return false;
  return true;
}

/// a ∈ ℚ^p: all exponents of |num|, den divisible by p, and p odd or a > 0.
inline bool is_pth_power(Rational const &a, i64 p)
{
  if (a.num < 0 && p % 2 == 0)
    return false;
  i64 n = a.num < 0 ? -a.num : a.num;
  return is_pth_power_int(n, p) && is_pth_power_int(a.den, p);
}

/// a ∈ −4ℚ⁴.
inline bool is_minus_four_fourth_power(Rational const &a)
{
  if (a.num > 0)
    return false;
  Rational b(-a.num, 4 * a.den);
  return is_pth_power(b, 4);
}

/// Squarefree integer a₀ with ℚ(√a) = ℚ(√a₀).
inline i64 squarefree_part(Rational const &a)
{
  i64 n = (a.num < 0 ? -a.num : a.num) * a.den;
  i64 r = 1;
  for (auto [p, e] : factorize(n))
    if (e % 2)
      r *= p;
  return a.num < 0 ? -r : r;
}

/// Conductor of ℚ(√a₀) for squarefree a₀ ≠ 1.
inline i64 quadratic_conductor(i64 a0)
{
  i64 abs_a = a0 < 0 ? -a0 : a0;
  return mod(a0, 4) == 1 ? abs_a : 4 * abs_a;
}

} // namespace nt

namespace detail {

// Realizes pairs (t, s) as permutations, then registers fields cut out by
// predicates on the pairs.
struct PairModel
{
  std::size_t degree;
  std::function<Permutation(nt::i64, nt::i64)> perm;
  std::vector<nt::i64> ts;
  std::vector<nt::i64> ss;

  std::vector<Permutation> members(std::function<bool(nt::i64, nt::i64)> const &pred) const
  {
    std::vector<Permutation> r;
    for (auto t : ts)
      for (auto s : ss)
        if (pred(t, s))
          r.push_back(perm(t, s));
    return r;
  }

  std::vector<Permutation> all() const
  { return members([](nt::i64, nt::i64) { return true; }); }
};

inline void require_order(Group const &g, std::size_t expected, std::string const &what)
{
  if (g.order() != expected)
    throw TheoremViolation(what + ": constructed group has order " +
                           std::to_string(g.order()) + ", expected " +
                           std::to_string(expected));
}

inline void name_if_free(ContextBuilder &b, std::string const &name, FieldRef f)
{
  if (!b.has_name(name))
    b.name(name, f);
}

} // namespace detail

struct RadicalSpec
{
  nt::Rational a{2, 1};
  nt::i64 n = 2;
};

/**
 * Checks the irreducibility hypotheses on X^n − a, and that √a ∉ ℚ(ζ_n) when
 * n is even (otherwise the closure has degree below n·φ(n)).
 */
inline void validate(RadicalSpec const &s)
{
  if (s.n < 2)
    throw PreconditionError("radical: n must be at least 2");
  for (auto [p, e] : nt::factorize(s.n))
    if (nt::is_pth_power(s.a, p))
      throw PreconditionError("radical: a = " + s.a.str() + " is a " + std::to_string(p) +
                              "-th power in Q (prime " + std::to_string(p) + " divides n)");
  if (s.n % 4 == 0 && nt::is_minus_four_fourth_power(s.a))
    throw PreconditionError("radical: 4 divides n and a = " + s.a.str() + " lies in -4Q^4");
  if (s.n % 2 == 0) {
    auto f = nt::quadratic_conductor(nt::squarefree_part(s.a));
    if (s.n % f == 0)
      throw PreconditionError("radical: sqrt(" + s.a.str() + ") lies in Q(zeta" +
                              std::to_string(s.n) + ")");
  }
}

inline std::string radical_name(nt::i64 m, std::string const &a)
{
  if (m == 1)
    return "Q";
  if (m == 2)
    return "Q(sqrt" + a + ")";
  return "Q(" + std::to_string(m) + "rt" + a + ")";
}

/**
 * Closure of ℚ(a^{1/n})/ℚ: pairs (t ∈ ℤ/n, s ∈ (ℤ/n)^*) acting on n root
 * symbols ζ^k α (k ↦ s k + t) and n cyclotomic symbols ζ^k (k ↦ s k).
 * Distinguished field: ℚ(a^{1/n}).
 */
inline GaloisContext radical_context(RadicalSpec const &spec, Bounds bounds = {})
{
  validate(spec);
  nt::i64 n = spec.n;
  detail::PairModel pm;
  pm.degree = static_cast<std::size_t>(2 * n);
  for (nt::i64 t = 0; t < n; ++t)
    pm.ts.push_back(t);
  pm.ss = nt::units(n);
  pm.perm = [n](nt::i64 t, nt::i64 s) {
    std::vector<Point> img(static_cast<std::size_t>(2 * n));
    for (nt::i64 k = 0; k < n; ++k) {
      img[k] = static_cast<Point>(nt::mod(s * k + t, n));
      img[n + k] = static_cast<Point>(n + nt::mod(s * k, n));
    }
    return Permutation(std::move(img));
  };

  Group g = generate(pm.degree, pm.all(), bounds.closure);
  detail::require_order(g, static_cast<std::size_t>(n * nt::phi(n)), "radical");

  ContextBuilder b(g, bounds);
  std::string a = spec.a.str();
  auto field = [&](auto pred) { return b.field_generated_by(pm.members(pred)); };

  b.name("Q", b.base());
  for (auto m : nt::divisors(n)) {
    if (m == 1)
      continue;
    b.name(radical_name(m, a), field([m](nt::i64 t, nt::i64) { return t % m == 0; }));
  }
  for (auto m : nt::divisors(n)) {
    if (m < 3)
      continue;
    FieldRef z = field([m](nt::i64, nt::i64 s) { return nt::mod(s, m) == 1; });
    b.name("Q(zeta" + std::to_string(m) + ")", z);
    if (m == 4)
      detail::name_if_free(b, "Q(i)", z);
  }
  if (n > 2)
    b.name("Q(zeta" + std::to_string(n) + "," + radical_name(n, a).substr(2), b.top());
  b.distinguished(b.resolve_field(radical_name(n, a)));
  b.id("radical:a=" + a + ",n=" + std::to_string(n));
  if (n % 2 == 0)
    b.note("hypothesis: classical (degree n*phi(n) for even n rests on the "
           "irreducibility criterion and sqrt(a) not in Q(zeta_n))");
  return std::move(b).build();
}

struct CycloRadicalSpec
{
  nt::i64 n = 1;
  nt::i64 d = 3;
  nt::i64 l = 2;
};

inline void validate(CycloRadicalSpec const &s)
{
  if (s.n < 1)
    throw PreconditionError("cyclo-radical: n must be at least 1");
  if (s.d < 3 || s.d % 2 == 0)
    throw PreconditionError("cyclo-radical: d must be odd and at least 3");
  if (!nt::is_prime(s.l))
    throw PreconditionError("cyclo-radical: l must be prime");
  if (s.n % s.l == 0)
    throw PreconditionError("cyclo-radical: l must not divide n");
  if (std::gcd(s.d, s.n) != 1)
    throw PreconditionError("cyclo-radical: gcd(d, n) must be 1");
}

namespace detail {

// Least subgroup (as a sorted residue list) of (ℤ/m)^* with the given order.
inline std::vector<nt::i64> least_unit_subgroup(nt::i64 m, std::size_t order)
{
  auto us = nt::units(m);
  if (m <= 2)
    return us;
  std::vector<Permutation> gens;
  auto mult = [m](nt::i64 u) {
    std::vector<Point> img(static_cast<std::size_t>(m));
    for (nt::i64 x = 0; x < m; ++x)
      img[x] = static_cast<Point>(nt::mod(u * x, m));
    return Permutation(std::move(img));
  };
  for (auto u : us)
    gens.push_back(mult(u));
  Group g = generate(static_cast<std::size_t>(m), gens);
  std::vector<std::vector<nt::i64>> cands;
  for (auto const &h : all_subgroups(g)) {
    if (h.order() != order)
      continue;
    std::vector<nt::i64> res;
    for (Elem e : h.elements())
      res.push_back(g.element(e)(1));
    std::sort(res.begin(), res.end());
    cands.push_back(std::move(res));
  }
  if (cands.empty())
    throw TheoremViolation("cyclo-radical: no subgroup of the required order");
  return *std::min_element(cands.begin(), cands.end());
}

} // namespace detail

/**
 * Closure ℚ(ζ_e, ρ)/ℚ with ρ^d = l and e = lcm(n², d): pairs
 * (t ∈ ℤ/d, s ∈ (ℤ/e)^*) acting on d root symbols ζ_d^k ρ (k ↦ s k + t) and
 * e cyclotomic symbols (k ↦ s k). F_n is the fixed field in ℚ(ζ_{n²}) of the
 * least subgroup H of order φ(n²)/n; the distinguished field is F_n(ρ).
 */
inline GaloisContext cyclo_radical_context(CycloRadicalSpec const &spec, Bounds bounds = {})
{
  validate(spec);
  nt::i64 n = spec.n, d = spec.d, n2 = n * n;
  nt::i64 e = std::lcm(n2, d);
  detail::PairModel pm;
  pm.degree = static_cast<std::size_t>(d + e);
  for (nt::i64 t = 0; t < d; ++t)
    pm.ts.push_back(t);
  pm.ss = nt::units(e);
  pm.perm = [d, e](nt::i64 t, nt::i64 s) {
    std::vector<Point> img(static_cast<std::size_t>(d + e));
    for (nt::i64 k = 0; k < d; ++k)
      img[k] = static_cast<Point>(nt::mod(s * k + t, d));
    for (nt::i64 k = 0; k < e; ++k)
      img[d + k] = static_cast<Point>(d + nt::mod(s * k, e));
    return Permutation(std::move(img));
  };

  Group g = generate(pm.degree, pm.all(), bounds.closure);
  detail::require_order(g, static_cast<std::size_t>(d * nt::phi(e)), "cyclo-radical");

  auto h = detail::least_unit_subgroup(n2, static_cast<std::size_t>(nt::phi(n2) / n));
  auto in_h = [&h, n2](nt::i64 s) {
    return n2 == 1 || std::binary_search(h.begin(), h.end(), nt::mod(s, n2));
  };

  ContextBuilder b(g, bounds);
  auto field = [&](auto pred) { return b.field_generated_by(pm.members(pred)); };
  auto rho_pow = [d](nt::i64 delta) {
    return delta == 1 ? std::string("rho") : "rho^" + std::to_string(delta);
  };

  b.name("Q", b.base());
  FieldRef l = field([&](nt::i64 t, nt::i64 s) { return t == 0 && in_h(s); });
  std::string ns = std::to_string(n), n2s = std::to_string(n2);
  if (n >= 2) {
    b.name("F" + ns, field([&](nt::i64, nt::i64 s) { return in_h(s); }));
    b.name("F" + ns + "(rho)", l);
  }
  for (auto delta : nt::divisors(d)) {
    if (delta == d)
      continue;
    b.name("Q(" + rho_pow(delta) + ")",
           field([&](nt::i64 t, nt::i64) { return (t * delta) % d == 0; }));
  }
  if (n >= 2) {
    b.name("E" + n2s, field([&](nt::i64, nt::i64 s) { return nt::mod(s, n2) == 1; }));
    for (auto delta : nt::divisors(d)) {
      if (delta == d)
        continue;
      b.name("E" + n2s + "(" + rho_pow(delta) + ")", field([&](nt::i64 t, nt::i64 s) {
               return nt::mod(s, n2) == 1 && (t * delta) % d == 0;
             }));
    }
  }
  for (auto m : nt::divisors(e)) {
    if (m < 3)
      continue;
    FieldRef z = field([m](nt::i64, nt::i64 s) { return nt::mod(s, m) == 1; });
    b.name("Q(zeta" + std::to_string(m) + ")", z);
    if (m == 4)
      detail::name_if_free(b, "Q(i)", z);
  }
  detail::name_if_free(b, "Q(zeta" + std::to_string(e) + ",rho)", b.top());
  b.distinguished(l);
  b.id("cyclo-radical:n=" + ns + ",d=" + std::to_string(d) + ",l=" + std::to_string(spec.l));
  return std::move(b).build();
}

/// S_n on n points; L is the fixed field of the stabilizer of point n.
inline GaloisContext selmer_serre_context(int n, Bounds bounds = {})
{
  if (n < 3 || n > 5)
    throw PreconditionError("selmer-serre: n must be between 3 and 5");
  std::vector<Point> cyc(n), tr(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = static_cast<Point>((i + 1) % n);
    tr[i] = static_cast<Point>(i);
  }
  std::swap(tr[0], tr[1]);
  Group g = generate(n, {Permutation(cyc), Permutation(tr)}, bounds.closure);
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i)
    fact *= i;
  detail::require_order(g, fact, "selmer-serre");

  ContextBuilder b(g, bounds);
  std::vector<Permutation> stab;
  for (auto const &p : g.elements())
    if (p(static_cast<Point>(n - 1)) == static_cast<Point>(n - 1))
      stab.push_back(p);
  FieldRef l = b.field_generated_by(stab);
  b.name("Q", b.base());
  b.name("Q(theta)", l);
  b.name("splitting", b.top());
  b.distinguished(l);
  b.id("selmer-serre:n=" + std::to_string(n));
  return std::move(b).build();
}

/// ℚ(ζ_N)/ℚ with (ℤ/N)^* acting on N symbols. Fields ℚ(ζ_m) for m | N,
/// and ℚ(√p*) for odd primes p | N. Distinguished field: ℚ(ζ_N).
inline GaloisContext cyclotomic_context(nt::i64 big_n, Bounds bounds = {})
{
  if (big_n < 3)
    throw PreconditionError("cyclotomic: N must be at least 3");
  std::vector<Permutation> gens;
  auto us = nt::units(big_n);
  auto mult = [big_n](nt::i64 u) {
    std::vector<Point> img(static_cast<std::size_t>(big_n));
    for (nt::i64 x = 0; x < big_n; ++x)
      img[x] = static_cast<Point>(nt::mod(u * x, big_n));
    return Permutation(std::move(img));
  };
  for (auto u : us)
    gens.push_back(mult(u));
  Group g = generate(static_cast<std::size_t>(big_n), gens, bounds.closure);
  detail::require_order(g, static_cast<std::size_t>(nt::phi(big_n)), "cyclotomic");

  ContextBuilder b(g, bounds);
  b.name("Q", b.base());
  for (auto m : nt::divisors(big_n)) {
    if (m < 3)
      continue;
    std::vector<Permutation> fix;
    for (auto u : us)
      if (nt::mod(u, m) == 1)
        fix.push_back(mult(u));
    FieldRef z = b.field_generated_by(fix);
    b.name("Q(zeta" + std::to_string(m) + ")", z);
    if (m == 4)
      detail::name_if_free(b, "Q(i)", z);
  }
  // ℚ(√p*) is the fixed field of the squares mod p.
  for (auto [p, e] : nt::factorize(big_n)) {
    if (p == 2)
      continue;
    std::vector<Permutation> fix;
    for (auto u : us) {
      nt::i64 r = nt::mod(u, p);
      bool square = false;
      for (nt::i64 x = 1; x < p; ++x)
        square = square || nt::mod(x * x, p) == r;
      if (square)
        fix.push_back(mult(u));
    }
    nt::i64 pstar = p % 4 == 1 ? p : -p;
    detail::name_if_free(b, "Q(sqrt" + std::to_string(pstar) + ")",
                         b.field_generated_by(fix));
  }
  b.distinguished(b.top());
  b.id("cyclotomic:n=" + std::to_string(big_n));
  return std::move(b).build();
}

/**
 * Small abstract groups as regular or natural permutation groups, used as
 * test contexts. L is the top field unless a point stabilizer is meaningful.
 */
inline std::vector<std::string> catalog_group_names()
{
  return {"C2", "C4", "V4", "S3", "C6", "D4", "Q8", "C2^3", "D5",
          "A4", "D6", "C3xS3", "S4", "A5"};
}

inline GaloisContext group_context(std::string const &name, Bounds bounds = {})
{
  auto P = [](std::string const &c, std::size_t deg) { return parse_cycles(c, deg); };
  std::size_t deg = 0;
  std::vector<Permutation> gens;
  if (name == "C2") { deg = 2; gens = {P("(1 2)", 2)}; }
  else if (name == "C4") { deg = 4; gens = {P("(1 2 3 4)", 4)}; }
  else if (name == "V4") { deg = 4; gens = {P("(1 2)(3 4)", 4), P("(1 3)(2 4)", 4)}; }
  else if (name == "S3") { deg = 3; gens = {P("(1 2 3)", 3), P("(1 2)", 3)}; }
  else if (name == "C6") { deg = 5; gens = {P("(1 2 3)(4 5)", 5)}; }
  else if (name == "D4") { deg = 4; gens = {P("(1 2 3 4)", 4), P("(1 3)", 4)}; }
  else if (name == "Q8") { deg = 8; gens = {P("(1 2 3 4)(5 6 7 8)", 8), P("(1 5 3 7)(2 8 4 6)", 8)}; }
  else if (name == "C2^3") { deg = 6; gens = {P("(1 2)", 6), P("(3 4)", 6), P("(5 6)", 6)}; }
  else if (name == "D5") { deg = 5; gens = {P("(1 2 3 4 5)", 5), P("(2 5)(3 4)", 5)}; }
  else if (name == "A4") { deg = 4; gens = {P("(1 2 3)", 4), P("(1 2)(3 4)", 4)}; }
  else if (name == "D6") { deg = 6; gens = {P("(1 2 3 4 5 6)", 6), P("(2 6)(3 5)", 6)}; }
  else if (name == "C3xS3") { deg = 6; gens = {P("(1 2 3)", 6), P("(4 5 6)", 6), P("(4 5)", 6)}; }
  else if (name == "S4") { deg = 4; gens = {P("(1 2 3 4)", 4), P("(1 2)", 4)}; }
  else if (name == "A5") { deg = 5; gens = {P("(1 2 3 4 5)", 5), P("(1 2 3)", 5)}; }
  else
    throw PreconditionError("unknown catalog group '" + name + "'");

  Group g = generate(deg, gens, bounds.closure);
  ContextBuilder b(g, bounds);
  b.name("K", b.base());
  b.name("N", b.top());
  b.distinguished(b.top());
  b.id("group:" + name);
  return std::move(b).build();
}

/// Selectors of every built-in instance; the oracle suite runs over these.
inline std::vector<std::string> shipped_selectors()
{
  std::vector<std::string> r = {
      "radical:a=2,n=2",  "radical:a=2,n=3",  "radical:a=2,n=4",
      "radical:a=2,n=6",  "radical:a=3,n=4",  "radical:a=2,n=9",
      "radical:a=5,n=5",  "cyclo-radical:n=1,d=3,l=2",
      "cyclo-radical:n=2,d=3,l=3", "cyclo-radical:n=1,d=9,l=2",
      "cyclo-radical:n=4,d=3,l=3", "selmer-serre:n=3",
      "selmer-serre:n=4", "selmer-serre:n=5", "cyclotomic:n=15",
      "cyclotomic:n=12",  "cyclotomic:n=5"};
  for (auto const &g : catalog_group_names())
    r.push_back("group:" + g);
  return r;
}

} // namespace galtour

#endif // GALTOUR_PRESETS_HPP
