#ifndef GALTOUR_GALTOURABILITY_HPP
#define GALTOUR_GALTOURABILITY_HPP

#include "galois.hpp"

namespace galtour {

/// E/F admits a Galois tower, decided as Gal(N/E) subnormal in Gal(N/F).
inline bool is_galtourable(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  detail::require_subfield(ctx, f, e, "is_galtourable");
  auto const &h = ctx.subgroup(e);
  return subnormal_closure(h, ctx.subgroup(f)).closure == h;
}

/// E ≠ F and no field strictly between them.
inline bool is_simple_ext(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  detail::require_subfield(ctx, f, e, "is_simple_ext");
  return e != f && ctx.interval(f, e).size() == 2;
}

/// E ≠ F and no M with F < M < E and M/F Galois.
inline bool is_galsimple(GaloisContext const &ctx, FieldRef e, FieldRef f)
{
  detail::require_subfield(ctx, f, e, "is_galsimple");
  if (e == f)
    return false;
  auto const &base = ctx.subgroup(f);
  for (auto m : ctx.interval(f, e)) {
    if (m == e || m == f)
      continue;
    if (is_normal(ctx.subgroup(m), base))
      return false;
  }
  return true;
}

} // namespace galtour

#endif // GALTOUR_GALTOURABILITY_HPP
