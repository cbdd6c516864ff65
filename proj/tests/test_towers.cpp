#include <gtest/gtest.h>

#include "support.hpp"

using namespace galtour;
using namespace galtour::testing;

namespace {

GaloisContext const &r6()
{
  static auto ctx = load_selector("radical:a=2,n=6");
  return ctx;
}

GaloisContext const &r4()
{
  static auto ctx = load_selector("radical:a=2,n=4");
  return ctx;
}

Tower T(GaloisContext const &ctx, std::vector<std::string> names)
{ return make_tower(ctx, names); }

// Every non-decreasing tower from `k` to `l` of height at most h.
std::vector<Tower> all_towers(GaloisContext const &ctx, FieldRef k, FieldRef l, std::size_t h)
{
  std::vector<Tower> out;
  std::vector<FieldRef> path{k};
  auto iv = ctx.interval(k, l);
  std::function<void()> go = [&] {
    if (path.back() == l)
      out.emplace_back(ctx, path);
    if (path.size() > h)
      return;
    for (auto m : iv) {
      if (!ctx.is_subfield(path.back(), m))
        continue;
      path.push_back(m);
      go();
      path.pop_back();
    }
  };
  go();
  return out;
}

} // namespace

TEST(Tower, Construction)
{
  auto k = r6().resolve("K");
  Tower triv(r6(), {k});
  EXPECT_EQ(triv.height(), 0u);
  auto t = T(r6(), {"K", "K", "L"});
  EXPECT_EQ(t.height(), 2u);
  EXPECT_FALSE(is_strict(t));
  EXPECT_THROW(T(r6(), {"K", "L", "Q(sqrt2)"}), PreconditionError);
  EXPECT_THROW(Tower(r6(), {}), PreconditionError);
  EXPECT_THROW(make_tower(r6(), {k, r6().resolve("L")}, k, r6().top()), PreconditionError);
}

TEST(Tower, Predicates)
{
  Tower triv(r6(), {r6().base()});
  EXPECT_TRUE(is_strict(triv));
  EXPECT_TRUE(is_galois_tower(triv));
  EXPECT_TRUE(is_galtourable_tower(triv));

  auto g = T(r4(), {"Q", "Q(sqrt2)", "Q(4rt2)"});
  EXPECT_TRUE(is_strict(g));
  EXPECT_TRUE(is_galois_tower(g));
  EXPECT_TRUE(is_galtourable_tower(g));

  auto ng = T(r6(), {"Q", "Q(3rt2)", "Q(6rt2)"});
  EXPECT_FALSE(is_galois_tower(ng));
  EXPECT_FALSE(is_galtourable_tower(ng));
}

TEST(Tower, HeightBound)
{
  EXPECT_TRUE(height_bound_check(T(r4(), {"Q", "Q(sqrt2)", "Q(4rt2)"})));
  EXPECT_TRUE(height_bound_check(Tower(r4(), {r4().base()})));
  EXPECT_THROW(height_bound_check(T(r4(), {"Q", "Q", "Q(4rt2)"})), PreconditionError);
  EXPECT_EQ(big_omega(54), 4u);
  EXPECT_EQ(big_omega(1), 0u);

  auto ctx = load_selector("radical:a=2,n=9");
  for (auto const &t : all_towers(ctx, ctx.base(), ctx.top(), 6))
    if (is_strict(t))
      EXPECT_TRUE(height_bound_check(t));
}

TEST(Refinement, Witness)
{
  auto f = T(r6(), {"K", "L"});
  auto e = T(r6(), {"K", "Q(sqrt2)", "L"});
  EXPECT_EQ(refinement_witness(f, f)->indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(refinement_witness(e, f)->indices, (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(refinement_witness(f, e));
  EXPECT_THROW(refinement_witness(T(r6(), {"K", "Q(sqrt2)"}), f), PreconditionError);
}

TEST(Refinement, Kinds)
{
  auto f = T(r6(), {"Q", "Q(6rt2)"});
  auto e = T(r6(), {"Q", "Q(3rt2)", "Q(6rt2)"});
  EXPECT_TRUE(is_proper_refinement(e, f));
  EXPECT_FALSE(is_galois_refinement(e, f));

  auto e2 = T(r6(), {"Q", "Q(sqrt2)", "Q(6rt2)"});
  EXPECT_TRUE(is_proper_refinement(e2, f));
  EXPECT_TRUE(is_galois_refinement(e2, f));

  auto dup = T(r6(), {"Q", "Q", "Q(6rt2)", "Q(6rt2)"});
  EXPECT_TRUE(is_trivial_refinement(dup, f));
  EXPECT_TRUE(is_galois_refinement(dup, f));
  EXPECT_THROW(is_proper_refinement(f, e), PreconditionError);
}

TEST(Refinement, TrivialImpliesGaloisAndGaloisTowerImpliesGalois)
{
  for (auto const &ctx : {r6(), r4(), load_selector("group:S4")}) {
    auto towers = all_towers(ctx, ctx.base(), ctx.distinguished(), 3);
    for (auto const &e : towers) {
      for (auto const &f : towers) {
        if (!is_refinement(e, f))
          continue;
        if (is_trivial_refinement(e, f))
          EXPECT_TRUE(is_galois_refinement(e, f));
        if (is_galois_tower(e))
          EXPECT_TRUE(is_galois_refinement(e, f));
      }
    }
  }
}

TEST(Refinement, Transitive)
{
  auto ctx = load_selector("group:D4");
  auto towers = all_towers(ctx, ctx.base(), ctx.top(), 3);
  std::size_t chains = 0;
  for (auto const &a : towers)
    for (auto const &b : towers) {
      if (!is_refinement(a, b))
        continue;
      for (auto const &c : towers)
        if (is_refinement(b, c)) {
          ++chains;
          EXPECT_TRUE(is_refinement(a, c));
        }
    }
  EXPECT_GT(chains, 100u);
}

TEST(StrictAssociated, Examples)
{
  auto s = T(r6(), {"Q", "Q(sqrt2)", "L"});
  EXPECT_EQ(strict_associated(s), s);
  EXPECT_EQ(strict_associated(T(r6(), {"K", "K", "Q(sqrt2)", "Q(sqrt2)", "L"})), s);
  for (auto const &t : all_towers(r4(), r4().base(), r4().top(), 4)) {
    auto a = strict_associated(t);
    EXPECT_TRUE(is_strict(a));
    EXPECT_TRUE(is_trivial_refinement(t, a));
    EXPECT_EQ(strict_associated(a), a);
  }
}

TEST(ResRatInflate, Examples)
{
  auto t = T(r6(), {"Q", "Q(sqrt2)", "Q(6rt2)", "N"});
  EXPECT_EQ(res(t, 1), T(r6(), {"Q(sqrt2)", "Q(6rt2)", "N"}));
  EXPECT_EQ(rat(t, 1), T(r6(), {"Q", "Q(sqrt2)"}));
  EXPECT_EQ(res(t, 0), t);
  EXPECT_EQ(rat(t, 3), t);
  EXPECT_EQ(inflate(t, 2, r6().resolve("Q(6rt2)")), T(r6(), {"Q", "Q(sqrt2)", "Q(6rt2)"}));
  EXPECT_EQ(inf_top(t, 0), T(r6(), {"L"}));
  EXPECT_THROW(res(t, 4), PreconditionError);
  EXPECT_THROW(inflate(t, 2, r6().resolve("Q(3rt2)")), PreconditionError);
}

TEST(Combine, RoundTrip)
{
  for (auto const &f : all_towers(r4(), r4().base(), r4().top(), 3)) {
    for (std::size_t r = 0; r <= f.height(); ++r)
      EXPECT_EQ(combine(f, r, res(f, r), rat(f, r)), f);
  }
}

TEST(Combine, Refinements)
{
  auto f = T(r6(), {"Q", "Q(6rt2)", "N"});
  auto s = T(r6(), {"Q(6rt2)", "N"});
  auto rr = T(r6(), {"Q", "Q(sqrt2)", "Q(6rt2)"});
  auto e = combine(f, 1, s, rr);
  EXPECT_EQ(e, T(r6(), {"Q", "Q(sqrt2)", "Q(6rt2)", "N"}));
  EXPECT_TRUE(is_refinement(e, f));
  EXPECT_THROW(combine(f, 1, rr, s), PreconditionError);
}

TEST(Induced, Examples)
{
  auto t = T(r6(), {"Q", "Q(sqrt2)"});
  auto l = r6().resolve("L");
  EXPECT_EQ(induced(t, l), T(r6(), {"Q", "Q(sqrt2)", "L"}));
  EXPECT_EQ(induced(T(r6(), {"Q", "L"}), l), T(r6(), {"Q", "L"}));
  EXPECT_THROW(induced(T(r6(), {"Q", "Q(zeta3)"}), l), PreconditionError);
}

TEST(Equivalence, Examples)
{
  auto ctx = load_selector("group:V4");
  auto fs = ctx.interval(ctx.base(), ctx.top());
  std::vector<FieldRef> quad;
  for (auto f : fs)
    if (degree(ctx, f, ctx.base()) == 2)
      quad.push_back(f);
  ASSERT_EQ(quad.size(), 3u);
  Tower a(ctx, {ctx.base(), quad[0], ctx.top()});
  Tower b(ctx, {ctx.base(), quad[1], ctx.top()});
  auto w = equivalence_witness(a, b);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_equivalence(a, b, *w));
  for (auto const &g : marche_groups(a))
    EXPECT_EQ(g.order(), 2u);

  auto self = equivalence_witness(a, a);
  ASSERT_TRUE(self);
  EXPECT_EQ(self->sigma, (std::vector<std::size_t>{1, 2}));

  Tower flat(ctx, {ctx.base(), ctx.top()});
  EXPECT_FALSE(equivalence_witness(a, flat));
}

TEST(Equivalence, DistinguishesGroups)
{
  auto c4 = load_selector("cyclotomic:n=5");
  auto v4 = load_selector("cyclotomic:n=12");
  // C4 gives marches C2, C2; its flat tower has group C4.
  Tower flat(c4, {c4.base(), c4.top()});
  EXPECT_EQ(marche_groups(flat).front().order(), 4u);
  auto s3 = load_selector("group:S3");
  auto fs = s3.fields();
  std::vector<Tower> towers;
  for (auto m : fs)
    if (m != s3.base() && m != s3.top() && is_galois(s3, m, s3.base()) &&
        is_galois(s3, s3.top(), m))
      towers.emplace_back(s3, std::vector<FieldRef>{s3.base(), m, s3.top()});
  ASSERT_EQ(towers.size(), 1u);
  auto w = equivalence_witness(towers[0], towers[0]);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->sigma, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(v4.field_count(), 5u);
}

TEST(Equivalence, NonGaloisMarcheNamed)
{
  auto t = T(r6(), {"Q", "Q(3rt2)", "Q(6rt2)"});
  try {
    marche_groups(t);
    FAIL();
  } catch (PreconditionError const &e) {
    EXPECT_NE(std::string(e.what()).find("marche 1"), std::string::npos);
  }
}

TEST(Render, Markers)
{
  EXPECT_EQ(render_tower(T(r6(), {"Q", "Q", "Q(sqrt2)", "Q(6rt2)"})),
            "Q =[1] Q ⊴[2] Q(sqrt2) <[3] Q(6rt2)");
}
