#include <gtest/gtest.h>

#include "support.hpp"

using namespace galtour;
using namespace galtour::testing;

TEST(NumberTheory, Basics)
{
  EXPECT_EQ(nt::phi(1), 1);
  EXPECT_EQ(nt::phi(12), 4);
  EXPECT_EQ(nt::phi(9), 6);
  EXPECT_TRUE(nt::is_prime(13));
  EXPECT_FALSE(nt::is_prime(1));
  EXPECT_EQ(nt::divisors(12), (std::vector<nt::i64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(nt::units(8), (std::vector<nt::i64>{1, 3, 5, 7}));
  EXPECT_EQ(nt::mod(-3, 5), 2);
}

TEST(NumberTheory, Rationals)
{
  auto r = nt::parse_rational("-6/4");
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_THROW(nt::parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(nt::parse_rational("x"), ParseError);
  EXPECT_TRUE(nt::is_pth_power(nt::parse_rational("8/27"), 3));
  EXPECT_FALSE(nt::is_pth_power(nt::parse_rational("2"), 2));
  EXPECT_TRUE(nt::is_minus_four_fourth_power(nt::parse_rational("-4")));
  EXPECT_TRUE(nt::is_minus_four_fourth_power(nt::parse_rational("-64")));
  EXPECT_FALSE(nt::is_minus_four_fourth_power(nt::parse_rational("-2")));
  EXPECT_EQ(nt::squarefree_part(nt::parse_rational("12")), 3);
  EXPECT_EQ(nt::quadratic_conductor(2), 8);
  EXPECT_EQ(nt::quadratic_conductor(-3), 3);
  EXPECT_EQ(nt::quadratic_conductor(5), 5);
  EXPECT_EQ(nt::quadratic_conductor(-1), 4);
}

TEST(Radical, Examples)
{
  struct Case { std::string sel, field; std::size_t order, deg; };
  for (auto const &c : std::vector<Case>{{"radical:a=2,n=6", "Q(6rt2)", 12, 6},
                                         {"radical:a=2,n=4", "Q(4rt2)", 8, 4},
                                         {"radical:a=2,n=9", "Q(9rt2)", 54, 9},
                                         {"radical:a=2,n=3", "Q(3rt2)", 6, 3},
                                         {"radical:a=3,n=2", "Q(sqrt3)", 2, 2}}) {
    auto ctx = load_selector(c.sel);
    EXPECT_EQ(ctx.group().order(), c.order) << c.sel;
    auto f = ctx.resolve(c.field);
    EXPECT_EQ(ctx.distinguished(), f);
    EXPECT_EQ(degree(ctx, f, ctx.base()), c.deg);
  }
}

TEST(Radical, Validation)
{
  EXPECT_THROW(load_selector("radical:a=8,n=3"), PreconditionError);
  EXPECT_THROW(load_selector("radical:a=4,n=2"), PreconditionError);
  EXPECT_THROW(load_selector("radical:a=-4,n=4"), PreconditionError);
  EXPECT_THROW(load_selector("radical:a=-3,n=6"), PreconditionError);
  EXPECT_THROW(load_selector("radical:a=2,n=1"), PreconditionError);
  EXPECT_THROW(load_selector("radical:a=2"), ParseError);
  EXPECT_THROW(load_selector("radical:a=2,n=x"), ParseError);
  EXPECT_THROW(load_selector("radical:a=2,n=6,b=1"), ParseError);
}

TEST(Radical, EvenExponentNote)
{
  auto ctx = load_selector("radical:a=2,n=6");
  ASSERT_FALSE(ctx.notes().empty());
  EXPECT_TRUE(load_selector("radical:a=2,n=9").notes().empty());
}

TEST(Radical, SubfieldDegrees)
{
  auto ctx = load_selector("radical:a=2,n=6");
  EXPECT_EQ(degree(ctx, ctx.resolve("Q(sqrt2)"), ctx.base()), 2u);
  EXPECT_EQ(degree(ctx, ctx.resolve("Q(3rt2)"), ctx.base()), 3u);
  EXPECT_EQ(degree(ctx, ctx.resolve("Q(zeta3)"), ctx.base()), 2u);
  EXPECT_TRUE(ctx.is_subfield(ctx.resolve("Q(sqrt2)"), ctx.resolve("Q(6rt2)")));
  EXPECT_TRUE(ctx.is_subfield(ctx.resolve("Q(3rt2)"), ctx.resolve("Q(6rt2)")));
  EXPECT_FALSE(ctx.is_subfield(ctx.resolve("Q(zeta3)"), ctx.resolve("Q(6rt2)")));
}

TEST(CycloRadical, Examples)
{
  auto c = load_selector("cyclo-radical:n=2,d=3,l=3");
  auto l = c.resolve("L");
  EXPECT_EQ(c.group().order(), 12u);
  EXPECT_EQ(degree(c, l, c.base()), 6u);
  EXPECT_EQ(degree(c, c.resolve("F2"), c.base()), 2u);
  EXPECT_EQ(c.resolve("F2"), c.resolve("Q(i)"));
  auto r = intourability_field(c, l, c.base());
  EXPECT_EQ(r.M, c.resolve("F2"));
  EXPECT_EQ(r.degrees, (TourabilityDegree{2, 3}));

  auto c1 = load_selector("cyclo-radical:n=1,d=3,l=2");
  auto r1 = intourability_field(c1, c1.resolve("L"), c1.base());
  EXPECT_EQ(r1.degrees, (TourabilityDegree{1, 3}));
  auto c9 = load_selector("cyclo-radical:n=1,d=9,l=2");
  auto r9 = intourability_field(c9, c9.resolve("L"), c9.base());
  EXPECT_EQ(r9.degrees, (TourabilityDegree{1, 9}));
}

TEST(CycloRadical, DegreesAreNd)
{
  for (auto sel : {"cyclo-radical:n=2,d=3,l=3", "cyclo-radical:n=4,d=3,l=3",
                   "cyclo-radical:n=2,d=5,l=3", "cyclo-radical:n=3,d=5,l=2"}) {
    auto c = load_selector(sel);
    auto spec_n = degree(c, c.resolve("F" + std::string(1, sel[16])), c.base());
    auto r = intourability_field(c, c.resolve("L"), c.base());
    EXPECT_EQ(r.degrees.gal, spec_n) << sel;
    EXPECT_EQ(r.degrees.int_, degree(c, c.resolve("L"), c.resolve("F" + std::string(1, sel[16]))))
        << sel;
  }
}

TEST(CycloRadical, Validation)
{
  EXPECT_THROW(load_selector("cyclo-radical:n=2,d=4,l=3"), PreconditionError);
  EXPECT_THROW(load_selector("cyclo-radical:n=3,d=5,l=3"), PreconditionError);
  EXPECT_THROW(load_selector("cyclo-radical:n=3,d=3,l=2"), PreconditionError);
  EXPECT_THROW(load_selector("cyclo-radical:n=2,d=3,l=4"), PreconditionError);
}

TEST(SelmerSerre, Examples)
{
  for (int n = 3; n <= 5; ++n) {
    auto c = load_selector("selmer-serre:n=" + std::to_string(n));
    auto l = c.resolve("L"), k = c.resolve("K");
    EXPECT_TRUE(is_simple_ext(c, l, k)) << n;
    EXPECT_FALSE(is_galois(c, l, k)) << n;
    auto r = intourability_field(c, l, k);
    EXPECT_EQ(r.M, k);
    EXPECT_EQ(r.degrees, (TourabilityDegree{1, static_cast<std::size_t>(n)}));
  }
  auto c5 = load_selector("selmer-serre:n=5");
  EXPECT_EQ(c5.group().order(), 120u);
  EXPECT_EQ(c5.interval(c5.base(), c5.resolve("L")).size(), 2u);
  EXPECT_EQ(subnormal_closure(c5.subgroup(c5.resolve("L")), c5.subgroup(c5.base())).closure.order(),
            120u);
  EXPECT_THROW(load_selector("selmer-serre:n=6"), PreconditionError);
}

TEST(Cyclotomic, Examples)
{
  auto c = load_selector("cyclotomic:n=15");
  EXPECT_EQ(c.group().order(), 8u);
  EXPECT_EQ(c.resolve("Q(zeta3)"), c.resolve("Q(sqrt-3)"));
  EXPECT_EQ(degree(c, c.resolve("Q(zeta5)"), c.base()), 4u);
  EXPECT_THROW(load_selector("cyclotomic:n=2"), PreconditionError);
}

TEST(Catalog, Orders)
{
  std::map<std::string, std::size_t> orders{{"C2", 2}, {"C4", 4}, {"V4", 4}, {"S3", 6},
                                            {"C6", 6}, {"D4", 8}, {"Q8", 8}, {"C2^3", 8},
                                            {"D5", 10}, {"A4", 12}, {"D6", 12},
                                            {"C3xS3", 18}, {"S4", 24}, {"A5", 60}};
  EXPECT_EQ(catalog_group_names().size(), orders.size());
  for (auto const &name : catalog_group_names()) {
    auto c = group_context(name);
    EXPECT_EQ(c.group().order(), orders.at(name)) << name;
    EXPECT_EQ(c.resolve("K"), c.base());
    EXPECT_EQ(c.resolve("N"), c.top());
  }
  EXPECT_EQ(group_context("Q8").field_count(), 6u);
  EXPECT_THROW(group_context("S7"), PreconditionError);
}

TEST(Catalog, ShippedSelectorsLoad)
{
  for (auto const &sel : shipped_selectors()) {
    auto c = load_selector(sel);
    EXPECT_EQ(c.id(), sel);
    EXPECT_TRUE(c.is_subfield(c.base(), c.distinguished()));
  }
}

TEST(Selector, Errors)
{
  EXPECT_THROW(load_selector("radical"), ParseError);
  EXPECT_THROW(load_selector("bogus:x=1"), ParseError);
  EXPECT_THROW(load_selector("file:/nonexistent/instance.json"), PreconditionError);
}
