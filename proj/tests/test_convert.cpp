#include <stdexcept>

#include "doctest.h"
#include "flec/chain.hpp"
#include "flec/convert.hpp"
#include "flec/laws.hpp"
#include "flec/ogroup.hpp"
#include "frozen.hpp"

using namespace flec;

namespace {
ChainElement plain(std::vector<Int> coords) {
  return ChainElement{0, false, std::move(coords)};
}
ChainElement dotted(std::vector<Int> coords) {
  return ChainElement{0, true, std::move(coords)};
}
}  // namespace

TEST_CASE("a group read as a chain is odd and cancellative") {
  Chain c = induced_chain(OrderedGroup(1));
  CHECK(c.kind() == ChainKind::InducedGroup);
  CHECK(c.parity() == Parity::Odd);
  CHECK(c.unit() == c.falsum());
  CHECK_FALSE(c.finite_size());

  CHECK(c.mul(plain({3}), plain({-5})) == plain({-2}));
  CHECK(c.complement(plain({4})) == plain({-4}));
  // Residuation in the group: res(x, y) = y - x.
  CHECK(c.res(plain({3}), plain({5})) == plain({2}));
  CHECK(c.local_unit(plain({9})) == c.unit());

  CheckConfig cfg;
  CHECK(check_cancellative_odd(c, cfg).passed());
  CHECK(check_cancellative_odd(induced_chain(OrderedGroup(2)), cfg).passed());
}

TEST_CASE("group recovery accepts exactly the cancellative odd chains") {
  CHECK(induced_group(induced_chain(OrderedGroup(2))).rank() == 2);

  // The one-element chain is the trivial group.
  Chain one = table_chain(frozen::table(frozen::kS1));
  CHECK(induced_group(one).rank() == 0);

  // The three-element chain is odd but not cancellative.
  Chain s3 = table_chain(frozen::table(frozen::kS3));
  CheckConfig cfg;
  CHECK_FALSE(check_cancellative_odd(s3, cfg).passed());
  CHECK_THROWS_AS(induced_group(s3), std::domain_error);

  // Even chains are rejected outright.
  CHECK_THROWS_AS(induced_group(table_chain(frozen::table(frozen::kS4))),
                  std::domain_error);
}

TEST_CASE("downshift moves the falsum one step below the unit") {
  Chain z = induced_chain(OrderedGroup(1));
  Chain d = downshift(z);
  CHECK(d.kind() == ChainKind::Downshifted);
  CHECK(d.parity() == Parity::EvenNonIdempotent);
  CHECK(d.unit() == plain({0}));
  CHECK(d.falsum() == plain({-1}));

  // mul and the residual are untouched; the complement shifts down.
  CHECK(d.mul(plain({2}), plain({3})) == plain({5}));
  CHECK(d.res(plain({3}), plain({5})) == plain({2}));
  for (Int x : {-3, 0, 1, 7}) {
    CHECK(d.complement(plain({x})) == plain({-x - 1}));
  }
  // The falsum is not idempotent: f * f = -2 < f.
  CHECK(d.mul(d.falsum(), d.falsum()) == plain({-2}));

  CheckConfig cfg;
  CHECK(run_law_suite(d, cfg).passed());
}

TEST_CASE("downshift requires a discrete group chain") {
  CHECK_THROWS_AS(downshift(induced_chain(OrderedGroup(0))),
                  std::domain_error);
  CHECK_THROWS_AS(downshift(table_chain(frozen::table(frozen::kS3))),
                  std::domain_error);
}

TEST_CASE("upshift undoes downshift") {
  Chain z = induced_chain(OrderedGroup(2));
  Chain back = upshift(downshift(z));
  CheckConfig cfg;
  CHECK(chains_equivalent(back, z, cfg));
  CHECK_THROWS_AS(upshift(z), std::domain_error);
}

TEST_CASE("split doubles the subgroup with dotted copies") {
  Chain s = split(induced_chain(OrderedGroup(1)), SubgroupDesc::full());
  CHECK(s.kind() == ChainKind::Split);
  CHECK(s.parity() == Parity::EvenIdempotent);
  CHECK(s.unit() == plain({0}));
  CHECK(s.falsum() == dotted({0}));

  // The dotted copy sits immediately below its plain partner.
  CHECK(s.lt(dotted({3}), plain({3})));
  CHECK(s.lt(plain({2}), dotted({3})));
  auto down = s.cover(plain({3}), Direction::Down);
  REQUIRE(down);
  CHECK(*down == dotted({3}));
  auto down2 = s.cover(dotted({3}), Direction::Down);
  REQUIRE(down2);
  CHECK(*down2 == plain({2}));

  // Products stay plain only when both factors are plain subgroup
  // members; one dot poisons the product.
  CHECK(s.mul(plain({1}), plain({2})) == plain({3}));
  CHECK(s.mul(dotted({1}), plain({2})) == dotted({3}));
  CHECK(s.mul(dotted({1}), dotted({2})) == dotted({3}));

  // The complement swaps the copies; x * x' is always the falsum.
  CHECK(s.complement(plain({4})) == dotted({-4}));
  CHECK(s.complement(dotted({4})) == plain({-4}));
  for (Int x : {-2, 0, 5}) {
    CHECK(s.mul(plain({x}), s.complement(plain({x}))) == s.falsum());
    CHECK(s.mul(dotted({x}), s.complement(dotted({x}))) == s.falsum());
  }
  // The falsum is idempotent.
  CHECK(s.mul(s.falsum(), s.falsum()) == s.falsum());
}

TEST_CASE("split at a prefix doubles only the subgroup members") {
  Chain s =
      split(induced_chain(OrderedGroup(2)), SubgroupDesc::prefix_of(1));
  // (3, 1) lies outside Z x {0}: no dotted copy, its down-cover is plain.
  auto down = s.cover(plain({3, 1}), Direction::Down);
  REQUIRE(down);
  CHECK(*down == plain({3, 0}));
  auto down2 = s.cover(plain({3, 0}), Direction::Down);
  REQUIRE(down2);
  CHECK(*down2 == dotted({3, 0}));

  // Invertible elements are exactly the plain subgroup members:
  // z is invertible iff z * res(z, t) == t.
  auto invertible = [&](const ChainElement& z) {
    return s.mul(z, s.res(z, s.unit())) == s.unit();
  };
  CHECK(invertible(plain({3, 0})));
  CHECK_FALSE(invertible(plain({3, 1})));
  CHECK_FALSE(invertible(dotted({3, 0})));

  // Products of subgroup members with one dotted factor stay dotted even
  // at a prefix subgroup; products outside the subgroup are plain.
  CHECK(s.mul(dotted({1, 0}), plain({2, 0})) == dotted({3, 0}));
  CHECK(s.mul(plain({1, 0}), plain({2, 0})) == plain({3, 0}));
  CHECK(s.mul(dotted({1, 0}), plain({0, 1})) == plain({1, 1}));

  CheckConfig cfg;
  CHECK(run_law_suite(s, cfg).passed());
}

TEST_CASE("split validates its inputs") {
  CHECK_THROWS_AS(
      split(induced_chain(OrderedGroup(1)), SubgroupDesc::prefix_of(2)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      split(table_chain(frozen::table(frozen::kS3)), SubgroupDesc::full()),
      std::domain_error);
}

TEST_CASE("unsplit unpacks a structural split exactly") {
  Chain base = induced_chain(OrderedGroup(2));
  Chain s = split(base, SubgroupDesc::prefix_of(1));
  UnsplitResult u = unsplit(s);

  CheckConfig cfg;
  CHECK(chains_equivalent(u.base, base, cfg));
  REQUIRE(u.subgroup_desc);
  CHECK(same_subgroup(OrderedGroup(2), *u.subgroup_desc,
                      SubgroupDesc::prefix_of(1)));
  CHECK(induced_group(u.subgroup).rank() == 1);

  // The canonical surjection drops the dot.
  CHECK(u.canonical_hom(dotted({3, 0})) == plain({3, 0}));
  CHECK(u.canonical_hom(plain({3, 1})) == plain({3, 1}));
}

TEST_CASE("unsplit reconstructs finite splits from the falsum") {
  // The four-element chain splits off the three-element one: the doubled
  // subgroup is the unit alone.
  UnsplitResult u = unsplit(table_chain(frozen::table(frozen::kS4)));
  auto base = to_finite_table(u.base);
  REQUIRE(base);
  CHECK(base->to_text() == frozen::kS3);
  REQUIRE(u.subgroup.finite_size());
  CHECK(*u.subgroup.finite_size() == 1);

  // Six elements: the base is the five-element chain.
  UnsplitResult u6 = unsplit(table_chain(frozen::table(frozen::kS6)));
  auto base6 = to_finite_table(u6.base);
  REQUIRE(base6);
  CHECK(base6->to_text() == frozen::kS5);

  // Two elements: the base is the one-element chain.
  UnsplitResult u2 = unsplit(table_chain(frozen::table(frozen::kS2)));
  auto base2 = to_finite_table(u2.base);
  REQUIRE(base2);
  CHECK(base2->to_text() == frozen::kS1);
}

TEST_CASE("unsplit rejects chains that are not splits") {
  CHECK_THROWS_AS(unsplit(table_chain(frozen::table(frozen::kS3))),
                  std::domain_error);
  CHECK_THROWS_AS(unsplit(induced_chain(OrderedGroup(1))),
                  std::domain_error);
  CHECK_THROWS_AS(unsplit(downshift(induced_chain(OrderedGroup(1)))),
                  std::domain_error);
}

TEST_CASE("split then unsplit then split again is the same chain") {
  Chain base = induced_chain(OrderedGroup(1));
  Chain s = split(base, SubgroupDesc::full());
  UnsplitResult u = unsplit(s);
  Chain again = split(u.base, *u.subgroup_desc);
  CheckConfig cfg;
  CHECK(chains_equivalent(again, s, cfg));
}
