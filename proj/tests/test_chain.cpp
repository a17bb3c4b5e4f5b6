#include <stdexcept>
#include <string>

#include "doctest.h"
#include "flec/chain.hpp"
#include "flec/convert.hpp"
#include "flec/ogroup.hpp"
#include "frozen.hpp"

using namespace flec;

TEST_CASE("tables read and write their text form") {
  FiniteChainTable t = frozen::table(frozen::kS3);
  CHECK(t.n == 3);
  CHECK(t.t_pos == 1);
  CHECK(t.f_pos == 1);
  CHECK(t.mul[1][2] == 2);
  CHECK(t.to_text() == frozen::kS3);
  CHECK(t == frozen::table(t.to_text()));
  CHECK(t.validate().passed());

  // Comments and blank lines are tolerated.
  FiniteChainTable t2 = FiniteChainTable::from_text(
      "# odd chain on three elements\n\n3 1 1\n0 0 0\n0 1 2\n# row\n0 2 2\n");
  CHECK(t2 == t);
}

TEST_CASE("malformed table text is rejected with its line") {
  auto message_of = [](const std::string& text) {
    try {
      FiniteChainTable::from_text(text);
      return std::string("accepted");
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("").find("table line") != std::string::npos);
  CHECK(message_of("x 1 1\n") .find("table line 1") != std::string::npos);
  CHECK(message_of("3 1 1\n0 0 0\n0 1 2\n")
            .find("table line") != std::string::npos);  // missing row
  CHECK(message_of("2 1 0\n0 0\n0 7\n")
            .find("table line 3") != std::string::npos);  // entry range
  CHECK(message_of("2 1 0\n0 0\n0 1 1\n")
            .find("table line 3") != std::string::npos);  // row length
  CHECK(message_of("2 3 0\n0 0\n0 1\n")
            .find("table line 1") != std::string::npos);  // t out of range
}

TEST_CASE("table validation catches broken laws") {
  // Every symmetric single-cell corruption of the three-element chain
  // breaks shape, monotonicity, associativity, involution or parity.
  FiniteChainTable s3 = frozen::table(frozen::kS3);
  int mutations = 0;
  for (int x = 0; x < 3; ++x) {
    for (int y = x; y < 3; ++y) {
      for (int v = 0; v < 3; ++v) {
        if (v == s3.mul[x][y]) continue;
        FiniteChainTable m = s3;
        m.mul[x][y] = v;
        m.mul[y][x] = v;
        ++mutations;
        CHECK_FALSE(m.validate().passed());
      }
    }
  }
  CHECK(mutations == 12);

  // An asymmetric corruption trips commutativity in particular.
  FiniteChainTable m = s3;
  m.mul[0][2] = 2;
  Report r = m.validate();
  CHECK_FALSE(r.passed());
}

TEST_CASE("the designated complement is forced to reverse positions") {
  FiniteChainTable s4 = frozen::table(frozen::kS4);
  for (int x = 0; x < 4; ++x) CHECK(s4.complement_of(x) == 3 - x);
  FiniteChainTable s5 = frozen::table(frozen::kS5);
  for (int x = 0; x < 5; ++x) CHECK(s5.complement_of(x) == 4 - x);
}

TEST_CASE("a table chain answers through the table") {
  FiniteChainTable t = frozen::table(frozen::kS5);
  Chain c = table_chain(t);
  CHECK(c.kind() == ChainKind::FiniteTable);
  REQUIRE(c.finite_size());
  CHECK(*c.finite_size() == 5);
  CHECK(c.parity() == Parity::Odd);

  auto carrier = c.carrier();
  REQUIRE(carrier.size() == 5);
  CHECK(c.unit() == carrier[2]);
  CHECK(c.falsum() == carrier[2]);

  // mul, res and local units agree with brute-force reads of the table.
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      CHECK(c.mul(carrier[x], carrier[y]) == carrier[t.mul[x][y]]);
      int r = frozen::brute_res(t, x, y);
      REQUIRE(r >= 0);
      CHECK(c.res(carrier[x], carrier[y]) == carrier[r]);
      CHECK(c.leq(carrier[x], carrier[y]) == (x <= y));
    }
    CHECK(c.complement(carrier[x]) == carrier[4 - x]);
    CHECK(c.local_unit(carrier[x]) == carrier[frozen::brute_tau(t, x)]);
  }

  auto up = c.cover(carrier[1], Direction::Up);
  REQUIRE(up);
  CHECK(*up == carrier[2]);
  CHECK_FALSE(c.cover(carrier[4], Direction::Up));
  CHECK_FALSE(c.cover(carrier[0], Direction::Down));

  CHECK(c.max(carrier[1], carrier[3]) == carrier[3]);
  CHECK_THROWS_AS(c.check_element(ChainElement{1, false, {0}}),
                  std::invalid_argument);
}

TEST_CASE("parity classification by table") {
  CHECK(table_chain(frozen::table(frozen::kS1)).parity() == Parity::Odd);
  CHECK(table_chain(frozen::table(frozen::kS2)).parity() ==
        Parity::EvenIdempotent);
  CHECK(table_chain(frozen::table(frozen::kS4)).parity() ==
        Parity::EvenIdempotent);
  CHECK(to_string(Parity::Odd) == "odd");
  CHECK(to_string(Parity::EvenIdempotent) == "even-id");
  CHECK(to_string(Parity::EvenNonIdempotent) == "even-nonid");
}

TEST_CASE("finite chains round-trip through canonical tables") {
  FiniteChainTable t = frozen::table(frozen::kS6);
  auto back = to_finite_table(table_chain(t));
  REQUIRE(back);
  CHECK(*back == t);

  // Infinite chains have no table.
  CHECK_FALSE(to_finite_table(induced_chain(OrderedGroup(1))));

  // The one-element group chain does.
  auto one = to_finite_table(induced_chain(OrderedGroup(0)));
  REQUIRE(one);
  CHECK(one->to_text() == frozen::kS1);
}

TEST_CASE("restrictions carve out closed subchains") {
  // Positions {1, 2, 3} of the five-element chain are closed under mul
  // and form the three-element chain again.
  Chain c = table_chain(frozen::table(frozen::kS5));
  auto carrier = c.carrier();
  Chain r = restriction_chain(
      c, {carrier[1], carrier[2], carrier[3]}, carrier[2], carrier[2]);
  CHECK(r.kind() == ChainKind::FiniteSlice);
  REQUIRE(r.finite_size());
  CHECK(*r.finite_size() == 3);
  auto rt = to_finite_table(r);
  REQUIRE(rt);
  CHECK(rt->to_text() == frozen::kS3);
  CHECK_THROWS_AS(r.check_element(carrier[0]), std::invalid_argument);
}

TEST_CASE("window slices list ascending carriers") {
  Chain z = induced_chain(OrderedGroup(1));
  auto w = z.window_slice(2);
  REQUIRE(w.size() == 5);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i].coords[0] == static_cast<Int>(i) - 2);
  }
  CHECK_THROWS_AS(z.window_slice(-1), std::invalid_argument);
  CHECK_THROWS_AS(z.carrier(), std::domain_error);

  Chain z2 = induced_chain(OrderedGroup(2));
  auto w2 = z2.window_slice(1);
  CHECK(w2.size() == 9);
  for (std::size_t i = 1; i < w2.size(); ++i) {
    CHECK(z2.lt(w2[i - 1], w2[i]));
  }
}

TEST_CASE("rendering shows elements and the mul matrix") {
  std::string text = render_table(table_chain(frozen::table(frozen::kS3)), 8);
  CHECK(text.find("elements (3)") != std::string::npos);
  CHECK(text.find("mul:") != std::string::npos);
  CHECK(text.find("local_unit=") != std::string::npos);
  CHECK(text.find("complement=") != std::string::npos);
}
