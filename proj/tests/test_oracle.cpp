#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "flec/bunch.hpp"
#include "flec/chain.hpp"
#include "flec/laws.hpp"
#include "flec/oracle.hpp"
#include "frozen.hpp"

using namespace flec;

namespace {
std::vector<FiniteChainTable> search(int n,
                                     std::optional<Parity> p = {}) {
  SearchConfig sc;
  sc.n = n;
  sc.parity = p;
  return enumerate_finite_chains(sc);
}
}  // namespace

TEST_CASE("the search finds exactly one chain per carrier size") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    auto found = search(n);
    REQUIRE(found.size() == 1);
    CHECK(found.front().validate().passed());
  }
}

TEST_CASE("the search reproduces the frozen tables bit for bit") {
  CHECK(search(1).front().to_text() == frozen::kS1);
  CHECK(search(2).front().to_text() == frozen::kS2);
  CHECK(search(3).front().to_text() == frozen::kS3);
  CHECK(search(4).front().to_text() == frozen::kS4);
  CHECK(search(5).front().to_text() == frozen::kS5);
  CHECK(search(6).front().to_text() == frozen::kS6);
}

TEST_CASE("parity filters partition the search") {
  // Odd carriers hold odd chains; even carriers hold chains with an
  // idempotent falsum; nothing has a non-idempotent one.
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(search(n, Parity::Odd).size() == (n % 2 == 1 ? 1u : 0u));
    CHECK(search(n, Parity::EvenIdempotent).size() ==
          (n % 2 == 0 ? 1u : 0u));
    CHECK(search(n, Parity::EvenNonIdempotent).empty());
  }
}

TEST_CASE("carrier sizes outside 1..8 are rejected") {
  CHECK_THROWS_AS(search(0), std::invalid_argument);
  CHECK_THROWS_AS(search(-3), std::invalid_argument);
  CHECK_THROWS_AS(search(9), std::invalid_argument);
}

TEST_CASE("the layer catalog predicts the same tables") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto cat = catalog_tables(n);
    REQUIRE(cat.size() == 1);
    CHECK(cat.front().n == n);
    Chain c = table_chain(cat.front());
    CHECK(c.parity() ==
          (n % 2 == 1 ? Parity::Odd : Parity::EvenIdempotent));
  }
  CHECK(catalog_tables(3).front().to_text() == frozen::kS3);
  CHECK(catalog_tables(6).front().to_text() == frozen::kS6);
}

TEST_CASE("every found chain satisfies the residuation laws") {
  CheckConfig cfg;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : search(n)) {
      Report r = run_law_suite(table_chain(t), cfg);
      CHECK_MESSAGE(r.passed(), r.to_string());
    }
  }
}

TEST_CASE("no corrupted table slips past the search and the validator") {
  // Mutate one symmetric cell at a time; the mutant must fail validation
  // or, at the very least, not be one of the enumerated chains.
  for (const std::string& text : {frozen::kS3, frozen::kS4}) {
    FiniteChainTable good = frozen::table(text);
    std::set<std::string> admitted;
    for (const auto& t : search(good.n)) admitted.insert(t.to_text());
    for (int x = 0; x < good.n; ++x) {
      for (int y = x; y < good.n; ++y) {
        for (int v = 0; v < good.n; ++v) {
          if (v == good.mul[x][y]) continue;
          FiniteChainTable m = good;
          m.mul[x][y] = v;
          m.mul[y][x] = v;
          CAPTURE(x);
          CAPTURE(y);
          CAPTURE(v);
          bool caught = !m.validate().passed() ||
                        admitted.count(m.to_text()) == 0;
          CHECK(caught);
        }
      }
    }
  }
}

TEST_CASE("search and catalog cross-check end to end") {
  CheckConfig cfg;
  Report r = cross_check(6, cfg);
  CHECK_MESSAGE(r.passed(), r.to_string());
  CHECK(r.checks > 0);
}

TEST_CASE("every enumerated chain decomposes and re-derives exactly") {
  CheckConfig cfg;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : search(n)) {
      BunchOfLayerAlgebras a = decompose_chain(table_chain(t), cfg);
      auto again = to_finite_table(derive_chain(a));
      REQUIRE(again);
      CHECK(again->to_text() == t.to_text());
      // The layer count matches the catalog construction.
      CHECK(a.index.size() == static_cast<std::size_t>((n + 1) / 2));
    }
  }
}
