#include "flec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "flec/bunch.hpp"
#include "flec/laws.hpp"

namespace flec {

std::vector<FiniteChainTable> enumerate_finite_chains(const SearchConfig& sc) {
  std::vector<FiniteChainTable> out;
  const int n = sc.n;
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumeration supports sizes 1 through 8");
  const bool odd_carrier = (n % 2) == 1;
  if (sc.parity) {
    if ((*sc.parity == Parity::Odd) != odd_carrier) return out;
  }
  const int t = odd_carrier ? (n - 1) / 2 : n / 2;
  const int f = odd_carrier ? t : t - 1;

  std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n),
                                                   -1));
  auto cell = [&](int x, int y) -> int& {
    return m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  for (int x = 0; x < n; ++x) {
    cell(x, 0) = cell(0, x) = 0;  // the bottom absorbs (residuals exist)
    cell(t, x) = cell(x, t) = x;  // the unit row
  }

  std::vector<std::pair<int, int>> cells;
  for (int x = 1; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (x != t && y != t) cells.emplace_back(x, y);

  // Associativity over every triple whose four lookups are determined.
  auto assoc_ok = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        int ab = cell(a, b);
        if (ab < 0) continue;
        for (int c = 0; c < n; ++c) {
          int bc = cell(b, c);
          if (bc < 0) continue;
          int l = cell(ab, c);
          int r = cell(a, bc);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  };

  auto emit = [&]() {
    FiniteChainTable tab;
    tab.n = n;
    tab.t_pos = t;
    tab.f_pos = f;
    tab.mul = m;
    for (int x = 0; x < n; ++x) {
      int c = tab.complement_of(x);
      if (c < 0 || tab.complement_of(c) != x) return;  // not involutive
    }
    if (sc.parity && !odd_carrier) {
      bool idem = cell(f, f) == f;
      if ((*sc.parity == Parity::EvenIdempotent) != idem) return;
    }
    out.push_back(std::move(tab));
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == cells.size()) {
      emit();
      return;
    }
    auto [x, y] = cells[k];
    // Row monotonicity and the unit row bound the candidate range.
    int lo = std::max(cell(x - 1, y), cell(x, y - 1));
    int hi = n - 1;
    if (x > t) lo = std::max(lo, y);
    if (y > t) lo = std::max(lo, x);
    if (x < t) hi = std::min(hi, y);
    if (y < t) hi = std::min(hi, x);
    for (int v = lo; v <= hi; ++v) {
      cell(x, y) = cell(y, x) = v;
      if (assoc_ok()) dfs(k + 1);
    }
    cell(x, y) = cell(y, x) = -1;
  };
  dfs(0);
  return out;
}

std::vector<FiniteChainTable> catalog_tables(int n) {
  std::vector<FiniteChainTable> out;
  if (n < 1) return out;
  bool even = (n % 2) == 0;
  auto layer_count = static_cast<std::size_t>(even ? n / 2 : (n + 1) / 2);
  auto bunch = sugihara_bunch(layer_count, even);
  auto table = to_finite_table(derive_chain(groups_to_algebras(bunch)));
  if (table) out.push_back(std::move(*table));
  return out;
}

Report cross_check(int max_n, const CheckConfig& cfg) {
  Report rep;
  rep.suite = "oracle-cross-check";
  auto merge_prefixed = [&](const Report& sub, const std::string& prefix) {
    rep.checks += sub.checks;
    for (const auto& v : sub.violations)
      rep.add(v.law, prefix + ": " + v.witness);
  };
  for (int n = 1; n <= max_n; ++n) {
    const std::string at = "n=" + std::to_string(n);
    auto found = enumerate_finite_chains({n, std::nullopt});
    auto predicted = catalog_tables(n);

    ++rep.checks;
    if (found.size() != predicted.size()) {
      rep.add("count", at + ": enumerated " + std::to_string(found.size()) +
                           " chains, the catalog predicts " +
                           std::to_string(predicted.size()));
      continue;
    }
    auto text_key = [](const FiniteChainTable& a, const FiniteChainTable& b) {
      return a.to_text() < b.to_text();
    };
    auto found_sorted = found;
    auto predicted_sorted = predicted;
    std::sort(found_sorted.begin(), found_sorted.end(), text_key);
    std::sort(predicted_sorted.begin(), predicted_sorted.end(), text_key);
    ++rep.checks;
    if (!(found_sorted == predicted_sorted))
      rep.add("tables", at + ": enumerated tables differ from the catalog");

    auto odd = enumerate_finite_chains({n, Parity::Odd});
    auto even_id = enumerate_finite_chains({n, Parity::EvenIdempotent});
    auto even_nonid =
        enumerate_finite_chains({n, Parity::EvenNonIdempotent});
    ++rep.checks;
    if (odd.size() + even_id.size() + even_nonid.size() != found.size())
      rep.add("parity-partition",
              at + ": parity-restricted searches do not partition the full "
                   "one");
    ++rep.checks;
    if (!even_nonid.empty())
      rep.add("parity-count",
              at + ": a finite even chain with non-idempotent falsum "
                   "appeared");

    for (const auto& table : found) {
      merge_prefixed(table.validate(), at);
      auto chain = table_chain(table);
      merge_prefixed(run_law_suite(chain, cfg), at);
      ++rep.checks;
      try {
        auto rederived =
            to_finite_table(derive_chain(decompose_chain(chain, cfg)));
        if (!(rederived && *rederived == table))
          rep.add("rederive", at + ": decomposing and re-deriving changed "
                                   "the table");
      } catch (const std::exception& e) {
        rep.add("rederive", at + std::string(": exception: ") + e.what());
      }
    }
  }
  return rep;
}

}  // namespace flec
