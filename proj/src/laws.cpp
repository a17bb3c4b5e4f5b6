#include "flec/laws.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "models.hpp"

namespace flec {

namespace {

// Exhaustive tuple streams on small finite carriers, sampled streams
// otherwise. Each law stops at its first violation.
struct Tuples {
  const Chain& c;
  const CheckConfig& cfg;
  std::vector<ChainElement> pool;  // carrier when exhaustive, else empty
  bool exhaustive = false;
  mutable std::mt19937_64 rng;

  Tuples(const Chain& chain, const CheckConfig& config)
      : c(chain), cfg(config), rng(config.seed) {
    auto size = c.finite_size();
    if (size && *size <= 32) {
      pool = c.carrier();
      exhaustive = true;
    }
  }

  ChainElement draw() const { return c.sample_one(cfg.window, rng); }

  // fn returns false to stop the stream.
  void pairs(const std::function<bool(const ChainElement&,
                                      const ChainElement&)>& fn) const {
    if (exhaustive) {
      for (const auto& x : pool)
        for (const auto& y : pool)
          if (!fn(x, y)) return;
      return;
    }
    for (int i = 0; i < cfg.samples; ++i)
      if (!fn(draw(), draw())) return;
  }

  void triples(const std::function<bool(const ChainElement&,
                                        const ChainElement&,
                                        const ChainElement&)>& fn) const {
    if (exhaustive) {
      for (const auto& x : pool)
        for (const auto& y : pool)
          for (const auto& z : pool)
            if (!fn(x, y, z)) return;
      return;
    }
    for (int i = 0; i < cfg.samples; ++i)
      if (!fn(draw(), draw(), draw())) return;
  }

  void quads(const std::function<bool(const ChainElement&, const ChainElement&,
                                      const ChainElement&,
                                      const ChainElement&)>& fn) const {
    if (exhaustive) {
      for (const auto& x : pool)
        for (const auto& y : pool)
          for (const auto& z : pool)
            for (const auto& w : pool)
              if (!fn(x, y, z, w)) return;
      return;
    }
    for (int i = 0; i < cfg.samples; ++i)
      if (!fn(draw(), draw(), draw(), draw())) return;
  }
};

}  // namespace

Report run_law_suite(const Chain& c, const CheckConfig& cfg) {
  Report rep;
  rep.suite = "laws window=" + std::to_string(cfg.window) +
              " samples=" + std::to_string(cfg.samples);

  auto guarded = [&](const char* law, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      rep.add(law, std::string("exception: ") + e.what());
    }
  };

  Tuples tu(c, cfg);
  const ChainElement t = c.unit();
  const ChainElement f = c.falsum();
  auto fmt = [&](const ChainElement& x) { return c.format(x); };

  // Parity shape. Everything else is checked regardless of the outcome.
  std::optional<Parity> parity;
  guarded("parity-shape", [&] {
    ++rep.checks;
    parity = c.parity();
    if (*parity != Parity::Odd) {
      tu.pairs([&](const ChainElement& x, const ChainElement&) {
        ++rep.checks;
        if (c.lt(f, x) && c.lt(x, t)) {
          rep.add("parity-shape",
                  "element strictly between f and t: " + fmt(x));
          return false;
        }
        return true;
      });
    }
  });

  guarded("unit-complement", [&] {
    ++rep.checks;
    if (!(c.complement(t) == f)) rep.add("unit-complement", "complement(t) != f");
  });

  guarded("involution", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement&) {
      ++rep.checks;
      if (!(c.complement(c.complement(x)) == x)) {
        rep.add("involution", "complement not involutive at " + fmt(x));
        ok = false;
      }
      return ok;
    });
  });

  guarded("complement-antitone", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement& y) {
      if (!c.leq(x, y)) return true;
      ++rep.checks;
      if (!c.leq(c.complement(y), c.complement(x))) {
        rep.add("complement-antitone",
                "order not reversed at " + fmt(x) + " <= " + fmt(y));
        ok = false;
      }
      return ok;
    });
  });

  guarded("commutativity", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement& y) {
      ++rep.checks;
      if (!(c.mul(x, y) == c.mul(y, x))) {
        rep.add("commutativity", "at " + fmt(x) + ", " + fmt(y));
        ok = false;
      }
      return ok;
    });
  });

  guarded("associativity", [&] {
    bool ok = true;
    tu.triples(
        [&](const ChainElement& x, const ChainElement& y, const ChainElement& z) {
          ++rep.checks;
          if (!(c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z)))) {
            rep.add("associativity",
                    "at " + fmt(x) + ", " + fmt(y) + ", " + fmt(z));
            ok = false;
          }
          return ok;
        });
  });

  guarded("unit", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement&) {
      ++rep.checks;
      if (!(c.mul(t, x) == x)) {
        rep.add("unit", "mul(t," + fmt(x) + ") != " + fmt(x));
        ok = false;
      }
      return ok;
    });
  });

  guarded("monotone", [&] {
    bool ok = true;
    tu.triples(
        [&](const ChainElement& x, const ChainElement& y, const ChainElement& z) {
          if (!c.leq(x, y)) return true;
          ++rep.checks;
          if (!c.leq(c.mul(x, z), c.mul(y, z))) {
            rep.add("monotone", "at " + fmt(x) + " <= " + fmt(y) +
                                    ", scaled by " + fmt(z));
            ok = false;
          }
          return ok;
        });
  });

  guarded("adjointness", [&] {
    bool ok = true;
    tu.triples(
        [&](const ChainElement& x, const ChainElement& y, const ChainElement& z) {
          ++rep.checks;
          bool lhs = c.leq(c.mul(x, y), z);
          bool rhs = c.leq(y, c.res(x, z));
          if (lhs != rhs) {
            rep.add("adjointness", "mul(" + fmt(x) + "," + fmt(y) +
                                       ") <= " + fmt(z) + " is " +
                                       (lhs ? "true" : "false") +
                                       " but y <= res(x,z) is " +
                                       (rhs ? "true" : "false"));
            ok = false;
          }
          return ok;
        });
  });

  if (c.kind() == ChainKind::FiniteTable) {
    guarded("res-consistency", [&] {
      const auto& m = static_cast<const FiniteTableModel&>(c.model());
      bool ok = true;
      tu.pairs([&](const ChainElement& x, const ChainElement& y) {
        ++rep.checks;
        int direct = m.res_search(m.pos(x), m.pos(y));
        auto viaIdentity = c.res(x, y);
        if (direct < 0 || !(m.at(direct) == viaIdentity)) {
          rep.add("res-consistency",
                  "identity route and max-search disagree at " + fmt(x) +
                      ", " + fmt(y));
          ok = false;
        }
        return ok;
      });
    });
  }

  guarded("reflection", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement& y) {
      ++rep.checks;
      auto lhs = c.mul(x, y);
      auto rhs = c.complement(c.mul(c.complement(x), c.complement(y)));
      if (!c.leq(lhs, rhs)) {
        rep.add("reflection", "mul(x,y) above complement(mul(x',y')) at " +
                                  fmt(x) + ", " + fmt(y));
        ok = false;
      }
      return ok;
    });
  });

  guarded("local-unit-fixed", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement&) {
      ++rep.checks;
      if (!(c.local_unit(x) == c.local_unit(c.complement(x)))) {
        rep.add("local-unit-fixed",
                "local_unit differs from the complement's at " + fmt(x));
        ok = false;
      }
      return ok;
    });
  });

  guarded("local-unit-positive-idempotent", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement&) {
      auto u = c.local_unit(x);
      rep.checks += 3;
      if (!c.leq(t, u)) {
        rep.add("local-unit-positive-idempotent",
                "local_unit below t at " + fmt(x));
        ok = false;
      } else if (!(c.mul(u, u) == u)) {
        rep.add("local-unit-positive-idempotent",
                "local_unit not idempotent at " + fmt(x));
        ok = false;
      } else if (!(c.mul(u, x) == x)) {
        rep.add("local-unit-positive-idempotent",
                "local_unit does not act as identity at " + fmt(x));
        ok = false;
      }
      return ok;
    });
  });

  guarded("local-unit-below-positives", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement&) {
      if (!c.leq(t, x)) return true;
      ++rep.checks;
      if (!c.leq(c.local_unit(x), x)) {
        rep.add("local-unit-below-positives", "at " + fmt(x));
        ok = false;
      }
      return ok;
    });
  });

  guarded("local-unit-of-product", [&] {
    bool ok = true;
    tu.pairs([&](const ChainElement& x, const ChainElement& y) {
      auto expect = c.max(c.local_unit(x), c.local_unit(y));
      rep.checks += 2;
      if (!(c.local_unit(c.mul(x, y)) == expect)) {
        rep.add("local-unit-of-product",
                "mul at " + fmt(x) + ", " + fmt(y));
        ok = false;
      } else if (!(c.local_unit(c.res(x, y)) == expect)) {
        rep.add("local-unit-of-product",
                "res at " + fmt(x) + ", " + fmt(y));
        ok = false;
      }
      return ok;
    });
  });

  guarded("strict-bimonotonicity", [&] {
    bool ok = true;
    tu.quads([&](const ChainElement& a, const ChainElement& b,
                 const ChainElement& u, const ChainElement& v) {
      if (a == b || u == v) return true;
      auto x = a, x1 = b;
      if (c.lt(x1, x)) std::swap(x, x1);
      auto y = u, y1 = v;
      if (c.lt(y1, y)) std::swap(y, y1);
      ++rep.checks;
      if (!c.lt(c.mul(x, y), c.mul(x1, y1))) {
        rep.add("strict-bimonotonicity",
                "not strict at " + fmt(x) + " < " + fmt(x1) + ", " + fmt(y) +
                    " < " + fmt(y1));
        ok = false;
      }
      return ok;
    });
  });

  guarded("term-locality", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x7e57ULL);
    auto leaf = [&]() -> ChainElement {
      switch (rng() % 8) {
        case 0: return t;
        case 1: return f;
        default: return c.sample_one(cfg.window, rng);
      }
    };
    // Builds a random term over mul, res and complement; returns its value
    // and the largest local unit among its leaves.
    std::function<std::pair<ChainElement, ChainElement>(int)> build =
        [&](int depth) -> std::pair<ChainElement, ChainElement> {
      if (depth == 0 || rng() % 4 == 0) {
        auto x = leaf();
        return {x, c.local_unit(x)};
      }
      switch (rng() % 3) {
        case 0: {
          auto [a, ta] = build(depth - 1);
          auto [b, tb] = build(depth - 1);
          return {c.mul(a, b), c.max(ta, tb)};
        }
        case 1: {
          auto [a, ta] = build(depth - 1);
          auto [b, tb] = build(depth - 1);
          return {c.res(a, b), c.max(ta, tb)};
        }
        default: {
          auto [a, ta] = build(depth - 1);
          return {c.complement(a), ta};
        }
      }
    };
    for (int i = 0; i < cfg.samples; ++i) {
      auto [value, leaf_max] = build(3);
      ++rep.checks;
      if (!(c.local_unit(value) == leaf_max)) {
        rep.add("term-locality",
                "term local_unit " + fmt(c.local_unit(value)) +
                    " != leaf maximum " + fmt(leaf_max));
        break;
      }
    }
  });

  // Idempotent-falsum subclass agrees with the classified parity.
  guarded("parity-falsum", [&] {
    if (!parity || *parity == Parity::Odd) return;
    ++rep.checks;
    bool idem = c.mul(f, f) == f;
    if (idem != (*parity == Parity::EvenIdempotent))
      rep.add("parity-falsum", "falsum idempotence contradicts the parity");
  });

  return rep;
}

}  // namespace flec
