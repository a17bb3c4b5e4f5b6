#include "flec/chain.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "models.hpp"

namespace flec {

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Odd: return "odd";
    case Parity::EvenIdempotent: return "even-id";
    case Parity::EvenNonIdempotent: return "even-nonid";
  }
  return "?";
}

std::string ChainModel::format(const ChainElement& x) const {
  std::string s = format_coords(GroupElement{x.coords});
  return x.dotted ? "*" + s : s;
}

Chain::Chain(std::shared_ptr<const ChainModel> model)
    : model_(std::move(model)) {
  if (!model_) throw std::invalid_argument("null chain model");
}

ChainKind Chain::kind() const { return model_->kind(); }
ChainElement Chain::unit() const { return model_->unit(); }
ChainElement Chain::falsum() const { return model_->falsum(); }

bool Chain::leq(const ChainElement& x, const ChainElement& y) const {
  return model_->leq(x, y);
}
bool Chain::lt(const ChainElement& x, const ChainElement& y) const {
  return model_->leq(x, y) && !(x == y);
}
ChainElement Chain::mul(const ChainElement& x, const ChainElement& y) const {
  return model_->mul(x, y);
}
ChainElement Chain::complement(const ChainElement& x) const {
  return model_->complement(x);
}
ChainElement Chain::res(const ChainElement& x, const ChainElement& y) const {
  return complement(mul(x, complement(y)));
}
ChainElement Chain::local_unit(const ChainElement& x) const {
  return res(x, x);
}
ChainElement Chain::max(const ChainElement& x, const ChainElement& y) const {
  return leq(x, y) ? y : x;
}
std::optional<ChainElement> Chain::cover(const ChainElement& x,
                                         Direction d) const {
  return model_->cover(x, d);
}

Parity Chain::parity() const {
  ChainElement t = unit();
  ChainElement f = falsum();
  if (complement(t) == t) {
    if (!(f == t)) throw std::domain_error("unsupported parity: t' = t != f");
    return Parity::Odd;
  }
  if (!(complement(t) == f))
    throw std::domain_error("unsupported parity: complement(t) != f");
  if (!lt(f, t)) throw std::domain_error("unsupported parity: f not below t");
  return mul(f, f) == f ? Parity::EvenIdempotent : Parity::EvenNonIdempotent;
}

ChainElement Chain::sample_one(int window, std::mt19937_64& rng) const {
  return model_->sample_one(window, rng);
}

std::vector<ChainElement> Chain::sample(int window, int count,
                                        std::mt19937_64& rng) const {
  std::vector<ChainElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(sample_one(window, rng));
  return out;
}

std::optional<std::size_t> Chain::finite_size() const {
  return model_->finite_size();
}

std::vector<ChainElement> Chain::carrier() const {
  if (!finite_size()) throw std::domain_error("carrier is infinite");
  // A finite carrier always fits in a slice of radius 1: the only infinite
  // directions come from group coordinates, and finite models enumerate
  // their whole carrier regardless of the window.
  return model_->window_slice(1);
}

std::vector<ChainElement> Chain::window_slice(int window) const {
  if (window < 0) throw std::invalid_argument("empty window");
  return model_->window_slice(window);
}

std::string Chain::format(const ChainElement& x) const {
  return model_->format(x);
}

void Chain::check_element(const ChainElement& x) const {
  model_->check_element(x);
}

// ---------------------------------------------------------------------------
// Induced group chains

namespace {

ChainElement plain(std::vector<Int> coords) {
  return ChainElement{0, false, std::move(coords)};
}

}  // namespace

ChainElement InducedGroupModel::unit() const {
  return plain(g_.unit().coords);
}

void InducedGroupModel::check_element(const ChainElement& x) const {
  if (x.layer != 0 || x.dotted)
    throw std::invalid_argument("foreign element for a group chain");
  group_check_element(g_, GroupElement{x.coords});
}

bool InducedGroupModel::leq(const ChainElement& x,
                            const ChainElement& y) const {
  check_element(x);
  check_element(y);
  return group_leq(g_, GroupElement{x.coords}, GroupElement{y.coords});
}

ChainElement InducedGroupModel::mul(const ChainElement& x,
                                    const ChainElement& y) const {
  check_element(x);
  check_element(y);
  return plain(
      group_mul(g_, GroupElement{x.coords}, GroupElement{y.coords}).coords);
}

ChainElement InducedGroupModel::complement(const ChainElement& x) const {
  check_element(x);
  return plain(group_inverse(g_, GroupElement{x.coords}).coords);
}

std::optional<ChainElement> InducedGroupModel::cover(const ChainElement& x,
                                                     Direction d) const {
  check_element(x);
  auto c = group_cover(g_, GroupElement{x.coords}, d);
  if (!c) return std::nullopt;
  return plain(std::move(c->coords));
}

ChainElement InducedGroupModel::sample_one(int window,
                                           std::mt19937_64& rng) const {
  return plain(group_sample(g_, window, rng).coords);
}

std::optional<std::size_t> InducedGroupModel::finite_size() const {
  if (g_.rank() == 0) return 1;
  return std::nullopt;
}

std::vector<ChainElement> InducedGroupModel::window_slice(int window) const {
  std::vector<ChainElement> out;
  std::vector<Int> cur(static_cast<std::size_t>(g_.rank()), -window);
  if (g_.rank() == 0) return {unit()};
  for (;;) {
    out.push_back(plain(cur));
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == window) cur[--i] = -window;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite tables

int FiniteChainTable::complement_of(int x) const {
  int best = -1;
  for (int z = 0; z < n; ++z)
    if (mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] <= f_pos)
      best = z;
  return best;
}

Report FiniteChainTable::validate() const {
  Report rep;
  rep.suite = "table-axioms";
  auto cell = [&](int x, int y) {
    return mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };
  if (n <= 0 || t_pos < 0 || t_pos >= n || f_pos < 0 || f_pos >= n ||
      mul.size() != static_cast<std::size_t>(n)) {
    rep.add("shape", "bad dimensions or designated positions");
    return rep;
  }
  for (const auto& row : mul)
    if (row.size() != static_cast<std::size_t>(n)) {
      rep.add("shape", "ragged mul table");
      return rep;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++rep.checks;
      if (cell(x, y) < 0 || cell(x, y) >= n) {
        rep.add("shape", "mul entry out of range");
        return rep;
      }
    }
  auto xy = [](int x, int y) {
    return std::to_string(x) + "," + std::to_string(y);
  };
  for (int x = 0; x < n && rep.passed(); ++x)
    for (int y = 0; y < n; ++y) {
      ++rep.checks;
      if (cell(x, y) != cell(y, x)) {
        rep.add("commutativity", "at " + xy(x, y));
        break;
      }
    }
  for (int x = 0; x < n; ++x) {
    ++rep.checks;
    if (cell(t_pos, x) != x) {
      rep.add("unit", "mul(t," + std::to_string(x) + ") != " +
                           std::to_string(x));
      break;
    }
  }
  for (int x = 0; x < n; ++x) {
    ++rep.checks;
    if (cell(x, 0) != 0) {
      rep.add("bottom", "mul(" + std::to_string(x) + ",0) != 0");
      break;
    }
  }
  bool monotone = true;
  for (int x = 0; x < n && monotone; ++x)
    for (int y = 0; y + 1 < n; ++y) {
      ++rep.checks;
      if (cell(x, y) > cell(x, y + 1)) {
        rep.add("monotone", "row " + std::to_string(x) + " at column " +
                                 std::to_string(y));
        monotone = false;
        break;
      }
    }
  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n; ++c) {
        ++rep.checks;
        if (cell(cell(a, b), c) != cell(a, cell(b, c))) {
          rep.add("associativity", "at " + std::to_string(a) + "," +
                                       std::to_string(b) + "," +
                                       std::to_string(c));
          assoc = false;
          break;
        }
      }
  // Involution of the derived complement, and complement(t) = f.
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    int c = complement_of(x);
    if (c < 0) {
      rep.add("involution", "complement undefined at " + std::to_string(x));
      return rep;
    }
    comp[static_cast<std::size_t>(x)] = c;
  }
  ++rep.checks;
  if (comp[static_cast<std::size_t>(t_pos)] != f_pos)
    rep.add("involution", "complement(t) != f");
  for (int x = 0; x < n; ++x) {
    ++rep.checks;
    if (comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])] !=
        x) {
      rep.add("involution", "complement not involutive at " +
                                 std::to_string(x));
      break;
    }
  }
  // Parity shape: either t = f, or t the immediate cover of f.
  ++rep.checks;
  if (!(t_pos == f_pos || t_pos == f_pos + 1))
    rep.add("parity", "designated positions are neither odd nor even shaped");
  return rep;
}

std::string FiniteChainTable::to_text() const {
  std::ostringstream os;
  os << n << ' ' << t_pos << ' ' << f_pos << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) os << ' ';
      os << mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    }
    os << '\n';
  }
  return os.str();
}

FiniteChainTable FiniteChainTable::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (!blank) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> FiniteChainTable {
    throw std::runtime_error("table line " + std::to_string(lineno) + ": " +
                             msg);
  };
  if (!next_line()) return fail("missing header");
  FiniteChainTable t;
  {
    std::istringstream hs(line);
    if (!(hs >> t.n >> t.t_pos >> t.f_pos)) return fail("bad header");
    std::string extra;
    if (hs >> extra) return fail("trailing tokens in header");
  }
  if (t.n < 1) return fail("size must be >= 1");
  if (t.t_pos < 0 || t.t_pos >= t.n || t.f_pos < 0 || t.f_pos >= t.n)
    return fail("designated position out of range");
  for (int x = 0; x < t.n; ++x) {
    if (!next_line()) return fail("missing row " + std::to_string(x));
    std::istringstream rs(line);
    std::vector<int> row;
    int v;
    while (rs >> v) row.push_back(v);
    if (row.size() != static_cast<std::size_t>(t.n))
      return fail("row " + std::to_string(x) + " needs " +
                  std::to_string(t.n) + " entries");
    for (int e : row)
      if (e < 0 || e >= t.n)
        return fail("entry out of range in row " + std::to_string(x));
    t.mul.push_back(std::move(row));
  }
  if (next_line()) return fail("trailing content");
  return t;
}

FiniteTableModel::FiniteTableModel(FiniteChainTable t) : tab_(std::move(t)) {
  if (tab_.n < 1 || tab_.mul.size() != static_cast<std::size_t>(tab_.n))
    throw std::invalid_argument("malformed table");
  for (const auto& row : tab_.mul) {
    if (row.size() != static_cast<std::size_t>(tab_.n))
      throw std::invalid_argument("malformed table");
    for (int e : row)
      if (e < 0 || e >= tab_.n) throw std::invalid_argument("malformed table");
  }
  if (tab_.t_pos < 0 || tab_.t_pos >= tab_.n || tab_.f_pos < 0 ||
      tab_.f_pos >= tab_.n)
    throw std::invalid_argument("malformed table");
  comp_.resize(static_cast<std::size_t>(tab_.n));
  for (int x = 0; x < tab_.n; ++x)
    comp_[static_cast<std::size_t>(x)] = tab_.complement_of(x);
}

int FiniteTableModel::pos(const ChainElement& x) const {
  check_element(x);
  return static_cast<int>(x.coords[0]);
}

ChainElement FiniteTableModel::at(int p) const {
  return ChainElement{0, false, {static_cast<Int>(p)}};
}

void FiniteTableModel::check_element(const ChainElement& x) const {
  if (x.layer != 0 || x.dotted || x.coords.size() != 1 || x.coords[0] < 0 ||
      x.coords[0] >= tab_.n)
    throw std::invalid_argument("foreign element for a table chain");
}

ChainElement FiniteTableModel::unit() const { return at(tab_.t_pos); }
ChainElement FiniteTableModel::falsum() const { return at(tab_.f_pos); }

bool FiniteTableModel::leq(const ChainElement& x, const ChainElement& y) const {
  return pos(x) <= pos(y);
}

ChainElement FiniteTableModel::mul(const ChainElement& x,
                                   const ChainElement& y) const {
  return at(tab_.mul[static_cast<std::size_t>(pos(x))]
                    [static_cast<std::size_t>(pos(y))]);
}

ChainElement FiniteTableModel::complement(const ChainElement& x) const {
  int c = comp_[static_cast<std::size_t>(pos(x))];
  if (c < 0) throw std::domain_error("complement undefined on this table");
  return at(c);
}

std::optional<ChainElement> FiniteTableModel::cover(const ChainElement& x,
                                                    Direction d) const {
  int p = pos(x) + (d == Direction::Up ? 1 : -1);
  if (p < 0 || p >= tab_.n) return std::nullopt;
  return at(p);
}

ChainElement FiniteTableModel::sample_one(int, std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> dist(0, tab_.n - 1);
  return at(dist(rng));
}

std::optional<std::size_t> FiniteTableModel::finite_size() const {
  return static_cast<std::size_t>(tab_.n);
}

std::vector<ChainElement> FiniteTableModel::window_slice(int) const {
  std::vector<ChainElement> out;
  for (int p = 0; p < tab_.n; ++p) out.push_back(at(p));
  return out;
}

std::string FiniteTableModel::format(const ChainElement& x) const {
  return std::to_string(pos(x));
}

int FiniteTableModel::res_search(int x, int y) const {
  int best = -1;
  for (int z = 0; z < tab_.n; ++z)
    if (tab_.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)] <=
        y)
      best = z;
  return best;
}

Chain table_chain(FiniteChainTable table) {
  return Chain(std::make_shared<FiniteTableModel>(std::move(table)));
}

std::optional<FiniteChainTable> to_finite_table(const Chain& c) {
  if (!c.finite_size()) return std::nullopt;
  auto elems = c.carrier();
  std::map<ChainElement, int, RawElementLess> pos;
  for (std::size_t i = 0; i < elems.size(); ++i)
    pos[elems[i]] = static_cast<int>(i);
  FiniteChainTable t;
  t.n = static_cast<int>(elems.size());
  t.t_pos = pos.at(c.unit());
  t.f_pos = pos.at(c.falsum());
  t.mul.assign(static_cast<std::size_t>(t.n),
               std::vector<int>(static_cast<std::size_t>(t.n), 0));
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          pos.at(c.mul(elems[static_cast<std::size_t>(x)],
                       elems[static_cast<std::size_t>(y)]));
  return t;
}

// ---------------------------------------------------------------------------
// Finite restrictions

RestrictionModel::RestrictionModel(Chain parent,
                                   std::vector<ChainElement> carrier,
                                   ChainElement unit, ChainElement falsum)
    : parent_(std::move(parent)),
      carrier_(std::move(carrier)),
      unit_(std::move(unit)),
      falsum_(std::move(falsum)) {
  if (carrier_.empty()) throw std::invalid_argument("empty restriction");
  std::sort(carrier_.begin(), carrier_.end(),
            [&](const ChainElement& a, const ChainElement& b) {
              return parent_.leq(a, b) && !(a == b);
            });
  index_of(unit_);
  index_of(falsum_);
}

std::size_t RestrictionModel::index_of(const ChainElement& x) const {
  for (std::size_t i = 0; i < carrier_.size(); ++i)
    if (carrier_[i] == x) return i;
  throw std::invalid_argument("foreign element for a restriction chain");
}

void RestrictionModel::check_element(const ChainElement& x) const {
  index_of(x);
}

bool RestrictionModel::leq(const ChainElement& x, const ChainElement& y) const {
  check_element(x);
  check_element(y);
  return parent_.leq(x, y);
}

ChainElement RestrictionModel::mul(const ChainElement& x,
                                   const ChainElement& y) const {
  check_element(x);
  check_element(y);
  auto r = parent_.mul(x, y);
  index_of(r);  // the carrier must be closed under mul
  return r;
}

ChainElement RestrictionModel::complement(const ChainElement& x) const {
  check_element(x);
  auto r = parent_.res(x, falsum_);
  index_of(r);  // and under res against the restriction falsum
  return r;
}

std::optional<ChainElement> RestrictionModel::cover(const ChainElement& x,
                                                    Direction d) const {
  std::size_t i = index_of(x);
  if (d == Direction::Up)
    return i + 1 < carrier_.size() ? std::optional(carrier_[i + 1])
                                   : std::nullopt;
  return i > 0 ? std::optional(carrier_[i - 1]) : std::nullopt;
}

ChainElement RestrictionModel::sample_one(int, std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> dist(0, carrier_.size() - 1);
  return carrier_[dist(rng)];
}

std::optional<std::size_t> RestrictionModel::finite_size() const {
  return carrier_.size();
}

std::vector<ChainElement> RestrictionModel::window_slice(int) const {
  return carrier_;
}

std::string RestrictionModel::format(const ChainElement& x) const {
  return parent_.format(x);
}

Chain restriction_chain(const Chain& parent, std::vector<ChainElement> carrier,
                        ChainElement unit, ChainElement falsum) {
  return Chain(std::make_shared<RestrictionModel>(
      parent, std::move(carrier), std::move(unit), std::move(falsum)));
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_table(const Chain& c, int window) {
  if (window < 0) throw std::invalid_argument("empty window");
  auto elems = c.window_slice(window);
  std::vector<std::string> names;
  names.reserve(elems.size());
  std::size_t w = 1;
  for (const auto& e : elems) {
    names.push_back(c.format(e));
    w = std::max(w, names.back().size());
  }
  std::ostringstream os;
  os << "elements (" << elems.size() << "), ascending:\n";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    os << "  " << std::setw(static_cast<int>(w)) << names[i]
       << "  local_unit=" << c.format(c.local_unit(elems[i]))
       << "  complement=" << c.format(c.complement(elems[i])) << '\n';
  }
  auto pad = [&](const std::string& s) {
    std::string out(w > s.size() ? w - s.size() : 0, ' ');
    return out + s;
  };
  os << "mul:\n  " << pad("");
  for (const auto& n : names) os << ' ' << pad(n);
  os << '\n';
  for (std::size_t i = 0; i < elems.size(); ++i) {
    os << "  " << pad(names[i]);
    for (std::size_t j = 0; j < elems.size(); ++j)
      os << ' ' << pad(c.format(c.mul(elems[i], elems[j])));
    os << '\n';
  }
  return os.str();
}

}  // namespace flec
