#include "flec/ogroup.hpp"

#include <sstream>
#include <stdexcept>

namespace flec {

std::string Report::summary_line() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << ' ' << suite << ' '
     << violations.size();
  return os.str();
}

std::string Report::to_string() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << checks << " checks, "
     << violations.size() << " violations\n";
  for (const auto& v : violations)
    os << "  [" << v.law << "] " << v.witness << '\n';
  os << summary_line() << '\n';
  return os.str();
}

OrderedGroup::OrderedGroup(int rank) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("group rank must be >= 0");
}

GroupElement OrderedGroup::unit() const {
  return GroupElement{std::vector<Int>(static_cast<std::size_t>(rank_), 0)};
}

void group_check_element(const OrderedGroup& g, const GroupElement& a) {
  if (a.coords.size() != static_cast<std::size_t>(g.rank()))
    throw std::invalid_argument("group element has wrong rank");
}

GroupElement group_mul(const OrderedGroup& g, const GroupElement& a,
                       const GroupElement& b) {
  group_check_element(g, a);
  group_check_element(g, b);
  GroupElement r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

GroupElement group_inverse(const OrderedGroup& g, const GroupElement& a) {
  group_check_element(g, a);
  GroupElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::strong_ordering group_compare(const OrderedGroup& g,
                                   const GroupElement& a,
                                   const GroupElement& b) {
  group_check_element(g, a);
  group_check_element(g, b);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] != b.coords[i])
      return a.coords[i] < b.coords[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool group_leq(const OrderedGroup& g, const GroupElement& a,
               const GroupElement& b) {
  return group_compare(g, a, b) != std::strong_ordering::greater;
}

std::optional<GroupElement> group_cover(const OrderedGroup& g,
                                        const GroupElement& a, Direction d) {
  group_check_element(g, a);
  if (g.rank() == 0) return std::nullopt;  // no neighbor in the trivial group
  GroupElement r = a;
  r.coords.back() += (d == Direction::Up ? 1 : -1);
  return r;
}

GroupElement group_sample(const OrderedGroup& g, int window,
                          std::mt19937_64& rng) {
  if (window < 0) throw std::invalid_argument("window must be >= 0");
  std::uniform_int_distribution<Int> dist(-window, window);
  GroupElement r = g.unit();
  for (auto& c : r.coords) c = dist(rng);
  return r;
}

std::string format_coords(const GroupElement& a) {
  if (a.coords.empty()) return "()";
  if (a.coords.size() == 1) return std::to_string(a.coords[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i) os << ',';
    os << a.coords[i];
  }
  os << ')';
  return os.str();
}

int SubgroupDesc::prefix_length(const OrderedGroup& g) const {
  switch (kind) {
    case Kind::Full: return g.rank();
    case Kind::Trivial: return 0;
    case Kind::Prefix: return prefix;
  }
  return 0;
}

void SubgroupDesc::validate_for(const OrderedGroup& g) const {
  if (kind == Kind::Prefix && (prefix < 0 || prefix > g.rank()))
    throw std::invalid_argument("subgroup prefix out of range");
}

bool SubgroupDesc::contains(const OrderedGroup& g,
                            const GroupElement& a) const {
  group_check_element(g, a);
  validate_for(g);
  for (std::size_t i = static_cast<std::size_t>(prefix_length(g));
       i < a.coords.size(); ++i)
    if (a.coords[i] != 0) return false;
  return true;
}

OrderedGroup SubgroupDesc::as_group(const OrderedGroup& g) const {
  validate_for(g);
  return OrderedGroup(prefix_length(g));
}

bool same_subgroup(const OrderedGroup& g, const SubgroupDesc& a,
                   const SubgroupDesc& b) {
  return a.prefix_length(g) == b.prefix_length(g);
}

std::string format_subgroup(const SubgroupDesc& d) {
  switch (d.kind) {
    case SubgroupDesc::Kind::Full: return "full";
    case SubgroupDesc::Kind::Trivial: return "trivial";
    case SubgroupDesc::Kind::Prefix:
      return "prefix " + std::to_string(d.prefix);
  }
  return "?";
}

namespace {

std::vector<std::vector<Int>> zero_matrix(int rows, int cols) {
  return std::vector<std::vector<Int>>(
      static_cast<std::size_t>(rows),
      std::vector<Int>(static_cast<std::size_t>(cols), 0));
}

std::vector<std::vector<Int>> truncate_matrix(int rows, int cols) {
  auto m = zero_matrix(rows, cols);
  for (int i = 0; i < rows; ++i) m[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(i)] = 1;
  return m;
}

bool is_zero(const std::vector<std::vector<Int>>& m) {
  for (const auto& row : m)
    for (Int x : row)
      if (x != 0) return false;
  return true;
}

bool is_truncation(const std::vector<std::vector<Int>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

Homomorphism::Homomorphism(Kind k, OrderedGroup s, OrderedGroup d,
                           std::vector<std::vector<Int>> m)
    : kind_(k), src_(s), dst_(d), mat_(std::move(m)) {}

Homomorphism Homomorphism::trivial(const OrderedGroup& src,
                                   const OrderedGroup& dst) {
  return Homomorphism(Kind::Trivial, src, dst,
                      zero_matrix(dst.rank(), src.rank()));
}

Homomorphism Homomorphism::identity(const OrderedGroup& g) {
  return Homomorphism(Kind::Identity, g, g,
                      truncate_matrix(g.rank(), g.rank()));
}

Homomorphism Homomorphism::lex_truncate(const OrderedGroup& src,
                                        const OrderedGroup& dst, int keep) {
  if (keep != dst.rank())
    throw std::invalid_argument("truncate: kept length must equal target rank");
  if (keep > src.rank())
    throw std::invalid_argument("truncate: kept length exceeds source rank");
  if (keep < 0) throw std::invalid_argument("truncate: negative length");
  return Homomorphism(Kind::LexTruncate, src, dst,
                      truncate_matrix(dst.rank(), src.rank()));
}

Homomorphism Homomorphism::matrix(const OrderedGroup& src,
                                  const OrderedGroup& dst,
                                  std::vector<std::vector<Int>> m) {
  if (m.size() != static_cast<std::size_t>(dst.rank()))
    throw std::invalid_argument("matrix: row count must equal target rank");
  for (const auto& row : m)
    if (row.size() != static_cast<std::size_t>(src.rank()))
      throw std::invalid_argument("matrix: column count must equal source rank");
  return Homomorphism(Kind::Matrix, src, dst, std::move(m));
}

Homomorphism Homomorphism::from_matrix(const OrderedGroup& src,
                                       const OrderedGroup& dst,
                                       std::vector<std::vector<Int>> m) {
  auto h = matrix(src, dst, std::move(m));
  if (is_zero(h.mat_)) return trivial(src, dst);
  if (src.rank() == dst.rank() && is_truncation(h.mat_)) return identity(src);
  if (dst.rank() < src.rank() && is_truncation(h.mat_))
    return lex_truncate(src, dst, dst.rank());
  return h;
}

GroupElement Homomorphism::apply(const GroupElement& a) const {
  group_check_element(src_, a);
  GroupElement r = dst_.unit();
  for (std::size_t i = 0; i < mat_.size(); ++i)
    for (std::size_t j = 0; j < a.coords.size(); ++j)
      r.coords[i] += mat_[i][j] * a.coords[j];
  return r;
}

bool Homomorphism::operator==(const Homomorphism& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && mat_ == o.mat_;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw std::invalid_argument("compose: rank mismatch");
  const auto& a = outer.matrix_form();
  const auto& b = inner.matrix_form();
  auto m = zero_matrix(outer.target().rank(), inner.source().rank());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < m[i].size(); ++j)
        m[i][j] += a[i][k] * b[k][j];
  return Homomorphism::from_matrix(inner.source(), outer.target(),
                                   std::move(m));
}

Report validate_hom(const Homomorphism& h, const CheckConfig& cfg) {
  Report rep;
  rep.suite = "hom window=" + std::to_string(cfg.window) +
              " samples=" + std::to_string(cfg.samples);
  std::mt19937_64 rng(cfg.seed);
  const auto& src = h.source();
  const auto& dst = h.target();
  for (int i = 0; i < cfg.samples; ++i) {
    auto a = group_sample(src, cfg.window, rng);
    auto b = group_sample(src, cfg.window, rng);
    ++rep.checks;
    if (!(h.apply(group_mul(src, a, b)) ==
          group_mul(dst, h.apply(a), h.apply(b)))) {
      rep.add("hom-law", "h(a*b) != h(a)*h(b) at a=" + format_coords(a) +
                             " b=" + format_coords(b));
      break;
    }
  }
  if (h.structurally_order_preserving()) {
    ++rep.checks;  // order preservation holds by the shape of the map
  } else {
    for (int i = 0; i < cfg.samples; ++i) {
      auto a = group_sample(src, cfg.window, rng);
      auto b = group_sample(src, cfg.window, rng);
      if (group_compare(src, a, b) == std::strong_ordering::equal) continue;
      if (group_compare(src, a, b) == std::strong_ordering::greater)
        std::swap(a, b);
      ++rep.checks;
      if (!group_leq(dst, h.apply(a), h.apply(b))) {
        rep.add("hom-order",
                "a < b but h(a) > h(b) at a=" + format_coords(a) +
                    " b=" + format_coords(b));
        break;
      }
    }
  }
  return rep;
}

std::string format_hom(const Homomorphism& h) {
  switch (h.kind()) {
    case Homomorphism::Kind::Trivial: return "trivial";
    case Homomorphism::Kind::Identity: return "identity";
    case Homomorphism::Kind::LexTruncate:
      return "truncate " + std::to_string(h.target().rank());
    case Homomorphism::Kind::Matrix: {
      std::ostringstream os;
      os << "matrix [";
      const auto& m = h.matrix_form();
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m[i].size(); ++j) {
          if (j) os << ',';
          os << m[i][j];
        }
        os << ']';
      }
      os << ']';
      return os.str();
    }
  }
  return "?";
}

}  // namespace flec
