#include "flec/dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace flec {
namespace {

constexpr int kMaxRank = 64;

struct Loc {
  int line = 1;
  int column = 1;
};

/// Single-line scanner with 1-based column reporting.
struct Cursor {
  const std::string& text;
  int line;
  std::size_t pos = 0;
  std::size_t token_start = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, static_cast<int>(pos) + 1, msg);
  }
  [[noreturn]] void fail_at_token(const std::string& msg) const {
    throw ParseError(line, static_cast<int>(token_start) + 1, msg);
  }
  Loc token_loc() const {
    return {line, static_cast<int>(token_start) + 1};
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }
  std::string word() {
    skip_ws();
    token_start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    if (pos == token_start) fail("expected a name");
    return text.substr(token_start, pos - token_start);
  }
  Int integer() {
    skip_ws();
    token_start = pos;
    std::size_t p = pos;
    if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
    std::size_t digits = p;
    while (p < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[p]))) {
      ++p;
    }
    if (p == digits) fail("expected an integer");
    Int value = 0;
    try {
      value = std::stoll(text.substr(pos, p - pos));
    } catch (const std::out_of_range&) {
      fail_at_token("integer out of range");
    }
    pos = p;
    return value;
  }
  void end_of(const std::string& what) {
    skip_ws();
    if (pos < text.size()) fail("trailing input after " + what);
  }
};

struct HomStatement {
  Loc loc;
  std::string from, to;
  enum class Form { Trivial, Identity, Truncate, Matrix } form;
  int keep = 0;
  std::vector<std::vector<Int>> matrix;
};

struct Document {
  std::optional<std::pair<Loc, Xi>> xi;
  std::optional<std::pair<Loc, std::vector<std::string>>> kappa;
  std::map<std::string, std::pair<Loc, LayerClass>> classes;
  std::map<std::string, std::pair<Loc, int>> ranks;
  std::map<std::string, std::pair<Loc, SubgroupDesc>> subgroups;
  std::map<std::pair<std::string, std::string>, HomStatement> homs;
};

void parse_statement(Cursor& c, Document& doc) {
  const std::string head = c.word();
  const Loc head_loc = c.token_loc();
  if (head == "xi") {
    c.expect('=');
    const std::string v = c.word();
    Xi xi;
    if (v == "O") {
      xi = Xi::Odd;
    } else if (v == "E_id") {
      xi = Xi::EvenIdempotent;
    } else if (v == "E_nonid") {
      xi = Xi::EvenNonIdempotent;
    } else {
      c.fail_at_token("xi must be O, E_id or E_nonid");
    }
    c.end_of("xi");
    if (doc.xi) c.fail_at_token("duplicate xi statement");
    doc.xi = {head_loc, xi};
  } else if (head == "kappa") {
    c.expect('=');
    c.expect('[');
    std::vector<std::string> labels;
    if (!c.accept(']')) {
      labels.push_back(c.word());
      while (c.accept(',')) labels.push_back(c.word());
      c.expect(']');
    }
    c.end_of("kappa");
    if (doc.kappa) {
      throw ParseError(head_loc.line, head_loc.column,
                       "duplicate kappa statement");
    }
    if (labels.empty()) {
      throw ParseError(head_loc.line, head_loc.column,
                       "kappa needs at least one label");
    }
    doc.kappa = {head_loc, std::move(labels)};
  } else if (head == "class") {
    const std::string label = c.word();
    const Loc loc = c.token_loc();
    c.expect('=');
    const std::string v = c.word();
    LayerClass cls;
    if (v == "I") {
      cls = LayerClass::ClassI;
    } else if (v == "J") {
      cls = LayerClass::ClassJ;
    } else {
      c.fail_at_token("class must be I or J");
    }
    c.end_of("class");
    if (!doc.classes.emplace(label, std::make_pair(loc, cls)).second) {
      throw ParseError(loc.line, loc.column,
                       "duplicate class statement for '" + label + "'");
    }
  } else if (head == "group") {
    const std::string label = c.word();
    const Loc loc = c.token_loc();
    c.expect('=');
    const std::string z = c.word();
    if (z != "Z") c.fail_at_token("a group is written Z^<rank>");
    c.expect('^');
    const Int k = c.integer();
    if (k < 0 || k > kMaxRank) {
      c.fail_at_token("group rank must be between 0 and " +
                      std::to_string(kMaxRank));
    }
    c.end_of("group");
    if (!doc.ranks.emplace(label, std::make_pair(loc, static_cast<int>(k)))
             .second) {
      throw ParseError(loc.line, loc.column,
                       "duplicate group statement for '" + label + "'");
    }
  } else if (head == "subgroup") {
    const std::string label = c.word();
    const Loc loc = c.token_loc();
    c.expect('=');
    const std::string v = c.word();
    SubgroupDesc desc;
    if (v == "full") {
      desc = SubgroupDesc::full();
    } else if (v == "trivial") {
      desc = SubgroupDesc::trivial();
    } else if (v == "prefix") {
      const Int j = c.integer();
      if (j < 0 || j > kMaxRank) c.fail_at_token("prefix length out of range");
      desc = SubgroupDesc::prefix_of(static_cast<int>(j));
    } else {
      c.fail_at_token("subgroup must be full, trivial or prefix <j>");
    }
    c.end_of("subgroup");
    if (!doc.subgroups.emplace(label, std::make_pair(loc, desc)).second) {
      throw ParseError(loc.line, loc.column,
                       "duplicate subgroup statement for '" + label + "'");
    }
  } else if (head == "hom") {
    HomStatement h;
    h.from = c.word();
    h.loc = c.token_loc();
    c.expect('-');
    c.expect('>');
    h.to = c.word();
    c.expect('=');
    const std::string v = c.word();
    if (v == "trivial") {
      h.form = HomStatement::Form::Trivial;
    } else if (v == "identity") {
      h.form = HomStatement::Form::Identity;
    } else if (v == "truncate") {
      const Int j = c.integer();
      if (j < 0 || j > kMaxRank) {
        c.fail_at_token("truncate length out of range");
      }
      h.form = HomStatement::Form::Truncate;
      h.keep = static_cast<int>(j);
    } else if (v == "matrix") {
      h.form = HomStatement::Form::Matrix;
      c.expect('[');
      if (!c.accept(']')) {
        do {
          std::vector<Int> row;
          c.expect('[');
          if (!c.accept(']')) {
            row.push_back(c.integer());
            while (c.accept(',')) row.push_back(c.integer());
            c.expect(']');
          }
          h.matrix.push_back(std::move(row));
        } while (c.accept(','));
        c.expect(']');
      }
    } else {
      c.fail_at_token("hom must be trivial, identity, truncate <j> or matrix");
    }
    c.end_of("hom");
    const auto key = std::make_pair(h.from, h.to);
    const Loc loc = h.loc;
    if (!doc.homs.emplace(key, std::move(h)).second) {
      throw ParseError(loc.line, loc.column,
                       "duplicate hom statement for '" + key.first + "->" +
                           key.second + "'");
    }
  } else {
    c.fail_at_token("unknown statement '" + head + "'");
  }
}

BunchOfLayerGroups lower(const Document& doc) {
  if (!doc.kappa) throw ParseError(1, 1, "missing kappa statement");
  if (!doc.xi) throw ParseError(1, 1, "missing xi statement");
  const Loc kappa_loc = doc.kappa->first;
  const std::vector<std::string>& labels = doc.kappa->second;

  std::map<std::string, std::size_t> index_of;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index_of.emplace(labels[i], i).second) {
      throw ParseError(kappa_loc.line, kappa_loc.column,
                       "duplicate layer label '" + labels[i] + "'");
    }
  }
  if (labels.front() != "t") {
    throw ParseError(kappa_loc.line, kappa_loc.column,
                     "the least label must be 't'");
  }
  for (const auto& [label, entry] : doc.classes) {
    if (!index_of.count(label)) {
      throw ParseError(entry.first.line, entry.first.column,
                       "unknown label '" + label + "'");
    }
  }
  for (const auto& [label, entry] : doc.ranks) {
    if (!index_of.count(label)) {
      throw ParseError(entry.first.line, entry.first.column,
                       "unknown label '" + label + "'");
    }
  }
  for (const auto& [label, entry] : doc.subgroups) {
    if (!index_of.count(label)) {
      throw ParseError(entry.first.line, entry.first.column,
                       "unknown label '" + label + "'");
    }
  }

  BunchOfLayerGroups b;
  b.index.xi = doc.xi->second;
  b.index.labels = labels;
  b.index.classes.assign(labels.size(), LayerClass::Unit);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = doc.classes.find(labels[i]);
    if (i == 0) {
      if (it != doc.classes.end()) {
        throw ParseError(it->second.first.line, it->second.first.column,
                         "the least label takes no class");
      }
      continue;
    }
    if (it == doc.classes.end()) {
      throw ParseError(kappa_loc.line, kappa_loc.column,
                       "label '" + labels[i] + "' has no class statement");
    }
    b.index.classes[i] = it->second.second;
  }

  for (const std::string& label : labels) {
    const auto it = doc.ranks.find(label);
    if (it == doc.ranks.end()) {
      throw ParseError(kappa_loc.line, kappa_loc.column,
                       "label '" + label + "' has no group statement");
    }
    b.groups.emplace_back(it->second.second);
  }

  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = doc.subgroups.find(labels[i]);
    if (b.index.role(i) == LayerRole::Theta) {
      if (it == doc.subgroups.end()) {
        throw ParseError(kappa_loc.line, kappa_loc.column,
                         "layer '" + labels[i] +
                             "' needs a subgroup statement");
      }
      try {
        it->second.second.validate_for(b.groups[i]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(it->second.first.line, it->second.first.column,
                         e.what());
      }
      b.subgroups.emplace(i, it->second.second);
    } else if (it != doc.subgroups.end()) {
      throw ParseError(it->second.first.line, it->second.first.column,
                       "layer '" + labels[i] + "' takes no subgroup");
    }
  }

  for (const auto& [key, stmt] : doc.homs) {
    const std::size_t u = index_of.at(stmt.from);
    const std::size_t v = index_of.at(stmt.to);
    if (u >= v) {
      throw ParseError(stmt.loc.line, stmt.loc.column,
                       "hom must go from a lower layer to a higher one");
    }
    const OrderedGroup& src = b.groups[u];
    const OrderedGroup& dst = b.groups[v];
    try {
      switch (stmt.form) {
        case HomStatement::Form::Trivial:
          b.homs.emplace(std::make_pair(u, v),
                         Homomorphism::trivial(src, dst));
          break;
        case HomStatement::Form::Identity:
          if (src.rank() != dst.rank()) {
            throw std::invalid_argument(
                "identity needs equal source and target ranks");
          }
          b.homs.emplace(std::make_pair(u, v), Homomorphism::identity(src));
          break;
        case HomStatement::Form::Truncate:
          b.homs.emplace(std::make_pair(u, v),
                         Homomorphism::lex_truncate(src, dst, stmt.keep));
          break;
        case HomStatement::Form::Matrix:
          b.homs.emplace(std::make_pair(u, v),
                         Homomorphism::from_matrix(src, dst, stmt.matrix));
          break;
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(stmt.loc.line, stmt.loc.column, e.what());
    }
  }

  // Adjacent homs are mandatory; longer spans default to the composition
  // of the steps between, filled in by increasing span so every piece is
  // already present.
  for (std::size_t u = 0; u + 1 < labels.size(); ++u) {
    if (!b.homs.count({u, u + 1})) {
      throw ParseError(kappa_loc.line, kappa_loc.column,
                       "missing hom " + labels[u] + "->" + labels[u + 1] +
                           " between adjacent layers");
    }
  }
  for (std::size_t span = 2; span < labels.size(); ++span) {
    for (std::size_t u = 0; u + span < labels.size(); ++u) {
      const std::size_t v = u + span;
      if (b.homs.count({u, v})) continue;
      b.homs.emplace(std::make_pair(u, v),
                     compose(b.homs.at({u + 1, v}), b.homs.at({u, u + 1})));
    }
  }

  b.index.validate();
  return b;
}

}  // namespace

BunchOfLayerGroups parse_bunch(const std::string& text) {
  Document doc;
  int lineno = 0;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    const std::string body = hash == std::string::npos ? raw
                                                       : raw.substr(0, hash);
    Cursor c{body, lineno};
    if (c.done()) continue;
    parse_statement(c, doc);
  }
  return lower(doc);
}

std::string print_bunch(const BunchOfLayerGroups& b) {
  b.index.validate();
  if (b.groups.size() != b.index.size()) {
    throw std::invalid_argument("groups do not parallel the labels");
  }
  const std::vector<std::string>& labels = b.index.labels;
  std::ostringstream os;
  os << "xi = " << to_string(b.index.xi) << '\n';
  os << "kappa = [";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ", ";
    os << labels[i];
  }
  os << "]\n";
  for (std::size_t i = 1; i < labels.size(); ++i) {
    os << "class " << labels[i] << " = "
       << (b.index.classes[i] == LayerClass::ClassI ? "I" : "J") << '\n';
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << "group " << labels[i] << " = Z^" << b.groups[i].rank() << '\n';
  }
  for (const auto& [i, desc] : b.subgroups) {
    os << "subgroup " << labels.at(i) << " = " << format_subgroup(desc)
       << '\n';
  }
  for (const auto& [key, h] : b.homs) {
    os << "hom " << labels.at(key.first) << "->" << labels.at(key.second)
       << " = " << format_hom(h) << '\n';
  }
  return os.str();
}

}  // namespace flec
