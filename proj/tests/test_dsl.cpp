#include <stdexcept>
#include <string>

#include "doctest.h"
#include "flec/bunch.hpp"
#include "flec/dsl.hpp"
#include "flec/ogroup.hpp"

using namespace flec;

namespace {

const std::string kDoc =
    "# a three-layer bunch\n"
    "xi = O\n"
    "kappa = [t, u, v]   # ascending\n"
    "class u = J\n"
    "class v = I\n"
    "group t = Z^2\n"
    "group u = Z^1\n"
    "group v = Z^0\n"
    "subgroup v = full\n"
    "hom t->u = truncate 1\n"
    "hom u->v = trivial\n";

struct Caught {
  int line = 0;
  int column = 0;
  std::string message;
};

Caught parse_failure(const std::string& text) {
  try {
    parse_bunch(text);
  } catch (const ParseError& e) {
    return {e.line, e.column, e.what()};
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("a document parses into its bunch") {
  BunchOfLayerGroups b = parse_bunch(kDoc);
  CHECK(b.index.xi == Xi::Odd);
  REQUIRE(b.index.labels == std::vector<std::string>{"t", "u", "v"});
  CHECK(b.index.classes[1] == LayerClass::ClassJ);
  CHECK(b.index.classes[2] == LayerClass::ClassI);
  CHECK(b.groups[0].rank() == 2);
  CHECK(b.groups[1].rank() == 1);
  CHECK(b.groups[2].rank() == 0);
  REQUIRE(b.subgroups.count(2));
  CHECK(b.subgroups.at(2).kind == SubgroupDesc::Kind::Full);
  CHECK(b.hom(0, 1).kind() == Homomorphism::Kind::LexTruncate);
  CHECK(b.hom(1, 2).kind() == Homomorphism::Kind::Trivial);

  // The unstated t->v hom defaults to the composition of the steps.
  REQUIRE(b.homs.count({0, 2}));
  CHECK(b.hom(0, 2) ==
        compose(b.hom(1, 2), b.hom(0, 1)));
}

TEST_CASE("printing and reparsing is the identity") {
  BunchOfLayerGroups b = parse_bunch(kDoc);
  std::string printed = print_bunch(b);
  BunchOfLayerGroups again = parse_bunch(printed);
  std::string why;
  CHECK_MESSAGE(bunches_equal(b, again, &why), why);
  // The canonical form is a fixed point of parse-then-print.
  CHECK(print_bunch(again) == printed);
  // Every hom is materialized in the canonical form.
  CHECK(printed.find("hom t->v = trivial") != std::string::npos);
}

TEST_CASE("matrix homs canonicalize to their named kinds") {
  const std::string doc =
      "xi = O\nkappa = [t, u]\nclass u = I\n"
      "group t = Z^2\ngroup u = Z^2\nsubgroup u = full\n";
  CHECK(parse_bunch(doc + "hom t->u = matrix [[1,0],[0,1]]\n")
            .hom(0, 1)
            .kind() == Homomorphism::Kind::Identity);
  CHECK(parse_bunch(doc + "hom t->u = matrix [[0,0],[0,0]]\n")
            .hom(0, 1)
            .kind() == Homomorphism::Kind::Trivial);
  BunchOfLayerGroups with_matrix =
      parse_bunch(doc + "hom t->u = matrix [[1,0],[1,1]]\n");
  CHECK(with_matrix.hom(0, 1).kind() == Homomorphism::Kind::Matrix);
  CHECK(print_bunch(with_matrix).find("hom t->u = matrix [[1,0],[1,1]]") !=
        std::string::npos);

  const std::string wide =
      "xi = O\nkappa = [t, u]\nclass u = I\n"
      "group t = Z^2\ngroup u = Z^1\nsubgroup u = full\n";
  CHECK(parse_bunch(wide + "hom t->u = matrix [[1,0]]\n").hom(0, 1).kind() ==
        Homomorphism::Kind::LexTruncate);
}

TEST_CASE("parse errors carry their source position") {
  {
    Caught c = parse_failure("xi = X\n");
    CHECK(c.line == 1);
    CHECK(c.column == 6);
    CHECK(c.message.find("xi must be") != std::string::npos);
  }
  {
    Caught c = parse_failure("xi = O\nxi = O\nkappa = [t]\ngroup t = Z^0\n");
    CHECK(c.line == 2);
    CHECK(c.message.find("duplicate xi") != std::string::npos);
  }
  {
    Caught c = parse_failure("flavor = sweet\n");
    CHECK(c.line == 1);
    CHECK(c.column == 1);
    CHECK(c.message.find("unknown statement") != std::string::npos);
  }
  {
    // Missing '=' after the keyword.
    Caught c = parse_failure("xi O\n");
    CHECK(c.line == 1);
  }
  {
    Caught c = parse_failure("kappa = [t, t]\nxi = O\ngroup t = Z^0\n");
    CHECK(c.line == 1);
    CHECK(c.message.find("duplicate layer label") != std::string::npos);
  }
  {
    Caught c = parse_failure("kappa = [a]\nxi = O\ngroup a = Z^0\n");
    CHECK(c.message.find("least label must be 't'") != std::string::npos);
  }
  {
    Caught c = parse_failure(
        "xi = O\nkappa = [t, u]\nclass u = I\ngroup t = Z^0\n"
        "group u = Z^0\nsubgroup u = full\nclass t = I\nhom t->u = trivial\n");
    CHECK(c.line == 7);
    CHECK(c.message.find("least label takes no class") != std::string::npos);
  }
  {
    Caught c = parse_failure(
        "xi = O\nkappa = [t, u]\ngroup t = Z^0\ngroup u = Z^0\n"
        "hom t->u = trivial\n");
    CHECK(c.message.find("has no class statement") != std::string::npos);
  }
  {
    Caught c = parse_failure("xi = O\nkappa = [t]\n");
    CHECK(c.message.find("has no group statement") != std::string::npos);
  }
  {
    Caught c = parse_failure(
        "xi = O\nkappa = [t, u]\nclass u = J\ngroup t = Z^0\n"
        "group u = Z^1\nhom u->t = trivial\nhom t->u = trivial\n");
    CHECK(c.line == 6);
    CHECK(c.message.find("lower layer to a higher") != std::string::npos);
  }
  {
    Caught c = parse_failure("xi = O\nkappa = [t]\ngroup t = Z^0\n"
                             "group q = Z^1\n");
    CHECK(c.line == 4);
    CHECK(c.message.find("unknown label 'q'") != std::string::npos);
  }
  {
    // Theta layers need a subgroup; others must not have one.
    Caught c = parse_failure(
        "xi = E_id\nkappa = [t]\ngroup t = Z^1\n");
    CHECK(c.message.find("needs a subgroup") != std::string::npos);
    Caught d = parse_failure(
        "xi = O\nkappa = [t]\ngroup t = Z^1\nsubgroup t = full\n");
    CHECK(d.line == 4);
    CHECK(d.message.find("takes no subgroup") != std::string::npos);
  }
  {
    Caught c = parse_failure(
        "xi = O\nkappa = [t, u]\nclass u = I\ngroup t = Z^1\n"
        "group u = Z^2\nsubgroup u = full\nhom t->u = identity\n");
    CHECK(c.line == 7);
    CHECK(c.message.find("equal source and target ranks") !=
          std::string::npos);
  }
  {
    Caught c = parse_failure(
        "xi = E_id\nkappa = [t]\ngroup t = Z^1\nsubgroup t = prefix 5\n");
    CHECK(c.line == 4);
  }
  {
    // Missing adjacent hom cannot be defaulted.
    Caught c = parse_failure(
        "xi = O\nkappa = [t, u, v]\nclass u = I\nclass v = I\n"
        "group t = Z^0\ngroup u = Z^0\ngroup v = Z^0\n"
        "subgroup u = full\nsubgroup v = full\nhom t->u = trivial\n");
    CHECK(c.message.find("missing hom u->v") != std::string::npos);
  }
  {
    Caught c = parse_failure("group t = Z^70\nxi = O\nkappa = [t]\n");
    CHECK(c.message.find("rank must be between") != std::string::npos);
  }
  {
    Caught c = parse_failure("");
    CHECK(c.message.find("missing kappa") != std::string::npos);
  }
}

TEST_CASE("the error text embeds the location") {
  Caught c = parse_failure("xi = O\nxi = E_id\nkappa = [t]\ngroup t = Z^0\n");
  CHECK(c.message.find("line 2") != std::string::npos);
}

TEST_CASE("a matrix hom survives the print cycle") {
  const std::string doc =
      "xi = E_nonid\n"
      "kappa = [t, u]\n"
      "class u = I\n"
      "group t = Z^2\n"
      "group u = Z^2\n"
      "subgroup u = prefix 1\n"
      "hom t->u = matrix [[1,0],[0,0]]\n";
  BunchOfLayerGroups b = parse_bunch(doc);
  BunchOfLayerGroups again = parse_bunch(print_bunch(b));
  std::string why;
  CHECK_MESSAGE(bunches_equal(b, again, &why), why);
  CHECK(again.hom(0, 1).matrix_form() ==
        std::vector<std::vector<Int>>{{1, 0}, {0, 0}});
}
