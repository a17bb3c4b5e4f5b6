#ifndef FLEC_DSL_HPP
#define FLEC_DSL_HPP

#include <stdexcept>
#include <string>

#include "flec/bunch.hpp"

namespace flec {

/// Parse failure, carrying its 1-based source position.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

/// Reads a bunch description:
///
///   xi = O | E_id | E_nonid
///   kappa = [t, u, v]         # ascending layer labels, least first ("t")
///   class <label> = I | J     # each label except t, exactly once
///   group <label> = Z^<k>
///   subgroup <label> = full | trivial | prefix <j>   # Theta labels only
///   hom <a>-><b> = trivial | identity | truncate <j> | matrix [[..],[..]]
///
/// '#' starts a comment, blank lines and statement order are free, and
/// every statement may appear once per subject. A hom between adjacent
/// layers must be stated; any other missing hom defaults to the
/// composition of the steps between. Throws ParseError on malformed or
/// inconsistent input.
BunchOfLayerGroups parse_bunch(const std::string& text);

/// Canonical text form: one statement per line in a fixed order, every
/// hom materialized. Parsing the result reproduces the bunch exactly.
std::string print_bunch(const BunchOfLayerGroups& b);

}  // namespace flec

#endif
