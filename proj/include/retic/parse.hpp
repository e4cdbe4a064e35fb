#pragma once

#include <stdexcept>
#include <string>

#include "retic/germ.hpp"
#include "retic/poly.hpp"

namespace retic {

// Syntax or name error in a germ expression; `pos` is a 0-based offset into
// the input text.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          pos(pos) {}
};

// Parse a germ expression against a fixed variable spec.
//
// Grammar (whitespace insignificant):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' posint)?
//   base   := rational | variable | '(' expr ')'
//   rational := int ('/' int)?
// Variables: x1..x9, y1..y9, t, q1..q9, u11..u99, z, and the aliases
// x, y, q, u when the group has a single member.
Poly parse_poly(const std::string& text, const VarSpec& spec);

// Infer the minimal VarSpec a bare germ needs: corner/fiber counts from the
// x/y names used, plus any parameters of `param_pool` that occur.
VarSpec infer_spec(const std::string& text, const std::vector<Param>& param_pool = {});

// Split a multi-germ string on ';' into component expressions.
std::vector<std::string> split_components(const std::string& text);

// Parse bare germ components (no parameters allowed); each component's
// (r, k) is inferred from the variables it uses.
MultiGerm parse_multigerm(const std::vector<std::string>& comps);

// Parse an unfolded family. The shared parameter block is the union of the
// parameter names appearing in any component (q-indices filled up to their
// maximum), plus t, ordered t, q..., u..., z.
Family parse_family(const std::vector<std::string>& comps);

} // namespace retic
