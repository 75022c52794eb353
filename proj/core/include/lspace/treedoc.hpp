#ifndef LSPACE_TREEDOC_HPP
#define LSPACE_TREEDOC_HPP

#include "lspace/tree.hpp"

#include <stdexcept>
#include <string>

namespace lspace {

struct ParseError : std::runtime_error {
    ParseError(std::string path_in, const std::string& what_in)
        : std::runtime_error(path_in + ": " + what_in), path(std::move(path_in)) {}
    std::string path;
};

/// Parses a tree document:
///   {"base": "S2"|"RP2",
///    "slopes": [slopeString...],
///    "daughters": [ {"interval": {"kind": "empty"|"point"|"bracket",
///                                 "value"?: slopeString,
///                                 "left"?: slopeString, "right"?: slopeString}}
///                 | {"gluing": [[a,b],[c,d]], "manifold": {...}} ...]}
/// Slope strings follow the grammar inf | [+-]?digits(/digits)? with a
/// nonzero denominator. Matrices act on column vectors (r, s) in the
/// (f̃, -h̃) bases of daughter-then-parent. Structural violations raise
/// ParseError with the offending path.
TreeManifold parse_tree(const std::string& text);

/// Renders back into the same schema; parse_tree(render_tree(t)) == t.
std::string render_tree(const TreeManifold& tree, int indent = -1);

}  // namespace lspace

#endif
