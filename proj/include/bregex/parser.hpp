#pragma once

#include <stdexcept>
#include <string>

#include "bregex/ast.hpp"

namespace bregex {

struct ParseError : std::runtime_error {
    size_t position;  // offset into the pattern, in scalar values
    ParseError(std::string msg, size_t pos)
        : std::runtime_error(std::move(msg) + " at position " + std::to_string(pos)),
          position(pos) {}
};

// Parses the concrete syntax. Capture groups are numbered 1..n left to right
// by opening parenthesis; the result always passes validate().
RegexPtr parse_regex(const std::string& pattern);

// Prints concrete syntax that reparses to an AST equal to the input, up to
// the group renumbering performed here: a group whose index does not match
// its left-to-right position is emitted as a named group.
std::string emit_regex(const RegexPtr& r);

}  // namespace bregex
