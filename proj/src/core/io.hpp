#pragma once

#include <string>

#include "string.hpp"

namespace parendist {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text format:
//   Line 1: "pairs: <chars>" (char 2k-1 opens, char 2k closes type k)
//           or "types: <t>" (symbols as whitespace-separated nonzero ints,
//           +k opens, -k closes type k).
//   Remaining lines: the sequence. Lines starting with '#' are comments.
ParenString parse_input(const std::string& text);

// Round-trips through parse_input: parse(serialize(x)) == x.
std::string serialize(const ParenString& x);

}  // namespace parendist
