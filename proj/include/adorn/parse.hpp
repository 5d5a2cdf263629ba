#pragma once

#include <string>
#include <string_view>

#include "adorn/presentation.hpp"

namespace adorn {

// Grammar (whitespace insignificant):
//   presentation := "<" [name ("," name)*] "|" [relator ("," relator)*] ">"
//   relator      := word ["=" word]        (u = v is stored as u v^-1)
//   word         := "1" | term+
//   term         := name ["^" integer] | "(" word ")" ["^" integer]
//                 | "[" word "," word "]" ["^" integer]   ([u, v] = u^-1 v^-1 u v)
// Throws ParseError with the byte offset of the offending token.
GroupPresentation parse_presentation(std::string_view text, std::string name = "");

}  // namespace adorn
