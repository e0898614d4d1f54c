#pragma once

// Concrete syntax:
//   formula := "true" | ident | "ap(" string ")" | "!" formula
//            | formula "&" formula | formula "|" formula
//            | "eta(" formula "," formula ")" | "gamma(" formula "," formula ")"
//            | "diamond(" formula ")" | "(" formula ")"
//   script  := [ "load" "model" "=" string ] { "let" ident "=" formula | "save" string formula }
// Precedence: "!" binds tightest, then "&", then "|"; binaries associate left.
// "//" starts a comment that runs to the end of the line.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polymin/formula.hpp"

namespace polymin {

struct SaveDirective {
    std::string name;
    Formula formula;
};

struct Script {
    std::optional<std::string> model_path;
    std::vector<std::pair<std::string, Formula>> bindings;  // in definition order
    std::vector<SaveDirective> saves;
};

/// Bare identifiers denote atoms. Throws ParseError with line/column.
Formula parse_formula(std::string_view text);

/// `let` names are substituted at parse time; an identifier that is not bound
/// by an earlier `let` is an error.
Script parse_script(std::string_view text);

}  // namespace polymin
