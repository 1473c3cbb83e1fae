#pragma once

#include "virasoro/envelope.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace virasoro {

// Thrown for malformed input; `token` is the offending piece of text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::string token, std::size_t position);

    const std::string& token() const { return token_; }
    std::size_t position() const { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

// elem   := term (('+' | '-') term)*      (a leading sign is allowed)
// term   := coeff ('*' factor)* | factor ('*' factor)*
// factor := 'd(' '-' int ')' ['^' int]
// coeff  := int | int '/' int
// Factors may come in any order; the product is normal ordered.
EnvElem parse_env_elem(std::string_view text);

// A state for `act`: the same grammar with every term followed by `@v(j)`.
// Newlines are whitespace and '#' starts a comment running to end of line.
struct StateTerm {
    EnvElem elem;
    std::int64_t j;
};

std::vector<StateTerm> parse_state(std::string_view text);

}  // namespace virasoro
