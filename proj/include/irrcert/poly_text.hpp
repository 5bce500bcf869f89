#pragma once

#include "irrcert/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irrcert {

/// Malformed polynomial text; position is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Largest exponent the parser accepts.
inline constexpr std::size_t kMaxParsedExponent = 1u << 16;

/// Parses sums of terms `c`, `c*x^e`, `c*x`, `x^e`, `x`, each optionally signed.
/// Whitespace is ignored and repeated exponents are summed.
Polynomial parse_polynomial(std::string_view text);

/// Canonical form, highest degree first: `72*x^18 - x + 9`.
std::string to_string(const Polynomial& f);

/// Parses an optionally signed decimal integer of any length.
Integer parse_integer(std::string_view text);

}  // namespace irrcert
