#pragma once

#include <ctec/limbs.hpp>

#include <string>
#include <string_view>

namespace ctec {

/// Lowercase hex, no prefix.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts an optional 0x prefix and an odd number of digits (left padded).
/// Throws Error(ParseError) on any non-hex character.
Bytes from_hex(std::string_view hex);

/// Strip leading zero octets (the empty vector encodes zero).
Bytes strip_leading_zeros(std::span<const std::uint8_t> bytes);

/// Left-pad with zeros to len; throws Error(BadLength) if the value is wider.
Bytes pad_left(std::span<const std::uint8_t> bytes, std::size_t len);

}  // namespace ctec
