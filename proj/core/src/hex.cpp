#include <ctec/error.hpp>
#include <ctec/hex.hpp>

namespace ctec {

namespace {

int hex_value(char c) {
   if(c >= '0' && c <= '9') {
      return c - '0';
   }
   if(c >= 'a' && c <= 'f') {
      return c - 'a' + 10;
   }
   if(c >= 'A' && c <= 'F') {
      return c - 'A' + 10;
   }
   return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
   static constexpr char kDigits[] = "0123456789abcdef";
   std::string out;
   out.reserve(2 * bytes.size());
   for(std::uint8_t b : bytes) {
      out.push_back(kDigits[b >> 4]);
      out.push_back(kDigits[b & 0x0F]);
   }
   return out;
}

Bytes from_hex(std::string_view hex) {
   if(hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
      hex.remove_prefix(2);
   }
   Bytes out((hex.size() + 1) / 2, 0);
   // An odd digit count is treated as if a leading zero were present.
   std::size_t pos = out.size() * 2 - hex.size();
   for(char c : hex) {
      const int v = hex_value(c);
      if(v < 0) {
         throw_error(ErrorCode::ParseError, "invalid hex character '" + std::string(1, c) + "'");
      }
      out[pos / 2] |= static_cast<std::uint8_t>(pos % 2 == 0 ? v << 4 : v);
      ++pos;
   }
   return out;
}

Bytes strip_leading_zeros(std::span<const std::uint8_t> bytes) {
   std::size_t i = 0;
   while(i < bytes.size() && bytes[i] == 0) {
      ++i;
   }
   return Bytes(bytes.begin() + static_cast<std::ptrdiff_t>(i), bytes.end());
}

Bytes pad_left(std::span<const std::uint8_t> bytes, std::size_t len) {
   const Bytes v = strip_leading_zeros(bytes);
   if(v.size() > len) {
      throw_error(ErrorCode::BadLength,
                  "value needs " + std::to_string(v.size()) + " bytes, limit is " + std::to_string(len));
   }
   Bytes out(len - v.size(), 0);
   out.insert(out.end(), v.begin(), v.end());
   return out;
}

}  // namespace ctec
