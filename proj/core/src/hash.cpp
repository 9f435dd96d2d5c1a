#include <ctec/hash.hpp>

#include <ctec/error.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <memory>

namespace ctec {

namespace {

const EVP_MD* md_for(const std::string& name) {
   if(name == "sha224") {
      return EVP_sha224();
   }
   if(name == "sha256") {
      return EVP_sha256();
   }
   if(name == "sha384") {
      return EVP_sha384();
   }
   if(name == "sha512") {
      return EVP_sha512();
   }
   throw_error(ErrorCode::NotFound, "unknown hash " + name);
}

struct CtxFree {
      void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};

}  // namespace

HashSpec HashSpec::sha224() {
   return HashSpec("sha224", 28, 64);
}

HashSpec HashSpec::sha256() {
   return HashSpec("sha256", 32, 64);
}

HashSpec HashSpec::sha384() {
   return HashSpec("sha384", 48, 128);
}

HashSpec HashSpec::sha512() {
   return HashSpec("sha512", 64, 128);
}

HashSpec HashSpec::by_name(std::string_view name) {
   std::string n;
   for(char c : name) {
      if(c != '-' && c != '_') {
         n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
   }
   if(n == "sha224") {
      return sha224();
   }
   if(n == "sha256") {
      return sha256();
   }
   if(n == "sha384") {
      return sha384();
   }
   if(n == "sha512") {
      return sha512();
   }
   throw_error(ErrorCode::NotFound, "unknown hash " + std::string(name));
}

HashSpec HashSpec::default_for(std::size_t order_bits) {
   return order_bits <= 256 ? sha256() : sha512();
}

Bytes HashSpec::digest(std::span<const std::uint8_t> data) const {
   return digest(data, {});
}

Bytes HashSpec::digest(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) const {
   std::unique_ptr<EVP_MD_CTX, CtxFree> ctx(EVP_MD_CTX_new());
   Bytes out(m_out);
   unsigned int len = 0;
   if(!ctx || EVP_DigestInit_ex(ctx.get(), md_for(m_name), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), a.data(), a.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), b.data(), b.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), out.data(), &len) != 1 || len != m_out) {
      throw_error(ErrorCode::Unsupported, "digest computation failed");
   }
   return out;
}

Bytes hmac(const HashSpec& hash, std::span<const std::uint8_t> key, std::span<const std::uint8_t> msg) {
   const std::size_t B = hash.block_length();
   Bytes k(key.begin(), key.end());
   if(k.size() > B) {
      k = hash.digest(k);
   }
   k.resize(B, 0);
   Bytes ipad(B), opad(B);
   for(std::size_t i = 0; i != B; ++i) {
      ipad[i] = k[i] ^ 0x36;
      opad[i] = k[i] ^ 0x5c;
   }
   const Bytes inner = hash.digest(ipad, msg);
   return hash.digest(opad, inner);
}

}  // namespace ctec
